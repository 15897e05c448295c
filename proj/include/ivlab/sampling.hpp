#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "ivlab/ring.hpp"

namespace ivlab {

/// Degree bound for sampled monomial ideals; IVLAB_DEGREE_BOUND overrides the default.
inline int degreeBound(int fallback = 3) {
  if (const char* s = std::getenv("IVLAB_DEGREE_BOUND")) {
    const int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return fallback;
}

struct SampleConfig {
  std::size_t count = 40;
  std::uint64_t seed = 1;
  std::int64_t bound = 3;
  int degree = 3;
  std::size_t maxGens = 3;
};

class Sampler {
 public:
  Sampler(Ring ring, SampleConfig cfg) : ring_(std::move(ring)), cfg_(cfg), rng_(cfg.seed) {}

  std::int64_t uni(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Random proper nonzero integral ideal.
  Module properIdeal() {
    for (;;) {
      Module m = randomIntegral();
      if (isProperNonzero(ring_, m)) return m;
    }
  }

  /// Integral ideals: zero, R and every exposed prime first, then random ones.
  std::vector<Module> ideals() {
    std::vector<Module> out{zeroModule(ring_), unitModule(ring_)};
    for (const auto& p : primes(ring_))
      if (!isZeroPrime(p)) out.push_back(primeIdeal(ring_, p));
    while (out.size() < cfg_.count) out.push_back(randomIntegral());
    return out;
  }

  /// Nonzero fractional modules including K and localized modules.
  std::vector<Module> modules() {
    std::vector<Module> out{unitModule(ring_), fullField(ring_)};
    while (out.size() < cfg_.count) {
      Module m = mul(ring_, randomIntegral(true), principal(true));
      if (model(ring_) != Model::Monomial && uni(0, 3) == 0) {
        const auto ps = primes(ring_);
        m = localize(ring_, m, ps[static_cast<std::size_t>(uni(1, static_cast<std::int64_t>(ps.size()) - 1))]);
      }
      out.push_back(m);
    }
    return out;
  }

  /// A random nonzero principal module; integral unless `fractional`.
  Module principal(bool fractional) {
    if (auto* d = asDedekind(ring_)) {
      std::map<std::string, std::int64_t> e;
      for (const auto& p : d->primes()) e[p] = uni(fractional ? -2 : 0, cfg_.bound);
      return DedekindModule::exponents(*d, e);
    }
    if (auto* v = asValuation(ring_)) return CutModule::principal(element(v->group(), !fractional));
    const auto& m = std::get<MonomialRing>(ring_);
    Monomial x(m.size());
    for (auto& e : x) e = uni(fractional ? -1 : 0, 2);
    return monomial::principal(x);
  }

  /// A random element of the value group; nonnegative when asked.
  GroupElement element(const ValueGroup& g, bool nonnegative) {
    if (g.kind() == ValueGroup::Kind::Rationals) {
      Rational q(uni(nonnegative ? 0 : -cfg_.bound, cfg_.bound), uni(1, 4));
      return GroupElement::rational(g, q);
    }
    const std::size_t levels = g.kind() == ValueGroup::Kind::LexZ ? g.rank() : static_cast<std::size_t>(uni(1, 5));
    std::vector<std::int64_t> p(levels);
    for (auto& c : p) c = uni(-cfg_.bound, cfg_.bound);
    if (uni(0, 2) == 0) p[static_cast<std::size_t>(uni(0, static_cast<std::int64_t>(levels) - 1))] = 0;
    GroupElement x = GroupElement::withPrefix(g, p);
    if (nonnegative && compare(x, GroupElement::zero(g)) < 0) x = negate(x);
    return x;
  }

  /// A random integral ideal (zero excluded unless it happens to be a prime sample).
  Module randomIntegral(bool nonzeroOnly = false) {
    (void)nonzeroOnly;
    if (auto* d = asDedekind(ring_)) {
      std::map<std::string, std::int64_t> e;
      for (const auto& p : d->primes()) e[p] = uni(0, cfg_.bound);
      return DedekindModule::exponents(*d, e);
    }
    if (auto* v = asValuation(ring_)) return randomCut(v->group());
    const auto& m = std::get<MonomialRing>(ring_);
    const std::size_t gens = static_cast<std::size_t>(uni(1, static_cast<std::int64_t>(cfg_.maxGens)));
    std::vector<Monomial> g;
    for (std::size_t i = 0; i < gens; ++i) g.push_back(randomMonomial(m.size(), cfg_.degree));
    return MonomialModule::generated(g);
  }

  /// Monomial of total degree in [1, degree].
  Monomial randomMonomial(std::size_t nvars, int degree) {
    Monomial x(nvars, 0);
    const int d = static_cast<int>(uni(1, degree));
    for (int k = 0; k < d; ++k) ++x[static_cast<std::size_t>(uni(0, static_cast<std::int64_t>(nvars) - 1))];
    return x;
  }

  CutModule randomCut(const ValueGroup& g) {
    if (g.kind() == ValueGroup::Kind::Rationals) return CutModule::cut(1, element(g, true), uni(0, 1) == 1);
    const bool omega = g.kind() == ValueGroup::Kind::LexZOmega;
    const std::size_t top = omega ? 5 : g.rank();
    const std::size_t level = static_cast<std::size_t>(uni(1, static_cast<std::int64_t>(top) + (omega ? 1 : 0)));
    if (level > top || level == g.fullLevel()) {
      return CutModule::cut(g.fullLevel(), element(g, true), omega && uni(0, 1) == 1);
    }
    // A cut below the top level is integral only when its threshold prefix is positive.
    std::vector<std::int64_t> p(level);
    for (auto& c : p) c = uni(-cfg_.bound, cfg_.bound);
    p[0] = uni(0, cfg_.bound);
    if (std::all_of(p.begin(), p.end(), [](auto c) { return c == 0; })) p.back() = 1;
    GroupElement t = GroupElement::withPrefix(g, p);
    if (comparePrefix(t, GroupElement::zero(g), level) < 0) t = negate(t);
    return CutModule::cut(level, t, false);
  }

  /// Finitely generated subideals of an integral ideal used for the IV3 supremum:
  /// principal subideals near the boundary (valuation model), bounded multiples
  /// (Dedekind) and generator subsets with multiples (monomial).
  std::vector<Module> fgSubideals(const Module& i) {
    std::vector<Module> out;
    if (isZero(i)) return out;
    if (isFinitelyGenerated(ring_, i)) out.push_back(i);
    if (auto* d = asDedekind(ring_)) {
      for (const auto& p : d->primes())
        for (std::int64_t a = 1; a <= 2; ++a)
          out.push_back(mul(ring_, i, DedekindModule::exponents(*d, {{p, a}})));
      return out;
    }
    if (asValuation(ring_)) {
      const auto& c = std::get<CutModule>(i);
      if (c.isFullField()) return out;
      for (const auto& x : boundaryWitnesses(c))
        if (c.contains(x)) out.push_back(CutModule::principal(x));
      return out;
    }
    const auto& gens = std::get<MonomialModule>(i).gens();
    const std::size_t n = gens.size();
    for (std::uint32_t mask = 1; mask < (1u << std::min<std::size_t>(n, 6)); ++mask) {
      std::vector<Monomial> sub;
      for (std::size_t k = 0; k < n && k < 6; ++k)
        if (mask & (1u << k)) sub.push_back(gens[k]);
      out.push_back(MonomialModule::generated(sub));
    }
    out.push_back(mul(ring_, i, principal(false)));
    return out;
  }

  /// Elements just above, on and just below a cut's boundary.
  std::vector<GroupElement> boundaryWitnesses(const CutModule& c) {
    std::vector<GroupElement> out;
    if (c.kind() != CutModule::Kind::Cut) return out;
    const GroupElement& t = c.threshold();
    const ValueGroup& g = t.group();
    if (g.kind() == ValueGroup::Kind::Rationals) {
      for (std::int64_t d : {1, 2, 3, 7, 50, 1000}) {
        out.push_back(add(t, GroupElement::rational(g, Rational(1, d))));
        out.push_back(add(t, GroupElement::rational(g, Rational(-1, d))));
      }
      out.push_back(t);
      return out;
    }
    const std::size_t span = g.kind() == ValueGroup::Kind::LexZ ? g.rank() : std::max<std::size_t>(t.supportEnd(), 4) + 4;
    const GroupElement base = c.isTopLevel() ? t : GroupElement::withPrefix(g, t.prefix(c.level()));
    out.push_back(base);
    for (std::size_t j = 1; j <= span; ++j)
      for (std::int64_t s : {-2, -1, 1, 2}) {
        GroupElement e = GroupElement::unitVector(g, j);
        GroupElement step = e;
        for (std::int64_t k = 1; k < std::abs(s); ++k) step = add(step, e);
        out.push_back(s > 0 ? add(base, step) : subtract(base, step));
      }
    return out;
  }

  const Ring& ring() const { return ring_; }
  const SampleConfig& config() const { return cfg_; }

 private:
  Ring ring_;
  SampleConfig cfg_;
  std::mt19937_64 rng_;
};

}  // namespace ivlab
