#pragma once

#include <algorithm>
#include <optional>
#include <set>

#include "ivlab/valuations.hpp"

namespace ivlab {

// ---- localizing systems ----

inline LocalizingSystem generatedByFG(const Ring& r, std::vector<Module> gens) {
  if (gens.empty()) throw ValidationError("a generated system needs at least one generator");
  for (const auto& g : gens) {
    requireModel(r, g);
    if (isZero(g) || !isIntegral(r, g)) throw ValidationError("generators must be nonzero integral ideals");
    if (!isFinitelyGenerated(r, g)) throw ValidationError("generators must be finitely generated");
  }
  if (asMonomial(r)) {
    MonomialModule prod = MonomialModule::unit(std::get<MonomialRing>(r).size());
    for (const auto& g : gens) prod = monomial::mul(prod, std::get<MonomialModule>(g));
    const Monomial content = monomial::gcd(prod);
    if (std::any_of(content.begin(), content.end(), [](auto e) { return e != 0; }))
      throw ValidationError("generators with a common monomial factor would invert a variable");
  }
  LocalizingSystem f{LocalizingSystem::Kind::GeneratedByFG, r};
  f.gens = std::move(gens);
  return f;
}

/// {I : P strictly inside I}.
inline LocalizingSystem primeCut(const Ring& r, const PrimeRef& p) {
  requirePrime(r, p);
  if (model(r) == Model::Monomial) throw UsageError("prime-cut systems are only modelled on Dedekind and valuation rings");
  if (auto* v = std::get_if<ValuationPrime>(&p); v && v->level == kLimitLevel)
    throw UsageError("the limit level is not a prime");
  LocalizingSystem f{LocalizingSystem::Kind::PrimeCut, r};
  f.prime = p;
  return f;
}

/// G(nu, n) = {I : nu(I) >= n}.
inline LocalizingSystem valuationLevel(const IdealValuation& nu, ExtNat n) {
  LocalizingSystem f{LocalizingSystem::Kind::ValuationLevel, nu.ring};
  f.nu = share(nu);
  f.n = n;
  return f;
}

/// {I : I0 inside I}; a localizing system when I0 is idempotent, e.g. {R, M} for a
/// non-principal maximal ideal.
inline LocalizingSystem principalFilter(const Ring& r, const Module& i0) {
  requireModel(r, i0);
  if (isZero(i0) || !isIntegral(r, i0)) throw ValidationError("the filter needs a nonzero integral ideal");
  if (!equals(r, mul(r, i0, i0), i0)) throw ValidationError("the filter of a non-idempotent ideal is not localizing");
  LocalizingSystem f{LocalizingSystem::Kind::PrincipalFilter, r};
  f.ideal = i0;
  return f;
}

inline bool isFiniteTypeStructural(const LocalizingSystem& f) {
  if (f.kind == LocalizingSystem::Kind::PrincipalFilter) return isFinitelyGenerated(f.ring, *f.ideal);
  return true;
}

namespace detail {

/// A generated or prime-cut system on a valuation ring is {I : P strictly inside I} for this P.
inline ValuationPrime cutPrimeOf(const LocalizingSystem& f) {
  const auto& vr = std::get<ValuationRing>(f.ring);
  const ValueGroup& g = vr.group();
  if (f.kind == LocalizingSystem::Kind::PrimeCut) return std::get<ValuationPrime>(*f.prime);
  std::size_t lowest = g.fullLevel();
  bool anyProper = false;
  for (const auto& m : f.gens) {
    const auto& c = std::get<CutModule>(m);
    if (valuation::contains(c, CutModule::unit(g))) continue;
    anyProper = true;
    std::size_t lead = 1;
    if (g.kind() != ValueGroup::Kind::Rationals) lead = static_cast<std::size_t>(leadingLevel(c.threshold()).value());
    lowest = std::min(lowest, lead);
  }
  if (!anyProper) return {g.fullLevel()};
  return {lowest - 1};
}

inline MonomialModule generatorProduct(const LocalizingSystem& f) {
  MonomialModule p = MonomialModule::unit(std::get<MonomialRing>(f.ring).size());
  for (const auto& g : f.gens) p = monomial::mul(p, std::get<MonomialModule>(g));
  return p;
}

inline std::set<std::string> dedekindGeneratorSupport(const LocalizingSystem& f) {
  std::set<std::string> s;
  for (const auto& g : f.gens)
    for (const auto& p : std::get<DedekindModule>(g).support()) s.insert(p);
  return s;
}

}  // namespace detail

inline bool lsMembership(const LocalizingSystem& f, const Module& i) {
  const Ring& r = f.ring;
  requireModel(r, i);
  if (!isIntegral(r, i)) throw UsageError("localizing systems contain integral ideals only");
  if (isZero(i) && f.kind != LocalizingSystem::Kind::ValuationLevel) return false;
  switch (f.kind) {
    case LocalizingSystem::Kind::GeneratedByFG:
      if (model(r) == Model::Dedekind) {
        // Some product of generators with exponent max(I) lies in I iff supp(I) is covered.
        const auto s = detail::dedekindGeneratorSupport(f);
        for (const auto& p : std::get<DedekindModule>(i).support())
          if (!s.count(p)) return false;
        return true;
      }
      if (model(r) == Model::Monomial)
        return monomial::contains(monomial::radical(std::get<MonomialModule>(i)), detail::generatorProduct(f));
      [[fallthrough]];
    case LocalizingSystem::Kind::PrimeCut: {
      if (model(r) == Model::Valuation) {
        const Module p = primeIdeal(r, detail::cutPrimeOf(f));
        return contains(r, i, p) && !equals(r, i, p);
      }
      const auto& label = std::get<DedekindPrime>(*f.prime).label;
      return label.empty() ? true : isUnit(r, i);
    }
    case LocalizingSystem::Kind::ValuationLevel: return evaluate(*f.nu, i) >= f.n;
    case LocalizingSystem::Kind::PrincipalFilter: return contains(r, i, *f.ideal);
  }
  return false;
}

// ---- semistar operations ----

inline SemistarOp opD(const Ring& r) { return SemistarOp{SemistarOp::Kind::IdentityD, r}; }
inline SemistarOp opE(const Ring& r) { return SemistarOp{SemistarOp::Kind::TrivialE, r}; }
inline SemistarOp opV(const Ring& r) { return SemistarOp{SemistarOp::Kind::DivisorialV, r}; }
inline SemistarOp opW(const Ring& r) { return SemistarOp{SemistarOp::Kind::WOp, r}; }

/// Intersection of localizations at the primes of delta; the zero prime is always added.
inline SemistarOp spectral(const Ring& r, std::vector<PrimeRef> delta) {
  delta.push_back(zeroPrime(r));
  for (const auto& p : delta) requirePrime(r, p);
  std::sort(delta.begin(), delta.end());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
  SemistarOp op{SemistarOp::Kind::Spectral, r};
  op.delta = std::move(delta);
  return op;
}

inline SemistarOp fromLS(const LocalizingSystem& f) {
  SemistarOp op{SemistarOp::Kind::FromLS, f.ring};
  op.system = std::make_shared<const LocalizingSystem>(f);
  return op;
}

/// The level-n operation nu_n of G(nu, n).
inline SemistarOp levelOp(const IdealValuation& nu, ExtNat n) {
  SemistarOp op{SemistarOp::Kind::Level, nu.ring};
  op.nu = share(nu);
  op.n = n;
  return op;
}

inline bool isTrivialOp(const SemistarOp& op) {
  switch (op.kind) {
    case SemistarOp::Kind::TrivialE: return true;
    case SemistarOp::Kind::Level: return op.n == ExtNat(0);
    case SemistarOp::Kind::Spectral: return op.delta.size() == 1;
    default: return false;
  }
}

/// Largest prime P of a valuation model with nu(P) < n (n >= 1). Returns the limit
/// pseudo-level when every finite-level prime qualifies in rank omega but M does not.
inline ValuationPrime levelPrime(const IdealValuation& nu, ExtNat n) {
  const auto& vr = std::get<ValuationRing>(nu.ring);
  const ValueGroup& g = vr.group();
  if (evaluateAtPrime(nu, ValuationPrime{g.fullLevel()}) < n) return {g.fullLevel()};
  if (g.kind() != ValueGroup::Kind::LexZOmega) {
    for (std::size_t k = g.fullLevel(); k-- > 0;)
      if (evaluateAtPrime(nu, ValuationPrime{k}) < n) return {k};
    return {0};
  }
  const std::size_t cap = vr.omegaBound() + 64;
  for (std::size_t k = 1; k <= cap; ++k)
    if (evaluateAtPrime(nu, ValuationPrime{k}) >= n) return {k - 1};
  return {kLimitLevel};
}

namespace detail {

inline Module levelClosure(const IdealValuation& nu, ExtNat n, const Module& e) {
  const Ring& r = nu.ring;
  if (n == ExtNat(0)) return fullField(r);
  if (auto* d = asDedekind(r)) {
    std::set<std::string> inverted;
    for (const auto& p : d->primes())
      if (evaluateAtPrime(nu, DedekindPrime{p}) >= n) inverted.insert(p);
    return dedekind::invertPrimes(*d, std::get<DedekindModule>(e), inverted);
  }
  if (auto* v = asValuation(r)) return valuation::localize(v->group(), std::get<CutModule>(e), levelPrime(nu, n));

  const auto& mr = std::get<MonomialRing>(r);
  const std::size_t m = mr.size();
  if (isFullField(e)) return e;
  std::size_t high = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (evaluateAtPrime(nu, MonomialPrime{VarSet{1} << i}) >= n) ++high;
  if (high == m) return MonomialModule::fullField();
  if (high != 0)
    throw UsageError("level closure inverting only some variables is not a monomial module");
  auto [content, rest] = monomial::factorContent(std::get<MonomialModule>(e));
  const MonomialModule filtered = monomial::filterComponents(
      m, rest, [&nu, n](VarSet p) { return evaluateAtPrime(nu, MonomialPrime{p}) < n; });
  return monomial::mul(monomial::principal(content), filtered);
}

inline Module lsClosure(const LocalizingSystem& f, const Module& e) {
  const Ring& r = f.ring;
  switch (f.kind) {
    case LocalizingSystem::Kind::ValuationLevel: return levelClosure(*f.nu, f.n, e);
    case LocalizingSystem::Kind::PrincipalFilter: return colon(r, e, *f.ideal);
    case LocalizingSystem::Kind::GeneratedByFG:
      if (auto* d = asDedekind(r))
        return dedekind::invertPrimes(*d, std::get<DedekindModule>(e), dedekindGeneratorSupport(f));
      if (asMonomial(r)) {
        if (isFullField(e)) return e;
        const MonomialModule g = generatorProduct(f);
        auto [content, rest] = monomial::factorContent(std::get<MonomialModule>(e));
        return monomial::mul(monomial::principal(content), monomial::saturate(rest, g));
      }
      [[fallthrough]];
    case LocalizingSystem::Kind::PrimeCut:
      if (auto* v = asValuation(r)) return valuation::localize(v->group(), std::get<CutModule>(e), cutPrimeOf(f));
      if (std::get<DedekindPrime>(*f.prime).label.empty()) return fullField(r);
      return e;
  }
  return e;
}

}  // namespace detail

inline Module closure(const SemistarOp& op, const Module& e) {
  const Ring& r = op.ring;
  requireModel(r, e);
  if (isZero(e)) return e;
  switch (op.kind) {
    case SemistarOp::Kind::IdentityD: return e;
    case SemistarOp::Kind::TrivialE: return fullField(r);
    case SemistarOp::Kind::DivisorialV: {
      const Module inv = colon(r, unitModule(r), e);
      if (isZero(inv)) return fullField(r);
      return colon(r, unitModule(r), inv);
    }
    case SemistarOp::Kind::WOp:
      if (auto* m = asMonomial(r)) return monomial::wClosureBySaturation(m->size(), std::get<MonomialModule>(e));
      return e;
    case SemistarOp::Kind::Spectral: {
      if (auto* d = asDedekind(r)) {
        std::set<std::string> inverted(d->primes().begin(), d->primes().end());
        for (const auto& p : op.delta) inverted.erase(std::get<DedekindPrime>(p).label);
        return dedekind::invertPrimes(*d, std::get<DedekindModule>(e), inverted);
      }
      return localize(r, e, op.delta.back());
    }
    case SemistarOp::Kind::FromLS: return detail::lsClosure(*op.system, e);
    case SemistarOp::Kind::Level: return detail::levelClosure(*op.nu, op.n, e);
  }
  return e;
}

/// Sampled extensional equality; returns the first module on which the closures differ.
inline std::optional<Module> opDifference(const SemistarOp& a, const SemistarOp& b, const std::vector<Module>& samples) {
  if (!(a.ring == b.ring)) throw UsageError("operations on different rings");
  for (const auto& m : samples)
    if (!equals(a.ring, closure(a, m), closure(b, m))) return m;
  return std::nullopt;
}

inline bool opEquals(const SemistarOp& a, const SemistarOp& b, const std::vector<Module>& samples) {
  return !opDifference(a, b, samples).has_value();
}

// ---- chains ----

/// Delta_n = {P : h(P) <= n} plus the zero prime. On valuation models only the
/// largest member matters and it may be the rank-omega limit level.
inline std::vector<PrimeRef> spectralDelta(const PrimeValuation& h, std::uint64_t n) {
  const Ring& r = h.ring();
  std::vector<PrimeRef> delta;
  if (auto* v = asValuation(r)) {
    const ValueGroup& g = v->group();
    if (h.maxValue() <= ExtNat(n)) {
      delta.push_back(ValuationPrime{g.fullLevel()});
    } else if (g.kind() == ValueGroup::Kind::LexZOmega) {
      if (h.supFinite() <= ExtNat(n)) {
        delta.push_back(ValuationPrime{kLimitLevel});
      } else {
        std::size_t k = 0;
        while (h.value(ValuationPrime{k + 1}) <= ExtNat(n)) ++k;
        delta.push_back(ValuationPrime{k});
      }
    } else {
      for (std::size_t k = 0; k < g.fullLevel(); ++k)
        if (h.value(ValuationPrime{k}) <= ExtNat(n)) delta.push_back(ValuationPrime{k});
    }
  } else {
    for (const auto& p : primes(r))
      if (h.value(p) <= ExtNat(n)) delta.push_back(p);
  }
  return delta;
}

/// Psi: the chain of level operations of nu.
inline SemistarChain chainFromValuation(const IdealValuation& nu) {
  SemistarChain c{nu.ring};
  c.tail = SemistarChain::Tail::LevelTail;
  c.nu = share(nu);
  return c;
}

/// Phi: member n is the spectral operation of Delta_n.
inline SemistarChain spectralChainFromPrimeValuation(const PrimeValuation& h) {
  h.validate();
  SemistarChain c{h.ring()};
  c.tail = SemistarChain::Tail::SpectralTail;
  c.h = h;
  return c;
}

/// Explicit members followed by a repetition of the last one.
inline SemistarChain constantTailChain(const Ring& r, std::vector<SemistarOp> prefix) {
  if (prefix.empty()) throw ValidationError("a constant-tail chain needs at least one member");
  for (const auto& op : prefix)
    if (!(op.ring == r)) throw UsageError("chain member on a different ring");
  SemistarChain c{r};
  c.prefix = std::move(prefix);
  c.tail = SemistarChain::Tail::Constant;
  return c;
}

inline SemistarOp chainMember(const SemistarChain& c, std::uint64_t n) {
  if (n < c.prefix.size()) return c.prefix[n];
  switch (c.tail) {
    case SemistarChain::Tail::Constant: return c.prefix.back();
    case SemistarChain::Tail::LevelTail: return levelOp(*c.nu, n);
    case SemistarChain::Tail::SpectralTail: return spectral(c.ring, spectralDelta(*c.h, n));
  }
  return c.prefix.back();
}

/// Index S with member(k) = member(S) for every k >= S; empty when no such index exists.
inline std::optional<std::uint64_t> chainStableIndex(const SemistarChain& c) {
  const std::uint64_t size = c.prefix.size();
  switch (c.tail) {
    case SemistarChain::Tail::Constant: return size - 1;
    case SemistarChain::Tail::LevelTail: {
      const auto b = finiteValueBound(*c.nu);
      if (!b) return std::nullopt;
      return std::max(size, *b + 1);
    }
    case SemistarChain::Tail::SpectralTail: {
      const auto b = c.h->maxFinite();
      if (!b) return std::nullopt;
      return std::max(size, *b);
    }
  }
  return std::nullopt;
}

namespace detail {

/// Safety limit for chains without a stable index; reached only on malformed input.
inline constexpr std::uint64_t kChainLevelCap = 4096;

/// In rank omega, a chain whose members never stabilize never reaches M, so M and R
/// have equal closures at every member.
inline bool unboundedTailAtMax(const SemistarChain& c, const Module& i) {
  auto* v = asValuation(c.ring);
  if (!v || v->group().kind() != ValueGroup::Kind::LexZOmega) return false;
  return valuation::radicalPrime(v->group(), std::get<CutModule>(i)).level == kTopLevel;
}

}  // namespace detail

/// nu_C(I) = sup {k : I^{*_k} = R^{*_k}}.
inline ExtNat evaluateChain(const SemistarChain& c, const Module& i) {
  const Ring& r = c.ring;
  if (isZero(i)) return 0;
  if (isUnit(r, i)) return kInf;
  const auto stable = chainStableIndex(c);
  if (!stable && detail::unboundedTailAtMax(c, i)) return kInf;
  const std::uint64_t last = stable ? *stable : detail::kChainLevelCap;
  const Module unit = unitModule(r);
  for (std::uint64_t k = 0; k <= last; ++k) {
    const SemistarOp op = chainMember(c, k);
    if (!equals(r, closure(op, i), closure(op, unit))) {
      if (k == 0) throw ValidationError("chain is not standard: member 0 separates an ideal from R");
      return k - 1;
    }
  }
  if (!stable) throw UsageError("chain evaluation exceeded the level cap");
  return kInf;
}

/// h_C(P) = inf {k : P^{*_k} != R^{*_k}}.
inline ExtNat chainPrimeValue(const SemistarChain& c, const PrimeRef& p) {
  const Ring& r = c.ring;
  const Module pm = primeIdeal(r, p);
  const Module unit = unitModule(r);
  const auto stable = chainStableIndex(c);
  if (!stable && detail::unboundedTailAtMax(c, pm)) return kInf;
  const std::uint64_t last = stable ? *stable : detail::kChainLevelCap;
  for (std::uint64_t k = 0; k <= last; ++k) {
    const SemistarOp op = chainMember(c, k);
    if (op.kind != SemistarOp::Kind::Spectral && op.kind != SemistarOp::Kind::TrivialE)
      throw UsageError("chain member " + std::to_string(k) + " is not spectral");
    if (!equals(r, closure(op, pm), closure(op, unit))) return k;
  }
  if (!stable) throw UsageError("chain evaluation exceeded the level cap");
  return kInf;
}

/// Phi inverse. Rank-omega results list levels up to the ring's omega bound and take
/// an increasing tail when the chain never stabilizes.
inline PrimeValuation primeValuationFromSpectralChain(const SemistarChain& c) {
  const Ring& r = c.ring;
  if (auto* d = asDedekind(r)) {
    std::map<std::string, ExtNat> values;
    for (const auto& p : d->primes()) values[p] = chainPrimeValue(c, DedekindPrime{p});
    return PrimeValuation::dedekindChecked(*d, std::move(values));
  }
  if (auto* v = asValuation(r)) {
    const ValueGroup& g = v->group();
    const std::size_t count = g.kind() == ValueGroup::Kind::LexZOmega ? v->omegaBound() + 1 : g.fullLevel();
    std::vector<ExtNat> finite;
    for (std::size_t k = 0; k < count; ++k) finite.push_back(chainPrimeValue(c, ValuationPrime{k}));
    const ExtNat top = chainPrimeValue(c, ValuationPrime{g.fullLevel()});
    const auto tail = chainStableIndex(c) ? PrimeValuation::Tail::Constant : PrimeValuation::Tail::Increasing;
    return PrimeValuation::levels(*v, std::move(finite), top, tail);
  }
  const auto& m = std::get<MonomialRing>(r);
  std::vector<ExtNat> table;
  for (VarSet s = 0; s <= m.allVars(); ++s) table.push_back(chainPrimeValue(c, MonomialPrime{s}));
  return PrimeValuation::monomial(m, std::move(table));
}

}  // namespace ivlab
