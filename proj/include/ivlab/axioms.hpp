#pragma once

#include <string>
#include <vector>

#include "ivlab/sampling.hpp"
#include "ivlab/semistar.hpp"

namespace ivlab {

struct LawResult {
  std::string law;
  bool pass = true;
  std::vector<Module> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<LawResult> laws;
  bool allPass() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.pass; });
  }
  const LawResult* find(const std::string& name) const {
    for (const auto& l : laws)
      if (l.law == name) return &l;
    return nullptr;
  }
};

/// IV3 supremum needed before an infinite value counts as reached on a
/// non-finitely-generated ideal, whose f.g. subideals can only be sampled finitely.
inline constexpr std::uint64_t kIV3InfinityCap = 4;

namespace detail {

class LawTracker {
 public:
  explicit LawTracker(std::string name) { r_.law = std::move(name); }
  void fail(std::vector<Module> w, std::string detail) {
    if (!r_.pass) return;
    r_.pass = false;
    r_.witness = std::move(w);
    r_.detail = std::move(detail);
  }
  LawResult result() const { return r_; }

 private:
  LawResult r_;
};

inline std::string vals(std::initializer_list<ExtNat> xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " vs ") + x.str();
  return s;
}

}  // namespace detail

/// Samples the valuation laws; failures keep the first counterexample.
inline AxiomReport checkAxioms(const IdealValuation& nu, Sampler& sampler) {
  const Ring& r = nu.ring;
  const auto ideals = sampler.ideals();
  const std::size_t n = ideals.size();
  std::vector<ExtNat> v;
  v.reserve(n);
  for (const auto& i : ideals) v.push_back(evaluate(nu, i));

  detail::LawTracker iv1("IV1"), iv2p("IV2 product min-law"), iv2i("IV2 intersection min-law"), mono("monotone"),
      power("power"), rad("radical"), iv3("IV3");

  const ExtNat z = evaluate(nu, zeroModule(r)), u = evaluate(nu, unitModule(r));
  if (z != ExtNat(0) || u != kInf) iv1.fail({}, "nu(0), nu(R) = " + detail::vals({z, u}));

  for (std::size_t a = 0; a < n; ++a) {
    const Module& i = ideals[a];
    const std::size_t b = (a * 7 + 3) % n;
    const Module& j = ideals[b];
    const ExtNat m = min(v[a], v[b]);
    const ExtNat prod = evaluate(nu, mul(r, i, j));
    if (prod != m) iv2p.fail({i, j}, detail::vals({prod, m}));
    const ExtNat inter = evaluate(nu, intersect(r, i, j));
    if (inter != m) iv2i.fail({i, j}, detail::vals({inter, m}));
    const ExtNat s = evaluate(nu, sum(r, i, j));
    if (s < v[a] || inter > v[a]) mono.fail({i, j}, "sum/intersection out of order");
    if (contains(r, j, i) && v[a] > v[b]) mono.fail({i, j}, detail::vals({v[a], v[b]}));

    if (!isZero(i) && !isUnit(r, i)) {
      const Module sq = mul(r, i, i);
      const ExtNat p2 = evaluate(nu, sq), p3 = evaluate(nu, mul(r, sq, i));
      if (p2 != v[a] || p3 != v[a]) power.fail({i}, detail::vals({v[a], p2, p3}));
    }
    const ExtNat rv = evaluate(nu, radical(r, i));
    if (rv != v[a]) rad.fail({i}, detail::vals({v[a], rv}));

    if (!isZero(i) && !isUnit(r, i)) {
      ExtNat sup = 0;
      for (const auto& sub : sampler.fgSubideals(i)) {
        if (!contains(r, i, sub)) continue;
        const ExtNat sv = evaluate(nu, sub);
        if (sv > v[a]) iv3.fail({i, sub}, "f.g. subideal above nu(I): " + detail::vals({sv, v[a]}));
        sup = max(sup, sv);
      }
      const bool reached = sup == v[a] || (v[a].isInfinite() && !isFinitelyGenerated(r, i) &&
                                           sup.isFinite() && sup.value() >= kIV3InfinityCap);
      if (!reached) iv3.fail({i}, "sup over f.g. subideals " + sup.str() + " < nu(I) = " + v[a].str());
    }
  }
  return {{iv1.result(), iv2p.result(), iv2i.result(), mono.result(), power.result(), rad.result(), iv3.result()}};
}

/// True for the operations this library can only build as stable ones.
inline bool isStableKind(const SemistarOp& op) {
  return op.kind != SemistarOp::Kind::DivisorialV;
}

/// Samples the semistar axioms, stability and the finite-type witness property.
inline AxiomReport checkSemistar(const SemistarOp& op, Sampler& sampler) {
  const Ring& r = op.ring;
  const auto mods = sampler.modules();
  const auto ideals = sampler.ideals();
  detail::LawTracker ext("extensive"), mono("monotone"), idem("idempotent"), scale("scaling"), stable("stable"),
      ft("finite type");
  const std::size_t n = mods.size();
  for (std::size_t a = 0; a < n; ++a) {
    const Module& e = mods[a];
    const Module& f = mods[(a * 5 + 1) % n];
    const Module ce = closure(op, e);
    if (!contains(r, ce, e)) ext.fail({e}, "closure does not contain the module");
    if (!equals(r, closure(op, ce), ce)) idem.fail({e}, "closure is not idempotent");
    const Module ef = sum(r, e, f);
    if (!contains(r, closure(op, ef), ce)) mono.fail({e, ef}, "closure is not monotone");
    const Module x = sampler.principal(true);
    if (!equals(r, mul(r, x, ce), closure(op, mul(r, x, e)))) scale.fail({e, x}, "x E* != (xE)*");
    if (isStableKind(op)) {
      const Module meet = intersect(r, e, f);
      if (!isZero(meet) && !equals(r, closure(op, meet), intersect(r, ce, closure(op, f))))
        stable.fail({e, f}, "(E cap F)* != E* cap F*");
    }
  }
  if (op.kind != SemistarOp::Kind::DivisorialV) {
    const Module unit = unitModule(r);
    for (const auto& i : ideals) {
      if (isZero(i) || !contains(r, closure(op, i), unit)) continue;
      bool found = false;
      for (const auto& j : sampler.fgSubideals(i))
        if (contains(r, closure(op, j), unit)) {
          found = true;
          break;
        }
      if (!found) ft.fail({i}, "no sampled f.g. subideal J with 1 in J*");
    }
  }
  return {{ext.result(), mono.result(), idem.result(), scale.result(), stable.result(), ft.result()}};
}

/// Member m contains member n closures for m <= n <= levels, on sampled modules.
inline LawResult checkDescending(const SemistarChain& c, const std::vector<Module>& samples, std::uint64_t levels) {
  detail::LawTracker t("descending");
  for (std::uint64_t k = 0; k < levels; ++k) {
    const SemistarOp a = chainMember(c, k), b = chainMember(c, k + 1);
    for (const auto& e : samples)
      if (!contains(c.ring, closure(a, e), closure(b, e))) t.fail({e}, "member " + std::to_string(k) + " < member " +
                                                                          std::to_string(k + 1));
  }
  return t.result();
}

}  // namespace ivlab
