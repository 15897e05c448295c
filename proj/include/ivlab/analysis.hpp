#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ivlab/sampling.hpp"
#include "ivlab/semistar.hpp"

namespace ivlab {

/// Family of overring operations I -> I R_P on a valuation model, given either as a
/// finite set of primes or as a sequence: a finite prefix followed by a tail that
/// repeats the last prefix prime or climbs through every finite level of rank omega.
struct OpFamily {
  enum class Tail { Finite, Constant, StrictlyIncreasing };

  ValuationRing ring;
  std::vector<ValuationPrime> primes;
  Tail tail = Tail::Finite;

  static OpFamily finite(const ValuationRing& r, std::vector<ValuationPrime> ps) {
    return make(r, std::move(ps), Tail::Finite);
  }
  static OpFamily sequence(const ValuationRing& r, std::vector<ValuationPrime> prefix, Tail tail) {
    return make(r, std::move(prefix), tail);
  }

 private:
  static OpFamily make(const ValuationRing& r, std::vector<ValuationPrime> ps, Tail tail) {
    if (ps.empty() && tail != Tail::StrictlyIncreasing) throw ValidationError("a family needs at least one prime");
    if (tail == Tail::StrictlyIncreasing && r.group().kind() != ValueGroup::Kind::LexZOmega)
      throw ValidationError("strictly increasing levels need rank omega");
    for (const auto& p : ps) requirePrime(r, p);
    return OpFamily{r, std::move(ps), tail};
  }
};

/// Supremum of the family's primes and whether a member attains it.
inline std::pair<ValuationPrime, bool> familySupremum(const OpFamily& fam) {
  if (fam.tail == OpFamily::Tail::StrictlyIncreasing) return {{kLimitLevel}, false};
  const auto top = *std::max_element(fam.primes.begin(), fam.primes.end());
  // A member localizing at the rank-omega limit is itself not of finite type.
  return {top, top.level != kLimitLevel};
}

/// Intersection of E R_P over the family. The primes form a chain, so this is the
/// localization at the supremum; an unattained rank-omega supremum gives the limit.
inline Module familyClosure(const OpFamily& fam, const Module& e) {
  const Ring r = fam.ring;
  requireModel(r, e);
  return localize(r, e, familySupremum(fam).first);
}

struct FiniteTypeReport {
  bool verdict = false;
  std::optional<PrimeRef> witness;
  /// Prime P with the intersection system equal to {I : P strictly inside I}.
  std::optional<PrimeRef> primeCut;
  std::vector<std::pair<std::string, std::string>> diagnostics;
};

namespace detail {

/// The maximal ideal closes to R but no sampled principal subideal does: the
/// obstruction to finite type when the supremum is not attained.
inline bool maxIdealObstruction(const OpFamily& fam, std::size_t samples, std::uint64_t seed) {
  const Ring r = fam.ring;
  const ValueGroup& g = fam.ring.group();
  const Module m = primeIdeal(r, ValuationPrime{g.fullLevel()});
  const Module unit = unitModule(r);
  if (!contains(r, familyClosure(fam, m), unit)) return false;
  Sampler s(r, SampleConfig{samples, seed, 3, 3, 3});
  for (std::size_t i = 0; i < samples; ++i) {
    const GroupElement x = s.element(g, true);
    if (x.isZero()) continue;
    if (contains(r, familyClosure(fam, CutModule::principal(x)), unit)) return false;
  }
  return true;
}

}  // namespace detail

/// Finite type holds exactly when the supremum prime is attained by a member.
inline FiniteTypeReport isFiniteType(const OpFamily& fam) {
  FiniteTypeReport rep;
  const Ring r = fam.ring;
  const auto [sup, attained] = familySupremum(fam);
  rep.verdict = attained;
  rep.diagnostics.emplace_back("supremum", primeName(r, sup));
  rep.diagnostics.emplace_back("supremum attained", attained ? "true" : "false");
  if (attained) {
    rep.witness = sup;
    rep.primeCut = sup;
    rep.diagnostics.emplace_back("intersection system", "{I : " + primeName(r, sup) + " strictly inside I}");
  } else {
    const bool obstruction = detail::maxIdealObstruction(fam, 64, 1);
    rep.diagnostics.emplace_back("intersection system", "{M, R}, not of prime-cut form");
    rep.diagnostics.emplace_back("M closes to R with no principal subideal doing so", obstruction ? "true" : "false");
  }
  return rep;
}

// ---- chains on valuation models ----

/// Largest prime P with P^* != R^* for an overring-type operation, i.e. the prime it
/// localizes at.
inline ValuationPrime operationPrime(const SemistarOp& op) {
  const auto& vr = std::get<ValuationRing>(op.ring);
  const ValueGroup& g = vr.group();
  switch (op.kind) {
    case SemistarOp::Kind::TrivialE: return {0};
    case SemistarOp::Kind::IdentityD:
    case SemistarOp::Kind::WOp: return {g.fullLevel()};
    case SemistarOp::Kind::Spectral: return std::get<ValuationPrime>(op.delta.back());
    case SemistarOp::Kind::Level:
      if (op.n == ExtNat(0)) return {0};
      return levelPrime(*op.nu, op.n);
    case SemistarOp::Kind::FromLS: {
      const auto& f = *op.system;
      if (f.kind == LocalizingSystem::Kind::ValuationLevel) {
        if (f.n == ExtNat(0)) return {0};
        return levelPrime(*f.nu, f.n);
      }
      if (f.kind != LocalizingSystem::Kind::PrincipalFilter) return detail::cutPrimeOf(f);
      break;
    }
    case SemistarOp::Kind::DivisorialV: break;
  }
  const Ring r = vr;
  const Module unit = closure(op, unitModule(r));
  ValuationPrime best{0};
  for (const auto& p : primes(r))
    if (!equals(r, closure(op, primeIdeal(r, p)), unit)) best = std::get<ValuationPrime>(p);
  return best;
}

struct ChainEquivalenceReport {
  /// (1) intersection op finite type, (2) finite range, (3) intersection of the
  /// level systems finite type, (4) the level systems stabilize.
  std::array<bool, 4> conditions{};
  bool agree = false;
  std::optional<std::uint64_t> m;
  std::optional<PrimeRef> witness;
  std::vector<std::string> trace;
};

inline constexpr std::array<const char*, 4> kChainConditionNames = {
    "intersection operation is of finite type", "valuation has finite range",
    "intersection of level systems is of finite type", "level systems stabilize"};

/// Prime family of a chain's members: finite when the chain stabilizes, otherwise a
/// rank-omega sequence climbing to the limit.
inline OpFamily chainFamily(const SemistarChain& c) {
  const auto& vr = std::get<ValuationRing>(c.ring);
  const auto stable = chainStableIndex(c);
  std::vector<ValuationPrime> ps;
  const std::uint64_t last = stable ? *stable : std::max<std::uint64_t>(c.prefix.size(), 1) - 1;
  for (std::uint64_t k = 0; k <= last; ++k) ps.push_back(operationPrime(chainMember(c, k)));
  if (stable) return OpFamily::sequence(vr, ps, OpFamily::Tail::Constant);
  return OpFamily::sequence(vr, ps, OpFamily::Tail::StrictlyIncreasing);
}

inline ChainEquivalenceReport chainEquivalences(const SemistarChain& c) {
  const auto* vr = asValuation(c.ring);
  if (!vr) throw UsageError("chain equivalences are decided on valuation models only");
  const ValueGroup& g = vr->group();
  ChainEquivalenceReport rep;
  const IdealValuation nu = valuationFromChain(c);
  const auto stable = chainStableIndex(c);
  const bool omega = g.kind() == ValueGroup::Kind::LexZOmega;

  // (1) finite type of the intersection of the members.
  const FiniteTypeReport ft = isFiniteType(chainFamily(c));
  rep.conditions[0] = ft.verdict;
  if (ft.verdict) rep.witness = ft.witness;
  for (const auto& [k, v] : ft.diagnostics) rep.trace.push_back("(1) " + k + ": " + v);

  // Values on primes determine the range: nu(I) = nu(rad I) and radicals are primes.
  std::vector<ExtNat> primeValues;
  const std::size_t scan = omega ? vr->omegaBound() + (stable ? *stable : 0) + 64 : g.fullLevel();
  for (std::size_t k = 0; k <= scan && k < g.fullLevel(); ++k) primeValues.push_back(evaluateAtPrime(nu, ValuationPrime{k}));
  const ExtNat atMax = evaluateAtPrime(nu, ValuationPrime{g.fullLevel()});
  std::vector<ExtNat> range = primeValues;
  range.push_back(atMax);
  std::sort(range.begin(), range.end());
  range.erase(std::unique(range.begin(), range.end()), range.end());
  std::string shown;
  for (auto v : range) shown += (shown.empty() ? "" : ",") + v.str();
  rep.trace.push_back("(2) values on scanned primes: {" + shown + "}");

  // (2) finite range: omega chains without a stable index keep producing new values.
  bool finiteRange = stable.has_value();
  if (!omega) {
    finiteRange = range.size() <= g.fullLevel() + 1;
    rep.trace.push_back("(2) dimension bound " + std::to_string(g.fullLevel() + 1));
  }
  rep.conditions[1] = finiteRange;

  // (3) the intersection of the level systems is {I : nu(I) = inf}; it has prime-cut
  // form iff some largest prime carries a finite value.
  bool cutForm = false;
  if (atMax.isFinite()) {
    cutForm = true;
    rep.trace.push_back("(3) prime cut at M");
  } else {
    std::optional<std::size_t> last;
    for (std::size_t k = 0; k < primeValues.size(); ++k)
      if (primeValues[k].isFinite()) last = k;
    const bool climbsToMax = omega && last && *last + 1 == primeValues.size();
    cutForm = last.has_value() && !climbsToMax;
    if (cutForm) rep.trace.push_back("(3) prime cut at level " + std::to_string(*last));
    else rep.trace.push_back("(3) finite values below M never stop: system is {M, R}");
  }
  rep.conditions[2] = cutForm;

  // (4) stabilization index m = (largest finite value) + 1.
  if (stable || !omega) {
    std::uint64_t top = 0;
    for (auto v : range)
      if (v.isFinite()) top = std::max(top, v.value());
    rep.m = top + 1;
    rep.trace.push_back("(4) m = " + std::to_string(*rep.m));
  } else {
    rep.trace.push_back("(4) finite values unbounded");
  }
  rep.conditions[3] = rep.m.has_value();

  rep.agree = std::all_of(rep.conditions.begin(), rep.conditions.end(), [&](bool b) { return b == rep.conditions[0]; });
  return rep;
}

// ---- range bound ----

struct RangeReport {
  std::vector<ExtNat> values;
  std::size_t bound = 0;
  bool pass = false;
  /// For each realized finite value n > 0, the prime {x : nu(xR) < n}.
  std::vector<std::pair<ExtNat, PrimeRef>> primeChain;
};

/// Distinct values on the zero and proper ideals against dim(R) + 1. The ideal R is
/// left out: with it the count can reach dim + 2.
inline RangeReport rangeBound(const IdealValuation& nu, Sampler& sampler) {
  const auto* vr = asValuation(nu.ring);
  if (!vr || vr->group().kind() == ValueGroup::Kind::LexZOmega)
    throw UsageError("range bound needs a valuation model of finite rank");
  const Ring& r = nu.ring;
  RangeReport rep;
  rep.bound = vr->group().fullLevel() + 1;
  for (const auto& i : sampler.ideals()) {
    if (isUnit(r, i)) continue;
    rep.values.push_back(evaluate(nu, i));
  }
  std::sort(rep.values.begin(), rep.values.end());
  rep.values.erase(std::unique(rep.values.begin(), rep.values.end()), rep.values.end());
  rep.pass = rep.values.size() <= rep.bound;
  for (auto v : rep.values)
    if (v.isFinite() && v.value() > 0) rep.primeChain.emplace_back(v, levelPrime(nu, v));
  return rep;
}

}  // namespace ivlab
