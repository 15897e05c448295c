#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>

#include "ivlab/types.hpp"

namespace ivlab {

// Defined in semistar.hpp.
inline bool lsMembership(const LocalizingSystem& f, const Module& i);
inline bool isFiniteTypeStructural(const LocalizingSystem& f);
inline ExtNat evaluateChain(const SemistarChain& c, const Module& i);
inline std::optional<std::uint64_t> chainStableIndex(const SemistarChain& c);
inline bool isTrivialOp(const SemistarOp& op);
inline SemistarOp chainMember(const SemistarChain& c, std::uint64_t n);

inline ValuationPtr share(IdealValuation v) { return std::make_shared<const IdealValuation>(std::move(v)); }

inline IdealValuation primeTable(const DedekindRing& r, std::map<std::string, ExtNat> values) {
  for (const auto& p : r.primes())
    if (!values.count(p)) throw ValidationError("no value given for prime '" + p + "'");
  for (const auto& [p, v] : values)
    if (!r.hasPrime(p)) throw UsageError("unknown prime '" + p + "'");
  IdealValuation v{IdealValuation::Kind::PrimeTable, r};
  v.table = std::move(values);
  return v;
}

inline IdealValuation inducedFromPrimeValuation(const PrimeValuation& h) {
  h.validate();
  IdealValuation v{IdealValuation::Kind::Induced, h.ring()};
  v.prime = h;
  return v;
}

/// nu_F without the finite-type check. Only for exhibiting what goes wrong without it.
inline IdealValuation fromLocalizingSystemUnchecked(const LocalizingSystem& f) {
  IdealValuation v{IdealValuation::Kind::FromLS, f.ring};
  v.system = std::make_shared<const LocalizingSystem>(f);
  return v;
}

inline IdealValuation fromLocalizingSystem(const LocalizingSystem& f) {
  if (!isFiniteTypeStructural(f))
    throw ValidationError(
        "localizing system is not of finite type; without the finiteness condition nu_F is not an ideal valuation");
  return fromLocalizingSystemUnchecked(f);
}

inline IdealValuation pgradeValuation(const MonomialRing& r) { return IdealValuation{IdealValuation::Kind::PGrade, r}; }
inline IdealValuation heightValuation(const MonomialRing& r) { return IdealValuation{IdealValuation::Kind::Height, r}; }

/// nu^c on R for nu on T.
inline IdealValuation contract(const IdealValuation& nu, const RingMap& map) {
  if (!(nu.ring == map.target())) throw UsageError("contract: valuation does not live on the map's target");
  IdealValuation v{IdealValuation::Kind::Contracted, map.source()};
  v.inner = share(nu);
  v.map = map;
  return v;
}

/// nu^e on T for nu on R.
inline IdealValuation extend(const IdealValuation& nu, const RingMap& map) {
  if (!(nu.ring == map.source())) throw UsageError("extend: valuation does not live on the map's source");
  IdealValuation v{IdealValuation::Kind::Extended, map.target()};
  v.inner = share(nu);
  v.map = map;
  return v;
}

inline IdealValuation valuationFromChain(const SemistarChain& c) {
  if (!isTrivialOp(chainMember(c, 0))) throw ValidationError("chain is not standard: member 0 must be e");
  IdealValuation v{IdealValuation::Kind::FromChain, c.ring};
  v.chain = std::make_shared<const SemistarChain>(c);
  return v;
}

/// I T for an R-module I.
inline Module extendModule(const RingMap& map, const Module& i) {
  requireModel(map.source(), i);
  if (isZero(i) || isFullField(i) || map.isIdentity()) return i;
  if (map.kind() == RingMap::Kind::DedekindLocalization) {
    const auto& t = std::get<DedekindRing>(map.target());
    const auto& m = std::get<DedekindModule>(i);
    std::map<std::string, std::int64_t> e;
    for (const auto& p : t.primes()) e[p] = m.exponent(p);
    return DedekindModule::exponents(t, std::move(e));
  }
  const auto& c = std::get<CutModule>(i);
  const std::size_t k = map.level();
  const std::size_t level = c.isTopLevel() ? k : std::min(c.level(), k);
  return CutModule::cut(level, truncate(c.threshold(), k), false);
}

/// J ∩ R for a T-module J.
inline Module contractModule(const RingMap& map, const Module& j) {
  requireModel(map.target(), j);
  const Ring& r = map.source();
  if (isZero(j)) return j;
  if (isFullField(j)) return unitModule(r);
  if (map.isIdentity()) return intersect(r, j, unitModule(r));
  if (map.kind() == RingMap::Kind::DedekindLocalization) {
    const auto& m = std::get<DedekindModule>(j);
    std::map<std::string, std::int64_t> e;
    for (const auto& p : std::get<DedekindRing>(map.target()).primes()) e[p] = std::max<std::int64_t>(m.exponent(p), 0);
    return DedekindModule::exponents(std::get<DedekindRing>(r), std::move(e));
  }
  const auto& c = std::get<CutModule>(j);
  const ValueGroup& g = std::get<ValuationRing>(r).group();
  const CutModule lifted = CutModule::cut(c.level(), GroupElement::withPrefix(g, c.threshold().prefix(c.level())), false);
  return valuation::intersect(lifted, CutModule::unit(g));
}

namespace detail {

inline ExtNat minOver(const std::vector<PrimeRef>& ps, const std::function<ExtNat(const PrimeRef&)>& f) {
  ExtNat best = kInf;
  for (const auto& p : ps) best = min(best, f(p));
  return best;
}

inline ExtNat evaluateInduced(const PrimeValuation& h, const Ring& r, const Module& i) {
  if (auto* v = asValuation(r)) {
    const ValuationPrime p = valuation::radicalPrime(v->group(), std::get<CutModule>(i));
    // M is not finitely generated in rank omega: its f.g. subideals only reach the finite levels.
    if (v->group().kind() == ValueGroup::Kind::LexZOmega && p.level == kTopLevel) return h.supFinite();
    return h.value(p);
  }
  return minOver(minimalPrimes(r, i), [&h](const PrimeRef& p) { return h.value(p); });
}

}  // namespace detail

inline ExtNat evaluate(const IdealValuation& nu, const Module& i) {
  requireModel(nu.ring, i);
  const Ring& r = nu.ring;
  if (!isIntegral(r, i)) throw UsageError("ideal valuations take integral ideals");
  if (isZero(i)) return 0;
  if (isUnit(r, i)) return kInf;
  switch (nu.kind) {
    case IdealValuation::Kind::PrimeTable:
      return detail::minOver(minimalPrimes(r, i),
                             [&nu](const PrimeRef& p) { return nu.table.at(std::get<DedekindPrime>(p).label); });
    case IdealValuation::Kind::Induced: return detail::evaluateInduced(*nu.prime, r, i);
    case IdealValuation::Kind::FromLS: return lsMembership(*nu.system, i) ? ExtNat(1) : ExtNat(0);
    case IdealValuation::Kind::PGrade:
      return monomial::pgrade(std::get<MonomialRing>(r).size(), std::get<MonomialModule>(i));
    case IdealValuation::Kind::Height:
      return monomial::height(std::get<MonomialRing>(r).size(), std::get<MonomialModule>(i));
    case IdealValuation::Kind::Contracted: return evaluate(*nu.inner, extendModule(*nu.map, i));
    case IdealValuation::Kind::Extended: return evaluate(*nu.inner, contractModule(*nu.map, i));
    case IdealValuation::Kind::FromChain: return evaluateChain(*nu.chain, i);
  }
  throw UsageError("unknown valuation kind");
}

inline ExtNat evaluateAtPrime(const IdealValuation& nu, const PrimeRef& p) {
  return evaluate(nu, primeIdeal(nu.ring, p));
}

/// Upper bound on the finite values nu takes; empty when they are unbounded.
inline std::optional<std::uint64_t> finiteValueBound(const IdealValuation& nu) {
  switch (nu.kind) {
    case IdealValuation::Kind::PrimeTable: {
      std::uint64_t b = 0;
      for (const auto& [p, v] : nu.table)
        if (v.isFinite()) b = std::max(b, v.value());
      return b;
    }
    case IdealValuation::Kind::Induced: return nu.prime->maxFinite();
    case IdealValuation::Kind::FromLS: return 1;
    case IdealValuation::Kind::PGrade:
    case IdealValuation::Kind::Height: return std::get<MonomialRing>(nu.ring).size();
    case IdealValuation::Kind::Contracted:
    case IdealValuation::Kind::Extended: return finiteValueBound(*nu.inner);
    case IdealValuation::Kind::FromChain: return chainStableIndex(*nu.chain);
  }
  return std::nullopt;
}

}  // namespace ivlab

#include "ivlab/semistar.hpp"
