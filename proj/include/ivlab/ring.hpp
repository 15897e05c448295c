#pragma once

#include <bit>
#include <string>
#include <variant>
#include <vector>

#include "ivlab/dedekind.hpp"
#include "ivlab/monomial.hpp"
#include "ivlab/valuation_ring.hpp"

namespace ivlab {

using Ring = std::variant<DedekindRing, ValuationRing, MonomialRing>;
using Module = std::variant<DedekindModule, CutModule, MonomialModule>;

enum class Model { Dedekind = 0, Valuation = 1, Monomial = 2 };

/// A maximal ideal label, or the empty label for the zero prime.
struct DedekindPrime {
  std::string label;
  friend bool operator==(const DedekindPrime&, const DedekindPrime&) = default;
  friend auto operator<=>(const DedekindPrime&, const DedekindPrime&) = default;
};

/// The prime generated by a set of variables; the empty set is the zero prime.
struct MonomialPrime {
  VarSet vars = 0;
  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
  friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;
};

using PrimeRef = std::variant<DedekindPrime, ValuationPrime, MonomialPrime>;

inline Model model(const Ring& r) { return static_cast<Model>(r.index()); }

namespace detail {

template <typename T>
const T& moduleAs(const Module& m) {
  if (const T* p = std::get_if<T>(&m)) return *p;
  throw UsageError("module does not belong to this ring model");
}

template <typename T>
const T& primeAs(const PrimeRef& p) {
  if (const T* q = std::get_if<T>(&p)) return *q;
  throw UsageError("prime does not belong to this ring model");
}

}  // namespace detail

inline const DedekindRing* asDedekind(const Ring& r) { return std::get_if<DedekindRing>(&r); }
inline const ValuationRing* asValuation(const Ring& r) { return std::get_if<ValuationRing>(&r); }
inline const MonomialRing* asMonomial(const Ring& r) { return std::get_if<MonomialRing>(&r); }

inline void requireModel(const Ring& r, const Module& m) {
  if (r.index() != m.index()) throw UsageError("module does not belong to this ring model");
}

inline Module zeroModule(const Ring& r) {
  switch (model(r)) {
    case Model::Dedekind: return DedekindModule::zero();
    case Model::Valuation: return CutModule::zero();
    default: return MonomialModule::zero();
  }
}

inline Module fullField(const Ring& r) {
  switch (model(r)) {
    case Model::Dedekind: return DedekindModule::fullField();
    case Model::Valuation: return CutModule::fullField();
    default: return MonomialModule::fullField();
  }
}

inline Module unitModule(const Ring& r) {
  if (auto* v = asValuation(r)) return CutModule::unit(v->group());
  if (auto* m = asMonomial(r)) return MonomialModule::unit(m->size());
  return DedekindModule::unit();
}

inline bool isZero(const Module& m) {
  return std::visit([](const auto& x) { return x.isZero(); }, m);
}

inline bool isFullField(const Module& m) {
  return std::visit([](const auto& x) { return x.isFullField(); }, m);
}

inline Module mul(const Ring& r, const Module& a, const Module& b) {
  requireModel(r, a);
  requireModel(r, b);
  switch (model(r)) {
    case Model::Dedekind:
      return dedekind::mul(std::get<DedekindRing>(r), std::get<DedekindModule>(a), std::get<DedekindModule>(b));
    case Model::Valuation: return valuation::mul(std::get<CutModule>(a), std::get<CutModule>(b));
    default: return monomial::mul(std::get<MonomialModule>(a), std::get<MonomialModule>(b));
  }
}

inline Module sum(const Ring& r, const Module& a, const Module& b) {
  requireModel(r, a);
  requireModel(r, b);
  switch (model(r)) {
    case Model::Dedekind:
      return dedekind::sum(std::get<DedekindRing>(r), std::get<DedekindModule>(a), std::get<DedekindModule>(b));
    case Model::Valuation: return valuation::sum(std::get<CutModule>(a), std::get<CutModule>(b));
    default: return monomial::sum(std::get<MonomialModule>(a), std::get<MonomialModule>(b));
  }
}

inline Module intersect(const Ring& r, const Module& a, const Module& b) {
  requireModel(r, a);
  requireModel(r, b);
  switch (model(r)) {
    case Model::Dedekind:
      return dedekind::intersect(std::get<DedekindRing>(r), std::get<DedekindModule>(a), std::get<DedekindModule>(b));
    case Model::Valuation: return valuation::intersect(std::get<CutModule>(a), std::get<CutModule>(b));
    default: return monomial::intersect(std::get<MonomialModule>(a), std::get<MonomialModule>(b));
  }
}

/// (a :_K b).
inline Module colon(const Ring& r, const Module& a, const Module& b) {
  requireModel(r, a);
  requireModel(r, b);
  switch (model(r)) {
    case Model::Dedekind:
      return dedekind::colon(std::get<DedekindRing>(r), std::get<DedekindModule>(a), std::get<DedekindModule>(b));
    case Model::Valuation: return valuation::colon(std::get<CutModule>(a), std::get<CutModule>(b));
    default: return monomial::colon(std::get<MonomialModule>(a), std::get<MonomialModule>(b));
  }
}

/// a contains b.
inline bool contains(const Ring& r, const Module& a, const Module& b) {
  requireModel(r, a);
  requireModel(r, b);
  switch (model(r)) {
    case Model::Dedekind:
      return dedekind::contains(std::get<DedekindRing>(r), std::get<DedekindModule>(a), std::get<DedekindModule>(b));
    case Model::Valuation: return valuation::contains(std::get<CutModule>(a), std::get<CutModule>(b));
    default: return monomial::contains(std::get<MonomialModule>(a), std::get<MonomialModule>(b));
  }
}

inline bool equals(const Ring& r, const Module& a, const Module& b) { return contains(r, a, b) && contains(r, b, a); }

inline bool isIntegral(const Ring& r, const Module& m) { return contains(r, unitModule(r), m); }
inline bool isUnit(const Ring& r, const Module& m) { return equals(r, unitModule(r), m); }

/// Nonzero integral and not the unit ideal.
inline bool isProperNonzero(const Ring& r, const Module& m) {
  return !isZero(m) && isIntegral(r, m) && !isUnit(r, m);
}

inline bool isFinitelyGenerated(const Ring& r, const Module& m) {
  requireModel(r, m);
  if (isFullField(m)) return false;
  if (model(r) == Model::Valuation) return valuation::isFinitelyGenerated(std::get<CutModule>(m));
  return true;
}

inline Module radical(const Ring& r, const Module& a) {
  requireModel(r, a);
  switch (model(r)) {
    case Model::Dedekind: return dedekind::radical(std::get<DedekindRing>(r), std::get<DedekindModule>(a));
    case Model::Valuation: return valuation::radical(std::get<ValuationRing>(r).group(), std::get<CutModule>(a));
    default: return monomial::radical(std::get<MonomialModule>(a));
  }
}

inline PrimeRef zeroPrime(const Ring& r) {
  switch (model(r)) {
    case Model::Dedekind: return DedekindPrime{};
    case Model::Valuation: return ValuationPrime{0};
    default: return MonomialPrime{0};
  }
}

inline bool isZeroPrime(const PrimeRef& p) {
  if (auto* d = std::get_if<DedekindPrime>(&p)) return d->label.empty();
  if (auto* v = std::get_if<ValuationPrime>(&p)) return v->level == 0;
  return std::get<MonomialPrime>(p).vars == 0;
}

/// The maximal ideal of a quasi-local model.
inline PrimeRef maxPrime(const Ring& r) {
  if (auto* v = asValuation(r)) return ValuationPrime{v->maxLevel()};
  if (auto* m = asMonomial(r)) return MonomialPrime{m->allVars()};
  throw UsageError("a Dedekind model has no single maximal ideal");
}

/// Exposed primes in a deterministic order (zero prime first).
inline std::vector<PrimeRef> primes(const Ring& r) {
  std::vector<PrimeRef> out;
  if (auto* d = asDedekind(r)) {
    out.push_back(DedekindPrime{});
    for (const auto& p : d->primes()) out.push_back(DedekindPrime{p});
  } else if (auto* v = asValuation(r)) {
    for (auto p : valuation::primes(*v)) out.push_back(p);
  } else {
    const auto& m = std::get<MonomialRing>(r);
    for (VarSet s = 0; s <= m.allVars(); ++s) out.push_back(MonomialPrime{s});
  }
  return out;
}

inline void requirePrime(const Ring& r, const PrimeRef& p) {
  if (r.index() != p.index()) throw UsageError("prime does not belong to this ring model");
  if (auto* d = std::get_if<DedekindPrime>(&p)) {
    if (!d->label.empty() && !std::get<DedekindRing>(r).hasPrime(d->label))
      throw UsageError("unknown prime '" + d->label + "'");
  } else if (auto* v = std::get_if<ValuationPrime>(&p)) {
    const auto& g = std::get<ValuationRing>(r).group();
    if (v->level > g.fullLevel() && v->level != kLimitLevel) throw UsageError("prime level out of range");
  } else if ((std::get<MonomialPrime>(p).vars & ~std::get<MonomialRing>(r).allVars()) != 0) {
    throw UsageError("prime uses unknown variables");
  }
}

inline Module primeIdeal(const Ring& r, const PrimeRef& p) {
  requirePrime(r, p);
  if (auto* d = std::get_if<DedekindPrime>(&p)) {
    if (d->label.empty()) return DedekindModule::zero();
    return DedekindModule::exponents(std::get<DedekindRing>(r), {{d->label, 1}});
  }
  if (auto* v = std::get_if<ValuationPrime>(&p)) return valuation::primeIdeal(std::get<ValuationRing>(r).group(), *v);
  const auto& m = std::get<MonomialRing>(r);
  return monomial::primeIdeal(m.size(), std::get<MonomialPrime>(p).vars);
}

/// p is contained in q.
inline bool primeLeq(const PrimeRef& p, const PrimeRef& q) {
  if (p.index() != q.index()) throw UsageError("primes from different models");
  if (auto* d = std::get_if<DedekindPrime>(&p)) return d->label.empty() || *d == std::get<DedekindPrime>(q);
  if (auto* v = std::get_if<ValuationPrime>(&p)) return v->level <= std::get<ValuationPrime>(q).level;
  const VarSet a = std::get<MonomialPrime>(p).vars;
  return (a & std::get<MonomialPrime>(q).vars) == a;
}

/// Minimal primes of a proper nonzero integral ideal.
inline std::vector<PrimeRef> minimalPrimes(const Ring& r, const Module& a) {
  if (!isProperNonzero(r, a)) throw UsageError("minimal primes need a proper nonzero ideal");
  std::vector<PrimeRef> out;
  if (model(r) == Model::Dedekind) {
    for (const auto& p : std::get<DedekindModule>(a).support()) out.push_back(DedekindPrime{p});
  } else if (model(r) == Model::Valuation) {
    out.push_back(valuation::radicalPrime(std::get<ValuationRing>(r).group(), std::get<CutModule>(a)));
  } else {
    for (VarSet s : monomial::minimalPrimes(std::get<MonomialRing>(r).size(), std::get<MonomialModule>(a)))
      out.push_back(MonomialPrime{s});
  }
  return out;
}

/// a R_P. Monomial localizations are not monomial modules, so only the zero prime
/// (giving K) is accepted there.
inline Module localize(const Ring& r, const Module& a, const PrimeRef& p) {
  requireModel(r, a);
  requirePrime(r, p);
  if (isZero(a)) return a;
  if (auto* d = std::get_if<DedekindPrime>(&p))
    return dedekind::localize(std::get<DedekindRing>(r), std::get<DedekindModule>(a), d->label);
  if (auto* v = std::get_if<ValuationPrime>(&p))
    return valuation::localize(std::get<ValuationRing>(r).group(), std::get<CutModule>(a), *v);
  if (std::get<MonomialPrime>(p).vars != 0)
    throw UsageError("localization at a nonzero prime is not representable in the monomial model");
  return MonomialModule::fullField();
}

inline std::string primeName(const Ring& r, const PrimeRef& p) {
  if (auto* d = std::get_if<DedekindPrime>(&p)) return d->label.empty() ? "0" : d->label;
  if (auto* v = std::get_if<ValuationPrime>(&p)) {
    const auto& g = std::get<ValuationRing>(r).group();
    if (v->level == g.fullLevel()) return "max";
    if (v->level == kLimitLevel) return "limit";
    return std::to_string(v->level);
  }
  const auto& m = std::get<MonomialRing>(r);
  const VarSet s = std::get<MonomialPrime>(p).vars;
  if (s == 0) return "0";
  std::string out = "(";
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (s & (VarSet{1} << i)) {
      if (!first) out += ",";
      out += m.vars()[i];
      first = false;
    }
  return out + ")";
}

}  // namespace ivlab
