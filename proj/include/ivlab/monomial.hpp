#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ivlab/error.hpp"
#include "ivlab/ext_nat.hpp"

namespace ivlab {

/// k[X_1..X_m]; the coefficient field never matters and is not represented.
class MonomialRing {
 public:
  explicit MonomialRing(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (vars_.empty()) throw ValidationError("a monomial ring needs at least one variable");
    if (vars_.size() > 20) throw ValidationError("at most 20 variables are supported");
    std::set<std::string> seen(vars_.begin(), vars_.end());
    if (seen.size() != vars_.size()) throw ValidationError("duplicate variable name");
  }

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  std::uint32_t allVars() const { return (std::uint32_t{1} << vars_.size()) - 1; }

  friend bool operator==(const MonomialRing&, const MonomialRing&) = default;

 private:
  std::vector<std::string> vars_;
};

/// Exponent vector; entries may be negative for fractional generators.
using Monomial = std::vector<std::int64_t>;

/// Variable subset as a bitmask; bit i is variable i.
using VarSet = std::uint32_t;

/// Finitely generated fractional monomial module, zero, or K. Generators form a
/// canonically ordered antichain under divisibility; the unit ideal is {1}.
class MonomialModule {
 public:
  enum class Kind { Zero, FullField, Gens };

  static MonomialModule zero() { return MonomialModule(Kind::Zero, {}); }
  static MonomialModule fullField() { return MonomialModule(Kind::FullField, {}); }
  static MonomialModule unit(std::size_t nvars) { return MonomialModule(Kind::Gens, {Monomial(nvars, 0)}); }
  static MonomialModule generated(std::vector<Monomial> gens);

  Kind kind() const { return kind_; }
  bool isZero() const { return kind_ == Kind::Zero; }
  bool isFullField() const { return kind_ == Kind::FullField; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool isUnit() const {
    return kind_ == Kind::Gens && gens_.size() == 1 &&
           std::all_of(gens_[0].begin(), gens_[0].end(), [](auto e) { return e == 0; });
  }
  bool isIntegral() const {
    if (kind_ == Kind::FullField) return false;
    for (const auto& g : gens_)
      for (auto e : g)
        if (e < 0) return false;
    return true;
  }

  friend bool operator==(const MonomialModule&, const MonomialModule&) = default;

 private:
  MonomialModule(Kind k, std::vector<Monomial> g) : kind_(k), gens_(std::move(g)) {}

  Kind kind_;
  std::vector<Monomial> gens_;
};

namespace monomial {

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline VarSet support(const Monomial& m) {
  VarSet s = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) s |= VarSet{1} << i;
  return s;
}

/// Canonical order: compare from the last variable, larger exponent first.
inline bool canonicalLess(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.size(); i > 0; --i)
    if (a[i - 1] != b[i - 1]) return a[i - 1] > b[i - 1];
  return false;
}

/// Drops every generator divisible by another one and sorts canonically.
inline std::vector<Monomial> minGens(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = i != j && divides(gens[j], gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  std::sort(out.begin(), out.end(), canonicalLess);
  return out;
}

}  // namespace monomial

inline MonomialModule MonomialModule::generated(std::vector<Monomial> gens) {
  if (gens.empty()) return zero();
  const std::size_t n = gens.front().size();
  for (const auto& g : gens)
    if (g.size() != n) throw UsageError("monomials of different lengths");
  return MonomialModule(Kind::Gens, monomial::minGens(std::move(gens)));
}

namespace monomial {

inline MonomialModule sum(const MonomialModule& a, const MonomialModule& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  if (a.isFullField() || b.isFullField()) return MonomialModule::fullField();
  auto g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return MonomialModule::generated(std::move(g));
}

inline MonomialModule mul(const MonomialModule& a, const MonomialModule& b) {
  if (a.isZero() || b.isZero()) return MonomialModule::zero();
  if (a.isFullField() || b.isFullField()) return MonomialModule::fullField();
  std::vector<Monomial> g;
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) {
      Monomial p(x.size());
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = x[i] + y[i];
      g.push_back(std::move(p));
    }
  return MonomialModule::generated(std::move(g));
}

inline MonomialModule intersect(const MonomialModule& a, const MonomialModule& b) {
  if (a.isZero() || b.isZero()) return MonomialModule::zero();
  if (a.isFullField()) return b;
  if (b.isFullField()) return a;
  std::vector<Monomial> g;
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) {
      Monomial l(x.size());
      for (std::size_t i = 0; i < l.size(); ++i) l[i] = std::max(x[i], y[i]);
      g.push_back(std::move(l));
    }
  return MonomialModule::generated(std::move(g));
}

/// a contains b.
inline bool contains(const MonomialModule& a, const MonomialModule& b) {
  if (b.isZero() || a.isFullField()) return true;
  if (a.isZero() || b.isFullField()) return false;
  return std::all_of(b.gens().begin(), b.gens().end(), [&](const Monomial& y) {
    return std::any_of(a.gens().begin(), a.gens().end(), [&](const Monomial& x) { return divides(x, y); });
  });
}

inline bool contains(const MonomialModule& a, const Monomial& m) {
  if (a.isFullField()) return true;
  return std::any_of(a.gens().begin(), a.gens().end(), [&](const Monomial& x) { return divides(x, m); });
}

/// (a :_K g) for a single monomial g: every generator shifted by -g.
inline MonomialModule divide(const MonomialModule& a, const Monomial& g) {
  if (a.isZero() || a.isFullField()) return a;
  std::vector<Monomial> out;
  for (const auto& x : a.gens()) {
    Monomial q(x.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = x[i] - g[i];
    out.push_back(std::move(q));
  }
  return MonomialModule::generated(std::move(out));
}

/// (a :_K b) = intersection over generators g of b of (a :_K g).
inline MonomialModule colon(const MonomialModule& a, const MonomialModule& b) {
  if (b.isZero()) throw UsageError("colon by the zero ideal");
  if (a.isFullField()) return a;
  if (b.isFullField()) return MonomialModule::zero();
  MonomialModule r = MonomialModule::fullField();
  for (const auto& g : b.gens()) r = intersect(r, divide(a, g));
  return r;
}

/// Componentwise minimum of the generators (the monomial gcd).
inline Monomial gcd(const MonomialModule& a) {
  if (a.kind() != MonomialModule::Kind::Gens) throw UsageError("gcd of zero or K");
  Monomial g = a.gens().front();
  for (const auto& x : a.gens())
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], x[i]);
  return g;
}

inline MonomialModule principal(const Monomial& m) { return MonomialModule::generated({m}); }

inline MonomialModule primeIdeal(std::size_t nvars, VarSet s) {
  if (s == 0) return MonomialModule::zero();
  std::vector<Monomial> g;
  for (std::size_t i = 0; i < nvars; ++i)
    if (s & (VarSet{1} << i)) {
      Monomial m(nvars, 0);
      m[i] = 1;
      g.push_back(std::move(m));
    }
  return MonomialModule::generated(std::move(g));
}

inline MonomialModule radical(const MonomialModule& a) {
  if (!a.isIntegral()) throw UsageError("radical of a non-integral module");
  if (a.isZero()) return a;
  std::vector<Monomial> g;
  for (const auto& x : a.gens()) {
    Monomial r(x.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = x[i] > 0 ? 1 : 0;
    g.push_back(std::move(r));
  }
  return MonomialModule::generated(std::move(g));
}

/// Inclusion-minimal transversals of the hypergraph of generator supports, i.e.
/// the minimal primes of a proper nonzero monomial ideal.
inline std::vector<VarSet> minimalPrimes(std::size_t nvars, const MonomialModule& a) {
  if (!a.isIntegral() || a.isZero() || a.isUnit())
    throw UsageError("minimal primes need a proper nonzero monomial ideal");
  std::vector<VarSet> edges;
  for (const auto& g : a.gens()) edges.push_back(support(g));
  std::vector<VarSet> covers;
  const VarSet all = (VarSet{1} << nvars) - 1;
  for (VarSet s = 1; s <= all; ++s) {
    if (!std::all_of(edges.begin(), edges.end(), [s](VarSet e) { return (e & s) != 0; })) continue;
    bool minimal = true;
    for (VarSet c : covers)
      if ((c & s) == c) {
        minimal = false;
        break;
      }
    if (minimal) covers.push_back(s);
  }
  // Supersets were filtered only against earlier (numerically smaller) covers;
  // a proper subset is always numerically smaller, so the list is already minimal.
  std::sort(covers.begin(), covers.end(), [](VarSet x, VarSet y) {
    const int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });
  return covers;
}

/// Minimum transversal size; 0 for the zero ideal and infinity for the unit ideal.
inline ExtNat height(std::size_t nvars, const MonomialModule& a) {
  if (a.isZero()) return 0;
  if (a.isUnit()) return kInf;
  const auto mp = minimalPrimes(nvars, a);
  return static_cast<std::uint64_t>(std::popcount(mp.front()));
}

struct PrimaryComponent {
  MonomialModule ideal;
  VarSet prime;
  std::size_t grade;
  friend bool operator==(const PrimaryComponent&, const PrimaryComponent&) = default;
};

namespace detail {

inline void splitDecompose(const MonomialModule& a, std::vector<MonomialModule>& leaves) {
  for (const auto& g : a.gens()) {
    const VarSet s = support(g);
    if (std::popcount(s) < 2) continue;
    const std::size_t first = static_cast<std::size_t>(std::countr_zero(s));
    Monomial u(g.size(), 0);
    u[first] = g[first];
    Monomial v = g;
    v[first] = 0;
    splitDecompose(sum(a, principal(u)), leaves);
    splitDecompose(sum(a, principal(v)), leaves);
    return;
  }
  leaves.push_back(a);
}

}  // namespace detail

/// Irredundant monomial primary decomposition by generator splitting; components
/// sharing a prime are merged, then redundant components dropped.
inline std::vector<PrimaryComponent> primaryDecomposition([[maybe_unused]] std::size_t nvars, const MonomialModule& a) {
  if (!a.isIntegral() || a.isZero() || a.isUnit())
    throw UsageError("primary decomposition needs a proper nonzero monomial ideal");
  std::vector<MonomialModule> leaves;
  detail::splitDecompose(a, leaves);

  std::vector<PrimaryComponent> comps;
  for (const auto& q : leaves) {
    VarSet p = 0;
    for (const auto& g : q.gens()) p |= support(g);
    auto it = std::find_if(comps.begin(), comps.end(), [p](const PrimaryComponent& c) { return c.prime == p; });
    if (it == comps.end())
      comps.push_back({q, p, static_cast<std::size_t>(std::popcount(p))});
    else
      it->ideal = intersect(it->ideal, q);
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < comps.size() && comps.size() > 1; ++i) {
      MonomialModule others = MonomialModule::fullField();
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (j != i) others = intersect(others, comps[j].ideal);
      if (contains(comps[i].ideal, others)) {
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  std::sort(comps.begin(), comps.end(), [](const PrimaryComponent& x, const PrimaryComponent& y) {
    return x.grade != y.grade ? x.grade < y.grade : x.prime < y.prime;
  });
  return comps;
}

/// p.grade of a monomial ideal; equal to the height in the Cohen-Macaulay
/// polynomial ring.
inline ExtNat pgrade(std::size_t nvars, const MonomialModule& a) { return height(nvars, a); }

/// (R :_K j), computed as a module colon.
inline MonomialModule inverse(std::size_t nvars, const MonomialModule& j) {
  if (j.isZero()) throw UsageError("inverse of the zero ideal");
  return colon(MonomialModule::unit(nvars), j);
}

inline MonomialModule vClosure(std::size_t nvars, const MonomialModule& a) {
  if (a.isZero()) return a;
  const MonomialModule inv = inverse(nvars, a);
  if (inv.isZero()) return MonomialModule::fullField();
  return inverse(nvars, inv);
}

/// Intersection of the primary components of an integral ideal whose prime is kept
/// by the predicate (the unit ideal when none is kept).
inline MonomialModule filterComponents(std::size_t nvars, const MonomialModule& a,
                                       const std::function<bool(VarSet)>& keep) {
  if (a.isZero() || a.isUnit()) return a;
  MonomialModule r = MonomialModule::unit(nvars);
  for (const auto& c : primaryDecomposition(nvars, a))
    if (keep(c.prime)) r = intersect(r, c.ideal);
  return r;
}

/// Closure of a proper nonzero ideal under the level-n operation of p.grade.
inline MonomialModule levelClosure(std::size_t nvars, const MonomialModule& a, std::uint64_t n) {
  if (!a.isIntegral() || a.isZero() || a.isUnit())
    throw UsageError("levelClosure needs a proper nonzero monomial ideal");
  if (n <= 1) return MonomialModule::fullField();
  return filterComponents(nvars, a, [n](VarSet p) { return static_cast<std::uint64_t>(std::popcount(p)) < n; });
}

/// a : b^infinity by iterated colon; b must have trivial gcd so the chain stays integral.
inline MonomialModule saturate(const MonomialModule& a, const MonomialModule& b) {
  if (b.isZero() || b.isFullField()) throw UsageError("saturation needs a nonzero ideal");
  const Monomial content = gcd(b);
  if (std::any_of(content.begin(), content.end(), [](auto e) { return e != 0; }))
    throw UsageError("saturation by an ideal with a nontrivial monomial factor");
  MonomialModule cur = a;
  for (;;) {
    MonomialModule next = colon(cur, b);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

/// The ideal generated by the products of all variables but one. It lies in every
/// monomial prime of height >= 2 and in no height-one prime.
inline MonomialModule covariableIdeal(std::size_t nvars) {
  std::vector<Monomial> g;
  for (std::size_t j = 0; j < nvars; ++j) {
    Monomial m(nvars, 1);
    m[j] = 0;
    g.push_back(std::move(m));
  }
  return MonomialModule::generated(std::move(g));
}

/// Writes a nonzero f.g. module as m * I with I integral and gcd(I) = 1.
inline std::pair<Monomial, MonomialModule> factorContent(const MonomialModule& a) {
  const Monomial g = gcd(a);
  return {g, divide(a, g)};
}

/// w-closure by saturating against the covariable ideal, independent of any
/// primary decomposition.
inline MonomialModule wClosureBySaturation(std::size_t nvars, const MonomialModule& a) {
  if (a.isZero() || a.isFullField()) return a;
  auto [content, rest] = factorContent(a);
  const MonomialModule sat = nvars < 2 ? rest : saturate(rest, covariableIdeal(nvars));
  return mul(principal(content), sat);
}

}  // namespace monomial
}  // namespace ivlab
