#pragma once

// Brute-force membership oracles. Each one decides membership of a single element
// from the defining property of the module (products, colons, radicals,
// localizations), searching or quantifying over explicit finite probe sets,
// never through the closed forms under test.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ivlab/ivlab.hpp"

namespace oracle {

using namespace ivlab;

// ---- valuation models ----

inline GroupElement times(const GroupElement& x, std::int64_t n) {
  GroupElement acc = GroupElement::zero(x.group());
  GroupElement base = n < 0 ? negate(x) : x;
  for (std::uint64_t k = static_cast<std::uint64_t>(n < 0 ? -n : n); k; k >>= 1) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
  }
  return acc;
}

/// Coordinates 1..k of a followed by the coordinates of b past k.
inline GroupElement splice(const GroupElement& a, const GroupElement& b, std::size_t k, std::size_t depth) {
  if (a.group().kind() == ValueGroup::Kind::LexZ) depth = std::min(depth, a.group().rank());
  std::vector<std::int64_t> c(depth);
  for (std::size_t j = 1; j <= depth; ++j) c[j - 1] = j <= k ? a.coord(j) : b.coord(j);
  return GroupElement::withPrefix(a.group(), c);
}

inline std::size_t depthOf(const std::vector<GroupElement>& xs) {
  const ValueGroup& g = xs.front().group();
  if (g.kind() == ValueGroup::Kind::LexZ) return g.rank();
  std::size_t d = 0;
  for (const auto& x : xs) d = std::max(d, x.supportEnd());
  return d + 3;
}

/// Elements on, just above and just below each anchor, plus far-away shifts at
/// every level up to `depth`.
inline std::vector<GroupElement> probes(const std::vector<GroupElement>& anchors, std::size_t depth) {
  std::vector<GroupElement> out;
  const ValueGroup& g = anchors.front().group();
  if (g.kind() == ValueGroup::Kind::LexZ) depth = std::min(depth, g.rank());
  for (const auto& t : anchors) {
    out.push_back(t);
    if (g.kind() == ValueGroup::Kind::Rationals) {
      for (std::int64_t d : {1, 2, 3, 7, 50, 1000, 1000000}) {
        out.push_back(add(t, GroupElement::rational(g, Rational(1, d))));
        out.push_back(add(t, GroupElement::rational(g, Rational(-1, d))));
      }
      continue;
    }
    for (std::size_t j = 1; j <= depth; ++j) {
      const GroupElement e = GroupElement::unitVector(g, j);
      for (std::int64_t n : {1, 2, 1000000}) {
        out.push_back(add(t, times(e, n)));
        out.push_back(subtract(t, times(e, n)));
      }
      out.push_back(GroupElement::withPrefix(g, t.prefix(j)));
    }
  }
  return out;
}

inline std::vector<GroupElement> anchorsOf(const CutModule& c) {
  if (c.kind() != CutModule::Kind::Cut) return {};
  return {c.threshold()};
}

inline GroupElement midpoint(const GroupElement& a, const GroupElement& b) {
  const Rational s = a.rational() + b.rational();
  return GroupElement::rational(a.group(), Rational(s.num(), s.den() * 2));
}

/// x in AB iff x = y + z with y in A and z in B.
inline bool inProduct(const CutModule& a, const CutModule& b, const GroupElement& x) {
  if (a.isZero() || b.isZero()) return false;
  if (a.isFullField() || b.isFullField()) return true;
  const GroupElement s = a.threshold(), t = b.threshold();
  const GroupElement rest = subtract(x, t);
  std::vector<GroupElement> anchors{s, rest};
  const ValueGroup& g = x.group();
  if (g.kind() == ValueGroup::Kind::Rationals) {
    anchors.push_back(midpoint(s, rest));
  } else {
    const std::size_t d = depthOf({s, t, x});
    for (std::size_t k = 0; k <= d; ++k) {
      anchors.push_back(splice(s, rest, k, d));
      anchors.push_back(splice(rest, s, k, d));
    }
  }
  const std::size_t d = g.kind() == ValueGroup::Kind::Rationals ? 0 : depthOf({s, t, x}) + 2;
  for (const auto& y : probes(anchors, d))
    if (a.contains(y) && b.contains(subtract(x, y))) return true;
  return false;
}

/// Elements of B reaching towards its lower boundary.
inline std::vector<GroupElement> lowElements(const CutModule& b, std::size_t depth) {
  std::vector<GroupElement> out;
  for (const auto& y : probes(anchorsOf(b), depth))
    if (b.contains(y)) out.push_back(y);
  return out;
}

/// x in (A : B) iff x + y in A for every y in B.
inline bool inColon(const CutModule& a, const CutModule& b, const GroupElement& x) {
  if (b.isZero() || a.isFullField()) return true;
  if (a.isZero()) return false;
  if (b.isFullField()) return false;
  const ValueGroup& g = x.group();
  const std::size_t d =
      g.kind() == ValueGroup::Kind::Rationals ? 0 : depthOf({a.threshold(), b.threshold(), x}) + 2;
  for (const auto& y : lowElements(b, d))
    if (!a.contains(add(x, y))) return false;
  return true;
}

/// x in rad(A) iff some positive multiple of x lies in A.
inline bool inRadical(const CutModule& a, const GroupElement& x) {
  if (a.isFullField()) return true;
  if (a.isZero()) return false;
  for (std::int64_t n = 1; n <= 1 << 20; n = n < 64 ? n + 1 : n * 2)
    if (a.contains(times(x, n))) return true;
  return false;
}

/// x in A R_P for P = P_k iff x - u lies in A for some unit-or-better u of R_P,
/// i.e. some u whose first k coordinates vanish or are positive.
inline bool inLocalization(const ValuationRing& r, const CutModule& a, std::size_t k, const GroupElement& x) {
  const ValueGroup& g = r.group();
  if (a.isZero()) return false;
  if (a.isFullField()) return true;
  if (k == g.fullLevel()) return a.contains(x);
  if (k == 0) return true;
  const std::size_t d = std::max(depthOf({a.threshold(), x}), k) + 2;
  const GroupElement zero = GroupElement::zero(g);
  const GroupElement gap = subtract(x, a.threshold());
  std::vector<GroupElement> anchors{zero, splice(zero, gap, k, d)};
  for (const auto& u : probes(anchors, d)) {
    if (comparePrefix(u, zero, k) < 0) continue;
    if (a.contains(subtract(x, u))) return true;
  }
  return false;
}

/// Rank-omega limit: membership in A R_{P_k} for every finite level probed.
inline bool inLimitLocalization(const ValuationRing& r, const CutModule& a, const GroupElement& x) {
  const std::size_t d = depthOf({a.kind() == CutModule::Kind::Cut ? a.threshold() : x, x}) + 4;
  for (std::size_t k = 1; k <= d; ++k)
    if (!inLocalization(r, a, k, x)) return false;
  return true;
}

// ---- Dedekind models ----

using Divisor = std::map<std::string, std::int64_t>;

inline bool inDedekind(const DedekindRing& r, const DedekindModule& a, const Divisor& x) {
  if (a.isZero()) return false;
  for (const auto& p : r.primes()) {
    const std::int64_t e = a.exponent(p);
    if (e != kNegInf && x.at(p) < e) return false;
  }
  return true;
}

/// Every divisor with exponents in [-bound, bound].
inline std::vector<Divisor> divisorBox(const DedekindRing& r, std::int64_t bound) {
  std::vector<Divisor> out{Divisor{}};
  for (const auto& p : r.primes()) {
    std::vector<Divisor> next;
    for (const auto& d : out)
      for (std::int64_t e = -bound; e <= bound; ++e) {
        Divisor n = d;
        n[p] = e;
        next.push_back(n);
      }
    out = std::move(next);
  }
  return out;
}

inline Divisor minus(const Divisor& a, const Divisor& b) {
  Divisor c = a;
  for (auto& [p, e] : c) e -= b.at(p);
  return c;
}

inline Divisor plus(const Divisor& a, const Divisor& b) {
  Divisor c = a;
  for (auto& [p, e] : c) e += b.at(p);
  return c;
}

inline bool inDedekindProduct(const DedekindRing& r, const DedekindModule& a, const DedekindModule& b,
                              const Divisor& x, std::int64_t bound) {
  for (const auto& y : divisorBox(r, bound))
    if (inDedekind(r, a, y) && inDedekind(r, b, minus(x, y))) return true;
  return false;
}

inline bool inDedekindColon(const DedekindRing& r, const DedekindModule& a, const DedekindModule& b,
                            const Divisor& x, std::int64_t bound) {
  for (const auto& y : divisorBox(r, bound))
    if (inDedekind(r, b, y) && !inDedekind(r, a, plus(x, y))) return false;
  return true;
}

// ---- monomial models ----

inline Monomial shift(const Monomial& a, const Monomial& b, int sign) {
  Monomial c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += sign * b[i];
  return c;
}

inline bool inMonomialProduct(const MonomialModule& a, const MonomialModule& b, const Monomial& m) {
  if (a.isZero() || b.isZero()) return false;
  for (const auto& g : a.gens())
    if (monomial::contains(b, shift(m, g, -1))) return true;
  return false;
}

inline bool inMonomialColon(const MonomialModule& a, const MonomialModule& b, const Monomial& m) {
  for (const auto& h : b.gens())
    if (!monomial::contains(a, shift(m, h, 1))) return false;
  return true;
}

inline bool inMonomialRadical(const MonomialModule& a, const Monomial& m) {
  Monomial p = m;
  for (int n = 1; n <= 16; ++n, p = shift(p, m, 1))
    if (monomial::contains(a, p)) return true;
  return false;
}

/// Every monomial with exponents in [lo, hi].
inline std::vector<Monomial> monomialBox(std::size_t nvars, std::int64_t lo, std::int64_t hi) {
  std::vector<Monomial> out{Monomial{}};
  for (std::size_t i = 0; i < nvars; ++i) {
    std::vector<Monomial> next;
    for (const auto& m : out)
      for (std::int64_t e = lo; e <= hi; ++e) {
        Monomial n = m;
        n.push_back(e);
        next.push_back(n);
      }
    out = std::move(next);
  }
  return out;
}

/// Smallest set of variables meeting every generator's support.
inline std::size_t minVertexCover(std::size_t nvars, const MonomialModule& a) {
  std::size_t best = nvars + 1;
  for (VarSet s = 0; s < (VarSet{1} << nvars); ++s) {
    bool covers = true;
    for (const auto& g : a.gens())
      if ((monomial::support(g) & s) == 0) covers = false;
    if (covers) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
  }
  return best;
}

/// R : J as the set of Laurent monomials m with m J inside R, listed over a box.
inline bool inverseIsUnitByBox(std::size_t nvars, const MonomialModule& j, std::int64_t reach) {
  for (const auto& m : monomialBox(nvars, -reach, 0)) {
    bool ok = true;
    for (const auto& g : j.gens())
      for (std::size_t i = 0; i < nvars; ++i)
        if (m[i] + g[i] < 0) ok = false;
    if (ok && std::any_of(m.begin(), m.end(), [](std::int64_t e) { return e < 0; })) return false;
  }
  return true;
}

}  // namespace oracle
