#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ivlab/error.hpp"
#include "ivlab/value_group.hpp"

namespace ivlab {

/// Valuation domain with a given value group. For rank omega only the first
/// `omegaBound` finite-level primes are enumerated by primes(); all others are
/// still valid arguments everywhere.
class ValuationRing {
 public:
  explicit ValuationRing(ValueGroup group, std::size_t omegaBound = 6) : group_(group), omegaBound_(omegaBound) {}

  const ValueGroup& group() const { return group_; }
  std::size_t omegaBound() const { return omegaBound_; }

  /// Level of the maximal ideal: n for lex Z^n, kTopLevel for rank omega, 1 for Q.
  std::size_t maxLevel() const { return group_.fullLevel(); }

  /// Krull dimension when finite.
  std::size_t dimension() const {
    if (group_.kind() == ValueGroup::Kind::LexZOmega) throw UsageError("lexZ(omega) has infinite dimension");
    return group_.fullLevel();
  }

  friend bool operator==(const ValuationRing& a, const ValuationRing& b) { return a.group_ == b.group_; }

 private:
  ValueGroup group_;
  std::size_t omegaBound_;
};

/// Pseudo-level standing for the union of all finite-level primes of rank omega.
/// It is not a prime (the union is M) but indexes the limit of localizations at P_k.
inline constexpr std::size_t kLimitLevel = kTopLevel - 1;

/// Prime of a valuation model: P_level, level 0 the zero ideal, maxLevel() the maximal ideal.
struct ValuationPrime {
  std::size_t level = 0;
  friend bool operator==(const ValuationPrime&, const ValuationPrime&) = default;
  friend auto operator<=>(const ValuationPrime&, const ValuationPrime&) = default;
};

/// An R-submodule of K for a valuation model: an up-set of the value group.
///
/// A cut at level k with threshold t is {v : prefix_k(v) >= prefix_k(t)} (or > when
/// strict). At the group's full level the whole element is compared. In discrete
/// groups every strict cut at a finite level is rewritten as the nonstrict cut at
/// the successor threshold, so strictness survives only at the top level of the
/// rank-omega group and in Q.
class CutModule {
 public:
  enum class Kind { Zero, FullField, Cut };

  static CutModule zero() { return CutModule(Kind::Zero); }
  static CutModule fullField() { return CutModule(Kind::FullField); }

  static CutModule cut(std::size_t level, const GroupElement& threshold, bool strict) {
    const ValueGroup& g = threshold.group();
    if (level == 0) throw UsageError("cut level must be at least 1");
    if (g.kind() == ValueGroup::Kind::Rationals) level = 1;
    if (g.kind() == ValueGroup::Kind::LexZ && level > g.rank() && level != kTopLevel)
      throw UsageError("cut level " + std::to_string(level) + " exceeds the rank of " + g.str());
    if (level == kTopLevel) level = g.fullLevel();
    CutModule m(Kind::Cut);
    m.level_ = level;
    m.strict_ = strict;
    if (g.kind() == ValueGroup::Kind::Rationals || level == kTopLevel) {
      m.threshold_ = threshold;
    } else {
      m.threshold_ = GroupElement::withPrefix(g, threshold.prefix(level));
      if (strict) {
        m.threshold_ = add(m.threshold_, GroupElement::unitVector(g, level));
        m.strict_ = false;
      }
    }
    return m;
  }

  static CutModule principal(const GroupElement& x) { return cut(x.group().fullLevel(), x, false); }
  static CutModule unit(const ValueGroup& g) { return principal(GroupElement::zero(g)); }

  Kind kind() const { return kind_; }
  bool isZero() const { return kind_ == Kind::Zero; }
  bool isFullField() const { return kind_ == Kind::FullField; }
  std::size_t level() const { return level_; }
  const GroupElement& threshold() const { return threshold_; }
  bool strict() const { return strict_; }
  bool isTopLevel() const { return kind_ == Kind::Cut && level_ == threshold_.group().fullLevel(); }

  /// Membership of the field element with value v.
  bool contains(const GroupElement& v) const {
    if (kind_ == Kind::Zero) return false;
    if (kind_ == Kind::FullField) return true;
    const auto c = comparePrefix(v, threshold_, level_);
    return strict_ ? c > 0 : c >= 0;
  }

  friend bool operator==(const CutModule& a, const CutModule& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ != Kind::Cut) return true;
    return a.level_ == b.level_ && a.strict_ == b.strict_ && a.threshold_ == b.threshold_;
  }

 private:
  explicit CutModule(Kind k) : kind_(k), threshold_(GroupElement::zero(ValueGroup::lexZ(1))) {}

  Kind kind_;
  std::size_t level_ = 0;
  GroupElement threshold_;
  bool strict_ = false;
};

namespace valuation {

/// Orders two Cut-kind modules by their lower boundary; a smaller boundary is a
/// larger set.
inline int compareBoundary(const CutModule& a, const CutModule& b) {
  const GroupElement& s = a.threshold();
  const GroupElement& t = b.threshold();
  requireSameGroup(s, t);
  const ValueGroup& g = s.group();
  if (g.kind() == ValueGroup::Kind::Rationals) {
    const auto c = s.rational() <=> t.rational();
    if (c != 0) return c < 0 ? -1 : 1;
    return static_cast<int>(a.strict()) - static_cast<int>(b.strict());
  }
  const std::size_t top = g.fullLevel();
  auto extent = [top](const CutModule& m) { return m.level() == top ? m.threshold().supportEnd() : m.level(); };
  std::size_t end = std::max(extent(a), extent(b)) + 1;
  if (g.kind() == ValueGroup::Kind::LexZ) end = std::min(end, g.rank());
  for (std::size_t j = 1; j <= end; ++j) {
    const bool aOpen = a.level() != top && j > a.level();
    const bool bOpen = b.level() != top && j > b.level();
    if (aOpen && bOpen) return 0;
    if (aOpen) return -1;
    if (bOpen) return 1;
    const std::int64_t x = s.coord(j);
    const std::int64_t y = t.coord(j);
    if (x != y) return x < y ? -1 : 1;
  }
  return static_cast<int>(a.strict()) - static_cast<int>(b.strict());
}

/// a contains b.
inline bool contains(const CutModule& a, const CutModule& b) {
  if (b.isZero() || a.isFullField()) return true;
  if (a.isZero() || b.isFullField()) return false;
  return compareBoundary(a, b) <= 0;
}

inline CutModule sum(const CutModule& a, const CutModule& b) { return contains(a, b) ? a : b; }
inline CutModule intersect(const CutModule& a, const CutModule& b) { return contains(a, b) ? b : a; }

inline CutModule mul(const CutModule& a, const CutModule& b) {
  if (a.isZero() || b.isZero()) return CutModule::zero();
  if (a.isFullField() || b.isFullField()) return CutModule::fullField();
  const std::size_t level = std::min(a.level(), b.level());
  const bool top = level == a.threshold().group().fullLevel();
  return CutModule::cut(level, add(a.threshold(), b.threshold()), top && (a.strict() || b.strict()));
}

/// (a :_K b) = {x : x + b subset a}.
inline CutModule colon(const CutModule& a, const CutModule& b) {
  if (b.isZero()) throw UsageError("colon by the zero ideal");
  if (a.isZero()) return CutModule::zero();
  if (a.isFullField()) return CutModule::fullField();
  if (b.isFullField()) return CutModule::zero();
  const ValueGroup& g = a.threshold().group();
  const std::size_t top = g.fullLevel();
  const std::size_t k = a.level();
  const std::size_t l = b.level();
  const GroupElement diff = subtract(a.threshold(), b.threshold());
  if (l < k) return CutModule::cut(l, add(diff, GroupElement::unitVector(g, l)), false);
  if (k != top) return CutModule::cut(k, diff, false);
  return CutModule::cut(top, diff, a.strict() && !b.strict());
}

inline CutModule unitOf(const ValueGroup& g) { return CutModule::unit(g); }

inline bool isIntegral(const ValueGroup& g, const CutModule& a) { return contains(unitOf(g), a); }

/// Principal fractional modules, including the unit ideal.
inline bool isFinitelyGenerated(const CutModule& a) {
  if (a.isZero()) return true;
  if (a.isFullField()) return false;
  return a.isTopLevel() && !a.strict();
}

inline CutModule primeIdeal(const ValueGroup& g, const ValuationPrime& p) {
  if (p.level == kLimitLevel) throw UsageError("the limit level is not a prime");
  if (p.level == 0) return CutModule::zero();
  if (p.level == g.fullLevel()) return CutModule::cut(g.fullLevel(), GroupElement::zero(g), true);
  return CutModule::cut(p.level, GroupElement::zero(g), true);
}

/// R_P as a module: nonstrict cut at level(P) through 0; K for the zero prime.
inline CutModule overring(const ValueGroup& g, const ValuationPrime& p) {
  if (p.level == 0) return CutModule::fullField();
  return CutModule::cut(p.level, GroupElement::zero(g), false);
}

/// The intersection over all finite k of a R_{P_k} in rank omega: a strict top-level
/// cut loses its strictness, everything else is unchanged.
inline CutModule limitOmega(const CutModule& a) {
  if (a.kind() != CutModule::Kind::Cut || !a.isTopLevel() || !a.strict()) return a;
  return CutModule::cut(kTopLevel, a.threshold(), false);
}

inline CutModule localize(const ValueGroup& g, const CutModule& a, const ValuationPrime& p) {
  if (a.isZero()) return a;
  if (p.level == kLimitLevel) {
    if (g.kind() != ValueGroup::Kind::LexZOmega) throw UsageError("the limit level exists only in rank omega");
    return limitOmega(a);
  }
  return mul(a, overring(g, p));
}

/// The smallest prime containing a proper nonzero integral ideal.
inline ValuationPrime radicalPrime(const ValueGroup& g, const CutModule& a) {
  if (!isIntegral(g, a)) throw UsageError("radical of a non-integral module");
  if (a.isZero()) return {0};
  if (contains(a, unitOf(g))) throw UsageError("the unit ideal lies in no prime");
  if (g.kind() == ValueGroup::Kind::Rationals) return {1};
  const ExtNat lead = leadingLevel(a.threshold());
  if (lead.isInfinite()) return {g.fullLevel()};
  return {static_cast<std::size_t>(lead.value())};
}

inline CutModule radical(const ValueGroup& g, const CutModule& a) {
  if (!isIntegral(g, a)) throw UsageError("radical of a non-integral module");
  if (a.isZero() || contains(a, unitOf(g))) return a;
  return primeIdeal(g, radicalPrime(g, a));
}

/// Exposed primes: all of them for finite rank, levels 0..omegaBound plus M for rank omega.
inline std::vector<ValuationPrime> primes(const ValuationRing& r) {
  std::vector<ValuationPrime> out;
  const ValueGroup& g = r.group();
  const std::size_t last = g.kind() == ValueGroup::Kind::LexZOmega ? r.omegaBound() : g.fullLevel();
  for (std::size_t k = 0; k <= last; ++k) out.push_back({k});
  if (g.kind() == ValueGroup::Kind::LexZOmega) out.push_back({kTopLevel});
  return out;
}

}  // namespace valuation
}  // namespace ivlab
