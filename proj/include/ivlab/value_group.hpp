#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ivlab/error.hpp"
#include "ivlab/ext_nat.hpp"

namespace ivlab {

/// Reduced fraction with positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {  // NOLINT
    if (den_ == 0) throw UsageError("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    return (static_cast<__int128>(a.num_) * b.den_) <=> (static_cast<__int128>(b.num_) * a.den_);
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Level index meaning "compare the whole element" in the rank-omega group.
inline constexpr std::size_t kTopLevel = std::numeric_limits<std::size_t>::max();

/// A totally ordered abelian group: lex Z^n, finitely supported lex Z^(omega), or Q.
class ValueGroup {
 public:
  enum class Kind { LexZ, LexZOmega, Rationals };

  static ValueGroup lexZ(std::size_t rank) {
    if (rank == 0) throw UsageError("lexZ rank must be at least 1");
    return ValueGroup(Kind::LexZ, rank);
  }
  static ValueGroup lexZOmega() { return ValueGroup(Kind::LexZOmega, 0); }
  static ValueGroup rationals() { return ValueGroup(Kind::Rationals, 0); }

  Kind kind() const { return kind_; }
  /// Rank for LexZ; 0 for the other two kinds.
  std::size_t rank() const { return rank_; }
  bool isDiscrete() const { return kind_ != Kind::Rationals; }

  /// The level at which a cut compares full elements: n for lex Z^n, kTopLevel for
  /// rank omega, 1 for Q.
  std::size_t fullLevel() const {
    switch (kind_) {
      case Kind::LexZ: return rank_;
      case Kind::LexZOmega: return kTopLevel;
      case Kind::Rationals: return 1;
    }
    return 1;
  }

  friend bool operator==(const ValueGroup&, const ValueGroup&) = default;

  std::string str() const {
    switch (kind_) {
      case Kind::LexZ: return "lexZ(" + std::to_string(rank_) + ")";
      case Kind::LexZOmega: return "lexZ(omega)";
      case Kind::Rationals: return "Q";
    }
    return "?";
  }

 private:
  ValueGroup(Kind k, std::size_t r) : kind_(k), rank_(r) {}

  Kind kind_;
  std::size_t rank_;
};

/// Element of a ValueGroup. Immutable; all constructors normalize.
class GroupElement {
 public:
  using SparseEntry = std::pair<std::size_t, std::int64_t>;

  static GroupElement zero(const ValueGroup& g) {
    GroupElement e(g);
    if (g.kind() == ValueGroup::Kind::LexZ) e.dense_.assign(g.rank(), 0);
    return e;
  }

  static GroupElement lex(const ValueGroup& g, std::vector<std::int64_t> coords) {
    if (g.kind() != ValueGroup::Kind::LexZ) throw UsageError("lex() needs a lexZ(n) group");
    if (coords.size() != g.rank()) throw UsageError("coordinate count does not match the rank");
    GroupElement e(g);
    e.dense_ = std::move(coords);
    return e;
  }

  static GroupElement sparse(const ValueGroup& g, std::vector<SparseEntry> entries) {
    if (g.kind() != ValueGroup::Kind::LexZOmega) throw UsageError("sparse() needs lexZ(omega)");
    std::sort(entries.begin(), entries.end());
    GroupElement e(g);
    for (const auto& [idx, v] : entries) {
      if (idx == 0) throw UsageError("lexZ(omega) indices start at 1");
      if (!e.sparse_.empty() && e.sparse_.back().first == idx) {
        e.sparse_.back().second += v;
        if (e.sparse_.back().second == 0) e.sparse_.pop_back();
      } else if (v != 0) {
        e.sparse_.emplace_back(idx, v);
      }
    }
    return e;
  }

  static GroupElement rational(const ValueGroup& g, Rational q) {
    if (g.kind() != ValueGroup::Kind::Rationals) throw UsageError("rational() needs Q");
    GroupElement e(g);
    e.q_ = q;
    return e;
  }

  /// Element whose first coordinates are `prefix` and the rest zero (discrete groups).
  static GroupElement withPrefix(const ValueGroup& g, const std::vector<std::int64_t>& prefix) {
    if (g.kind() == ValueGroup::Kind::LexZ) {
      if (prefix.size() > g.rank()) throw UsageError("prefix longer than the rank");
      std::vector<std::int64_t> c(prefix);
      c.resize(g.rank(), 0);
      return lex(g, std::move(c));
    }
    if (g.kind() == ValueGroup::Kind::LexZOmega) {
      std::vector<SparseEntry> s;
      for (std::size_t i = 0; i < prefix.size(); ++i)
        if (prefix[i] != 0) s.emplace_back(i + 1, prefix[i]);
      return sparse(g, std::move(s));
    }
    throw UsageError("withPrefix() needs a discrete group");
  }

  /// The unit vector at level j (1-based), discrete groups only.
  static GroupElement unitVector(const ValueGroup& g, std::size_t j) {
    std::vector<std::int64_t> p(j, 0);
    p[j - 1] = 1;
    return withPrefix(g, p);
  }

  const ValueGroup& group() const { return group_; }

  /// Coordinate j (1-based) for discrete groups; zero past the support.
  std::int64_t coord(std::size_t j) const {
    if (group_.kind() == ValueGroup::Kind::LexZ) return (j >= 1 && j <= dense_.size()) ? dense_[j - 1] : 0;
    if (group_.kind() == ValueGroup::Kind::LexZOmega) {
      for (const auto& [idx, v] : sparse_)
        if (idx == j) return v;
      return 0;
    }
    throw UsageError("coord() on a Q element");
  }

  /// Largest index carrying a nonzero coordinate (0 for the zero element).
  std::size_t supportEnd() const {
    if (group_.kind() == ValueGroup::Kind::LexZ) {
      for (std::size_t j = dense_.size(); j > 0; --j)
        if (dense_[j - 1] != 0) return j;
      return 0;
    }
    if (group_.kind() == ValueGroup::Kind::LexZOmega) return sparse_.empty() ? 0 : sparse_.back().first;
    throw UsageError("supportEnd() on a Q element");
  }

  /// First `k` coordinates (k clipped to the support for rank omega).
  std::vector<std::int64_t> prefix(std::size_t k) const {
    std::vector<std::int64_t> p(k, 0);
    for (std::size_t j = 1; j <= k; ++j) p[j - 1] = coord(j);
    return p;
  }

  const std::vector<std::int64_t>& dense() const { return dense_; }
  const std::vector<SparseEntry>& sparseEntries() const { return sparse_; }
  const Rational& rational() const { return q_; }

  bool isZero() const {
    switch (group_.kind()) {
      case ValueGroup::Kind::LexZ: return std::all_of(dense_.begin(), dense_.end(), [](auto v) { return v == 0; });
      case ValueGroup::Kind::LexZOmega: return sparse_.empty();
      case ValueGroup::Kind::Rationals: return q_.num() == 0;
    }
    return false;
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

  std::string str() const {
    switch (group_.kind()) {
      case ValueGroup::Kind::LexZ: {
        std::string s = "(";
        for (std::size_t i = 0; i < dense_.size(); ++i) s += (i ? "," : "") + std::to_string(dense_[i]);
        return s + ")";
      }
      case ValueGroup::Kind::LexZOmega: {
        std::string s = "{";
        for (std::size_t i = 0; i < sparse_.size(); ++i)
          s += (i ? ", " : "") + std::to_string(sparse_[i].first) + ":" + std::to_string(sparse_[i].second);
        return s + "}";
      }
      case ValueGroup::Kind::Rationals: return q_.str();
    }
    return "?";
  }

 private:
  explicit GroupElement(const ValueGroup& g) : group_(g) {}

  ValueGroup group_;
  std::vector<std::int64_t> dense_;
  std::vector<SparseEntry> sparse_;
  Rational q_;
};

inline void requireSameGroup(const GroupElement& a, const GroupElement& b) {
  if (!(a.group() == b.group()))
    throw UsageError("elements of different groups: " + a.group().str() + " vs " + b.group().str());
}

/// Lexicographic comparison of the first k coordinates (k = kTopLevel: whole element).
inline std::strong_ordering comparePrefix(const GroupElement& a, const GroupElement& b, std::size_t k) {
  requireSameGroup(a, b);
  if (a.group().kind() == ValueGroup::Kind::Rationals) return a.rational() <=> b.rational();
  const std::size_t end = std::min(k, std::max(a.supportEnd(), b.supportEnd()));
  for (std::size_t j = 1; j <= end; ++j) {
    const auto c = a.coord(j) <=> b.coord(j);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare(const GroupElement& a, const GroupElement& b) {
  return comparePrefix(a, b, kTopLevel);
}

inline GroupElement add(const GroupElement& a, const GroupElement& b) {
  requireSameGroup(a, b);
  const ValueGroup& g = a.group();
  switch (g.kind()) {
    case ValueGroup::Kind::LexZ: {
      std::vector<std::int64_t> c(g.rank());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.dense()[i] + b.dense()[i];
      return GroupElement::lex(g, std::move(c));
    }
    case ValueGroup::Kind::LexZOmega: {
      auto s = a.sparseEntries();
      s.insert(s.end(), b.sparseEntries().begin(), b.sparseEntries().end());
      return GroupElement::sparse(g, std::move(s));
    }
    case ValueGroup::Kind::Rationals: return GroupElement::rational(g, a.rational() + b.rational());
  }
  throw UsageError("unreachable");
}

inline GroupElement negate(const GroupElement& a) {
  const ValueGroup& g = a.group();
  switch (g.kind()) {
    case ValueGroup::Kind::LexZ: {
      auto c = a.dense();
      for (auto& v : c) v = -v;
      return GroupElement::lex(g, std::move(c));
    }
    case ValueGroup::Kind::LexZOmega: {
      auto s = a.sparseEntries();
      for (auto& e : s) e.second = -e.second;
      return GroupElement::sparse(g, std::move(s));
    }
    case ValueGroup::Kind::Rationals: return GroupElement::rational(g, -a.rational());
  }
  throw UsageError("unreachable");
}

inline GroupElement subtract(const GroupElement& a, const GroupElement& b) { return add(a, negate(b)); }

/// Index of the first nonzero coordinate; infinity for zero.
inline ExtNat leadingLevel(const GroupElement& a) {
  if (a.group().kind() == ValueGroup::Kind::Rationals)
    throw UsageError("leadingLevel() is undefined on Q; use the sign");
  if (a.isZero()) return kInf;
  for (std::size_t j = 1;; ++j)
    if (a.coord(j) != 0) return ExtNat(j);
}

/// The first k coordinates as an element of lex Z^k.
inline GroupElement truncate(const GroupElement& a, std::size_t k) {
  const ValueGroup& g = a.group();
  if (g.kind() == ValueGroup::Kind::Rationals) throw UsageError("truncate() on Q");
  if (k == 0 || (g.kind() == ValueGroup::Kind::LexZ && k > g.rank()))
    throw UsageError("truncate level " + std::to_string(k) + " out of range for " + g.str());
  return GroupElement::lex(ValueGroup::lexZ(k), a.prefix(k));
}

/// Deterministic sample of group elements with coordinates bounded by `bound`.
/// Always contains zero and at least one positive and one negative element.
inline std::vector<GroupElement> sampleElements(const ValueGroup& g, std::int64_t bound, std::uint64_t seed,
                                                std::size_t count = 32, std::size_t omegaLevels = 5) {
  if (bound < 1) throw UsageError("sample bound must be positive");
  std::mt19937_64 rng(seed);
  auto uni = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<GroupElement> out;
  out.push_back(GroupElement::zero(g));
  switch (g.kind()) {
    case ValueGroup::Kind::LexZ:
    case ValueGroup::Kind::LexZOmega: {
      const std::size_t levels = g.kind() == ValueGroup::Kind::LexZ ? g.rank() : omegaLevels;
      out.push_back(GroupElement::unitVector(g, levels));
      out.push_back(negate(GroupElement::unitVector(g, 1)));
      while (out.size() < count) {
        std::vector<std::int64_t> p(levels);
        for (auto& v : p) v = uni(-bound, bound);
        out.push_back(GroupElement::withPrefix(g, p));
      }
      break;
    }
    case ValueGroup::Kind::Rationals: {
      out.push_back(GroupElement::rational(g, Rational(1, bound)));
      out.push_back(GroupElement::rational(g, Rational(-1)));
      while (out.size() < count)
        out.push_back(GroupElement::rational(g, Rational(uni(-bound, bound), uni(1, bound))));
      break;
    }
  }
  return out;
}

}  // namespace ivlab
