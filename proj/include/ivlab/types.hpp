#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ivlab/ext_nat.hpp"
#include "ivlab/ring.hpp"

namespace ivlab {

/// Monotone map Spec(R) -> extended naturals vanishing at the zero prime.
///
/// Valuation models store the finite levels 0..L explicitly plus the value at the
/// maximal ideal. In rank omega the levels past L follow the tail: constant, or
/// increasing by one per level.
class PrimeValuation {
 public:
  enum class Tail { Constant, Increasing };

  static PrimeValuation dedekind(const DedekindRing& r, std::map<std::string, ExtNat> values) {
    for (const auto& p : r.primes())
      if (!values.count(p)) throw ValidationError("no value given for prime '" + p + "'");
    for (const auto& [p, v] : values)
      if (!r.hasPrime(p)) throw UsageError("unknown prime '" + p + "'");
    PrimeValuation h(r);
    h.dedekind_ = std::move(values);
    return h;
  }

  static PrimeValuation levels(const ValuationRing& r, std::vector<ExtNat> finite, ExtNat maxValue,
                               Tail tail = Tail::Constant) {
    const ValueGroup& g = r.group();
    if (g.kind() == ValueGroup::Kind::LexZOmega) {
      if (finite.empty()) throw ValidationError("rank omega needs at least the zero level");
    } else {
      if (tail != Tail::Constant) throw ValidationError("an increasing tail needs rank omega");
      if (finite.size() != g.fullLevel())
        throw ValidationError("expected " + std::to_string(g.fullLevel()) + " values below the maximal ideal");
    }
    PrimeValuation h(r);
    h.finite_ = std::move(finite);
    h.max_ = maxValue;
    h.tail_ = tail;
    h.validate();
    return h;
  }

  static PrimeValuation monomial(const MonomialRing& r, std::vector<ExtNat> table) {
    if (table.size() != static_cast<std::size_t>(r.allVars()) + 1)
      throw ValidationError("a monomial prime valuation needs one value per variable subset");
    PrimeValuation h(r);
    h.table_ = std::move(table);
    h.validate();
    return h;
  }

  /// Dedekind constructor that also validates (kept separate so tables can be
  /// built incrementally).
  static PrimeValuation dedekindChecked(const DedekindRing& r, std::map<std::string, ExtNat> values) {
    auto h = dedekind(r, std::move(values));
    h.validate();
    return h;
  }

  const Ring& ring() const { return ring_; }
  Tail tail() const { return tail_; }
  const std::vector<ExtNat>& finiteLevels() const { return finite_; }
  ExtNat maxValue() const { return max_; }
  const std::map<std::string, ExtNat>& dedekindValues() const { return dedekind_; }
  const std::vector<ExtNat>& table() const { return table_; }

  ExtNat value(const PrimeRef& p) const {
    requirePrime(ring_, p);
    if (auto* d = std::get_if<DedekindPrime>(&p)) return d->label.empty() ? ExtNat(0) : dedekind_.at(d->label);
    if (auto* m = std::get_if<MonomialPrime>(&p)) return table_[m->vars];
    const std::size_t level = std::get<ValuationPrime>(p).level;
    const ValueGroup& g = std::get<ValuationRing>(ring_).group();
    if (level == g.fullLevel()) return max_;
    if (level == kLimitLevel) return supFinite();
    if (level < finite_.size()) return finite_[level];
    if (tail_ == Tail::Constant || finite_.back().isInfinite()) return finite_.back();
    return finite_.back().value() + (level - (finite_.size() - 1));
  }

  /// Supremum over the finite-level primes of a valuation model.
  ExtNat supFinite() const {
    if (tail_ == Tail::Increasing) return kInf;
    return finite_.back();
  }

  /// Largest finite value taken anywhere; empty when the finite values are unbounded.
  std::optional<std::uint64_t> maxFinite() const {
    if (tail_ == Tail::Increasing) return std::nullopt;
    std::uint64_t best = 0;
    auto take = [&best](ExtNat v) {
      if (v.isFinite()) best = std::max(best, v.value());
    };
    for (auto v : finite_) take(v);
    for (auto v : table_) take(v);
    for (const auto& [p, v] : dedekind_) take(v);
    if (asValuation(ring_)) take(max_);
    return best;
  }

  void validate() const {
    if (value(zeroPrime(ring_)) != ExtNat(0)) throw ValidationError("a prime valuation must vanish at the zero prime");
    if (asValuation(ring_)) {
      for (std::size_t i = 1; i < finite_.size(); ++i)
        if (finite_[i] < finite_[i - 1]) throw ValidationError("prime valuation is not monotone");
      if (max_ < supFinite()) throw ValidationError("prime valuation is not monotone at the maximal ideal");
    } else if (asMonomial(ring_)) {
      for (VarSet s = 0; s < table_.size(); ++s)
        for (VarSet t = s; t < table_.size(); t = (t + 1) | s)
          if (table_[t] < table_[s]) throw ValidationError("prime valuation is not monotone");
    }
  }

  friend bool operator==(const PrimeValuation& a, const PrimeValuation& b) {
    return a.ring_ == b.ring_ && a.dedekind_ == b.dedekind_ && a.finite_ == b.finite_ && a.max_ == b.max_ &&
           a.tail_ == b.tail_ && a.table_ == b.table_;
  }

 private:
  explicit PrimeValuation(Ring r) : ring_(std::move(r)) {}

  Ring ring_;
  std::map<std::string, ExtNat> dedekind_;
  std::vector<ExtNat> finite_;
  ExtNat max_ = 0;
  Tail tail_ = Tail::Constant;
  std::vector<ExtNat> table_;
};

/// Inclusion R -> T of a model ring into one of its overrings.
class RingMap {
 public:
  enum class Kind { DedekindLocalization, ValuationOverring };

  /// R -> intersection of R_p over the kept primes.
  static RingMap dedekindLocalization(const DedekindRing& r, std::set<std::string> keep) {
    if (keep.empty()) throw UsageError("keep at least one prime (use the zero prime for K)");
    for (const auto& p : keep)
      if (!r.hasPrime(p)) throw UsageError("unknown prime '" + p + "'");
    std::vector<std::string> kept;
    for (const auto& p : r.primes())
      if (keep.count(p)) kept.push_back(p);
    return RingMap(Kind::DedekindLocalization, r, DedekindRing(kept), 0);
  }

  /// V -> V_{P_level}.
  static RingMap valuationOverring(const ValuationRing& r, std::size_t level) {
    const ValueGroup& g = r.group();
    if (level == 0) throw UsageError("the overring at the zero prime is K, not a ring map target");
    if (level == g.fullLevel()) return RingMap(Kind::ValuationOverring, r, r, level);
    if (g.kind() == ValueGroup::Kind::Rationals || level > g.fullLevel() || level == kLimitLevel)
      throw UsageError("invalid overring level");
    return RingMap(Kind::ValuationOverring, r, ValuationRing(ValueGroup::lexZ(level), r.omegaBound()), level);
  }

  Kind kind() const { return kind_; }
  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  std::size_t level() const { return level_; }

  bool isIdentity() const { return source_ == target_; }

  friend bool operator==(const RingMap& a, const RingMap& b) {
    return a.kind_ == b.kind_ && a.source_ == b.source_ && a.target_ == b.target_ && a.level_ == b.level_;
  }

 private:
  RingMap(Kind k, Ring s, Ring t, std::size_t level)
      : kind_(k), source_(std::move(s)), target_(std::move(t)), level_(level) {}

  Kind kind_;
  Ring source_;
  Ring target_;
  std::size_t level_;
};

class IdealValuation;
class LocalizingSystem;
class SemistarOp;
class SemistarChain;

using ValuationPtr = std::shared_ptr<const IdealValuation>;
using SystemPtr = std::shared_ptr<const LocalizingSystem>;
using ChainPtr = std::shared_ptr<const SemistarChain>;

/// A function S(R) -> extended naturals given by description.
class IdealValuation {
 public:
  enum class Kind { PrimeTable, Induced, FromLS, PGrade, Height, Contracted, Extended, FromChain };

  IdealValuation(Kind k, Ring r) : kind(k), ring(std::move(r)) {}

  Kind kind;
  Ring ring;
  std::map<std::string, ExtNat> table;
  std::optional<PrimeValuation> prime;
  SystemPtr system;
  ValuationPtr inner;
  std::optional<RingMap> map;
  ChainPtr chain;
};

/// A filter of ideals closed under the localizing-system axioms.
class LocalizingSystem {
 public:
  enum class Kind { GeneratedByFG, PrimeCut, ValuationLevel, PrincipalFilter };

  LocalizingSystem(Kind k, Ring r) : kind(k), ring(std::move(r)) {}

  Kind kind;
  Ring ring;
  std::vector<Module> gens;
  std::optional<PrimeRef> prime;
  ValuationPtr nu;
  ExtNat n = 0;
  std::optional<Module> ideal;
};

class SemistarOp {
 public:
  enum class Kind { IdentityD, TrivialE, DivisorialV, WOp, Spectral, FromLS, Level };

  SemistarOp(Kind k, Ring r) : kind(k), ring(std::move(r)) {}

  Kind kind;
  Ring ring;
  std::vector<PrimeRef> delta;
  SystemPtr system;
  ValuationPtr nu;
  ExtNat n = 0;
};

/// Descending chain given by a finite prefix and a symbolic tail.
class SemistarChain {
 public:
  enum class Tail { Constant, LevelTail, SpectralTail };

  explicit SemistarChain(Ring r) : ring(std::move(r)) {}

  Ring ring;
  std::vector<SemistarOp> prefix;
  Tail tail = Tail::Constant;
  ValuationPtr nu;
  std::optional<PrimeValuation> h;
};

}  // namespace ivlab
