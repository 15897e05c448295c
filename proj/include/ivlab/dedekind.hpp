#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ivlab/error.hpp"

namespace ivlab {

/// A Dedekind domain described by finitely many maximal ideals.
class DedekindRing {
 public:
  explicit DedekindRing(std::vector<std::string> primes) : primes_(std::move(primes)) {
    if (primes_.empty()) throw ValidationError("a Dedekind ring needs at least one prime");
    std::set<std::string> seen(primes_.begin(), primes_.end());
    if (seen.size() != primes_.size()) throw ValidationError("duplicate prime label");
  }

  const std::vector<std::string>& primes() const { return primes_; }
  bool hasPrime(const std::string& p) const { return std::find(primes_.begin(), primes_.end(), p) != primes_.end(); }

  friend bool operator==(const DedekindRing&, const DedekindRing&) = default;

 private:
  std::vector<std::string> primes_;
};

/// Exponent value; kNegInf means "all of K locally at that prime".
inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

/// R-submodule of K over a Dedekind model: zero, K itself, or a map of local exponents.
/// Unlisted primes carry exponent 0. Integral ideals are the nonnegative finite maps.
class DedekindModule {
 public:
  enum class Kind { Zero, FullField, Exponents };

  static DedekindModule zero() { return DedekindModule(Kind::Zero, {}); }
  static DedekindModule fullField() { return DedekindModule(Kind::FullField, {}); }
  static DedekindModule unit() { return DedekindModule(Kind::Exponents, {}); }

  /// Builds and normalizes (drops zeros; all primes at -inf becomes K).
  static DedekindModule exponents(const DedekindRing& ring, std::map<std::string, std::int64_t> e) {
    for (auto it = e.begin(); it != e.end();) {
      if (!ring.hasPrime(it->first)) throw UsageError("unknown prime '" + it->first + "'");
      it = it->second == 0 ? e.erase(it) : std::next(it);
    }
    const bool allNegInf = std::all_of(ring.primes().begin(), ring.primes().end(), [&](const std::string& p) {
      auto f = e.find(p);
      return f != e.end() && f->second == kNegInf;
    });
    if (allNegInf) return fullField();
    return DedekindModule(Kind::Exponents, std::move(e));
  }

  Kind kind() const { return kind_; }
  bool isZero() const { return kind_ == Kind::Zero; }
  bool isFullField() const { return kind_ == Kind::FullField; }
  bool isUnit() const { return kind_ == Kind::Exponents && exps_.empty(); }

  std::int64_t exponent(const std::string& p) const {
    if (kind_ == Kind::FullField) return kNegInf;
    auto f = exps_.find(p);
    return f == exps_.end() ? 0 : f->second;
  }
  const std::map<std::string, std::int64_t>& exponents() const { return exps_; }

  bool isIntegral() const {
    if (kind_ == Kind::Zero) return true;
    if (kind_ == Kind::FullField) return false;
    return std::all_of(exps_.begin(), exps_.end(), [](const auto& kv) { return kv.second > 0; });
  }

  /// Primes with positive exponent.
  std::vector<std::string> support() const {
    std::vector<std::string> s;
    for (const auto& [p, e] : exps_)
      if (e > 0) s.push_back(p);
    return s;
  }

  friend bool operator==(const DedekindModule&, const DedekindModule&) = default;

 private:
  DedekindModule(Kind k, std::map<std::string, std::int64_t> e) : kind_(k), exps_(std::move(e)) {}

  Kind kind_;
  std::map<std::string, std::int64_t> exps_;
};

namespace dedekind {

inline std::int64_t addExp(std::int64_t a, std::int64_t b) { return (a == kNegInf || b == kNegInf) ? kNegInf : a + b; }

template <typename F>
DedekindModule combine(const DedekindRing& ring, const DedekindModule& a, const DedekindModule& b, F f) {
  std::map<std::string, std::int64_t> e;
  for (const auto& p : ring.primes()) e[p] = f(a.exponent(p), b.exponent(p));
  return DedekindModule::exponents(ring, std::move(e));
}

inline DedekindModule mul(const DedekindRing& ring, const DedekindModule& a, const DedekindModule& b) {
  if (a.isZero() || b.isZero()) return DedekindModule::zero();
  return combine(ring, a, b, addExp);
}

inline DedekindModule sum(const DedekindRing& ring, const DedekindModule& a, const DedekindModule& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  return combine(ring, a, b, [](std::int64_t x, std::int64_t y) { return std::min(x, y); });
}

inline DedekindModule intersect(const DedekindRing& ring, const DedekindModule& a, const DedekindModule& b) {
  if (a.isZero() || b.isZero()) return DedekindModule::zero();
  return combine(ring, a, b, [](std::int64_t x, std::int64_t y) { return std::max(x, y); });
}

/// a contains b.
inline bool contains(const DedekindRing& ring, const DedekindModule& a, const DedekindModule& b) {
  if (b.isZero()) return true;
  if (a.isZero()) return false;
  return std::all_of(ring.primes().begin(), ring.primes().end(),
                     [&](const std::string& p) { return a.exponent(p) <= b.exponent(p); });
}

/// (a :_K b) = {x in K : x b in a}; b must be nonzero.
inline DedekindModule colon(const DedekindRing& ring, const DedekindModule& a, const DedekindModule& b) {
  if (b.isZero()) throw UsageError("colon by the zero ideal");
  if (a.isZero()) return DedekindModule::zero();
  std::map<std::string, std::int64_t> e;
  for (const auto& p : ring.primes()) {
    const std::int64_t x = a.exponent(p);
    const std::int64_t y = b.exponent(p);
    if (y == kNegInf) {
      if (x != kNegInf) return DedekindModule::zero();
      e[p] = kNegInf;
    } else {
      e[p] = x == kNegInf ? kNegInf : x - y;
    }
  }
  return DedekindModule::exponents(ring, std::move(e));
}

inline DedekindModule radical(const DedekindRing& ring, const DedekindModule& a) {
  if (!a.isIntegral()) throw UsageError("radical of a non-integral module");
  if (a.isZero()) return a;
  std::map<std::string, std::int64_t> e;
  for (const auto& p : a.support()) e[p] = 1;
  return DedekindModule::exponents(ring, std::move(e));
}

/// a R_p: exponent at p kept, every other prime becomes -inf. An empty label means
/// the zero prime (R_(0) = K).
inline DedekindModule localize(const DedekindRing& ring, const DedekindModule& a, const std::string& p) {
  if (a.isZero()) return a;
  if (p.empty()) return DedekindModule::fullField();
  std::map<std::string, std::int64_t> e;
  for (const auto& q : ring.primes()) e[q] = (q == p) ? a.exponent(p) : kNegInf;
  return DedekindModule::exponents(ring, std::move(e));
}

/// Restrict every prime in `primes` to -inf: the union of colons by powers of those primes.
inline DedekindModule invertPrimes(const DedekindRing& ring, const DedekindModule& a, const std::set<std::string>& primes) {
  if (a.isZero() || a.isFullField()) return a;
  std::map<std::string, std::int64_t> e = a.exponents();
  for (const auto& p : primes) e[p] = kNegInf;
  return DedekindModule::exponents(ring, std::move(e));
}

}  // namespace dedekind
}  // namespace ivlab
