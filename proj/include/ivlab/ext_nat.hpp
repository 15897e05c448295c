#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "ivlab/error.hpp"

namespace ivlab {

/// Extended natural number: a finite value n >= 0 or infinity.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat infinity() {
    ExtNat r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool isInfinite() const { return infinite_; }
  constexpr bool isFinite() const { return !infinite_; }

  constexpr std::uint64_t value() const {
    if (infinite_) throw UsageError("ExtNat::value() on infinity");
    return value_;
  }

  friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, const ExtNat& n) { return os << n.str(); }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

inline constexpr ExtNat kInf = ExtNat::infinity();

inline ExtNat min(ExtNat a, ExtNat b) { return a < b ? a : b; }
inline ExtNat max(ExtNat a, ExtNat b) { return a < b ? b : a; }

}  // namespace ivlab
