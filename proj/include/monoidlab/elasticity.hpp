// elasticity.hpp -- exact rational elasticity values

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace monoidlab {

/// An elasticity: an exact non-negative rational, the symbolic value 0
/// (sup of the empty set), or the symbolic value infinity. The `exact` flag
/// records whether the number is the true invariant or a capped lower bound.
struct Elasticity {
  enum class Kind { zero, finite, infinite };

  Kind kind = Kind::zero;
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool exact = true;

  static Elasticity zero(bool exact = true) { return Elasticity{Kind::zero, 0, 1, exact}; }

  static Elasticity ratio(std::int64_t num, std::int64_t den, bool exact) {
    if (den <= 0) throw std::invalid_argument("elasticity: denominator must be positive");
    if (num < 0) throw std::invalid_argument("elasticity: negative value");
    if (num == 0) return zero(exact);
    const std::int64_t g = std::gcd(num, den);
    return Elasticity{Kind::finite, num / g, den / g, exact};
  }

  static Elasticity infinite() { return Elasticity{Kind::infinite, 0, 1, true}; }

  bool is_zero() const { return kind == Kind::zero; }
  bool is_finite() const { return kind != Kind::infinite; }

  /// Cross-multiplied comparison; infinite compares above every rational.
  bool operator<(const Elasticity& other) const {
    if (kind == Kind::infinite) return false;
    if (other.kind == Kind::infinite) return true;
    return static_cast<__int128>(num) * other.den < static_cast<__int128>(other.num) * den;
  }
  bool operator==(const Elasticity& other) const {
    if (kind == Kind::infinite || other.kind == Kind::infinite)
      return kind == other.kind;
    return static_cast<__int128>(num) * other.den == static_cast<__int128>(other.num) * den;
  }
  bool operator<=(const Elasticity& other) const { return *this < other || *this == other; }

  std::string to_string() const {
    if (kind == Kind::infinite) return "inf";
    if (kind == Kind::zero) return "0";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace monoidlab
