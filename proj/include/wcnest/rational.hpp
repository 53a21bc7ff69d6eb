// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#ifndef WCNEST_RATIONAL_HPP
#define WCNEST_RATIONAL_HPP

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace wcnest {

/// Exact rational number with a canonical (coprime, positive-denominator)
/// representation. All weight and bound arithmetic in this library is exact;
/// there is no floating point anywhere in a comparison path.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  bool is_zero() const { return num_ == 0; }

  /// Largest integer <= *this.
  std::int64_t floor() const;

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Rational& o) const;

  /// "3", "-1", "1/2", "-5/3".
  std::string str() const;

 private:
  std::int64_t num_;
  std::int64_t den_;  // > 0
};

/// A lower or upper bound of a weight constraint: a rational or one of
/// -inf/+inf. Infinities only ever take part in comparisons; subtracting a
/// rational from an infinite bound leaves it unchanged.
class Bound {
 public:
  static Bound neg_inf() { return Bound(Kind::kNegInf, Rational()); }
  static Bound pos_inf() { return Bound(Kind::kPosInf, Rational()); }
  Bound(Rational v) : kind_(Kind::kFinite), value_(v) {}  // NOLINT
  Bound(std::int64_t v) : Bound(Rational(v)) {}           // NOLINT

  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }

  /// Finite value; throws std::logic_error on an infinite bound.
  const Rational& value() const;

  /// Bound minus a rational (used by weight-constraint reducts).
  Bound operator-(const Rational& r) const;

  bool operator==(const Bound& o) const;
  std::strong_ordering operator<=>(const Bound& o) const;
  std::strong_ordering operator<=>(const Rational& r) const;

  /// "-inf", "+inf", or the rational's rendering.
  std::string str() const;

 private:
  enum class Kind { kNegInf, kFinite, kPosInf };
  Bound(Kind k, Rational v) : kind_(k), value_(v) {}
  Kind kind_;
  Rational value_;
};

inline bool operator<=(const Bound& b, const Rational& r) {
  return (b <=> r) != std::strong_ordering::greater;
}
inline bool operator<=(const Rational& r, const Bound& b) {
  return (b <=> r) != std::strong_ordering::less;
}
inline bool operator<(const Bound& b, const Rational& r) {
  return (b <=> r) == std::strong_ordering::less;
}
inline bool operator<(const Rational& r, const Bound& b) {
  return (b <=> r) == std::strong_ordering::greater;
}

}  // namespace wcnest

#endif  // WCNEST_RATIONAL_HPP
