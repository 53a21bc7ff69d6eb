// Copyright (c) 2026 the wcnest authors.
//
// Distributed under the MIT license. See LICENSE for details.

#include "wcnest/rational.hpp"

#include <numeric>

namespace wcnest {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::floor() const {
  if (num_ >= 0) return num_ / den_;
  return -((-num_ + den_ - 1) / den_);
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.den_ +
               static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  return Rational(checked(n), checked(d));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.num_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  return Rational(checked(n), checked(d));
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  __int128 lhs = static_cast<__int128>(num_) * o.den_;
  __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

const Rational& Bound::value() const {
  if (kind_ != Kind::kFinite) throw std::logic_error("infinite bound has no value");
  return value_;
}

Bound Bound::operator-(const Rational& r) const {
  if (kind_ == Kind::kFinite) return Bound(value_ - r);
  return *this;
}

bool Bound::operator==(const Bound& o) const {
  if (kind_ != o.kind_) return false;
  return kind_ != Kind::kFinite || value_ == o.value_;
}

std::strong_ordering Bound::operator<=>(const Bound& o) const {
  auto rank = [](Kind k) { return k == Kind::kNegInf ? 0 : k == Kind::kFinite ? 1 : 2; };
  if (rank(kind_) != rank(o.kind_)) return rank(kind_) <=> rank(o.kind_);
  if (kind_ != Kind::kFinite) return std::strong_ordering::equal;
  return value_ <=> o.value_;
}

std::strong_ordering Bound::operator<=>(const Rational& r) const {
  switch (kind_) {
    case Kind::kNegInf: return std::strong_ordering::less;
    case Kind::kPosInf: return std::strong_ordering::greater;
    default: return value_ <=> r;
  }
}

std::string Bound::str() const {
  if (is_neg_inf()) return "-inf";
  if (is_pos_inf()) return "+inf";
  return value_.str();
}

}  // namespace wcnest
