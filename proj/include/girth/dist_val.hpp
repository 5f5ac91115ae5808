#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "girth/errors.hpp"

namespace girth {

using Weight = std::int64_t;

// Distance value with a dedicated infinity; addition saturates.
class DistVal {
 public:
  constexpr DistVal() : v_(kInf) {}
  constexpr explicit DistVal(std::int64_t v) : v_(v) {}

  static constexpr DistVal infinity() { return DistVal(); }
  static constexpr DistVal zero() { return DistVal(0); }

  constexpr bool is_inf() const { return v_ == kInf; }
  constexpr bool is_finite() const { return v_ != kInf; }

  std::int64_t value() const {
    require(is_finite(), ErrorCode::Internal, "value() on infinite DistVal");
    return v_;
  }
  // Raw representation; infinity is a large sentinel that still saturates under +.
  constexpr std::int64_t raw() const { return v_; }

  friend constexpr DistVal operator+(DistVal a, DistVal b) {
    if (a.is_inf() || b.is_inf()) return infinity();
    return DistVal(a.v_ + b.v_);
  }
  friend constexpr DistVal operator+(DistVal a, Weight w) {
    if (a.is_inf()) return infinity();
    return DistVal(a.v_ + w);
  }
  friend constexpr bool operator==(DistVal a, DistVal b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(DistVal a, DistVal b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(DistVal a, DistVal b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(DistVal a, DistVal b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(DistVal a, DistVal b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(DistVal a, DistVal b) { return a.v_ >= b.v_; }

  std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, DistVal d) { return os << d.str(); }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::int64_t v_;
};

// Exact nonnegative rational, normalized. Big enough for any density here.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    require(d > 0, ErrorCode::BadParameter, "rational denominator must be positive");
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  static Rational integer(std::int64_t n) { return Rational(n, 1); }

  double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::int64_t ceil() const { return (num + den - 1) / den; }

  friend Rational operator*(std::int64_t k, Rational r) { return Rational(k * r.num, r.den); }
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(Rational a, Rational b) { return !(a == b); }
  // a/b < c/d  <=>  a*d < c*b (denominators positive)
  friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(Rational a, Rational b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator<(std::int64_t k, Rational r) { return k * r.den < r.num; }
  friend bool operator<=(std::int64_t k, Rational r) { return k * r.den <= r.num; }
  friend bool operator<(Rational r, std::int64_t k) { return r.num < k * r.den; }
  friend bool operator<=(Rational r, std::int64_t k) { return r.num <= k * r.den; }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace girth
