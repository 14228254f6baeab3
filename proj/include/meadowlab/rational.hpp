#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace meadowlab {

/// Exact rational in canonical form: reduced, denominator > 0, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit integer promotion is intended
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }

  friend Rational operator-(const Rational& a) { return Rational::raw(-a.v_); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational::raw(a.v_ + b.v_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational::raw(a.v_ - b.v_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational::raw(a.v_ * b.v_);
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  /// Totalized inverse: 0 maps to 0, otherwise the exact reciprocal.
  friend Rational rat_inv(const Rational& a) {
    if (a.is_zero()) return Rational();
    return Rational(a.den(), a.num());
  }

 private:
  // GMP arithmetic on canonical operands yields canonical results.
  static Rational raw(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  mpq_class v_;
};

inline std::string to_string(const Rational& a) {
  std::string s = a.num().get_str();
  if (a.den() != 1) s += "/" + a.den().get_str();
  return s;
}

}  // namespace meadowlab
