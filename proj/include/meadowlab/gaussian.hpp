#pragma once

#include <string>

#include "meadowlab/rational.hpp"

namespace meadowlab {

/// Element of the zero-totalized Gaussian rationals: re + im*i.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real, Rational imag)
      : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(long n) : re(n) {}  // NOLINT

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend GaussianRational operator-(const GaussianRational& a) {
    return {-a.re, -a.im};
  }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
};

inline GaussianRational gauss_i() { return {Rational(0), Rational(1)}; }

/// Totalized inverse: 0 maps to 0, otherwise conjugate over the norm
/// re^2 + im^2 (nonzero for a nonzero element).
inline GaussianRational gauss_inv(const GaussianRational& a) {
  if (a.is_zero()) return {};
  const Rational norm_inv = rat_inv(a.re * a.re + a.im * a.im);
  return {a.re * norm_inv, -a.im * norm_inv};
}

inline std::string to_string(const GaussianRational& a) {
  const Rational zero;
  if (a.im < zero) return to_string(a.re) + " - " + to_string(-a.im) + "i";
  return to_string(a.re) + " + " + to_string(a.im) + "i";
}

}  // namespace meadowlab
