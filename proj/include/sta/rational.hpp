#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <variant>

namespace sta {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Exact complex coefficient: a + b*i with rational a, b.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}
  GaussianRational(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  /// |z|^2 = z * conj(z), always rational.
  Rational abs_sq() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.abs_sq();
    GaussianRational c = a * b.conj();
    return {c.re / n, c.im / n};
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// Closed rational interval [lo, hi]; certified enclosure of a real value.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  friend Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Exact rational when the value is rational, else an enclosure.
using NormValue = std::variant<Rational, Interval>;

/// Exact square root of a nonnegative rational, if it is itself rational.
std::optional<Rational> exact_sqrt(const Rational& v);

/// Enclosure of sqrt(v) with width <= 2^-precision_bits.
Interval sqrt_enclosure(const Rational& v, unsigned precision_bits);

/// |a+bi| as exact value or enclosure of width <= 2^-precision_bits.
NormValue abs_value(const GaussianRational& z, unsigned precision_bits);

std::string rational_to_string(const Rational& r);

/// Renders `a/b` or `a/b+c/di` (sign of the imaginary part folded into the
/// separator, e.g. `1/2-1/3i`). No parentheses.
std::string coeff_to_string(const GaussianRational& z);

}  // namespace sta
