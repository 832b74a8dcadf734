#include "sta/rational.hpp"

#include <stdexcept>

namespace sta {

namespace {

// floor(sqrt(n)) for nonnegative integers, Newton iteration.
Integer isqrt(const Integer& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative");
  if (n == 0) return 0;
  Integer x = Integer(1) << (msb(n) / 2 + 1);
  for (;;) {
    Integer y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& v) {
  if (v < 0) return std::nullopt;
  Integer num = numerator(v), den = denominator(v);
  Integer rn = isqrt(num), rd = isqrt(den);
  if (rn * rn == num && rd * rd == den) return Rational(rn, rd);
  return std::nullopt;
}

Interval sqrt_enclosure(const Rational& v, unsigned precision_bits) {
  if (v < 0) throw std::invalid_argument("sqrt of negative");
  if (auto e = exact_sqrt(v)) return {*e, *e};
  // Scale so that floor-of-integer-sqrt gives the requested precision:
  // s = floor(sqrt(v * 4^p)) => s/2^p <= sqrt(v) < (s+1)/2^p.
  Integer scale = Integer(1) << precision_bits;
  Integer num = numerator(v) * scale * scale;
  Integer den = denominator(v);
  // floor(sqrt(num/den)) = floor(sqrt(num*den)/den).
  Integer s = isqrt(num * den) / den;
  return {Rational(s, scale), Rational(s + 1, scale)};
}

NormValue abs_value(const GaussianRational& z, unsigned precision_bits) {
  Rational sq = z.abs_sq();
  if (auto e = exact_sqrt(sq)) return *e;
  return sqrt_enclosure(sq, precision_bits);
}

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::string coeff_to_string(const GaussianRational& z) {
  if (z.im == 0) return rational_to_string(z.re);
  std::string s = rational_to_string(z.re);
  if (z.im >= 0)
    s += "+" + rational_to_string(z.im) + "i";
  else
    s += "-" + rational_to_string(-z.im) + "i";
  return s;
}

}  // namespace sta
