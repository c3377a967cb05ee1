#pragma once

#include <cmath>
#include <complex>

// Double-double arithmetic (~31 significant digits). The quadrature
// integrands in this project reach magnitudes around 1e13 while their
// integrals are O(1), so plain doubles lose the result to cancellation.
// Only the operations the quadrature kernel needs are provided.

namespace qdft::detail {

struct Dd {
  double hi = 0.0;
  double lo = 0.0;

  constexpr Dd() = default;
  constexpr Dd(double h) : hi(h) {}
  constexpr Dd(double h, double l) : hi(h), lo(l) {}

  double value() const { return hi + lo; }
};

// Error-free transforms.
inline Dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Dd quick_two_sum(double a, double b) {  // requires |a| >= |b|
  double s = a + b;
  return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd operator-(const Dd& a) { return {-a.hi, -a.lo}; }

inline Dd operator+(const Dd& a, const Dd& b) {
  Dd s = two_sum(a.hi, b.hi);
  Dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline Dd operator-(const Dd& a, const Dd& b) { return a + (-b); }

inline Dd operator*(const Dd& a, const Dd& b) {
  Dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline Dd operator/(const Dd& a, const Dd& b) {
  double q1 = a.hi / b.hi;
  Dd r = a - b * Dd{q1};
  double q2 = r.hi / b.hi;
  r = r - b * Dd{q2};
  double q3 = r.hi / b.hi;
  Dd q = quick_two_sum(q1, q2);
  return q + Dd{q3};
}

inline Dd& operator+=(Dd& a, const Dd& b) { return a = a + b; }
inline Dd& operator-=(Dd& a, const Dd& b) { return a = a - b; }
inline Dd& operator*=(Dd& a, const Dd& b) { return a = a * b; }

// Constants split into hi/lo parts.
inline constexpr Dd kDdPi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr Dd kDdTwoPi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr Dd kDdHalfPi{1.5707963267948966, 6.123233995736766e-17};
inline constexpr Dd kDdLn2{0.6931471805599453, 2.3190468138462996e-17};

Dd dd_sqrt(const Dd& a);
Dd dd_exp(const Dd& x);
void dd_sincos(const Dd& x, Dd& s, Dd& c);

struct Ddc {
  Dd re, im;

  constexpr Ddc() = default;
  constexpr Ddc(Dd r, Dd i) : re(r), im(i) {}
  Ddc(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

  std::complex<double> value() const { return {re.value(), im.value()}; }
};

inline Ddc operator+(const Ddc& a, const Ddc& b) { return {a.re + b.re, a.im + b.im}; }
inline Ddc operator-(const Ddc& a, const Ddc& b) { return {a.re - b.re, a.im - b.im}; }
inline Ddc operator-(const Ddc& a) { return {-a.re, -a.im}; }
inline Ddc operator*(const Ddc& a, const Ddc& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Ddc operator*(const Dd& a, const Ddc& b) { return {a * b.re, a * b.im}; }
inline Ddc& operator+=(Ddc& a, const Ddc& b) { return a = a + b; }

/// exp(z) for complex double-double z.
Ddc dd_cexp(const Ddc& z);

/// cos(z) for complex double-double z.
Ddc dd_ccos(const Ddc& z);

}  // namespace qdft::detail
