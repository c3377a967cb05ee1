#include "qdft/detail/dd.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace qdft::detail {

namespace {

// Taylor coefficients ratios as double-double reciprocals, computed once.
struct SeriesTables {
  std::array<Dd, 16> inv_i;        // 1/i for the exp series, i = 1..15
  std::array<Dd, 17> sin_ratio;    // -1/((2i)(2i+1)), i = 1..16
  std::array<Dd, 17> cos_ratio;    // -1/((2i)(2i-1)), i = 1..16

  SeriesTables() {
    for (int i = 1; i < 16; ++i) inv_i[static_cast<size_t>(i)] = Dd{1.0} / Dd{static_cast<double>(i)};
    for (int i = 1; i <= 16; ++i) {
      sin_ratio[static_cast<size_t>(i)] =
          Dd{-1.0} / Dd{static_cast<double>(2 * i) * (2 * i + 1)};
      cos_ratio[static_cast<size_t>(i)] =
          Dd{-1.0} / Dd{static_cast<double>(2 * i) * (2 * i - 1)};
    }
  }
};

const SeriesTables& tables() {
  static const SeriesTables t;
  return t;
}

}  // namespace

Dd dd_sqrt(const Dd& a) {
  if (a.hi <= 0.0) return Dd{std::sqrt(a.hi)};
  // One Newton step from the double estimate doubles its precision.
  double x0 = std::sqrt(a.hi);
  Dd r = a - two_prod(x0, x0);
  double c = r.hi / (2.0 * x0);
  return quick_two_sum(x0, c);
}

Dd dd_exp(const Dd& x) {
  if (x.hi > 709.0) return Dd{std::numeric_limits<double>::infinity()};
  if (x.hi < -745.0) return Dd{0.0};
  if (x.hi == 0.0 && x.lo == 0.0) return Dd{1.0};

  // x = k ln2 + r, e^x = 2^k (e^{r/256})^256.
  const auto& tab = tables();
  double k = std::round(x.value() / kDdLn2.value());
  Dd r = (x - kDdLn2 * Dd{k}) * Dd{1.0 / 256.0};

  Dd sum{1.0};
  Dd term{1.0};
  for (int i = 1; i < 16; ++i) {
    term = term * r * tab.inv_i[static_cast<size_t>(i)];
    sum += term;
    if (std::fabs(term.hi) < 1e-36) break;
  }
  for (int i = 0; i < 8; ++i) sum = sum * sum;

  int ki = static_cast<int>(k);
  return {std::ldexp(sum.hi, ki), std::ldexp(sum.lo, ki)};
}

void dd_sincos(const Dd& x, Dd& s, Dd& c) {
  // Reduce modulo 2*pi, then to |r| <= pi/4 with quadrant bookkeeping.
  const auto& tab = tables();
  double k = std::round(x.value() / kDdTwoPi.value());
  Dd r = x - kDdTwoPi * Dd{k};
  double j = std::round(r.value() / kDdHalfPi.value());
  r = r - kDdHalfPi * Dd{j};
  int quadrant = static_cast<int>(j) & 3;

  Dd r2 = r * r;
  Dd st = r, ssum = r;
  for (int i = 1; i <= 16; ++i) {
    st = st * r2 * tab.sin_ratio[static_cast<size_t>(i)];
    ssum += st;
    if (std::fabs(st.hi) < 1e-36) break;
  }
  Dd ct{1.0}, csum{1.0};
  for (int i = 1; i <= 16; ++i) {
    ct = ct * r2 * tab.cos_ratio[static_cast<size_t>(i)];
    csum += ct;
    if (std::fabs(ct.hi) < 1e-36) break;
  }

  switch (quadrant) {
    case 0: s = ssum; c = csum; break;
    case 1: s = csum; c = -ssum; break;
    case 2: s = -ssum; c = -csum; break;
    default: s = -csum; c = ssum; break;
  }
}

Ddc dd_cexp(const Ddc& z) {
  Dd e = dd_exp(z.re);
  if (e.hi == 0.0) return {Dd{0.0}, Dd{0.0}};
  Dd s, c;
  dd_sincos(z.im, s, c);
  return {e * c, e * s};
}

Ddc dd_ccos(const Ddc& z) {
  // cos(a+ib) = cos a cosh b - i sin a sinh b
  Dd s, c;
  dd_sincos(z.re, s, c);
  Dd ep = dd_exp(z.im);
  Dd em = dd_exp(-z.im);
  Dd ch = (ep + em) * Dd{0.5};
  Dd sh = (ep - em) * Dd{0.5};
  return {c * ch, -(s * sh)};
}

}  // namespace qdft::detail
