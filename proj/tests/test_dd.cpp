#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qdft/detail/dd.hpp"

using namespace qdft::detail;

namespace {

double dd_diff(const Dd& a, const Dd& b) {
  return std::fabs((a - b).value());
}

// Reference values to 32+ digits, stored as hi/lo pairs.
const Dd kE{2.718281828459045, 1.4456468917292502e-16};
const Dd kSin1{0.8414709848078965, 1.776845092935536e-18};
const Dd kCos1{0.5403023058681398, -4.760954612604417e-17};
const Dd kSin100{-0.5063656411097588, -3.050947053792115e-18};
const Dd kExpM30{9.357622968840175e-14, -2.1170146272646406e-30};
const Dd kSqrt2{1.4142135623730951, -9.667293313452913e-17};

}  // namespace

TEST_CASE("arithmetic against long double") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    double a = dist(rng), b = dist(rng);
    long double la = a, lb = b;
    CHECK(std::fabs((Dd{a} + Dd{b}).value() - static_cast<double>(la + lb)) == 0.0);
    CHECK(std::fabs((Dd{a} * Dd{b}).value() - static_cast<double>(la * lb)) < 1e-15 * std::fabs(a * b) + 1e-300);
    if (b != 0.0) {
      Dd q = Dd{a} / Dd{b};
      CHECK(dd_diff(q * Dd{b}, Dd{a}) < 1e-29 * std::fabs(a));
    }
  }
}

TEST_CASE("exp reference values") {
  CHECK(dd_diff(dd_exp(Dd{1.0}), kE) < 3e-30);
  CHECK(dd_diff(dd_exp(Dd{-30.0}), kExpM30) < 1e-42);
  CHECK(dd_exp(Dd{-800.0}).value() == 0.0);
  CHECK(std::isinf(dd_exp(Dd{710.0}).value()));
  CHECK(dd_exp(Dd{0.0}).value() == 1.0);
}

TEST_CASE("exp functional equation") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-40.0, 40.0);
  for (int i = 0; i < 500; ++i) {
    double a = dist(rng);
    Dd p = dd_exp(Dd{a}) * dd_exp(Dd{-a});
    CHECK(std::fabs(p.value() - 1.0) < 1e-28);
  }
}

TEST_CASE("sincos reference and identities") {
  Dd s, c;
  dd_sincos(Dd{1.0}, s, c);
  CHECK(dd_diff(s, kSin1) < 2e-31);
  CHECK(dd_diff(c, kCos1) < 2e-31);
  dd_sincos(Dd{100.0}, s, c);
  CHECK(dd_diff(s, kSin100) < 5e-30);

  std::mt19937 rng(13);
  std::uniform_real_distribution<double> dist(-300.0, 300.0);
  for (int i = 0; i < 500; ++i) {
    double a = dist(rng);
    dd_sincos(Dd{a}, s, c);
    Dd one = s * s + c * c;
    CHECK(std::fabs(one.value() - 1.0) < 1e-28);
  }
}

TEST_CASE("sqrt") {
  CHECK(dd_diff(dd_sqrt(Dd{2.0}), kSqrt2) < 1e-31);
  Dd r = dd_sqrt(kDdTwoPi);
  CHECK(std::fabs((r * r - kDdTwoPi).value()) < 1e-30);
  CHECK(dd_sqrt(Dd{0.0}).value() == 0.0);
}

TEST_CASE("complex exp stays on the circle for imaginary arguments") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dist(-200.0, 200.0);
  for (int i = 0; i < 300; ++i) {
    Ddc e = dd_cexp(Ddc{Dd{0.0}, Dd{dist(rng)}});
    Dd norm = e.re * e.re + e.im * e.im;
    CHECK(std::fabs(norm.value() - 1.0) < 1e-28);
  }
}

TEST_CASE("complex cos matches std::complex in double range") {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int i = 0; i < 300; ++i) {
    std::complex<double> z{dist(rng), dist(rng)};
    Ddc c = dd_ccos(Ddc{z});
    CHECK(std::abs(c.value() - std::cos(z)) < 1e-14 * (1.0 + std::abs(std::cos(z))));
  }
}
