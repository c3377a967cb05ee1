#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qdft/eigenpairs.hpp"
#include "qdft/fourier.hpp"
#include "qdft/periodize.hpp"
#include "qdft/qhermite.hpp"

using namespace qdft;
using std::numbers::pi;

namespace {

// 13-term value of sum_k exp(-pi k^2), frozen from a 30-digit evaluation.
constexpr double kTheta = 1.0864348112133080145753161215;

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("periodize basics") {
  GrowthCertificate gauss_cert{1.0, 0.0};
  auto zero = periodize([](double) { return Complex{0.0, 0.0}; }, gauss_cert, 4);
  for (auto v : zero.values) CHECK(v == Complex{0.0, 0.0});

  auto theta = periodize([](double t) { return Complex{std::exp(-t * t / 2.0), 0.0}; },
                         gauss_cert, 1);
  CHECK(std::fabs(theta.values[0].real() - kTheta) < 1e-13);
  CHECK(theta.tail_bound < 1e-14);
  CHECK(theta.truncation_used >= 2);

  auto even = periodize([](double t) { return Complex{std::exp(-t * t / 2.0), 0.0}; },
                        gauss_cert, 5);
  for (int r = 0; r < 5; ++r)
    CHECK(std::abs(even.values[static_cast<size_t>((5 - r) % 5)] - even.values[static_cast<size_t>(r)]) < 1e-12);
}

TEST_CASE("parity transport from the summed function") {
  GrowthCertificate cert{2.0, 0.0};
  auto odd = periodize([](double t) { return Complex{t * std::exp(-t * t / 2.0), 0.0}; }, cert, 8);
  for (int r = 0; r < 8; ++r)
    CHECK(std::abs(odd.values[static_cast<size_t>((8 - r) % 8)] + odd.values[static_cast<size_t>(r)]) < 1e-10);
}

TEST_CASE("certificate violations are reported") {
  GrowthCertificate lying_cert{1e-8, 0.0};
  CHECK_THROWS_AS(periodize([](double t) { return Complex{std::exp(-t * t / 2.0), 0.0}; },
                            lying_cert, 3),
                  certificate_error);
}

TEST_CASE("truncation failures are reported") {
  TruncationPolicy tiny_eps;
  tiny_eps.eps = 1e-30;
  GrowthCertificate cert{1.0, 0.0};
  CHECK_THROWS_AS(periodize([](double t) { return Complex{std::exp(-t * t / 2.0), 0.0}; },
                            cert, 3, tiny_eps),
                  truncation_error);

  TruncationPolicy small_window;
  small_window.k_max = 1;
  // c1 = 12 pushes the envelope hump past the one-period window.
  GrowthCertificate wide{1.0, 12.0};
  CHECK_THROWS_AS(periodize([](double t) { return Complex{std::exp(-t * t / 2.0), 0.0}; },
                            wide, 3, small_window),
                  truncation_error);
}

TEST_CASE("mehta vectors") {
  auto v0 = mehta_vector(0, 1);
  CHECK(std::fabs(v0.values[0].real() - kTheta) < 1e-13);

  for (int n : {1, 3, 5}) {
    auto v = mehta_vector(n, 5);
    CHECK(std::abs(v.values[0]) < 1e-12);
  }
  auto v14 = mehta_vector(1, 4);
  CHECK(std::abs(v14.values[2]) < 1e-12);

  for (int N : {4, 5, 9}) {
    for (int n : {0, 1, 2, 3, 6}) {
      auto v = mehta_vector(n, N);
      CHECK(v.parity_deviation() < 1e-10 * std::max(1.0, v.max_abs()));
      CHECK(v.tail_bound < 1e-14);
    }
  }
}

TEST_CASE("truncation robustness: widening the window moves nothing") {
  TruncationPolicy wide;
  wide.k_max = 64;
  wide.adaptive = false;  // fixed full window up to the stop rule
  for (int n : {0, 4}) {
    auto adaptive = mehta_vector(n, 5);
    TruncationPolicy forced;
    forced.eps = 1e-16;
    auto finer = mehta_vector(n, 5, forced);
    CHECK(max_diff(adaptive.values, finer.values) <
          adaptive.tail_bound * std::max(1.0, adaptive.max_abs()) + 1e-12 * adaptive.max_abs());
  }
}

TEST_CASE("q-family vectors, root-of-unity branch") {
  auto p13 = RootOfUnityParams::make(1, 3);
  auto p14 = RootOfUnityParams::make(1, 4);

  auto f0 = f_q_vector(0, 5, p13);
  auto g0 = g_q_vector(0, 5, p13);
  auto m0 = mehta_vector(0, 5);
  CHECK(max_diff(f0.values, m0.values) < 1e-13);
  CHECK(max_diff(g0.values, m0.values) < 1e-13);

  for (int n : {1, 3, 5}) {
    auto f = f_q_vector(n, 5, p13);
    CHECK(std::abs(f.values[0]) < 1e-10);
  }

  for (const auto& p : {p13, p14}) {
    for (int N : {5, 8}) {
      for (int n = 0; n <= 6; ++n) {
        auto f = f_q_vector(n, N, p);
        auto g = g_q_vector(n, N, p);
        double dev = 0.0;
        for (size_t r = 0; r < f.values.size(); ++r)
          dev = std::max(dev, std::abs(g.values[r] - std::conj(f.values[r])));
        CHECK(dev < 1e-10);  // the two independently summed families are conjugate
        CHECK(f.parity_deviation() < 1e-10);
      }
    }
  }
}

TEST_CASE("q-family vectors, real branch, against the sinh representation") {
  auto params = RealQParams::from_q(0.6);
  for (int n : {1, 4}) {
    auto g = g_q_vector(n, 5, params);
    // i^n sum_k gaussian * h_n(sinh(kappa t)|q), summed over the same window
    std::vector<Complex> alt(5, Complex{0.0, 0.0});
    double s = std::sqrt(2.0 * pi / 5.0);
    for (int r = 0; r < 5; ++r) {
      for (int k = -g.truncation_used; k <= g.truncation_used; ++k) {
        double t = s * (k * 5 + r);
        double gauss = std::exp(-t * t / 2.0);
        if (gauss == 0.0) continue;
        alt[static_cast<size_t>(r)] +=
            gauss * i_power(n) *
            qinv_hermite(n, Complex{std::sinh(params.kappa * t), 0.0}, Complex{params.q, 0.0});
      }
    }
    CHECK(max_diff(g.values, alt) < 1e-10 * std::max(1.0, g.max_abs()));
  }
}

TEST_CASE("finite-transform relation for both branches") {
  for (int N : {5, 8}) {
    for (int n = 0; n <= 6; ++n) {
      CHECK(verify_K33(n, N, RealQParams::from_q(0.5)) < 1e-8);
      CHECK(verify_K33(n, N, RootOfUnityParams::make(1, 4)) < 1e-8);
      CHECK(verify_K33(n, N, RootOfUnityParams::make(1, 3)) < 1e-8);
    }
  }
  CHECK(verify_K33(0, 6, RootOfUnityParams::make(2, 5)) < 1e-10);
}

TEST_CASE("conjugated transform relations") {
  auto [r40a, r41a] = verify_K40_K41(0, 5, RootOfUnityParams::make(1, 3));
  CHECK(r40a < 1e-10);
  CHECK(r41a < 1e-10);
  auto [r40b, r41b] = verify_K40_K41(3, 8, RootOfUnityParams::make(1, 3));
  CHECK(r40b < 1e-8);
  CHECK(r41b < 1e-8);
  auto [r40c, r41c] = verify_K40_K41(4, 5, RootOfUnityParams::make(2, 5));
  CHECK(r40c < 1e-8);
  CHECK(r41c < 1e-8);
}

TEST_CASE("periodization intertwines the two transforms") {
  // For a transform pair (f, g) produced by quadrature, dft(periodize(f))
  // must equal periodize(g).
  for (int N : {3, 4, 5, 8, 9, 16}) {
    for (int n : {0, 1, 3}) {
      auto f = [n](double t) {
        return Complex{std::exp(-t * t / 2.0), 0.0} * classical_hermite(n, Complex{t, 0.0});
      };
      auto spec = QuadratureSpec::make(n, Complex{0.0, 0.0});
      auto g = [&](double t) { return integral_ft(f, Complex{t, 0.0}, spec); };
      GrowthCertificate cert = mehta_certificate(n);
      auto F = periodize(f, cert, N);
      auto G = periodize(g, cert, N);
      auto op = dft_matrix(N);
      auto FG = apply_dft(op, std::span<const Complex>(F.values));
      CHECK(max_diff(FG, G.values) < 1e-8);
    }
  }
  // One q-type pair as well.
  auto p = RootOfUnityParams::make(1, 4);
  int n = 2;
  auto f = [&](double t) {
    return Complex{std::exp(-t * t / 2.0), 0.0} * qhermite_sin(n, p.alpha * t, p.q);
  };
  auto spec = QuadratureSpec::make(n, p.alpha);
  auto g = [&](double t) { return integral_ft(f, Complex{t, 0.0}, spec); };
  GrowthCertificate cert = q_family_certificate(n, p.alpha, p.q);
  for (int N : {5, 8}) {
    auto F = periodize(f, cert, N);
    auto G = periodize(g, cert, N);
    auto FG = apply_dft(dft_matrix(N), std::span<const Complex>(F.values));
    CHECK(max_diff(FG, G.values) < 1e-8);
  }
}

TEST_CASE("labels and indexing") {
  auto v = f_q_vector(2, 5, RootOfUnityParams::make(1, 3));
  CHECK(v.label.family == "f_q");
  CHECK(v.label.n == 2);
  CHECK(v.label.parity == 1);
  CHECK(v.label.str().find("j=1") != std::string::npos);
  CHECK(std::abs(v.at(7) - v.values[2]) == 0.0);
  CHECK(std::abs(v.at(-3) - v.values[2]) == 0.0);
}
