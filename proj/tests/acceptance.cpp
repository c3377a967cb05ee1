// Acceptance suite: runs every gate criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "qdft/eigenpairs.hpp"
#include "qdft/fourier.hpp"
#include "qdft/periodize.hpp"
#include "qdft/qhermite.hpp"

using namespace qdft;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int index, const std::string& name, bool pass, double metric, double threshold,
            double seconds, double budget_seconds = 0.0) {
  if (budget_seconds > 0.0 && seconds >= budget_seconds) pass = false;
  std::printf("[%s] criterion %2d: %-38s metric=%.3e threshold=%.1e (%.2fs)\n",
              pass ? "PASS" : "FAIL", index, name.c_str(), metric, threshold, seconds);
  if (!pass) ++g_failures;
}

std::vector<double> ys_range(double lo, double hi, int count) {
  std::vector<double> ys(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) ys[static_cast<size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return ys;
}

Eigen::MatrixXcd to_eigen(const DftOperator& op) {
  Eigen::MatrixXcd m(op.N, op.N);
  for (int r = 0; r < op.N; ++r)
    for (int s = 0; s < op.N; ++s) m(r, s) = op.at(r, s);
  return m;
}

// 1. Transform structure: unitarity, fourth power, spectrum on {1,-1,i,-i}.
void criterion_dft_structure() {
  Timer t;
  double worst_unitary = 0.0, worst_fourth = 0.0, worst_spectrum = 0.0;
  for (int N = 1; N <= 64; ++N) {
    auto m = to_eigen(dft_matrix(N));
    Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(N, N);
    worst_unitary = std::max(worst_unitary, (m * m.adjoint() - eye).cwiseAbs().maxCoeff());
    Eigen::MatrixXcd m2 = m * m;
    worst_fourth = std::max(worst_fourth, (m2 * m2 - eye).cwiseAbs().maxCoeff());
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    for (int i = 0; i < N; ++i) {
      double dist = 1e9;
      for (long k = 0; k < 4; ++k)
        dist = std::min(dist, std::abs(solver.eigenvalues()(i) - i_power(k)));
      worst_spectrum = std::max(worst_spectrum, dist);
    }
  }
  bool pass = worst_unitary < 1e-12 && worst_fourth < 1e-11 && worst_spectrum < 1e-10;
  report(1, "dft unitarity/fourth power/spectrum", pass,
         std::max({worst_unitary, worst_fourth, worst_spectrum}), 1e-10, t.seconds(), 10.0);
}

// 2. Hermite functions are fixed by the transform up to i^n.
void criterion_hermite_ft() {
  Timer t;
  auto ys = ys_range(-3.0, 3.0, 13);
  double worst = 0.0;
  for (int n = 0; n <= 10; ++n) worst = std::max(worst, verify_hermite_ft(n, ys));
  report(2, "hermite eigenfunction transform", worst < 1e-8, worst, 1e-8, t.seconds(), 5.0);
}

// 3. Mehta candidates at the conjectured indices.
void criterion_mehta_relation() {
  Timer t;
  double worst = 0.0;
  for (int N : {3, 4, 5, 8, 9, 16}) {
    for (const auto& cand : mehta_eigencheck(N)) worst = std::max(worst, cand.residual);
  }
  report(3, "mehta eigenvector residuals", worst < 1e-9, worst, 1e-9, t.seconds(), 5.0);
}

// 4. Chebyshev collapse and degree factorization for all coprime pairs.
void criterion_chebyshev() {
  Timer t;
  auto grid = identity_grid();
  double worst = 0.0;
  for (int M = 2; M <= 12; ++M) {
    for (int j = 1; j < M; ++j) {
      if (std::gcd(j, M) != 1) continue;
      auto params = RootOfUnityParams::make(j, M);
      worst = std::max(worst, verify_chebyshev_identity(params, grid));
      for (int m = 0; m <= 3; ++m)
        for (int n = 0; n < M; ++n)
          worst = std::max(worst, verify_factorization(params, m, n, grid));
    }
  }
  report(4, "chebyshev collapse + factorization", worst < 1e-10, worst, 1e-10, t.seconds(), 5.0);
}

// 5. Integral-transform battery.
void criterion_integral_battery() {
  Timer t;
  auto ys = ys_range(-1.5, 1.5, 7);
  double worst = 0.0;
  for (int n = 0; n <= 8; ++n) {
    for (double q : {0.5, 0.7}) {
      worst = std::max(worst, verify_lemma_K6(n, Complex{0.4, 0.0}, Complex{q, 0.0}, ys));
      worst = std::max(worst, verify_prop_3_1(n, RealQParams::from_q(q), ys));
    }
    for (auto [j, M] : {std::pair{1, 3}, std::pair{1, 4}, std::pair{2, 5}}) {
      auto p = RootOfUnityParams::make(j, M);
      worst = std::max(worst, verify_lemma_K6(n, p.alpha, p.q, ys));
      worst = std::max(worst, verify_prop_3_5(n, p, ys));
    }
  }
  for (int m = 0; m <= 2; ++m)
    for (auto [j, M] : {std::pair{1, 3}, std::pair{1, 4}, std::pair{2, 5}})
      worst = std::max(worst, verify_cos_power(m, j, M, ys));
  report(5, "integral transform battery", worst < 1e-7, worst, 1e-7, t.seconds(), 60.0);
}

// 6. Finite-transform relations for both branches plus the conjugation link.
void criterion_finite_transform() {
  Timer t;
  double worst = 0.0, worst_conj = 0.0;
  for (int N : {5, 8}) {
    for (int n = 0; n <= 6; ++n) {
      worst = std::max(worst, verify_K33(n, N, RealQParams::from_q(0.5)));
      for (auto [j, M] : {std::pair{1, 3}, std::pair{1, 4}}) {
        auto p = RootOfUnityParams::make(j, M);
        worst = std::max(worst, verify_K33(n, N, p));
        auto [r40, r41] = verify_K40_K41(n, N, p);
        worst = std::max({worst, r40, r41});
        auto f = f_q_vector(n, N, p);
        auto g = g_q_vector(n, N, p);
        for (size_t r = 0; r < f.values.size(); ++r)
          worst_conj = std::max(worst_conj, std::abs(g.values[r] - std::conj(f.values[r])));
      }
    }
  }
  bool pass = worst < 1e-8 && worst_conj < 1e-10;
  report(6, "finite transform relations", pass, std::max(worst, worst_conj), 1e-8, t.seconds(), 30.0);
}

// 7. Eigenvector construction; the printed pi/8 phase is reported, not gated.
void criterion_q_eigenvectors() {
  Timer t;
  double worst = 0.0;
  double paper_worst = 0.0;
  for (auto [j, M] : {std::pair{1, 3}, std::pair{1, 4}}) {
    auto p = RootOfUnityParams::make(j, M);
    for (int N : {5, 8}) {
      for (int n = 0; n <= 6; ++n) {
        auto [F, G] = q_eigenvectors(n, N, p);
        worst = std::max({worst, F.residual, G.residual});
        auto [Fp, Gp] = q_eigenvectors(n, N, p, {}, PhaseConvention::PaperPiOver8);
        paper_worst = std::max({paper_worst, Fp.residual, Gp.residual});
      }
    }
  }
  std::printf("       note: printed-phase pi/8 probe worst residual = %.3e "
              "(documented failure, informational)\n", paper_worst);
  report(7, "q-eigenvectors, derived phase", worst < 1e-7, worst, 1e-7, t.seconds());
}

// 8. The periodization map intertwines the integral and finite transforms.
void criterion_periodization_oracle() {
  Timer t;
  double worst = 0.0;
  for (int N : {4, 5, 8}) {
    for (int n = 0; n <= 5; ++n) {
      auto f = [n](double t) {
        return Complex{std::exp(-t * t / 2.0), 0.0} * classical_hermite(n, Complex{t, 0.0});
      };
      auto spec = QuadratureSpec::make(n, Complex{0.0, 0.0});
      auto g = [&](double t) { return integral_ft(f, Complex{t, 0.0}, spec); };
      GrowthCertificate cert = mehta_certificate(n);
      auto F = periodize(f, cert, N);
      auto G = periodize(g, cert, N);
      auto FG = apply_dft(dft_matrix(N), std::span<const Complex>(F.values));
      for (int r = 0; r < N; ++r)
        worst = std::max(worst, std::abs(FG[static_cast<size_t>(r)] - G.values[static_cast<size_t>(r)]));
    }
  }
  report(8, "periodization vs quadrature transform", worst < 1e-8, worst, 1e-8, t.seconds(), 30.0);
}

// 9. Classical limits: deviations shrink strictly along both parameter paths.
void criterion_limits() {
  Timer t;
  bool ok = true;
  double worst_ratio = 0.0;
  // The scaled polynomial equals its limit exactly for small n on the real
  // branch; a sequence that is already ~0 counts as converged.
  auto shrinking = [&](double d1, double d2, double d3) {
    if (std::max({d1, d2, d3}) < 1e-13) return true;
    worst_ratio = std::max({worst_ratio, d2 / d1, d3 / d2});
    return d1 > d2 && d2 > d3;
  };
  for (int n = 0; n <= 5; ++n) {
    for (double x : {0.3, 0.7, 1.1}) {
      ok = ok && shrinking(qtolimit_deviation(n, 0.9, x), qtolimit_deviation(n, 0.99, x),
                           qtolimit_deviation(n, 0.999, x));
      ok = ok && shrinking(qtolimit_deviation_root_of_unity(n, 1, 8, x),
                           qtolimit_deviation_root_of_unity(n, 1, 16, x),
                           qtolimit_deviation_root_of_unity(n, 1, 32, x));
    }
  }
  report(9, "classical limits decrease strictly", ok, worst_ratio, 1.0, t.seconds());
}

// 10. Independence of the Mehta sets, with a non-orthogonality witness.
void criterion_independence() {
  Timer t;
  double smallest = 1e9;
  bool full_rank = true;
  for (int N = 1; N <= 32; ++N) {
    auto cands = mehta_eigencheck(N);
    auto rep = independence_report(cands);
    full_rank = full_rank && rep.rank == static_cast<int>(cands.size());
    smallest = std::min(smallest, rep.smallest_singular_value);
  }
  double witness = independence_report(mehta_eigencheck(6)).max_offdiag_gram;
  bool pass = full_rank && smallest > 1e-8 && witness > 1e-6;
  std::printf("       note: smallest normalized singular value over N<=32 = %.3e, "
              "gram witness at N=6 = %.3e\n", smallest, witness);
  report(10, "mehta independence + non-orthogonality", pass, smallest, 1e-8, t.seconds());
}

}  // namespace

int main() {
  criterion_dft_structure();
  criterion_hermite_ft();
  criterion_mehta_relation();
  criterion_chebyshev();
  criterion_integral_battery();
  criterion_finite_transform();
  criterion_q_eigenvectors();
  criterion_periodization_oracle();
  criterion_limits();
  criterion_independence();
  std::printf("%d of 10 criteria failed\n", g_failures);
  return g_failures;
}
