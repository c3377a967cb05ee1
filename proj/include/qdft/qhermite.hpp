#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdft/qseries.hpp"
#include "qdft/scalar.hpp"

namespace qdft {

enum class PolynomialFamily { ContinuousQHermite, QInverseHermite, ClassicalHermite, ChebyshevT };
enum class EvalMethod { Recurrence, FourierSum, Factorized };

/// One polynomial evaluation together with how it was produced, so different
/// routes to the same value can be compared.
struct PolynomialEvaluation {
  PolynomialFamily family;
  int degree = 0;
  Complex argument;
  std::optional<Complex> q;  // absent for the classical families
  Complex value;
  EvalMethod method = EvalMethod::Recurrence;
};

/// Evaluate by recurrence or by the trigonometric series (which reads the
/// argument as cos(theta) via the principal arccos).
PolynomialEvaluation evaluate_polynomial(PolynomialFamily family, int n, Complex x,
                                         std::optional<Complex> q, EvalMethod method);

/// Factorized route for the q-family at a root of unity: the degree is split
/// as n = m*M + rem and the value assembled from (2 T_M)^m times the degree-rem
/// polynomial. Requires coprime (j, M).
PolynomialEvaluation evaluate_factorized(const RootOfUnityParams& params, int n, Complex x);

/// Continuous q-Hermite polynomial H_n(x|q) through the three-term
/// recurrence 2x H_n = H_{n+1} + (1 - q^n) H_{n-1}, H_0 = 1, H_1 = 2x.
Complex qhermite_recurrence(int n, Complex x, Complex q);

/// H_n(cos(theta)|q) as the finite Fourier series
/// sum_k [n,k]_q e^{i(n-2k)theta}. Complex theta is allowed.
Complex qhermite_fourier_sum(int n, Complex theta, Complex q);

/// H_n(sin(theta)|q) = i^n sum_k [n,k]_q (-1)^k e^{i(2k-n)theta}.
Complex qhermite_sin(int n, Complex theta, Complex q);

/// q^{-1}-Hermite polynomial h_n(x|q) = i^{-n} H_n(ix|q^{-1}), q != 0.
Complex qinv_hermite(int n, Complex x, Complex q);

/// Chebyshev polynomial of the first kind, T_M(cos(theta)) = cos(M theta).
Complex chebyshev_T(int M, Complex x);

/// Physicists' Hermite polynomial, H_{n+1} = 2x H_n - 2n H_{n-1}.
Complex classical_hermite(int n, Complex x);

/// The M zeros of T_M: cos((2s+1) pi / (2M)), s = 0..M-1, strictly decreasing.
std::vector<double> chebyshev_zeros(int M);

/// Equispaced grid of `points` reals covering [-1, 1].
std::vector<double> identity_grid(int points = 101);

/// max over the grid of |H_M(x|q_{j,M}) - 2 T_M(x)|. Requires coprime (j, M);
/// the collapse to a pure Chebyshev polynomial fails otherwise.
double verify_chebyshev_identity(const RootOfUnityParams& params, std::span<const double> grid);

/// max over the grid of |H_{mM+n}(x|q) - (2 T_M(x))^m H_n(x|q)|, with the two
/// sides evaluated through independent code paths. Requires coprime (j, M)
/// and 0 <= n <= M-1.
double verify_factorization(const RootOfUnityParams& params, int m, int n,
                            std::span<const double> grid);

/// Result of probing the discrete orthogonality of H_0..H_{M-1} on the
/// Chebyshev zeros. `weights` solves, in the least-squares sense,
///   sum_s w_s H_m(x_s) H_n(x_s) = 0  (m < n),  sum_s w_s = 1.
struct WeightSolveResult {
  std::vector<Complex> weights;
  double max_residual = 0.0;
  double condition = 0.0;
  bool ok = false;
  std::string diagnostic;
};

WeightSolveResult solve_discrete_weights(const RootOfUnityParams& params);

/// |((1-q)/2)^{-n/2} H_n(x sqrt((1-q)/2) | q) - H_n(x)| for 0 < q < 1.
double qtolimit_deviation(int n, double q, double x);

/// Root-of-unity analogue: |alpha^{-n} H_n(sin(alpha x)|q_{j,M}) - H_n(x)|
/// with alpha = alpha_param(j, M); tends to 0 as M grows with j fixed.
double qtolimit_deviation_root_of_unity(int n, int j, int M, double x);

}  // namespace qdft
