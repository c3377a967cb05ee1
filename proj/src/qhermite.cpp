#include "qdft/qhermite.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qdft {

namespace {
constexpr double kPi = std::numbers::pi;
}

Complex qhermite_recurrence(int n, Complex x, Complex q) {
  if (n < 0) throw std::invalid_argument("qhermite_recurrence: n must be nonnegative");
  if (n == 0) return {1.0, 0.0};
  Complex hm1{1.0, 0.0};
  Complex h = 2.0 * x;
  Complex qm = q;  // q^m
  for (int m = 1; m < n; ++m) {
    Complex next = 2.0 * x * h - (Complex{1.0, 0.0} - qm) * hm1;
    hm1 = h;
    h = next;
    qm *= q;
  }
  return h;
}

Complex qhermite_fourier_sum(int n, Complex theta, Complex q) {
  if (n < 0) throw std::invalid_argument("qhermite_fourier_sum: n must be nonnegative");
  const auto binoms = q_binomial_row(n, q);
  const Complex i{0.0, 1.0};
  Complex sum{0.0, 0.0};
  for (int k = 0; k <= n; ++k) {
    sum += binoms[static_cast<size_t>(k)] * std::exp(i * static_cast<double>(n - 2 * k) * theta);
  }
  return sum;
}

Complex qhermite_sin(int n, Complex theta, Complex q) {
  if (n < 0) throw std::invalid_argument("qhermite_sin: n must be nonnegative");
  const auto binoms = q_binomial_row(n, q);
  const Complex i{0.0, 1.0};
  Complex sum{0.0, 0.0};
  double sign = 1.0;
  for (int k = 0; k <= n; ++k) {
    sum += sign * binoms[static_cast<size_t>(k)] *
           std::exp(i * static_cast<double>(2 * k - n) * theta);
    sign = -sign;
  }
  return i_power(n) * sum;
}

Complex qinv_hermite(int n, Complex x, Complex q) {
  if (n < 0) throw std::invalid_argument("qinv_hermite: n must be nonnegative");
  if (q == Complex{0.0, 0.0}) throw std::invalid_argument("qinv_hermite: q must be nonzero");
  const Complex i{0.0, 1.0};
  return i_power(-n) * qhermite_recurrence(n, i * x, Complex{1.0, 0.0} / q);
}

Complex chebyshev_T(int M, Complex x) {
  if (M < 0) throw std::invalid_argument("chebyshev_T: M must be nonnegative");
  if (M == 0) return {1.0, 0.0};
  Complex tm1{1.0, 0.0};
  Complex t = x;
  for (int m = 1; m < M; ++m) {
    Complex next = 2.0 * x * t - tm1;
    tm1 = t;
    t = next;
  }
  return t;
}

Complex classical_hermite(int n, Complex x) {
  if (n < 0) throw std::invalid_argument("classical_hermite: n must be nonnegative");
  if (n == 0) return {1.0, 0.0};
  Complex hm1{1.0, 0.0};
  Complex h = 2.0 * x;
  for (int m = 1; m < n; ++m) {
    Complex next = 2.0 * x * h - 2.0 * static_cast<double>(m) * hm1;
    hm1 = h;
    h = next;
  }
  return h;
}

std::vector<double> chebyshev_zeros(int M) {
  if (M < 1) throw std::invalid_argument("chebyshev_zeros: M must be positive");
  std::vector<double> zeros(static_cast<size_t>(M));
  for (int s = 0; s < M; ++s) {
    zeros[static_cast<size_t>(s)] = std::cos((2.0 * s + 1.0) * kPi / (2.0 * M));
  }
  return zeros;
}

std::vector<double> identity_grid(int points) {
  if (points < 2) throw std::invalid_argument("identity_grid: need at least 2 points");
  std::vector<double> grid(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<size_t>(i)] = -1.0 + 2.0 * static_cast<double>(i) / (points - 1);
  }
  return grid;
}

double verify_chebyshev_identity(const RootOfUnityParams& params, std::span<const double> grid) {
  if (!params.coprime)
    throw std::invalid_argument("verify_chebyshev_identity: j and M must be coprime");
  double dev = 0.0;
  for (double x : grid) {
    Complex lhs = qhermite_recurrence(params.M, Complex{x, 0.0}, params.q);
    Complex rhs = 2.0 * chebyshev_T(params.M, Complex{x, 0.0});
    dev = std::max(dev, std::abs(lhs - rhs));
  }
  return dev;
}

double verify_factorization(const RootOfUnityParams& params, int m, int n,
                            std::span<const double> grid) {
  if (!params.coprime)
    throw std::invalid_argument("verify_factorization: j and M must be coprime");
  if (m < 0) throw std::invalid_argument("verify_factorization: m must be nonnegative");
  if (n < 0 || n > params.M - 1)
    throw std::invalid_argument("verify_factorization: need 0 <= n <= M-1");
  double dev = 0.0;
  for (double x : grid) {
    Complex xc{x, 0.0};
    Complex lhs = qhermite_recurrence(m * params.M + n, xc, params.q);
    Complex rhs = std::pow(2.0 * chebyshev_T(params.M, xc), static_cast<double>(m)) *
                  qhermite_recurrence(n, xc, params.q);
    dev = std::max(dev, std::abs(lhs - rhs));
  }
  return dev;
}

WeightSolveResult solve_discrete_weights(const RootOfUnityParams& params) {
  if (!params.coprime)
    throw std::invalid_argument("solve_discrete_weights: j and M must be coprime");
  const int M = params.M;
  const auto zeros = chebyshev_zeros(M);

  // H[n][s] = H_n(x_s | q), n = 0..M-1 over the M grid points.
  Eigen::MatrixXcd H(M, M);
  for (int n = 0; n < M; ++n)
    for (int s = 0; s < M; ++s)
      H(n, s) = qhermite_recurrence(n, Complex{zeros[static_cast<size_t>(s)], 0.0}, params.q);

  const int rows = M * (M - 1) / 2 + 1;
  Eigen::MatrixXcd A(rows, M);
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(rows);
  int row = 0;
  for (int m = 0; m < M; ++m)
    for (int n = m + 1; n < M; ++n) {
      for (int s = 0; s < M; ++s) A(row, s) = H(m, s) * H(n, s);
      ++row;
    }
  for (int s = 0; s < M; ++s) A(row, s) = H(0, s) * H(0, s);
  b(row) = 1.0;

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXcd w = svd.solve(b);
  const auto& sv = svd.singularValues();
  double cond = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                                        : std::numeric_limits<double>::infinity();
  double resid = (A * w - b).cwiseAbs().maxCoeff();

  WeightSolveResult result;
  result.weights.assign(w.data(), w.data() + w.size());
  result.max_residual = resid;
  result.condition = cond;
  result.ok = resid < 1e-8 && cond < 1e12;
  if (!result.ok) {
    std::ostringstream os;
    os << "least-squares orthogonality probe did not certify: max residual " << resid
       << ", condition estimate " << cond;
    result.diagnostic = os.str();
  }
  return result;
}

PolynomialEvaluation evaluate_polynomial(PolynomialFamily family, int n, Complex x,
                                         std::optional<Complex> q, EvalMethod method) {
  PolynomialEvaluation eval{family, n, x, q, Complex{0.0, 0.0}, method};
  const bool wants_q =
      family == PolynomialFamily::ContinuousQHermite || family == PolynomialFamily::QInverseHermite;
  if (wants_q && !q) throw std::invalid_argument("evaluate_polynomial: family requires q");
  if (!wants_q && q) throw std::invalid_argument("evaluate_polynomial: family takes no q");
  if (method == EvalMethod::Factorized)
    throw std::invalid_argument("evaluate_polynomial: factorized route needs root-of-unity "
                                "parameters, use evaluate_factorized");

  switch (family) {
    case PolynomialFamily::ContinuousQHermite:
      eval.value = method == EvalMethod::Recurrence
                       ? qhermite_recurrence(n, x, *q)
                       : qhermite_fourier_sum(n, std::acos(x), *q);
      break;
    case PolynomialFamily::QInverseHermite: {
      if (method == EvalMethod::Recurrence) {
        eval.value = qinv_hermite(n, x, *q);
      } else {
        Complex ix = Complex{0.0, 1.0} * x;
        eval.value = i_power(-n) * qhermite_fourier_sum(n, std::acos(ix), Complex{1.0, 0.0} / *q);
      }
      break;
    }
    case PolynomialFamily::ClassicalHermite:
      if (method != EvalMethod::Recurrence)
        throw std::invalid_argument("evaluate_polynomial: classical Hermite has only the recurrence");
      eval.value = classical_hermite(n, x);
      break;
    case PolynomialFamily::ChebyshevT:
      eval.value = method == EvalMethod::Recurrence ? chebyshev_T(n, x)
                                                    : std::cos(static_cast<double>(n) * std::acos(x));
      break;
  }
  return eval;
}

PolynomialEvaluation evaluate_factorized(const RootOfUnityParams& params, int n, Complex x) {
  if (!params.coprime)
    throw std::invalid_argument("evaluate_factorized: j and M must be coprime");
  if (n < 0) throw std::invalid_argument("evaluate_factorized: n must be nonnegative");
  int m = n / params.M;
  int rem = n % params.M;
  Complex value = std::pow(2.0 * chebyshev_T(params.M, x), static_cast<double>(m)) *
                  qhermite_recurrence(rem, x, params.q);
  return {PolynomialFamily::ContinuousQHermite, n, x, params.q, value, EvalMethod::Factorized};
}

double qtolimit_deviation(int n, double q, double x) {
  if (n < 0) throw std::invalid_argument("qtolimit_deviation: n must be nonnegative");
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("qtolimit_deviation: need 0 < q < 1");
  double s = std::sqrt(0.5 * (1.0 - q));
  Complex scaled = qhermite_recurrence(n, Complex{x * s, 0.0}, Complex{q, 0.0});
  Complex limit = classical_hermite(n, Complex{x, 0.0});
  return std::abs(std::pow(s, -n) * scaled - limit);
}

double qtolimit_deviation_root_of_unity(int n, int j, int M, double x) {
  if (n < 0) throw std::invalid_argument("qtolimit_deviation_root_of_unity: n must be nonnegative");
  Complex alpha = alpha_param(j, M);
  Complex q = q_root(j, M);
  Complex scaled = qhermite_sin(n, alpha * x, q);
  Complex limit = classical_hermite(n, Complex{x, 0.0});
  return std::abs(std::pow(alpha, -static_cast<double>(n)) * scaled - limit);
}

}  // namespace qdft
