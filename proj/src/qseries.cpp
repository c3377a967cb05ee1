#include "qdft/qseries.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace qdft {

namespace {
constexpr double kPi = std::numbers::pi;

void check_jM(int j, int M) {
  if (M < 1) throw std::invalid_argument("q_root: M must be positive, got " + std::to_string(M));
  if (j < 1 || j > M - 1)
    throw std::invalid_argument("q_root: need 1 <= j <= M-1, got j=" + std::to_string(j) +
                                ", M=" + std::to_string(M));
}
}  // namespace

Complex q_root(int j, int M) {
  check_jM(j, M);
  double angle = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(M);
  return {std::cos(angle), std::sin(angle)};
}

Complex alpha_param(int j, int M) {
  check_jM(j, M);
  // sqrt(pi j / M) e^{-i pi/4} = c - i c with c = sqrt(pi j / (2M)), so the
  // components are bitwise negatives and i*alpha == conj(alpha) exactly.
  double c = std::sqrt(kPi * static_cast<double>(j) / (2.0 * static_cast<double>(M)));
  return {c, -c};
}

Complex q_pochhammer(Complex a, Complex q, int n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: n must be nonnegative");
  Complex prod{1.0, 0.0};
  Complex qk{1.0, 0.0};
  for (int k = 0; k < n; ++k) {
    prod *= (Complex{1.0, 0.0} - a * qk);
    qk *= q;
  }
  if (!std::isfinite(prod.real()) || !std::isfinite(prod.imag()))
    throw std::overflow_error("q_pochhammer: product overflowed");
  return prod;
}

std::vector<Complex> q_binomial_row(int n, Complex q) {
  if (n < 0) throw std::invalid_argument("q_binomial_row: n must be nonnegative");
  std::vector<Complex> row(static_cast<size_t>(n) + 1, Complex{0.0, 0.0});
  row[0] = {1.0, 0.0};
  std::vector<Complex> qpow(static_cast<size_t>(n) + 1);
  qpow[0] = {1.0, 0.0};
  for (int k = 1; k <= n; ++k) qpow[static_cast<size_t>(k)] = qpow[static_cast<size_t>(k - 1)] * q;
  for (int m = 1; m <= n; ++m) {
    // Right-to-left in-place update: positions >= k still hold row m-1.
    for (int k = m; k >= 1; --k) {
      Complex upper = (k <= m - 1) ? row[static_cast<size_t>(k)] : Complex{0.0, 0.0};
      row[static_cast<size_t>(k)] = row[static_cast<size_t>(k - 1)] + qpow[static_cast<size_t>(k)] * upper;
    }
  }
  return row;
}

Complex q_binomial(int n, int k, Complex q) {
  if (n < 0) throw std::invalid_argument("q_binomial: n must be nonnegative");
  if (k < 0 || k > n) return {0.0, 0.0};
  return q_binomial_row(n, q)[static_cast<size_t>(k)];
}

RootOfUnityParams RootOfUnityParams::make(int j, int M) {
  check_jM(j, M);
  RootOfUnityParams p;
  p.j = j;
  p.M = M;
  p.q = q_root(j, M);
  p.alpha = alpha_param(j, M);
  p.coprime = (std::gcd(j, M) == 1);
  return p;
}

RealQParams RealQParams::from_q(double q) {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("RealQParams: need 0 < q < 1, got " + std::to_string(q));
  RealQParams p;
  p.q = q;
  p.kappa = std::sqrt(-0.5 * std::log(q));
  return p;
}

RealQParams RealQParams::from_kappa(double kappa) {
  if (!(kappa > 0.0)) throw std::invalid_argument("RealQParams: kappa must be positive");
  RealQParams p;
  p.kappa = kappa;
  p.q = std::exp(-2.0 * kappa * kappa);
  return p;
}

}  // namespace qdft
