#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qdft/qseries.hpp"
#include "qdft/scalar.hpp"

namespace qdft {

/// Controls the adaptive truncation of the infinite lattice sums. `eps` is a
/// relative tolerance: the certified tail bound of each constructed vector,
/// divided by max(1, largest entry magnitude), stays below it.
struct TruncationPolicy {
  double eps = 1e-14;
  int k_max = 64;
  bool adaptive = true;
};

/// Caller-supplied envelope |f(t)| <= c0 * exp(-t^2/4 + c1*|t|). The lattice
/// summation uses it to certify where the tail may be cut.
struct GrowthCertificate {
  double c0 = 1.0;
  double c1 = 0.0;

  double bound(double t) const;
};

struct VectorLabel {
  std::string family;
  int n = 0;
  int parity = 0;  // +1 even, -1 odd, 0 unknown
  std::string params;

  std::string str() const;
};

/// A length-N complex vector standing for an N-periodic function on the
/// integers, produced by summing a decaying function over the lattice
/// sqrt(2*pi/N) * (k*N + r).
struct PeriodizedVector {
  int N = 0;
  std::vector<Complex> values;
  VectorLabel label;
  int truncation_used = 0;   // largest |k| summed
  double tail_bound = 0.0;   // certified relative tail bound

  Complex at(long r) const;  // index reduced mod N
  double max_abs() const;
  /// Max over r of |values[(N-r) mod N] - parity * values[r]|, using the
  /// label's parity; 0 when no parity is declared.
  double parity_deviation() const;
};

/// (M^(N) f)(r) = sum_k f(sqrt(2*pi/N) * (k*N + r)) with adaptive, certified
/// truncation. The certificate must genuinely bound f; sampled violations
/// raise certificate_error.
PeriodizedVector periodize(const std::function<Complex(double)>& f, const GrowthCertificate& cert,
                           int N, const TruncationPolicy& policy = {});

/// Periodized Gaussian-weighted Hermite polynomial of degree n; parity (-1)^n.
PeriodizedVector mehta_vector(int n, int N, const TruncationPolicy& policy = {});

/// Periodization of exp(-t^2/2) H_n(sin(lambda t)|q) with lambda = alpha_{j,M}.
PeriodizedVector f_q_vector(int n, int N, const RootOfUnityParams& params,
                            const TruncationPolicy& policy = {});
/// Same with real lambda = kappa, 0 < q < 1.
PeriodizedVector f_q_vector(int n, int N, const RealQParams& params,
                            const TruncationPolicy& policy = {});

/// Periodization of exp(-t^2/2) H_n(sin(i*lambda t)|q^{-1}), the partner
/// vector under the finite Fourier transform.
PeriodizedVector g_q_vector(int n, int N, const RootOfUnityParams& params,
                            const TruncationPolicy& policy = {});
PeriodizedVector g_q_vector(int n, int N, const RealQParams& params,
                            const TruncationPolicy& policy = {});

/// || dft(f_n) - q^{n^2/4} g_n ||_inf, the finite-transform relation the two
/// families satisfy.
double verify_K33(int n, int N, const RootOfUnityParams& params,
                  const TruncationPolicy& policy = {});
double verify_K33(int n, int N, const RealQParams& params, const TruncationPolicy& policy = {});

/// Residuals of dft(f_n) = q^{n^2/4} conj(f_n) and
/// dft(conj(f_n)) = (-1)^n q^{-n^2/4} f_n (root-of-unity branch only).
std::pair<double, double> verify_K40_K41(int n, int N, const RootOfUnityParams& params,
                                         const TruncationPolicy& policy = {});

/// Growth certificates for the built-in families (exposed so external
/// Fourier-pair checks can periodize the transformed side consistently).
GrowthCertificate mehta_certificate(int n);
GrowthCertificate q_family_certificate(int n, Complex lambda_eff, Complex q_eff);

}  // namespace qdft
