#include "qdft/eigenpairs.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qdft {

namespace {
constexpr double kPi = std::numbers::pi;
}

double dft_residual(const PeriodizedVector& v, Complex lambda) {
  DftOperator op = dft_matrix(v.N);
  auto transformed = apply_dft(op, std::span<const Complex>(v.values));
  double res = 0.0;
  for (size_t r = 0; r < v.values.size(); ++r) {
    res = std::max(res, std::abs(transformed[r] - lambda * v.values[r]));
  }
  return res / std::max(v.max_abs(), kTiny);
}

PeriodizedVector combine(const PeriodizedVector& f, const PeriodizedVector& g, Complex a,
                         Complex b, int sign) {
  if (f.N != g.N)
    throw std::invalid_argument("combine: length mismatch, " + std::to_string(f.N) + " vs " +
                                std::to_string(g.N));
  if (sign != 1 && sign != -1) throw std::invalid_argument("combine: sign must be +1 or -1");
  PeriodizedVector out;
  out.N = f.N;
  out.values.resize(f.values.size());
  for (size_t r = 0; r < f.values.size(); ++r) {
    out.values[r] = b * f.values[r] + static_cast<double>(sign) * a * g.values[r];
  }
  out.label.family = "combine(" + f.label.family + "," + g.label.family + ")";
  out.label.n = f.label.n;
  out.truncation_used = std::max(f.truncation_used, g.truncation_used);
  out.tail_bound = f.tail_bound + g.tail_bound;
  return out;
}

std::pair<EigenCandidate, EigenCandidate> q_eigenvectors(int n, int N,
                                                         const RootOfUnityParams& params,
                                                         const TruncationPolicy& policy,
                                                         PhaseConvention phase,
                                                         double residual_threshold) {
  PeriodizedVector f = f_q_vector(n, N, params, policy);

  // c(n) q^{-n^2/8} on the branch log q = 2*pi*i*j/M.
  double carg = (phase == PhaseConvention::DerivedPiOver4) ? kPi * n / 4.0 : kPi * n / 8.0;
  double qarg = -kPi * params.j * static_cast<double>(n) * n / (4.0 * params.M);
  Complex w = std::polar(1.0, carg + qarg);

  PeriodizedVector F, G;
  F.N = G.N = N;
  F.values.resize(static_cast<size_t>(N));
  G.values.resize(static_cast<size_t>(N));
  for (size_t r = 0; r < f.values.size(); ++r) {
    Complex z = w * f.values[r];
    F.values[r] = Complex{z.real(), 0.0};
    G.values[r] = Complex{z.imag(), 0.0};
  }
  std::string tag = "n=" + std::to_string(n) + ",j=" + std::to_string(params.j) +
                    ",M=" + std::to_string(params.M) +
                    (phase == PhaseConvention::DerivedPiOver4 ? ",phase=pi/4" : ",phase=pi/8");
  F.label = VectorLabel{"F_q", n, f.label.parity, tag};
  G.label = VectorLabel{"G_q", n, f.label.parity, tag};
  F.truncation_used = G.truncation_used = f.truncation_used;
  F.tail_bound = G.tail_bound = f.tail_bound;

  EigenCandidate cF{std::move(F), i_power(n), 0.0, "qPlus[" + tag + "]"};
  EigenCandidate cG{std::move(G), -i_power(n), 0.0, "qMinus[" + tag + "]"};
  cF.residual = dft_residual(cF.vector, cF.eigenvalue);
  cG.residual = dft_residual(cG.vector, cG.eigenvalue);

  if (phase == PhaseConvention::DerivedPiOver4 &&
      std::max(cF.residual, cG.residual) > residual_threshold) {
    std::ostringstream os;
    os << "q_eigenvectors: residuals (" << cF.residual << ", " << cG.residual
       << ") exceed threshold " << residual_threshold << " for " << tag;
    throw verification_error(os.str());
  }
  return {std::move(cF), std::move(cG)};
}

std::vector<int> mehta_indices(int N) {
  if (N < 1) throw std::invalid_argument("mehta_indices: N must be positive");
  std::vector<int> idx;
  if (N % 2 == 1) {
    for (int n = 0; n < N; ++n) idx.push_back(n);
  } else {
    for (int n = 0; n <= N - 2; ++n) idx.push_back(n);
    idx.push_back(N);
  }
  return idx;
}

std::vector<EigenCandidate> mehta_eigencheck(int N, const TruncationPolicy& policy) {
  std::vector<EigenCandidate> out;
  for (int n : mehta_indices(N)) {
    EigenCandidate cand;
    cand.vector = mehta_vector(n, N, policy);
    cand.eigenvalue = i_power(n);
    cand.residual = dft_residual(cand.vector, cand.eigenvalue);
    cand.provenance = "Mehta[n=" + std::to_string(n) + ",N=" + std::to_string(N) + "]";
    out.push_back(std::move(cand));
  }
  return out;
}

IndependenceReport independence_report(const std::vector<EigenCandidate>& candidates) {
  if (candidates.empty())
    throw std::invalid_argument("independence_report: empty candidate list");
  const int N = candidates.front().vector.N;
  for (const auto& c : candidates)
    if (c.vector.N != N)
      throw std::invalid_argument("independence_report: candidates of mixed length");

  Eigen::MatrixXcd A(N, static_cast<int>(candidates.size()));
  for (int c = 0; c < static_cast<int>(candidates.size()); ++c) {
    Eigen::VectorXcd col(N);
    for (int r = 0; r < N; ++r) col(r) = candidates[static_cast<size_t>(c)].vector.values[static_cast<size_t>(r)];
    double norm = col.norm();
    A.col(c) = norm > 0.0 ? (col / norm).eval() : col;
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  const auto& sv = svd.singularValues();
  IndependenceReport report;
  report.smallest_singular_value = sv(sv.size() - 1);
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-10 * sv(0)) ++report.rank;

  Eigen::MatrixXcd gram = A.adjoint() * A;
  for (int i = 0; i < gram.rows(); ++i)
    for (int k = 0; k < gram.cols(); ++k)
      if (i != k) report.max_offdiag_gram = std::max(report.max_offdiag_gram, std::abs(gram(i, k)));
  return report;
}

}  // namespace qdft
