#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdft/eigenpairs.hpp"
#include "qdft/fourier.hpp"
#include "qdft/periodize.hpp"
#include "qdft/qhermite.hpp"

namespace py = pybind11;
using namespace qdft;

namespace {

py::array_t<Complex> to_array(const std::vector<Complex>& v) {
  py::array_t<Complex> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::dict vector_dict(const PeriodizedVector& v) {
  py::dict d;
  d["values"] = to_array(v.values);
  d["label"] = v.label.str();
  d["truncation_used"] = v.truncation_used;
  d["tail_bound"] = v.tail_bound;
  d["parity_deviation"] = v.parity_deviation();
  return d;
}

TruncationPolicy policy_for(double eps) {
  TruncationPolicy p;
  p.eps = eps;
  return p;
}

py::dict candidate_dict(const EigenCandidate& c) {
  py::dict d;
  d["values"] = to_array(c.vector.values);
  d["eigenvalue"] = c.eigenvalue;
  d["residual"] = c.residual;
  d["provenance"] = c.provenance;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qdft, m) {
  m.doc() = "eigenvectors of the finite Fourier transform from periodized "
            "Gaussian-weighted continuous q-Hermite polynomials";

  // q-series layer
  m.def("q_root", &q_root, py::arg("j"), py::arg("M"));
  m.def("alpha_param", &alpha_param, py::arg("j"), py::arg("M"));
  m.def("q_pochhammer", &q_pochhammer, py::arg("a"), py::arg("q"), py::arg("n"));
  m.def("q_binomial", &q_binomial, py::arg("n"), py::arg("k"), py::arg("q"));

  // polynomial evaluations
  m.def("qhermite_recurrence", &qhermite_recurrence, py::arg("n"), py::arg("x"), py::arg("q"));
  m.def("qhermite_fourier_sum", &qhermite_fourier_sum, py::arg("n"), py::arg("theta"),
        py::arg("q"));
  m.def("qhermite_sin", &qhermite_sin, py::arg("n"), py::arg("theta"), py::arg("q"));
  m.def("qinv_hermite", &qinv_hermite, py::arg("n"), py::arg("x"), py::arg("q"));
  m.def("chebyshev_T", &chebyshev_T, py::arg("M"), py::arg("x"));
  m.def("classical_hermite", &classical_hermite, py::arg("n"), py::arg("x"));
  m.def("chebyshev_zeros", &chebyshev_zeros, py::arg("M"));
  m.def("qtolimit_deviation", &qtolimit_deviation, py::arg("n"), py::arg("q"), py::arg("x"));
  m.def("qtolimit_deviation_root_of_unity", &qtolimit_deviation_root_of_unity, py::arg("n"),
        py::arg("j"), py::arg("M"), py::arg("x"));

  m.def(
      "verify_chebyshev_identity",
      [](int j, int M, int points) {
        auto grid = identity_grid(points);
        return verify_chebyshev_identity(RootOfUnityParams::make(j, M), grid);
      },
      py::arg("j"), py::arg("M"), py::arg("points") = 101);
  m.def(
      "verify_factorization",
      [](int j, int M, int m_, int n, int points) {
        auto grid = identity_grid(points);
        return verify_factorization(RootOfUnityParams::make(j, M), m_, n, grid);
      },
      py::arg("j"), py::arg("M"), py::arg("m"), py::arg("n"), py::arg("points") = 101);
  m.def(
      "solve_discrete_weights",
      [](int j, int M) {
        auto res = solve_discrete_weights(RootOfUnityParams::make(j, M));
        py::dict d;
        d["weights"] = to_array(res.weights);
        d["max_residual"] = res.max_residual;
        d["condition"] = res.condition;
        d["ok"] = res.ok;
        d["diagnostic"] = res.diagnostic;
        return d;
      },
      py::arg("j"), py::arg("M"));

  // transform layer
  m.def(
      "dft_matrix",
      [](int N) {
        auto op = dft_matrix(N);
        py::array_t<Complex> out({N, N});
        std::copy(op.matrix.begin(), op.matrix.end(), out.mutable_data());
        return out;
      },
      py::arg("N"));
  m.def(
      "apply_dft",
      [](py::array_t<Complex, py::array::c_style | py::array::forcecast> v) {
        std::vector<Complex> in(v.data(), v.data() + v.size());
        auto op = dft_matrix(static_cast<int>(in.size()));
        return to_array(apply_dft(op, in));
      },
      py::arg("v"));

  m.def(
      "verify_hermite_ft",
      [](int n, const std::vector<double>& ys) { return verify_hermite_ft(n, ys); },
      py::arg("n"), py::arg("ys"));
  m.def(
      "verify_lemma_k6",
      [](int n, Complex lam, Complex q, const std::vector<double>& ys) {
        return verify_lemma_K6(n, lam, q, ys);
      },
      py::arg("n"), py::arg("lam"), py::arg("q"), py::arg("ys"));
  m.def(
      "verify_k31",
      [](int n, Complex lam, Complex q, const std::vector<double>& ys) {
        return verify_K31(n, lam, q, ys);
      },
      py::arg("n"), py::arg("lam"), py::arg("q"), py::arg("ys"));
  m.def(
      "verify_prop_3_1",
      [](int n, double q, const std::vector<double>& ys) {
        return verify_prop_3_1(n, RealQParams::from_q(q), ys);
      },
      py::arg("n"), py::arg("q"), py::arg("ys"));
  m.def(
      "verify_prop_3_5",
      [](int n, int j, int M, const std::vector<double>& ys) {
        return verify_prop_3_5(n, RootOfUnityParams::make(j, M), ys);
      },
      py::arg("n"), py::arg("j"), py::arg("M"), py::arg("ys"));
  m.def(
      "verify_inversion_3_5",
      [](int n, int j, int M, const std::vector<double>& ys) {
        return verify_inversion_3_5(n, RootOfUnityParams::make(j, M), ys);
      },
      py::arg("n"), py::arg("j"), py::arg("M"), py::arg("ys"));
  m.def(
      "verify_cos_power",
      [](int m_, int j, int M, const std::vector<double>& ys) {
        return verify_cos_power(m_, j, M, ys);
      },
      py::arg("m"), py::arg("j"), py::arg("M"), py::arg("ys"));

  // periodization layer
  m.def(
      "mehta_vector",
      [](int n, int N, double eps) { return vector_dict(mehta_vector(n, N, policy_for(eps))); },
      py::arg("n"), py::arg("N"), py::arg("eps") = 1e-14);
  m.def(
      "f_q_vector",
      [](int n, int N, int j, int M, double eps) {
        return vector_dict(f_q_vector(n, N, RootOfUnityParams::make(j, M), policy_for(eps)));
      },
      py::arg("n"), py::arg("N"), py::arg("j"), py::arg("M"), py::arg("eps") = 1e-14);
  m.def(
      "f_q_vector_real",
      [](int n, int N, double q, double eps) {
        return vector_dict(f_q_vector(n, N, RealQParams::from_q(q), policy_for(eps)));
      },
      py::arg("n"), py::arg("N"), py::arg("q"), py::arg("eps") = 1e-14);
  m.def(
      "g_q_vector",
      [](int n, int N, int j, int M, double eps) {
        return vector_dict(g_q_vector(n, N, RootOfUnityParams::make(j, M), policy_for(eps)));
      },
      py::arg("n"), py::arg("N"), py::arg("j"), py::arg("M"), py::arg("eps") = 1e-14);
  m.def(
      "g_q_vector_real",
      [](int n, int N, double q, double eps) {
        return vector_dict(g_q_vector(n, N, RealQParams::from_q(q), policy_for(eps)));
      },
      py::arg("n"), py::arg("N"), py::arg("q"), py::arg("eps") = 1e-14);
  m.def(
      "verify_k33",
      [](int n, int N, int j, int M, double eps) {
        return verify_K33(n, N, RootOfUnityParams::make(j, M), policy_for(eps));
      },
      py::arg("n"), py::arg("N"), py::arg("j"), py::arg("M"), py::arg("eps") = 1e-14);
  m.def(
      "verify_k33_real",
      [](int n, int N, double q, double eps) {
        return verify_K33(n, N, RealQParams::from_q(q), policy_for(eps));
      },
      py::arg("n"), py::arg("N"), py::arg("q"), py::arg("eps") = 1e-14);
  m.def(
      "verify_k40_k41",
      [](int n, int N, int j, int M, double eps) {
        return verify_K40_K41(n, N, RootOfUnityParams::make(j, M), policy_for(eps));
      },
      py::arg("n"), py::arg("N"), py::arg("j"), py::arg("M"), py::arg("eps") = 1e-14);

  // eigenvector layer
  m.def(
      "q_eigenvectors",
      [](int n, int N, int j, int M, const std::string& phase, double eps) {
        PhaseConvention conv = phase == "paper" ? PhaseConvention::PaperPiOver8
                                                : PhaseConvention::DerivedPiOver4;
        double threshold = phase == "paper" ? std::numeric_limits<double>::infinity() : 1e-7;
        auto [F, G] =
            q_eigenvectors(n, N, RootOfUnityParams::make(j, M), policy_for(eps), conv, threshold);
        py::dict d;
        d["F"] = candidate_dict(F);
        d["G"] = candidate_dict(G);
        return d;
      },
      py::arg("n"), py::arg("N"), py::arg("j"), py::arg("M"), py::arg("phase") = "derived",
      py::arg("eps") = 1e-14);
  m.def(
      "mehta_eigencheck",
      [](int N, double eps) {
        py::list out;
        for (const auto& cand : mehta_eigencheck(N, policy_for(eps)))
          out.append(candidate_dict(cand));
        return out;
      },
      py::arg("N"), py::arg("eps") = 1e-14);
  m.def("mehta_indices", &mehta_indices, py::arg("N"));
  m.def(
      "mehta_independence",
      [](int N, double eps) {
        auto rep = independence_report(mehta_eigencheck(N, policy_for(eps)));
        py::dict d;
        d["rank"] = rep.rank;
        d["smallest_singular_value"] = rep.smallest_singular_value;
        d["max_offdiag_gram"] = rep.max_offdiag_gram;
        return d;
      },
      py::arg("N"), py::arg("eps") = 1e-14);

  py::register_exception<truncation_error>(m, "TruncationError");
  py::register_exception<certificate_error>(m, "CertificateError");
  py::register_exception<verification_error>(m, "VerificationError");
}
