#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qdft/detail/dd.hpp"
#include "qdft/periodize.hpp"
#include "qdft/qseries.hpp"
#include "qdft/scalar.hpp"

namespace qdft {

/// The unitary N x N transform with entries exp(2*pi*i*r*s/N) / sqrt(N).
struct DftOperator {
  int N = 0;
  std::vector<Complex> matrix;  // row-major

  Complex at(int r, int s) const { return matrix[static_cast<size_t>(r) * N + s]; }
};

DftOperator dft_matrix(int N);

/// Dense application, (1/sqrt(N)) sum_s exp(2*pi*i*r*s/N) v(s).
std::vector<Complex> apply_dft(const DftOperator& op, std::span<const Complex> v);
PeriodizedVector apply_dft(const DftOperator& op, const PeriodizedVector& v);

/// Discretization of the integral transform on [-L, L]. Construction via
/// make() checks that the Gaussian-dominated envelope of the intended
/// integrand family has dropped below 1e-16 at the interval ends.
struct QuadratureSpec {
  enum class Rule { Trapezoid, GaussLegendre };

  double half_width = 8.0;
  int points = 4096;
  Rule rule = Rule::Trapezoid;

  static QuadratureSpec make(int n, Complex lambda, Rule rule = Rule::Trapezoid,
                             int points = 4096, double half_width_override = 0.0);
};

namespace detail {
using DdIntegrand = std::function<Ddc(const Dd&)>;
}

/// (1/sqrt(2*pi)) * integral of exp(i*x*y) f(x) over [-L, L]. The accumulation
/// runs in double-double; f is sampled in double.
Complex integral_ft(const std::function<Complex(double)>& f, Complex y, const QuadratureSpec& spec);

/// Same transform for an integrand evaluated natively in double-double. This
/// is the path the identity checks use: their integrands reach ~1e13 while
/// the transforms stay O(1), which plain doubles cannot survive.
Complex integral_ft(const detail::DdIntegrand& f, Complex y, const QuadratureSpec& spec);

/// max deviation of the n-th Hermite function from i^n times itself under the
/// transform, over the given y samples.
double verify_hermite_ft(int n, std::span<const double> ys);

/// Transform of exp(-x^2/2) H_n(sin(lambda x)|q) against the explicit finite
/// sum it equals; lambda, q complex, q != 0, 1.
double verify_lemma_K6(int n, Complex lambda, Complex q, std::span<const double> ys);

/// Specialization q = exp(-2*lambda^2): the transform maps the family to
/// q^{n^2/4} exp(-y^2/2) H_n(sin(i*lambda*y)|q^{-1}).
double verify_K31(int n, Complex lambda, Complex q, std::span<const double> ys);

/// Real branch, right side through the q^{-1}-Hermite polynomials h_n(sinh).
double verify_prop_3_1(int n, const RealQParams& params, std::span<const double> ys);

/// Root-of-unity branch, right side through conj(alpha).
double verify_prop_3_5(int n, const RootOfUnityParams& params, std::span<const double> ys);

/// Inverse-kernel form of the root-of-unity branch; equivalent to taking
/// complex conjugates on both sides.
double verify_inversion_3_5(int n, const RootOfUnityParams& params, std::span<const double> ys);

/// Degree n = m*M collapses the family to a power of a cosine; checks the
/// transform of cos^m(M*pi/2 - sqrt(pi*j*M) e^{-i*pi/4} x) e^{-x^2/2}.
double verify_cos_power(int m, int j, int M, std::span<const double> ys);

}  // namespace qdft
