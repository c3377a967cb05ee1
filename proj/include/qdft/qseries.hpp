#pragma once

#include <vector>

#include "qdft/scalar.hpp"

namespace qdft {

/// exp(2*pi*i*j/M) for 1 <= j <= M-1.
Complex q_root(int j, int M);

/// sqrt(pi*j/M) * exp(-i*pi/4). Satisfies exp(-2*alpha^2) = q_root(j, M)
/// and i*alpha = conj(alpha).
Complex alpha_param(int j, int M);

/// q-shifted factorial (a; q)_n = prod_{k=0}^{n-1} (1 - a q^k), empty product 1.
Complex q_pochhammer(Complex a, Complex q, int n);

/// Gaussian binomial coefficient, evaluated as a polynomial in q through the
/// Pascal-type recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]. The quotient of
/// q-shifted factorials is 0/0 at roots of unity once n reaches the root
/// order, so it is never used here. Returns 0 for k < 0 or k > n.
Complex q_binomial(int n, int k, Complex q);

/// Row n of the Gaussian binomial triangle, entries k = 0..n.
std::vector<Complex> q_binomial_row(int n, Complex q);

/// Deformation parameter on the unit circle together with the scaling that
/// links it to the Gaussian weight.
struct RootOfUnityParams {
  int j = 0;
  int M = 0;
  Complex q;
  Complex alpha;
  bool coprime = false;

  static RootOfUnityParams make(int j, int M);
};

/// Real deformation parameter 0 < q < 1 with q = exp(-2*kappa^2).
struct RealQParams {
  double kappa = 0.0;
  double q = 0.0;

  static RealQParams from_q(double q);
  static RealQParams from_kappa(double kappa);
};

}  // namespace qdft
