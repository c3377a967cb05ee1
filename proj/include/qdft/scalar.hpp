#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qdft {

using Complex = std::complex<double>;

/// Guard value used when normalizing by a possibly-zero magnitude.
inline constexpr double kTiny = 1e-300;

/// i^n for any integer n, computed exactly from n mod 4.
inline Complex i_power(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// Adaptive lattice summation could not certify the requested tolerance.
class truncation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampled term exceeded the growth certificate it was summed under.
class certificate_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructed object failed its numerical verification gate.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qdft
