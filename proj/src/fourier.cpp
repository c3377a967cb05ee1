#include "qdft/fourier.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qdft/qhermite.hpp"

namespace qdft {

namespace {

using detail::Dd;
using detail::Ddc;
using detail::dd_cexp;
using detail::dd_ccos;
using detail::dd_exp;
using detail::dd_sqrt;

constexpr double kPi = std::numbers::pi;

Complex ipow_complex(Complex base, long e) {
  if (e < 0) return Complex{1.0, 0.0} / ipow_complex(base, -e);
  Complex result{1.0, 0.0};
  Complex p = base;
  while (e > 0) {
    if (e & 1) result *= p;
    p *= p;
    e >>= 1;
  }
  return result;
}

Ddc ddc_ipow(const Ddc& base, int e) {
  Ddc result{Dd{1.0}, Dd{0.0}};
  for (int i = 0; i < e; ++i) result = result * base;
  return result;
}

const Dd& sqrt_two_pi() {
  static const Dd v = dd_sqrt(detail::kDdTwoPi);
  return v;
}

// 16-point Gauss-Legendre reference nodes/weights on [-1, 1], refined to
// double-double by Newton iteration on the Legendre recurrence.
struct GaussRef {
  std::array<Dd, 16> node;
  std::array<Dd, 16> weight;

  GaussRef() {
    constexpr int n = 16;
    for (int i = 0; i < n; ++i) {
      Dd x{std::cos(kPi * (i + 0.75) / (n + 0.5))};
      Dd dp{};
      for (int it = 0; it < 4; ++it) {
        Dd p0{1.0}, p1 = x;
        for (int k = 1; k < n; ++k) {
          Dd p2 = (Dd{static_cast<double>(2 * k + 1)} * x * p1 -
                   Dd{static_cast<double>(k)} * p0) /
                  Dd{static_cast<double>(k + 1)};
          p0 = p1;
          p1 = p2;
        }
        dp = Dd{static_cast<double>(n)} * (x * p1 - p0) / (x * x - Dd{1.0});
        x = x - p1 / dp;
      }
      node[static_cast<size_t>(i)] = x;
      weight[static_cast<size_t>(i)] = Dd{2.0} / ((Dd{1.0} - x * x) * dp * dp);
    }
  }
};

const GaussRef& gauss_ref() {
  static const GaussRef g;
  return g;
}

Ddc weighted_eval(const detail::DdIntegrand& f, const Dd& x, const Complex& y) {
  Ddc v = f(x);
  if (y != Complex{0.0, 0.0}) {
    // e^{ixy} with complex y: exponent (-x*Im y, x*Re y)
    v = v * dd_cexp(Ddc{x * Dd{-y.imag()}, x * Dd{y.real()}});
  }
  return v;
}

Complex quad_core(const detail::DdIntegrand& f, Complex y, const QuadratureSpec& spec) {
  Ddc acc{Dd{0.0}, Dd{0.0}};
  if (spec.rule == QuadratureSpec::Rule::Trapezoid) {
    Dd h = Dd{2.0 * spec.half_width} / Dd{static_cast<double>(spec.points - 1)};
    for (int i = 0; i < spec.points; ++i) {
      Dd x = Dd{-spec.half_width} + h * Dd{static_cast<double>(i)};
      Ddc v = weighted_eval(f, x, y);
      if (i == 0 || i == spec.points - 1) v = Dd{0.5} * v;
      acc += v;
    }
    acc = h * acc;
  } else {
    const auto& ref = gauss_ref();
    int panels = std::max(1, spec.points / 16);
    Dd width = Dd{2.0 * spec.half_width} / Dd{static_cast<double>(panels)};
    Dd half = width * Dd{0.5};
    for (int p = 0; p < panels; ++p) {
      Dd a = Dd{-spec.half_width} + width * Dd{static_cast<double>(p)};
      Dd center = a + half;
      for (int i = 0; i < 16; ++i) {
        Dd x = center + half * ref.node[static_cast<size_t>(i)];
        acc += (half * ref.weight[static_cast<size_t>(i)]) * weighted_eval(f, x, y);
      }
    }
  }
  Ddc result{acc.re / sqrt_two_pi(), acc.im / sqrt_two_pi()};
  return result.value();
}

// e^{-x^2/2} H_n(sin(lambda x)|q) expanded through the sin-argument Fourier
// sum. With E = e^{i lambda x}, the k-th term is binom_k (-1)^k e^{-x^2/2}
// E^{2k-n}; the powers are built by repeated multiplication so a single
// complex exponential serves all n+1 terms.
struct FusedSinIntegrand {
  int n;
  Ddc lambda;
  std::vector<Ddc> binoms;
  Ddc prefactor;

  FusedSinIntegrand(int n_, Complex lambda_, Complex q_) : n(n_), lambda(lambda_) {
    auto row = q_binomial_row_dd(n_, Ddc{q_});
    binoms = std::move(row);
    prefactor = Ddc{i_power(n_)};
  }

  static std::vector<Ddc> q_binomial_row_dd(int n, Ddc q) {
    std::vector<Ddc> row(static_cast<size_t>(n) + 1, Ddc{Dd{0.0}, Dd{0.0}});
    row[0] = Ddc{Dd{1.0}, Dd{0.0}};
    std::vector<Ddc> qpow(static_cast<size_t>(n) + 1);
    qpow[0] = Ddc{Dd{1.0}, Dd{0.0}};
    for (int k = 1; k <= n; ++k) qpow[static_cast<size_t>(k)] = qpow[static_cast<size_t>(k - 1)] * q;
    for (int m = 1; m <= n; ++m) {
      for (int k = m; k >= 1; --k) {
        Ddc upper = (k <= m - 1) ? row[static_cast<size_t>(k)] : Ddc{Dd{0.0}, Dd{0.0}};
        row[static_cast<size_t>(k)] = row[static_cast<size_t>(k - 1)] + qpow[static_cast<size_t>(k)] * upper;
      }
    }
    return row;
  }

  Ddc operator()(const Dd& x) const {
    Dd eb = dd_exp(x * x * Dd{-0.5});
    if (eb.hi == 0.0) return {Dd{0.0}, Dd{0.0}};
    Ddc w{lambda.re * x, lambda.im * x};          // lambda x
    Ddc ep = dd_cexp(Ddc{-w.im, w.re});           // e^{+i lambda x}
    Ddc em = dd_cexp(Ddc{w.im, -w.re});           // e^{-i lambda x}
    Ddc e2 = ep * ep;
    Ddc p = ddc_ipow(em, n);                      // E^{-n}
    Ddc acc{Dd{0.0}, Dd{0.0}};
    double sign = 1.0;
    for (int k = 0; k <= n; ++k) {
      acc += Dd{sign} * (binoms[static_cast<size_t>(k)] * p);
      p = p * e2;
      sign = -sign;
    }
    return prefactor * (eb * acc);
  }
};

struct HermiteIntegrand {
  int n;

  Ddc operator()(const Dd& x) const {
    Dd eb = dd_exp(x * x * Dd{-0.5});
    if (eb.hi == 0.0) return {Dd{0.0}, Dd{0.0}};
    Dd hm1{1.0}, h = Dd{2.0} * x;
    if (n == 0) h = Dd{1.0};
    for (int m = 1; m < n; ++m) {
      Dd next = Dd{2.0} * x * h - Dd{2.0 * m} * hm1;
      hm1 = h;
      h = next;
    }
    return {eb * h, Dd{0.0}};
  }
};

}  // namespace

DftOperator dft_matrix(int N) {
  if (N < 1) throw std::invalid_argument("dft_matrix: N must be positive");
  DftOperator op;
  op.N = N;
  op.matrix.resize(static_cast<size_t>(N) * N);
  double norm = 1.0 / std::sqrt(static_cast<double>(N));
  for (int r = 0; r < N; ++r) {
    for (int s = 0; s < N; ++s) {
      // r*s reduced mod N before forming the angle keeps the entries exact
      // trigonometric values of small rationals of 2*pi.
      long m = (static_cast<long>(r) * s) % N;
      double angle = 2.0 * kPi * static_cast<double>(m) / N;
      op.matrix[static_cast<size_t>(r) * N + s] = norm * Complex{std::cos(angle), std::sin(angle)};
    }
  }
  return op;
}

std::vector<Complex> apply_dft(const DftOperator& op, std::span<const Complex> v) {
  if (static_cast<int>(v.size()) != op.N)
    throw std::invalid_argument("apply_dft: length mismatch, vector has " +
                                std::to_string(v.size()) + " entries, operator expects " +
                                std::to_string(op.N));
  std::vector<Complex> out(static_cast<size_t>(op.N));
  for (int r = 0; r < op.N; ++r) {
    Complex acc{0.0, 0.0};
    for (int s = 0; s < op.N; ++s) acc += op.at(r, s) * v[static_cast<size_t>(s)];
    out[static_cast<size_t>(r)] = acc;
  }
  return out;
}

PeriodizedVector apply_dft(const DftOperator& op, const PeriodizedVector& v) {
  PeriodizedVector out;
  out.N = v.N;
  out.values = apply_dft(op, std::span<const Complex>(v.values));
  out.label = v.label;
  out.label.family = "dft(" + v.label.family + ")";
  out.truncation_used = v.truncation_used;
  out.tail_bound = v.tail_bound;
  return out;
}

QuadratureSpec QuadratureSpec::make(int n, Complex lambda, Rule rule, int points,
                                    double half_width_override) {
  if (n < 0) throw std::invalid_argument("QuadratureSpec: n must be nonnegative");
  if (points < 2) throw std::invalid_argument("QuadratureSpec: need at least 2 points");
  double growth = n * std::fabs(lambda.imag());
  double L = half_width_override > 0.0
                 ? half_width_override
                 : std::max(8.0, 3.0 * (n + 1) * std::max(1.0, std::fabs(lambda.imag())));
  if (half_width_override <= 0.0) {
    // Enlarge the window until the envelope clears 1e-16 at the ends; the
    // default formula alone leaves ~1e-14 at n = 0.
    double needed = growth + std::sqrt(growth * growth + 2.0 * (n * std::numbers::ln2 - std::log(1e-16)));
    L = std::max(L, needed + 0.5);
  }
  double log_envelope = -L * L / 2.0 + growth * L + n * std::numbers::ln2;
  if (log_envelope > std::log(1e-16)) {
    std::ostringstream os;
    os << "QuadratureSpec: integrand envelope exp(" << log_envelope
       << ") at half-width " << L << " is not below 1e-16 (n=" << n
       << ", |Im lambda|=" << std::fabs(lambda.imag()) << ")";
    throw std::invalid_argument(os.str());
  }
  QuadratureSpec spec;
  spec.half_width = L;
  spec.points = points;
  spec.rule = rule;
  return spec;
}

Complex integral_ft(const std::function<Complex(double)>& f, Complex y,
                    const QuadratureSpec& spec) {
  detail::DdIntegrand g = [&f](const Dd& x) { return Ddc{f(x.value())}; };
  return quad_core(g, y, spec);
}

Complex integral_ft(const detail::DdIntegrand& f, Complex y, const QuadratureSpec& spec) {
  return quad_core(f, y, spec);
}

double verify_hermite_ft(int n, std::span<const double> ys) {
  HermiteIntegrand f{n};
  auto spec = QuadratureSpec::make(n, Complex{0.0, 0.0});
  double dev = 0.0;
  for (double y : ys) {
    Complex lhs = quad_core([&f](const Dd& x) { return f(x); }, Complex{y, 0.0}, spec);
    Complex rhs = i_power(n) * std::exp(-y * y / 2.0) * classical_hermite(n, Complex{y, 0.0});
    dev = std::max(dev, std::abs(lhs - rhs));
  }
  return dev;
}

double verify_lemma_K6(int n, Complex lambda, Complex q, std::span<const double> ys) {
  if (q == Complex{0.0, 0.0} || q == Complex{1.0, 0.0})
    throw std::invalid_argument("verify_lemma_K6: q must differ from 0 and 1");
  FusedSinIntegrand f(n, lambda, q);
  auto spec = QuadratureSpec::make(n, lambda);

  Complex qinv = Complex{1.0, 0.0} / q;
  auto binoms_inv = q_binomial_row(n, qinv);
  Complex base = qinv * std::exp(-2.0 * lambda * lambda);
  Complex outer = i_power(n) * std::exp(-0.5 * static_cast<double>(n) * n * lambda * lambda);

  double dev = 0.0;
  for (double y : ys) {
    Complex lhs = quad_core([&f](const Dd& x) { return f(x); }, Complex{y, 0.0}, spec);
    Complex sum{0.0, 0.0};
    double sign = 1.0;
    for (int k = 0; k <= n; ++k) {
      sum += sign * binoms_inv[static_cast<size_t>(k)] *
             ipow_complex(base, static_cast<long>(k) * (k - n)) *
             std::exp(-static_cast<double>(2 * k - n) * lambda * y);
      sign = -sign;
    }
    Complex rhs = outer * std::exp(-y * y / 2.0) * sum;
    dev = std::max(dev, std::abs(lhs - rhs));
  }
  return dev;
}

namespace {

double k31_core(int n, Complex lambda, Complex q, std::span<const double> ys,
                const std::function<Complex(double)>& rhs_poly) {
  FusedSinIntegrand f(n, lambda, q);
  auto spec = QuadratureSpec::make(n, lambda);
  Complex prefactor = std::exp(-0.5 * static_cast<double>(n) * n * lambda * lambda);
  double dev = 0.0;
  for (double y : ys) {
    Complex lhs = quad_core([&f](const Dd& x) { return f(x); }, Complex{y, 0.0}, spec);
    Complex rhs = prefactor * std::exp(-y * y / 2.0) * rhs_poly(y);
    dev = std::max(dev, std::abs(lhs - rhs));
  }
  return dev;
}

}  // namespace

double verify_K31(int n, Complex lambda, Complex q, std::span<const double> ys) {
  if (std::abs(std::exp(-2.0 * lambda * lambda) - q) > 1e-12)
    throw std::invalid_argument("verify_K31: q must equal exp(-2*lambda^2)");
  Complex qinv = (std::fabs(std::abs(q) - 1.0) < 1e-12) ? std::conj(q) : Complex{1.0, 0.0} / q;
  return k31_core(n, lambda, q, ys,
                  [&](double y) { return qhermite_sin(n, Complex{0.0, 1.0} * lambda * y, qinv); });
}

double verify_prop_3_1(int n, const RealQParams& params, std::span<const double> ys) {
  Complex lambda{params.kappa, 0.0};
  Complex q{params.q, 0.0};
  // Right side through the q^{-1}-Hermite polynomials at sinh(kappa y).
  return k31_core(n, lambda, q, ys, [&](double y) {
    return i_power(n) * qinv_hermite(n, Complex{std::sinh(params.kappa * y), 0.0}, q);
  });
}

double verify_prop_3_5(int n, const RootOfUnityParams& params, std::span<const double> ys) {
  return k31_core(n, params.alpha, params.q, ys, [&](double y) {
    return qhermite_sin(n, std::conj(params.alpha) * y, std::conj(params.q));
  });
}

double verify_inversion_3_5(int n, const RootOfUnityParams& params, std::span<const double> ys) {
  // Conjugated relation: the e^{-ixy} transform of the partner family returns
  // q^{-n^2/4} times the original one.
  FusedSinIntegrand g(n, std::conj(params.alpha), std::conj(params.q));
  auto spec = QuadratureSpec::make(n, std::conj(params.alpha));
  double angle = kPi * params.j * static_cast<double>(n) * n / (2.0 * params.M);
  Complex prefactor{std::cos(angle), -std::sin(angle)};  // q^{-n^2/4}
  double dev = 0.0;
  for (double y : ys) {
    Complex lhs = quad_core([&g](const Dd& x) { return g(x); }, Complex{-y, 0.0}, spec);
    Complex rhs = prefactor * std::exp(-y * y / 2.0) * qhermite_sin(n, params.alpha * y, params.q);
    dev = std::max(dev, std::abs(lhs - rhs));
  }
  return dev;
}

double verify_cos_power(int m, int j, int M, std::span<const double> ys) {
  if (m < 0) throw std::invalid_argument("verify_cos_power: m must be nonnegative");
  if (std::gcd(j, M) != 1) throw std::invalid_argument("verify_cos_power: j, M must be coprime");
  Complex alpha = alpha_param(j, M);
  auto spec = QuadratureSpec::make(m * M, alpha);

  // beta = sqrt(pi j M) e^{-i pi/4} = d - i d
  Dd d = dd_sqrt(detail::kDdPi * Dd{static_cast<double>(j) * M} * Dd{0.5});
  Dd mhalfpi = detail::kDdHalfPi * Dd{static_cast<double>(M)};
  auto f = [&](const Dd& x) -> Ddc {
    Dd eb = dd_exp(x * x * Dd{-0.5});
    if (eb.hi == 0.0) return {Dd{0.0}, Dd{0.0}};
    Dd dx = d * x;
    Ddc u{mhalfpi - dx, dx};  // M pi/2 - beta x
    Ddc c = ddc_ipow(dd_ccos(u), m);
    return eb * c;
  };

  Complex conj_beta{d.value(), d.value()};
  Complex phase = i_power(static_cast<long>(m) * m * j * M);
  double dev = 0.0;
  for (double y : ys) {
    Complex lhs = quad_core(f, Complex{y, 0.0}, spec);
    Complex rhs = phase * std::exp(-y * y / 2.0) *
                  ipow_complex(std::cos(M * kPi / 2.0 - conj_beta * y), m);
    dev = std::max(dev, std::abs(lhs - rhs));
  }
  return dev;
}

}  // namespace qdft
