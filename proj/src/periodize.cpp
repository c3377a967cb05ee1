#include "qdft/periodize.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qdft/fourier.hpp"
#include "qdft/qhermite.hpp"

namespace qdft {

namespace {

using Ld = long double;
using Lc = std::complex<Ld>;

constexpr double kPi = std::numbers::pi;

// Smallest certifiable relative tolerance; the accumulators are long double.
constexpr double kEpsFloor = 100.0 * LDBL_EPSILON;

std::vector<Lc> q_binomial_row_ld(int n, Lc q) {
  std::vector<Lc> row(static_cast<size_t>(n) + 1, Lc{0, 0});
  row[0] = {1, 0};
  std::vector<Lc> qpow(static_cast<size_t>(n) + 1);
  qpow[0] = {1, 0};
  for (int k = 1; k <= n; ++k) qpow[static_cast<size_t>(k)] = qpow[static_cast<size_t>(k - 1)] * q;
  for (int m = 1; m <= n; ++m) {
    for (int k = m; k >= 1; --k) {
      Lc upper = (k <= m - 1) ? row[static_cast<size_t>(k)] : Lc{0, 0};
      row[static_cast<size_t>(k)] = row[static_cast<size_t>(k - 1)] + qpow[static_cast<size_t>(k)] * upper;
    }
  }
  return row;
}

// One lattice term of the q-families: e^{-t^2/2} H_n(sin(lambda t)|q)
// expanded as i^n sum_k [n,k]_q (-1)^k exp(-t^2/2 + i(2k-n) lambda t).
// Folding the Gaussian into each exponential keeps every intermediate finite
// even far out on the lattice, where H_n alone would overflow.
struct FusedQTerm {
  int n;
  Lc lambda;
  std::vector<Lc> binoms;
  Lc prefactor;

  FusedQTerm(int n_, Complex lambda_, Complex q_)
      : n(n_),
        lambda(static_cast<Ld>(lambda_.real()), static_cast<Ld>(lambda_.imag())),
        binoms(q_binomial_row_ld(n_, Lc{static_cast<Ld>(q_.real()), static_cast<Ld>(q_.imag())})) {
    Complex ip = i_power(n_);
    prefactor = Lc{static_cast<Ld>(ip.real()), static_cast<Ld>(ip.imag())};
  }

  Lc operator()(Ld t) const {
    Lc acc{0, 0};
    Ld sign = 1;
    for (int k = 0; k <= n; ++k) {
      Lc z = Lc{-t * t / 2, 0} + Lc{0, 1} * static_cast<Ld>(2 * k - n) * lambda * t;
      if (z.real() > -11350.0L) acc += sign * binoms[static_cast<size_t>(k)] * std::exp(z);
      sign = -sign;
    }
    return prefactor * acc;
  }
};

struct MehtaTerm {
  int n;

  Lc operator()(Ld t) const {
    Ld g = std::exp(-t * t / 2);
    if (g == 0.0L) return {0, 0};
    Ld hm1 = 1, h = 2 * t;
    if (n == 0) h = 1;
    for (int m = 1; m < n; ++m) {
      Ld next = 2 * t * h - 2 * static_cast<Ld>(m) * hm1;
      hm1 = h;
      h = next;
    }
    return {g * h, 0};
  }
};

struct SumOutcome {
  std::vector<Complex> values;
  int K = 0;
  double tail_rel = 0.0;
};

// Adaptive lattice summation with a certified tail. For each direction the
// loop runs until the certificate bound at the next point is past the hump of
// the envelope, geometrically decreasing, and below eps/4.
SumOutcome lattice_sum(const std::function<Lc(Ld)>& term, const GrowthCertificate& cert, int N,
                       const TruncationPolicy& policy) {
  if (N < 1) throw std::invalid_argument("periodize: N must be positive");
  if (!(policy.eps > 0.0)) throw std::invalid_argument("periodize: eps must be positive");
  if (policy.k_max < 1) throw std::invalid_argument("periodize: k_max must be positive");
  if (policy.eps < kEpsFloor) {
    std::ostringstream os;
    os << "periodize: eps=" << policy.eps << " is below the certifiable resolution " << kEpsFloor
       << " of the long double accumulator (k_max=" << policy.k_max << ")";
    throw truncation_error(os.str());
  }

  const Ld step = std::sqrt(2.0L * static_cast<Ld>(kPi) / static_cast<Ld>(N));
  const double delta = static_cast<double>(step) * N;  // lattice spacing in t
  const double hump = 2.0 * cert.c1;                   // envelope max location

  auto eval_checked = [&](Ld t) {
    Lc v = term(t);
    double mag = static_cast<double>(std::abs(v));
    double allowed = cert.bound(static_cast<double>(t)) * (1.0 + 1e-9) + 1e-18 * std::max(1.0, cert.c0);
    if (mag > allowed) {
      std::ostringstream os;
      os << "growth certificate violated at t=" << static_cast<double>(t) << ": |f(t)|=" << mag
         << " exceeds bound " << allowed;
      throw certificate_error(os.str());
    }
    return v;
  };

  // A direction may stop once the next lattice point t satisfies
  // |t| >= hump + delta (so the bound is decreasing with ratio <= 1/2 there)
  // and 2*bound(t) < eps/2.
  auto can_stop = [&](double t_next_abs) {
    if (t_next_abs < hump + delta) return false;
    double b = cert.bound(t_next_abs);
    double ratio = cert.bound(t_next_abs + delta) / std::max(b, kTiny);
    return ratio <= 0.5 && 2.0 * b < policy.eps / 2.0;
  };

  SumOutcome out;
  out.values.assign(static_cast<size_t>(N), Complex{0.0, 0.0});
  std::vector<Lc> acc(static_cast<size_t>(N), Lc{0, 0});
  std::vector<int> kpos(static_cast<size_t>(N), 0), kneg(static_cast<size_t>(N), 0);
  double tail_abs = 0.0;

  for (int r = 0; r < N; ++r) {
    acc[static_cast<size_t>(r)] = eval_checked(step * static_cast<Ld>(r));
    double tail_r = 0.0;
    for (int dir : {+1, -1}) {
      int k = 0;
      while (true) {
        double t_next = static_cast<double>(step) * (static_cast<double>(k + dir) * N + r);
        if (can_stop(std::fabs(t_next))) {
          tail_r += 2.0 * cert.bound(std::fabs(t_next));
          break;
        }
        k += dir;
        if (std::abs(k) > policy.k_max) {
          std::ostringstream os;
          os << "periodize: k_max=" << policy.k_max << " exceeded before the tail bound reached eps="
             << policy.eps << " (certificate c0=" << cert.c0 << ", c1=" << cert.c1 << ")";
          throw truncation_error(os.str());
        }
        acc[static_cast<size_t>(r)] += eval_checked(step * (static_cast<Ld>(k) * N + r));
      }
      if (dir > 0)
        kpos[static_cast<size_t>(r)] = k;
      else
        kneg[static_cast<size_t>(r)] = -k;
    }
    tail_abs = std::max(tail_abs, tail_r);
  }

  double scale = 0.0;
  for (int r = 0; r < N; ++r) {
    out.values[static_cast<size_t>(r)] = Complex{static_cast<double>(acc[static_cast<size_t>(r)].real()),
                                                 static_cast<double>(acc[static_cast<size_t>(r)].imag())};
    scale = std::max(scale, std::abs(out.values[static_cast<size_t>(r)]));
    out.K = std::max({out.K, kpos[static_cast<size_t>(r)], kneg[static_cast<size_t>(r)]});
  }

  if (policy.adaptive) {
    // Doubling check: terms in (K, 2K] must be numerically irrelevant too.
    double extra = 0.0;
    for (int r = 0; r < N; ++r) {
      double sum_extra = 0.0;
      for (int k = out.K + 1; k <= 2 * out.K; ++k) {
        sum_extra += static_cast<double>(std::abs(term(step * (static_cast<Ld>(k) * N + r))));
        sum_extra += static_cast<double>(std::abs(term(step * (static_cast<Ld>(-k) * N + r))));
      }
      extra = std::max(extra, sum_extra);
    }
    if (extra >= policy.eps * std::max(1.0, scale)) {
      std::ostringstream os;
      os << "periodize: doubling check failed, terms beyond K=" << out.K << " contribute " << extra
         << " against eps=" << policy.eps << " (k_max=" << policy.k_max << ")";
      throw truncation_error(os.str());
    }
  }

  out.tail_rel = tail_abs / std::max(1.0, scale);
  return out;
}

PeriodizedVector assemble(SumOutcome&& sum, int N, VectorLabel label) {
  PeriodizedVector v;
  v.N = N;
  v.values = std::move(sum.values);
  v.label = std::move(label);
  v.truncation_used = sum.K;
  v.tail_bound = sum.tail_rel;
  return v;
}

std::string rou_params_str(const RootOfUnityParams& p) {
  return "j=" + std::to_string(p.j) + ",M=" + std::to_string(p.M);
}

std::string realq_params_str(const RealQParams& p) {
  std::ostringstream os;
  os << "q=" << p.q;
  return os.str();
}

PeriodizedVector build_q_vector(int n, int N, Complex lambda_eff, Complex q_eff,
                                const TruncationPolicy& policy, VectorLabel label) {
  if (n < 0) throw std::invalid_argument("q vector: n must be nonnegative");
  FusedQTerm term(n, lambda_eff, q_eff);
  GrowthCertificate cert = q_family_certificate(n, lambda_eff, q_eff);
  auto sum = lattice_sum([&term](Ld t) { return term(t); }, cert, N, policy);
  return assemble(std::move(sum), N, std::move(label));
}

}  // namespace

double GrowthCertificate::bound(double t) const {
  return c0 * std::exp(-t * t / 4.0 + c1 * std::fabs(t));
}

std::string VectorLabel::str() const {
  std::string s = family + "[n=" + std::to_string(n);
  if (!params.empty()) s += "," + params;
  s += "]";
  return s;
}

Complex PeriodizedVector::at(long r) const {
  long m = r % N;
  if (m < 0) m += N;
  return values[static_cast<size_t>(m)];
}

double PeriodizedVector::max_abs() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

double PeriodizedVector::parity_deviation() const {
  if (label.parity == 0) return 0.0;
  double dev = 0.0;
  for (int r = 0; r < N; ++r) {
    Complex mirrored = values[static_cast<size_t>((N - r) % N)];
    dev = std::max(dev, std::abs(mirrored - static_cast<double>(label.parity) * values[static_cast<size_t>(r)]));
  }
  return dev;
}

PeriodizedVector periodize(const std::function<Complex(double)>& f, const GrowthCertificate& cert,
                           int N, const TruncationPolicy& policy) {
  auto term = [&f](Ld t) {
    Complex v = f(static_cast<double>(t));
    return Lc{static_cast<Ld>(v.real()), static_cast<Ld>(v.imag())};
  };
  auto sum = lattice_sum(term, cert, N, policy);
  return assemble(std::move(sum), N, VectorLabel{"periodize", 0, 0, ""});
}

GrowthCertificate mehta_certificate(int n) {
  // Numerical maximum of e^{-t^2/4} |H_n(t)|, padded; the function decays
  // past t ~ sqrt(2n), so the sampled range covers the maximum.
  double tmax = 2.0 * std::sqrt(2.0 * n + 1.0) + 10.0;
  double c0 = 0.0;
  MehtaTerm term{n};
  for (int i = 0; i <= 4000; ++i) {
    Ld t = static_cast<Ld>(tmax) * i / 4000;
    Ld h = std::abs(term(t));  // e^{-t^2/2} |H_n|
    double envelope = static_cast<double>(h * std::exp(t * t / 4));
    c0 = std::max(c0, envelope);
  }
  return GrowthCertificate{1.5 * std::max(c0, 1.0), 0.0};
}

GrowthCertificate q_family_certificate(int n, Complex lambda_eff, Complex q_eff) {
  auto binoms = q_binomial_row_ld(n, Lc{static_cast<Ld>(q_eff.real()), static_cast<Ld>(q_eff.imag())});
  double c0 = 0.0;
  for (const auto& b : binoms) c0 += static_cast<double>(std::abs(b));
  return GrowthCertificate{std::max(c0, 1.0), n * std::fabs(lambda_eff.imag())};
}

PeriodizedVector mehta_vector(int n, int N, const TruncationPolicy& policy) {
  if (n < 0) throw std::invalid_argument("mehta_vector: n must be nonnegative");
  MehtaTerm term{n};
  GrowthCertificate cert = mehta_certificate(n);
  auto sum = lattice_sum([&term](Ld t) { return term(t); }, cert, N, policy);
  return assemble(std::move(sum), N,
                  VectorLabel{"mehta", n, (n % 2 == 0) ? +1 : -1, ""});
}

PeriodizedVector f_q_vector(int n, int N, const RootOfUnityParams& params,
                            const TruncationPolicy& policy) {
  return build_q_vector(n, N, params.alpha, params.q, policy,
                        VectorLabel{"f_q", n, (n % 2 == 0) ? +1 : -1, rou_params_str(params)});
}

PeriodizedVector f_q_vector(int n, int N, const RealQParams& params,
                            const TruncationPolicy& policy) {
  return build_q_vector(n, N, Complex{params.kappa, 0.0}, Complex{params.q, 0.0}, policy,
                        VectorLabel{"f_q", n, (n % 2 == 0) ? +1 : -1, realq_params_str(params)});
}

PeriodizedVector g_q_vector(int n, int N, const RootOfUnityParams& params,
                            const TruncationPolicy& policy) {
  // i*alpha = conj(alpha) and 1/q = conj(q) exactly on the unit circle.
  Complex lambda_eff = Complex{0.0, 1.0} * params.alpha;
  Complex q_eff = std::conj(params.q);
  return build_q_vector(n, N, lambda_eff, q_eff, policy,
                        VectorLabel{"g_q", n, (n % 2 == 0) ? +1 : -1, rou_params_str(params)});
}

PeriodizedVector g_q_vector(int n, int N, const RealQParams& params,
                            const TruncationPolicy& policy) {
  Complex lambda_eff{0.0, params.kappa};
  Complex q_eff{1.0 / params.q, 0.0};
  return build_q_vector(n, N, lambda_eff, q_eff, policy,
                        VectorLabel{"g_q", n, (n % 2 == 0) ? +1 : -1, realq_params_str(params)});
}

namespace {

double k33_residual(const PeriodizedVector& f, const PeriodizedVector& g, Complex prefactor) {
  DftOperator op = dft_matrix(f.N);
  auto transformed = apply_dft(op, f.values);
  double dev = 0.0;
  for (int r = 0; r < f.N; ++r) {
    dev = std::max(dev, std::abs(transformed[static_cast<size_t>(r)] -
                                 prefactor * g.values[static_cast<size_t>(r)]));
  }
  return dev;
}

}  // namespace

double verify_K33(int n, int N, const RootOfUnityParams& params, const TruncationPolicy& policy) {
  auto f = f_q_vector(n, N, params, policy);
  auto g = g_q_vector(n, N, params, policy);
  // q^{n^2/4} on the branch log q = 2*pi*i*j/M.
  double angle = kPi * params.j * static_cast<double>(n) * n / (2.0 * params.M);
  Complex prefactor{std::cos(angle), std::sin(angle)};
  return k33_residual(f, g, prefactor);
}

double verify_K33(int n, int N, const RealQParams& params, const TruncationPolicy& policy) {
  auto f = f_q_vector(n, N, params, policy);
  auto g = g_q_vector(n, N, params, policy);
  Complex prefactor{std::pow(params.q, static_cast<double>(n) * n / 4.0), 0.0};
  return k33_residual(f, g, prefactor);
}

std::pair<double, double> verify_K40_K41(int n, int N, const RootOfUnityParams& params,
                                         const TruncationPolicy& policy) {
  auto f = f_q_vector(n, N, params, policy);
  DftOperator op = dft_matrix(N);

  double angle = kPi * params.j * static_cast<double>(n) * n / (2.0 * params.M);
  Complex pref{std::cos(angle), std::sin(angle)};        // q^{n^2/4}
  Complex pref_inv = std::conj(pref);                    // q^{-n^2/4}
  double sign = (n % 2 == 0) ? 1.0 : -1.0;

  auto phi_f = apply_dft(op, f.values);
  std::vector<Complex> conj_f(f.values.size());
  for (size_t r = 0; r < f.values.size(); ++r) conj_f[r] = std::conj(f.values[r]);
  auto phi_conj_f = apply_dft(op, conj_f);

  double r40 = 0.0, r41 = 0.0;
  for (size_t r = 0; r < f.values.size(); ++r) {
    r40 = std::max(r40, std::abs(phi_f[r] - pref * conj_f[r]));
    r41 = std::max(r41, std::abs(phi_conj_f[r] - sign * pref_inv * f.values[r]));
  }
  return {r40, r41};
}

}  // namespace qdft
