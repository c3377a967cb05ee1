// Command-line front end: batch construction of eigenvector families,
// verification sweeps over the identity battery, and the discrete-weight
// probe, exported as deterministic CSV or JSON.
//
// Exit codes: 0 all checks passed, 1 numerical failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qdft/eigenpairs.hpp"
#include "qdft/fourier.hpp"
#include "qdft/periodize.hpp"
#include "qdft/qhermite.hpp"

using namespace qdft;
using ordered_json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string command;
  int N = 0;
  int n_max = -1;
  int j = 0;
  int M = 0;
  std::optional<double> q_real;
  double eps = 1e-14;
  std::string output_path;
  std::string format = "csv";
  std::string only;
  std::string phase = "derived";
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_cell(const ordered_json& v) {
  if (v.is_number_float()) return fmt_double(v.get<double>());
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.get<std::string>();
}

void write_report(const RunConfig& cfg, const std::vector<ordered_json>& rows,
                  const ordered_json& summary) {
  std::ostringstream body;
  if (cfg.format == "csv") {
    if (!rows.empty()) {
      bool first = true;
      for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
        body << (first ? "" : ",") << it.key();
        first = false;
      }
      body << "\n";
      for (const auto& row : rows) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
          body << (first ? "" : ",") << csv_cell(it.value());
          first = false;
        }
        body << "\n";
      }
    }
  } else {
    ordered_json doc;
    ordered_json config;
    config["command"] = cfg.command;
    if (cfg.N > 0) config["N"] = cfg.N;
    if (cfg.n_max >= 0) config["n_max"] = cfg.n_max;
    if (cfg.M > 0) {
      config["j"] = cfg.j;
      config["M"] = cfg.M;
    }
    if (cfg.q_real) config["q"] = *cfg.q_real;
    config["eps"] = cfg.eps;
    if (!cfg.only.empty()) config["only"] = cfg.only;
    if (cfg.command == "qeigen") config["phase"] = cfg.phase;
    doc["config"] = config;
    doc["results"] = rows;
    doc["summary"] = summary;
    body << doc.dump(2) << "\n";
  }

  if (cfg.output_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output path " + cfg.output_path);
    out << body.str();
    std::cout << cfg.command << ": wrote " << rows.size() << " rows to " << cfg.output_path
              << "\n";
  }
}

void append_vector_rows(std::vector<ordered_json>& rows, const std::string& family, int n,
                        const std::vector<Complex>& values, double residual_derived,
                        double residual_paper, bool coprime) {
  for (size_t r = 0; r < values.size(); ++r) {
    ordered_json row;
    row["family"] = family;
    row["n"] = n;
    row["r"] = static_cast<long>(r);
    row["re"] = values[r].real();
    row["im"] = values[r].imag();
    row["residual_derived"] = residual_derived;
    row["residual_paper"] = residual_paper;
    row["coprime"] = coprime;
    rows.push_back(std::move(row));
  }
}

int cmd_mehta(const RunConfig& cfg) {
  TruncationPolicy policy;
  policy.eps = cfg.eps;
  auto candidates = mehta_eigencheck(cfg.N, policy);
  auto rep = independence_report(candidates);

  std::vector<ordered_json> rows;
  double max_residual = 0.0;
  for (const auto& cand : candidates) {
    max_residual = std::max(max_residual, cand.residual);
    for (size_t r = 0; r < cand.vector.values.size(); ++r) {
      ordered_json row;
      row["family"] = "mehta";
      row["n"] = cand.vector.label.n;
      row["r"] = static_cast<long>(r);
      row["re"] = cand.vector.values[r].real();
      row["im"] = cand.vector.values[r].imag();
      row["eigen_re"] = cand.eigenvalue.real();
      row["eigen_im"] = cand.eigenvalue.imag();
      row["residual"] = cand.residual;
      rows.push_back(std::move(row));
    }
  }
  bool pass = max_residual < 1e-8;
  ordered_json summary;
  summary["max_residual"] = max_residual;
  summary["pass"] = pass;
  summary["rank"] = rep.rank;
  summary["smallest_singular_value"] = rep.smallest_singular_value;
  summary["max_offdiag_gram"] = rep.max_offdiag_gram;
  write_report(cfg, rows, summary);
  std::cout << "mehta: N=" << cfg.N << " candidates=" << candidates.size()
            << " rank=" << rep.rank << " max residual=" << fmt_double(max_residual)
            << (pass ? " [ok]" : " [residuals too large]") << "\n";
  return pass ? 0 : 1;
}

int cmd_qeigen(const RunConfig& cfg) {
  TruncationPolicy policy;
  policy.eps = cfg.eps;
  auto params = RootOfUnityParams::make(cfg.j, cfg.M);
  const double inf = std::numeric_limits<double>::infinity();
  const bool use_paper_vectors = cfg.phase == "paper";

  std::vector<ordered_json> rows;
  double max_derived = 0.0, max_paper = 0.0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    auto f = f_q_vector(n, cfg.N, params, policy);
    auto [rd40, rd41] = verify_K40_K41(n, cfg.N, params, policy);
    auto derived =
        q_eigenvectors(n, cfg.N, params, policy, PhaseConvention::DerivedPiOver4, inf);
    auto paper = q_eigenvectors(n, cfg.N, params, policy, PhaseConvention::PaperPiOver8, inf);
    max_derived = std::max({max_derived, derived.first.residual, derived.second.residual});
    max_paper = std::max({max_paper, paper.first.residual, paper.second.residual});

    append_vector_rows(rows, "f", n, f.values, std::max(rd40, rd41), std::max(rd40, rd41),
                       params.coprime);
    const auto& pair = use_paper_vectors ? paper : derived;
    append_vector_rows(rows, "F", n, pair.first.vector.values, derived.first.residual,
                       paper.first.residual, params.coprime);
    append_vector_rows(rows, "G", n, pair.second.vector.values, derived.second.residual,
                       paper.second.residual, params.coprime);
  }
  bool pass = max_derived < 1e-7;
  ordered_json summary;
  summary["max_residual"] = max_derived;
  summary["pass"] = pass;
  summary["max_residual_paper_phase"] = max_paper;
  write_report(cfg, rows, summary);
  std::cout << "qeigen: N=" << cfg.N << " j=" << cfg.j << " M=" << cfg.M
            << (params.coprime ? "" : " (not coprime)")
            << " derived-phase max residual=" << fmt_double(max_derived)
            << " paper-phase max residual=" << fmt_double(max_paper)
            << (pass ? " [ok]" : " [residuals too large]") << "\n";
  return pass ? 0 : 1;
}

int cmd_weights(const RunConfig& cfg) {
  auto params = RootOfUnityParams::make(cfg.j, cfg.M);
  if (!params.coprime)
    throw std::invalid_argument("weights: j and M must be coprime for the Zhedanov grid");
  auto result = solve_discrete_weights(params);
  auto zeros = chebyshev_zeros(cfg.M);

  std::vector<ordered_json> rows;
  auto add_row = [&rows](const std::string& record, long a, long b, double re, double im) {
    ordered_json row;
    row["record"] = record;
    row["i"] = a;
    row["j"] = b;
    row["re"] = re;
    row["im"] = im;
    rows.push_back(std::move(row));
  };
  for (size_t s = 0; s < zeros.size(); ++s)
    add_row("zero", static_cast<long>(s), 0, zeros[s], 0.0);
  for (size_t s = 0; s < result.weights.size(); ++s)
    add_row("weight", static_cast<long>(s), 0, result.weights[s].real(),
            result.weights[s].imag());
  for (int m = 0; m < cfg.M; ++m)
    for (int n = m + 1; n < cfg.M; ++n) {
      Complex acc{0.0, 0.0};
      for (int s = 0; s < cfg.M; ++s)
        acc += result.weights[static_cast<size_t>(s)] *
               qhermite_recurrence(m, Complex{zeros[static_cast<size_t>(s)], 0.0}, params.q) *
               qhermite_recurrence(n, Complex{zeros[static_cast<size_t>(s)], 0.0}, params.q);
      add_row("orthogonality_residual", m, n, std::abs(acc), 0.0);
    }

  ordered_json summary;
  summary["max_residual"] = result.max_residual;
  summary["pass"] = result.ok;
  summary["condition"] = result.condition;
  if (!result.ok) summary["diagnostic"] = result.diagnostic;
  write_report(cfg, rows, summary);
  std::cout << "weights: j=" << cfg.j << " M=" << cfg.M
            << " max residual=" << fmt_double(result.max_residual)
            << " condition=" << fmt_double(result.condition) << (result.ok ? " [ok]" : " [failed]")
            << "\n";
  return result.ok ? 0 : 1;
}

struct BatteryRow {
  std::string identity;
  std::string parameters;
  double deviation;
  double threshold;
};

int cmd_verify(const RunConfig& cfg) {
  TruncationPolicy policy;
  policy.eps = cfg.eps;
  std::vector<BatteryRow> battery;
  auto wanted = [&cfg](const std::string& identity) {
    return cfg.only.empty() || identity.find(cfg.only) != std::string::npos;
  };
  auto run = [&battery](const std::string& identity, const std::string& parameters,
                        double deviation, double threshold) {
    battery.push_back({identity, parameters, deviation, threshold});
  };

  std::vector<double> ys;
  for (int i = 0; i <= 6; ++i) ys.push_back(-1.5 + 0.5 * i);
  const int n_quad = cfg.n_max >= 0 ? cfg.n_max : 8;
  const int n_finite = cfg.n_max >= 0 ? cfg.n_max : 6;
  std::vector<double> real_qs = cfg.q_real ? std::vector<double>{*cfg.q_real}
                                           : std::vector<double>{0.5, 0.7};
  std::vector<std::pair<int, int>> rou_sets;
  if (cfg.M > 0) {
    rou_sets.push_back({cfg.j > 0 ? cfg.j : 1, cfg.M});
  } else {
    rou_sets = {{1, 3}, {1, 4}, {2, 5}};
  }

  auto grid = identity_grid();
  if (wanted("chebyshev")) {
    int M_hi = cfg.M > 0 ? cfg.M : 12;
    int M_lo = cfg.M > 0 ? cfg.M : 2;
    for (int M = M_lo; M <= M_hi; ++M)
      for (int j = 1; j < M; ++j) {
        if (std::gcd(j, M) != 1) continue;
        if (cfg.M > 0 && cfg.j > 0 && j != cfg.j) continue;
        auto p = RootOfUnityParams::make(j, M);
        run("chebyshev", "j=" + std::to_string(j) + ",M=" + std::to_string(M),
            verify_chebyshev_identity(p, grid), 1e-11);
      }
  }
  if (wanted("factorization")) {
    int M_hi = cfg.M > 0 ? cfg.M : 12;
    int M_lo = cfg.M > 0 ? cfg.M : 2;
    for (int M = M_lo; M <= M_hi; ++M)
      for (int j = 1; j < M; ++j) {
        if (std::gcd(j, M) != 1) continue;
        if (cfg.M > 0 && cfg.j > 0 && j != cfg.j) continue;
        auto p = RootOfUnityParams::make(j, M);
        for (int m = 0; m <= 3; ++m)
          for (int n : {0, 1, M - 1})
            run("factorization",
                "j=" + std::to_string(j) + ",M=" + std::to_string(M) + ",m=" + std::to_string(m) +
                    ",n=" + std::to_string(n),
                verify_factorization(p, m, n, grid), 1e-10);
      }
  }
  if (wanted("lemma_k6")) {
    for (double q : real_qs)
      for (int n = 0; n <= n_quad; ++n)
        run("lemma_k6", "lambda=0.4,q=" + fmt_double(q) + ",n=" + std::to_string(n),
            verify_lemma_K6(n, Complex{0.4, 0.0}, Complex{q, 0.0}, ys), 1e-7);
    for (auto [j, M] : rou_sets) {
      auto p = RootOfUnityParams::make(j, M);
      for (int n = 0; n <= n_quad; ++n)
        run("lemma_k6",
            "lambda=alpha,j=" + std::to_string(j) + ",M=" + std::to_string(M) +
                ",n=" + std::to_string(n),
            verify_lemma_K6(n, p.alpha, p.q, ys), 1e-7);
    }
  }
  if (wanted("k31_real")) {
    for (double q : real_qs)
      for (int n = 0; n <= n_quad; ++n)
        run("k31_real", "q=" + fmt_double(q) + ",n=" + std::to_string(n),
            verify_prop_3_1(n, RealQParams::from_q(q), ys), 1e-7);
  }
  if (wanted("k31_rou")) {
    for (auto [j, M] : rou_sets) {
      auto p = RootOfUnityParams::make(j, M);
      for (int n = 0; n <= n_quad; ++n)
        run("k31_rou",
            "j=" + std::to_string(j) + ",M=" + std::to_string(M) + ",n=" + std::to_string(n),
            verify_prop_3_5(n, p, ys), 1e-7);
    }
  }
  if (wanted("inversion")) {
    for (auto [j, M] : rou_sets) {
      if (std::gcd(j, M) != 1) continue;
      auto p = RootOfUnityParams::make(j, M);
      for (int n = 0; n <= std::min(n_quad, 5); ++n)
        run("inversion",
            "j=" + std::to_string(j) + ",M=" + std::to_string(M) + ",n=" + std::to_string(n),
            verify_inversion_3_5(n, p, ys), 1e-7);
    }
  }
  if (wanted("cos_power")) {
    for (auto [j, M] : rou_sets) {
      if (std::gcd(j, M) != 1) continue;
      for (int m = 0; m <= 2; ++m)
        run("cos_power",
            "j=" + std::to_string(j) + ",M=" + std::to_string(M) + ",m=" + std::to_string(m),
            verify_cos_power(m, j, M, ys), 1e-7);
    }
  }
  if (wanted("k33")) {
    for (int N : {5, 8}) {
      for (int n = 0; n <= n_finite; ++n) {
        for (double q : real_qs)
          run("k33",
              "real q=" + fmt_double(q) + ",N=" + std::to_string(N) + ",n=" + std::to_string(n),
              verify_K33(n, N, RealQParams::from_q(q), policy), 1e-8);
        for (auto [j, M] : rou_sets)
          run("k33",
              "j=" + std::to_string(j) + ",M=" + std::to_string(M) + ",N=" + std::to_string(N) +
                  ",n=" + std::to_string(n),
              verify_K33(n, N, RootOfUnityParams::make(j, M), policy), 1e-8);
      }
    }
  }
  if (wanted("k40_k41") || wanted("k35")) {
    for (int N : {5, 8}) {
      for (int n = 0; n <= n_finite; ++n) {
        for (auto [j, M] : rou_sets) {
          auto p = RootOfUnityParams::make(j, M);
          std::string tag = "j=" + std::to_string(j) + ",M=" + std::to_string(M) +
                            ",N=" + std::to_string(N) + ",n=" + std::to_string(n);
          if (wanted("k40_k41")) {
            auto [r40, r41] = verify_K40_K41(n, N, p, policy);
            run("k40_k41", tag, std::max(r40, r41), 1e-8);
          }
          if (wanted("k35")) {
            auto f = f_q_vector(n, N, p, policy);
            auto g = g_q_vector(n, N, p, policy);
            double dev = 0.0;
            for (size_t r = 0; r < f.values.size(); ++r)
              dev = std::max(dev, std::abs(g.values[r] - std::conj(f.values[r])));
            run("k35", tag, dev, 1e-10);
          }
        }
      }
    }
  }
  if (wanted("qtolimit_real")) {
    for (int n = 0; n <= 5; ++n)
      for (double x : {0.3, 0.7, 1.1}) {
        double d1 = qtolimit_deviation(n, 0.9, x);
        double d2 = qtolimit_deviation(n, 0.99, x);
        double d3 = qtolimit_deviation(n, 0.999, x);
        double ratio = std::max({d1, d2, d3}) < 1e-13
                           ? 0.0
                           : std::max(d2 / std::max(d1, kTiny), d3 / std::max(d2, kTiny));
        run("qtolimit_real", "n=" + std::to_string(n) + ",x=" + fmt_double(x), ratio, 1.0);
      }
  }
  if (wanted("qtolimit_rou")) {
    for (int n = 0; n <= 5; ++n)
      for (double x : {0.3, 0.7, 1.1}) {
        double d1 = qtolimit_deviation_root_of_unity(n, 1, 8, x);
        double d2 = qtolimit_deviation_root_of_unity(n, 1, 16, x);
        double d3 = qtolimit_deviation_root_of_unity(n, 1, 32, x);
        double ratio = std::max({d1, d2, d3}) < 1e-13
                           ? 0.0
                           : std::max(d2 / std::max(d1, kTiny), d3 / std::max(d2, kTiny));
        run("qtolimit_rou", "n=" + std::to_string(n) + ",x=" + fmt_double(x), ratio, 1.0);
      }
  }

  if (battery.empty())
    throw std::invalid_argument("verify: no identity matches --only " + cfg.only);

  std::vector<ordered_json> rows;
  double max_deviation = 0.0;
  bool all_pass = true;
  for (const auto& item : battery) {
    bool pass = item.deviation < item.threshold;
    all_pass = all_pass && pass;
    max_deviation = std::max(max_deviation, item.deviation);
    ordered_json row;
    row["identity"] = item.identity;
    row["parameters"] = item.parameters;
    row["deviation"] = item.deviation;
    row["threshold"] = item.threshold;
    row["pass"] = pass;
    rows.push_back(std::move(row));
  }
  ordered_json summary;
  summary["max_residual"] = max_deviation;
  summary["pass"] = all_pass;
  write_report(cfg, rows, summary);
  std::cout << "verify: " << battery.size() << " checks, max deviation="
            << fmt_double(max_deviation) << (all_pass ? " [all pass]" : " [failures]") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env_eps = std::getenv("QDFT_EPS")) {
    char* end = nullptr;
    double v = std::strtod(env_eps, &end);
    if (end == env_eps || *end != '\0' || !(v > 0.0)) {
      std::cerr << "QDFT_EPS is not a positive number: " << env_eps << "\n";
      return 2;
    }
    cfg.eps = v;
  }

  CLI::App app{"eigenvectors of the finite Fourier transform from periodized "
               "Gaussian-weighted q-Hermite polynomials"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--eps", cfg.eps, "truncation tolerance for the lattice sums");
    sub->add_option("--out", cfg.output_path, "report file path (stdout when absent)");
    sub->add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* mehta = app.add_subcommand("mehta", "Mehta eigenvector candidates and rank report");
  mehta->add_option("--N", cfg.N, "transform size")->required()->check(CLI::PositiveNumber);
  add_common(mehta);

  CLI::App* qeigen = app.add_subcommand("qeigen", "q-extended eigenvector families");
  qeigen->add_option("--N", cfg.N, "transform size")->required()->check(CLI::PositiveNumber);
  qeigen->add_option("--j", cfg.j, "root-of-unity numerator")->required();
  qeigen->add_option("--M", cfg.M, "root-of-unity order")->required();
  qeigen->add_option("--n-max", cfg.n_max, "largest degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  qeigen->add_option("--phase", cfg.phase, "phase convention for the exported vectors")
      ->check(CLI::IsMember({"derived", "paper"}));
  add_common(qeigen);

  CLI::App* verify = app.add_subcommand("verify", "run the identity battery");
  verify->add_option("--only", cfg.only, "restrict to identities whose name contains this");
  verify->add_option("--N", cfg.N, "accepted for symmetry, not used by the battery");
  verify->add_option("--n-max", cfg.n_max, "largest degree in the sweeps");
  verify->add_option("--j", cfg.j, "restrict root-of-unity checks to this j");
  verify->add_option("--M", cfg.M, "restrict root-of-unity checks to this M");
  verify->add_option("--q", cfg.q_real, "restrict real-branch checks to this q");
  add_common(verify);

  CLI::App* weights = app.add_subcommand("weights", "discrete orthogonality weight probe");
  weights->add_option("--j", cfg.j, "root-of-unity numerator")->required();
  weights->add_option("--M", cfg.M, "root-of-unity order")->required();
  add_common(weights);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mehta->parsed()) {
      cfg.command = "mehta";
      return cmd_mehta(cfg);
    }
    if (qeigen->parsed()) {
      cfg.command = "qeigen";
      return cmd_qeigen(cfg);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg);
    }
    cfg.command = "weights";
    return cmd_weights(cfg);
  } catch (const truncation_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const certificate_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const verification_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
