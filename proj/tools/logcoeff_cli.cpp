// Command-line front end: log-coefficient tables, bound verification, the
// Prokhorov-Szynal functional, dilogarithm evaluation and conjecture exploration.
//
// Exit codes: 0 success; 1 proven-bound violation; 2 usage error;
//             3 inapplicable-hypothesis request (e.g. uncovered PS region);
//             4 conjecture finding.

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "logcoeff/bounds.hpp"
#include "logcoeff/classes.hpp"
#include "logcoeff/explorer.hpp"
#include "logcoeff/json_io.hpp"

namespace lc = logcoeff;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInapplicable = 3;
constexpr int kExitFinding = 4;

struct SpecOptions {
  std::string cls;
  std::string a, a_im, b, c, ss_alpha;
  double alpha = 0.0, beta = 0.0;
  bool alpha_set = false, beta_set = false;
  int twist = 1;
  double rotation = 0.0;
  std::string spec_file;
};

void add_spec_options(CLI::App* cmd, SpecOptions& opts) {
  cmd->add_option("--class", opts.cls, "class kind: janowski | spiral | strongly_starlike | F | G");
  cmd->add_option("--A", opts.a, "janowski A (rational: 1, 3/4, 0.5)");
  cmd->add_option("--A-im", opts.a_im, "imaginary part of janowski A (rational; float backend)");
  cmd->add_option("--B", opts.b, "janowski B in [-1, 0] (rational)");
  cmd->add_option("--alpha", opts.alpha, "spiral alpha, |alpha| < pi/2")->each([&](const std::string&) {
    opts.alpha_set = true;
  });
  cmd->add_option("--beta", opts.beta, "spiral beta in [0, 1)")->each([&](const std::string&) {
    opts.beta_set = true;
  });
  cmd->add_option("--ss-alpha", opts.ss_alpha, "strongly-starlike alpha in (0, 1] (rational)");
  cmd->add_option("--c", opts.c, "F/G parameter c (rational)");
  cmd->add_option("--twist", opts.twist, "n-fold twist for extremals (default 1)");
  cmd->add_option("--rotation", opts.rotation, "rotate the driving variable (float backend)");
  cmd->add_option("--spec", opts.spec_file, "JSON spec file: {\"kind\": ..., ..., \"twist\": n}");
}

lc::Rational parse_rat_flag(const std::string& text, const char* flag) {
  auto q = lc::parse_rational(text);
  if (!q) throw std::invalid_argument(std::string("cannot parse ") + flag + " = \"" + text + "\"");
  return *q;
}

lc::ClassSpec resolve_spec(const SpecOptions& opts) {
  if (!opts.spec_file.empty()) {
    std::ifstream in(opts.spec_file);
    if (!in) throw std::invalid_argument("cannot open spec file " + opts.spec_file);
    lc::json j = lc::json::parse(in);
    return lc::spec_from_json(j);
  }
  if (opts.cls.empty()) throw std::invalid_argument("need --class or --spec");
  lc::ClassSpec spec;
  if (opts.cls == "janowski") {
    spec.kind = lc::ClassKind::janowski;
    if (opts.a.empty() || opts.b.empty()) throw std::invalid_argument("janowski needs --A and --B");
    spec.A_re = parse_rat_flag(opts.a, "--A");
    if (!opts.a_im.empty()) spec.A_im = parse_rat_flag(opts.a_im, "--A-im");
    spec.B = parse_rat_flag(opts.b, "--B");
  } else if (opts.cls == "spiral") {
    spec.kind = lc::ClassKind::spiral;
    if (!opts.alpha_set || !opts.beta_set) throw std::invalid_argument("spiral needs --alpha and --beta");
    spec.alpha = opts.alpha;
    spec.beta = opts.beta;
  } else if (opts.cls == "strongly_starlike" || opts.cls == "ss") {
    spec.kind = lc::ClassKind::strongly_starlike;
    if (opts.ss_alpha.empty()) throw std::invalid_argument("strongly_starlike needs --ss-alpha");
    spec.ss_alpha = parse_rat_flag(opts.ss_alpha, "--ss-alpha");
  } else if (opts.cls == "F") {
    spec.kind = lc::ClassKind::F;
    if (opts.c.empty()) throw std::invalid_argument("F needs --c");
    spec.c = parse_rat_flag(opts.c, "--c");
  } else if (opts.cls == "G") {
    spec.kind = lc::ClassKind::G;
    if (opts.c.empty()) throw std::invalid_argument("G needs --c");
    spec.c = parse_rat_flag(opts.c, "--c");
  } else {
    throw std::invalid_argument("unknown class \"" + opts.cls + "\"");
  }
  spec.twist = opts.twist;
  spec.rotation = opts.rotation;
  spec.validate();
  return spec;
}

struct SchwarzInput {
  std::vector<lc::Complex> schur;
  bool real_only = true;
};

SchwarzInput load_schwarz(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open schwarz file " + path);
  SchwarzInput s;
  s.schur = lc::schur_from_json(lc::json::parse(in));
  for (const auto& lam : s.schur)
    if (lam.imag() != 0.0) s.real_only = false;
  return s;
}

std::string resolve_backend(const std::string& requested, const lc::ClassSpec& spec, bool schwarz_real) {
  if (requested == "exact" || requested == "float") {
    if (requested == "exact" && (!spec.exact_capable() || !schwarz_real))
      throw std::invalid_argument("exact backend not available for these parameters");
    return requested;
  }
  if (requested != "auto") throw std::invalid_argument("--backend must be auto, exact or float");
  return (spec.exact_capable() && schwarz_real) ? "exact" : "float";
}

std::string config_line(const std::string& sub, const lc::ClassSpec& spec, const std::string& backend,
                        const std::string& extra) {
  std::ostringstream os;
  os << "logcoeff " << sub << " | " << spec.describe() << " | backend=" << backend;
  if (!extra.empty()) os << " | " << extra;
  return os.str();
}

// ---------------------------------------------------------------- coeffs ----

struct CoeffRow {
  int n;
  std::string gamma_text;
  double abs_gamma;
  lc::BoundValue bound;
};

template <class K>
std::vector<CoeffRow> coeff_rows(const lc::ClassSpec& spec, int n_max, bool extremal,
                                 const std::vector<lc::Complex>& schur, lc::json* gamma_json) {
  lc::GammaVector<K> g;
  if (extremal) {
    g = lc::log_coefficients(lc::extremal_series<K>(spec, n_max + 1), n_max);
  } else {
    std::vector<K> params;
    for (const auto& lam : schur) {
      if constexpr (lc::backend_traits<K>::exact)
        params.push_back(lc::Rational(lam.real()));
      else
        params.push_back(lam);
    }
    g = lc::member_gammas(spec, lc::schwarz_from_schur(params, n_max + 1), n_max);
  }
  if (gamma_json) *gamma_json = lc::gamma_to_json(g);
  std::vector<CoeffRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    CoeffRow row{n, "", g.abs_gamma(n), lc::gamma_bound(spec, n)};
    if constexpr (lc::backend_traits<K>::exact) {
      row.gamma_text = lc::to_string(g.gamma(n));
    } else {
      const lc::Complex v = g.gamma(n);
      row.gamma_text = lc::format_double(v.real());
      if (std::abs(v.imag()) > 1e-15) row.gamma_text += (v.imag() < 0 ? "-" : "+") +
                                                        lc::format_double(std::abs(v.imag())) + "i";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int emit_coeffs(const lc::ClassSpec& spec, const std::string& backend, int n_max, bool extremal,
                const std::vector<lc::Complex>& schur, const std::string& format,
                const std::string& config) {
  lc::json gamma_vector;
  std::vector<CoeffRow> rows =
      backend == "exact" ? coeff_rows<lc::Rational>(spec, n_max, extremal, schur, &gamma_vector)
                         : coeff_rows<lc::Complex>(spec, n_max, extremal, schur, &gamma_vector);
  if (format == "json") {
    lc::json j;
    j["config"] = config;
    j["spec"] = lc::spec_to_json(spec);
    j["backend"] = backend;
    j["source"] = extremal ? "extremal" : "schwarz";
    j["gamma_vector"] = gamma_vector;
    lc::json arr = lc::json::array();
    for (const CoeffRow& r : rows) {
      lc::json row;
      row["n"] = r.n;
      row["gamma"] = r.gamma_text;
      row["abs"] = r.abs_gamma;
      row["bound"] = lc::bound_to_json(r.bound);
      if (r.bound.applicable) row["margin"] = r.bound.value - r.abs_gamma;
      arr.push_back(std::move(row));
    }
    j["rows"] = arr;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "# " << config << "\n";
    std::cout << "n,gamma,abs,bound,margin,sharp,applicable,citation,reason\n";
    for (const CoeffRow& r : rows) {
      std::cout << r.n << "," << r.gamma_text << "," << lc::format_double(r.abs_gamma) << ",";
      if (r.bound.applicable)
        std::cout << lc::format_double(r.bound.value) << ","
                  << lc::format_double(r.bound.value - r.abs_gamma) << ","
                  << (r.bound.sharp ? 1 : 0) << ",1," << r.bound.citation << ",";
      else
        std::cout << ",,,0," << r.bound.citation << "," << lc::csv_quote(r.bound.reason);
      std::cout << "\n";
    }
  } else {
    std::cout << "# " << config << "\n";
    std::cout << "  n  gamma_n                 |gamma_n|             bound                margin\n";
    for (const CoeffRow& r : rows) {
      std::ostringstream line;
      line << "  " << r.n << "  " << r.gamma_text;
      auto pad_to = [&line](size_t col) {
        size_t n = line.str().size();
        do line << ' '; while (++n < col);
      };
      pad_to(28);
      line << lc::format_double(r.abs_gamma);
      pad_to(50);
      if (r.bound.applicable) {
        line << lc::format_double(r.bound.value) << (r.bound.sharp ? " (sharp)" : "")
             << (r.bound.conjectural ? " (conjectural)" : "");
        pad_to(72);
        line << lc::format_double(r.bound.value - r.abs_gamma);
      } else {
        line << "n/a: " << r.bound.reason;
      }
      std::cout << line.str() << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify ----

int emit_verify(const lc::BoundReport& rep, const std::string& format, const std::string& config,
                bool timing) {
  if (format == "json") {
    lc::json j = lc::report_to_json(rep, timing);
    j["config"] = config;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "# " << config << "\n" << lc::report_to_csv(rep, timing);
  } else {
    std::cout << "# " << config << "\n";
    auto show = [](const char* family, const std::vector<lc::GammaRow>& rows) {
      for (const auto& r : rows) {
        if (!r.bound.applicable) {
          std::cout << family << " n=" << r.n << "  bound n/a (" << r.bound.reason << ")\n";
          continue;
        }
        std::cout << family << " n=" << r.n << "  max|gamma|=" << lc::format_double(r.max_abs_gamma)
                  << "  bound=" << lc::format_double(r.bound.value)
                  << "  margin=" << lc::format_double(r.margin)
                  << (r.bound.conjectural ? "  [conjectural]" : "") << "\n";
      }
    };
    show("gamma", rep.gamma_rows);
    show("prior", rep.prior_rows);
    show("conjecture", rep.conjecture_rows);
    for (const auto& r : rep.energy_rows)
      std::cout << "energy[" << r.weight << "]  max=" << lc::format_double(r.max_observed)
                << "  bound=" << lc::format_double(r.bound.value)
                << "  margin=" << lc::format_double(r.margin)
                << (r.bound.conjectural ? "  [conjectural]" : "") << "\n";
    std::cout << "violations: " << rep.violations.size() << "  findings: " << rep.findings.size()
              << "\n";
    if (timing) std::cout << "wall_seconds: " << lc::format_double(rep.wall_seconds) << "\n";
  }
  if (!rep.violations.empty()) return kExitViolation;
  if (!rep.findings.empty()) return kExitFinding;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "log-coefficient bounds for classes of univalent functions\n"
      "LOGCOEFF_THREADS caps the verification worker count (results never depend on it)."};
  app.require_subcommand(1);

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "gamma_n table with bounds and margins");
  SpecOptions coeffs_spec;
  add_spec_options(coeffs, coeffs_spec);
  int coeffs_n = 8;
  bool coeffs_extremal = false;
  std::string coeffs_schwarz, coeffs_format = "pretty", coeffs_backend = "auto";
  coeffs->add_option("--n", coeffs_n, "indices 1..n (default 8)")->check(CLI::Range(1, 256));
  coeffs->add_flag("--extremal", coeffs_extremal, "use the class extremal (default if no --schwarz)");
  coeffs->add_option("--schwarz", coeffs_schwarz, "JSON Schwarz file {\"schur\": [[re,im],...]}");
  coeffs->add_option("--format", coeffs_format, "pretty | json | csv");
  coeffs->add_option("--backend", coeffs_backend, "auto | exact | float");

  // verify
  auto* verify = app.add_subcommand("verify", "fuzz all applicable bounds on random members");
  SpecOptions verify_spec;
  add_spec_options(verify, verify_spec);
  int verify_n = 32, verify_depth = 6;
  long verify_samples = 1000;
  std::uint64_t verify_seed = 0;
  std::string verify_format = "pretty", verify_backend = "auto";
  bool verify_timing = false;
  verify->add_option("--n", verify_n, "check indices 1..n (default 32)")->check(CLI::Range(1, 256));
  verify->add_option("--samples", verify_samples, "random members to draw (default 1000)");
  verify->add_option("--seed", verify_seed, "RNG seed (default 0)");
  verify->add_option("--depth", verify_depth, "Schur parameters per sample (default 6)");
  verify->add_option("--format", verify_format, "pretty | json | csv");
  verify->add_option("--backend", verify_backend, "auto | exact | float");
  verify->add_flag("--timing", verify_timing, "include wall-clock in the output");

  // phi
  auto* phi = app.add_subcommand("phi", "Prokhorov-Szynal functional Phi(mu, upsilon)");
  double phi_mu = 0.0, phi_ups = 0.0;
  std::string phi_format = "pretty";
  phi->add_option("--mu", phi_mu, "mu")->required();
  phi->add_option("--upsilon", phi_ups, "upsilon")->required();
  phi->add_option("--format", phi_format, "pretty | json");

  // dilog
  auto* dl = app.add_subcommand("dilog", "dilogarithm Li2(x) on [-1, 1]");
  double dl_x = 0.0;
  std::string dl_format = "pretty";
  dl->add_option("--x", dl_x, "argument in [-1, 1]")->required();
  dl->add_option("--format", dl_format, "pretty | json");

  // explore
  auto* explore = app.add_subcommand("explore", "stress-test the conjectured bounds");
  std::string explore_which, explore_format = "json";
  long explore_budget = 20000;
  std::uint64_t explore_seed = 0;
  explore->add_option("--conjecture", explore_which, "F3_pointwise | F3_energy | G_general")
      ->required();
  explore->add_option("--budget", explore_budget, "objective evaluations (default 20000)");
  explore->add_option("--seed", explore_seed, "RNG seed (default 0)");
  explore->add_option("--format", explore_format, "json | pretty");

  // table
  auto* table = app.add_subcommand("table", "dump every bound formula for a class across n");
  SpecOptions table_spec;
  add_spec_options(table, table_spec);
  int table_n = 10;
  std::string table_format = "csv";
  table->add_option("--n", table_n, "indices 1..n (default 10)")->check(CLI::Range(1, 256));
  table->add_option("--format", table_format, "csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (coeffs->parsed()) {
      const lc::ClassSpec spec = resolve_spec(coeffs_spec);
      SchwarzInput schwarz;
      const bool extremal = coeffs_schwarz.empty();
      if (!extremal) schwarz = load_schwarz(coeffs_schwarz);
      const std::string backend = resolve_backend(coeffs_backend, spec, schwarz.real_only);
      std::ostringstream extra;
      extra << "n=" << coeffs_n << " source=" << (extremal ? "extremal" : coeffs_schwarz);
      return emit_coeffs(spec, backend, coeffs_n, extremal, schwarz.schur, coeffs_format,
                         config_line("coeffs", spec, backend, extra.str()));
    }

    if (verify->parsed()) {
      const lc::ClassSpec spec = resolve_spec(verify_spec);
      const std::string backend = resolve_backend(verify_backend, spec, true);
      lc::SampleOptions opts;
      opts.depth = verify_depth;
      const lc::BoundReport rep =
          backend == "exact" ? lc::verify_bounds<lc::Rational>(spec, verify_n, verify_samples,
                                                               verify_seed, opts)
                             : lc::verify_bounds<lc::Complex>(spec, verify_n, verify_samples,
                                                              verify_seed, opts);
      std::ostringstream extra;
      extra << "n=" << verify_n << " samples=" << verify_samples << " seed=" << verify_seed
            << " depth=" << verify_depth;
      return emit_verify(rep, verify_format, config_line("verify", spec, backend, extra.str()),
                         verify_timing);
    }

    if (phi->parsed()) {
      const lc::PsPhi r = lc::ps_phi(phi_mu, phi_ups);
      if (phi_format == "json") {
        lc::json j;
        j["mu"] = phi_mu;
        j["upsilon"] = phi_ups;
        j["covered"] = r.covered;
        j["in_D2"] = r.in_d2;
        j["in_D6"] = r.in_d6;
        j["in_D9"] = r.in_d9;
        if (r.covered) {
          j["value"] = r.value;
          j["region"] = r.region;
        }
        std::cout << j.dump(2) << "\n";
      } else if (r.covered) {
        std::cout << "Phi(" << lc::format_double(phi_mu) << ", " << lc::format_double(phi_ups)
                  << ") = " << lc::format_double(r.value) << "  region " << r.region << "\n";
      } else {
        std::cout << "uncovered (mu, upsilon): only regions D2, D6, D9 carry a closed form here\n"
                  << "  D2 needs 1/2 <= |mu| <= 2 and (4/27)(|mu|+1)^3 - (|mu|+1) <= upsilon <= 1\n"
                  << "  D6 needs 2 <= |mu| <= 4 and upsilon >= (mu^2+8)/12\n"
                  << "  D9 needs |mu| >= 2 and -(2/3)(|mu|+1) <= upsilon <= 2|mu|(|mu|+1)/(mu^2+2|mu|+4)\n";
      }
      return r.covered ? kExitOk : kExitInapplicable;
    }

    if (dl->parsed()) {
      double v;
      try {
        v = lc::dilog(dl_x);
      } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitInapplicable;
      }
      if (dl_format == "json") {
        lc::json j;
        j["x"] = dl_x;
        j["dilog"] = v;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << lc::format_double(v) << "\n";
      }
      return kExitOk;
    }

    if (explore->parsed()) {
      lc::ConjectureKind kind;
      if (explore_which == "F3_pointwise")
        kind = lc::ConjectureKind::F3_pointwise;
      else if (explore_which == "F3_energy")
        kind = lc::ConjectureKind::F3_energy;
      else if (explore_which == "G_general")
        kind = lc::ConjectureKind::G_general;
      else
        throw std::invalid_argument("unknown conjecture \"" + explore_which + "\"");
      const lc::ConjectureReport rep = lc::conjecture_report(kind, explore_budget, explore_seed);
      if (explore_format == "pretty") {
        std::cout << "# logcoeff explore | conjecture=" << lc::conjecture_name(rep.kind)
                  << " budget=" << rep.budget << " seed=" << rep.seed << "\n";
        std::cout << "# " << rep.note << "\n";
        for (const auto& r : rep.rows)
          std::cout << r.label << "  observed=" << lc::format_double(r.observed)
                    << "  bound=" << lc::format_double(r.bound)
                    << "  margin=" << lc::format_double(r.margin)
                    << (r.violated ? "  VIOLATED (finding)" : "") << "\n";
        std::cout << (rep.finding ? "finding: yes\n" : "finding: no\n");
      } else {
        lc::json j = lc::conjecture_to_json(rep);
        j["config"] = std::string("logcoeff explore | conjecture=") + lc::conjecture_name(rep.kind);
        std::cout << j.dump(2) << "\n";
      }
      return rep.finding ? kExitFinding : kExitOk;
    }

    if (table->parsed()) {
      const lc::ClassSpec spec = resolve_spec(table_spec);
      const auto rows = lc::bound_table(spec, table_n);
      if (table_format == "json") {
        lc::json j;
        j["config"] = config_line("table", spec, "n/a", "n=" + std::to_string(table_n));
        j["spec"] = lc::spec_to_json(spec);
        lc::json arr = lc::json::array();
        for (const auto& row : rows) {
          lc::json r;
          r["quantity"] = row.quantity;
          r["n"] = row.n;
          r["bound"] = lc::bound_to_json(row.bound);
          arr.push_back(std::move(r));
        }
        j["rows"] = arr;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "# " << config_line("table", spec, "n/a", "n=" + std::to_string(table_n))
                  << "\n"
                  << lc::bound_table_csv(spec, rows);
      }
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
