#include "logcoeff/json_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace logcoeff {

namespace {

Rational rational_from_json(const json& j, const char* field) {
  if (j.is_string()) {
    auto q = parse_rational(j.get<std::string>());
    if (!q) throw std::invalid_argument(std::string("bad rational in field ") + field);
    return *q;
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number()) return Rational(j.get<double>());  // exact binary value
  throw std::invalid_argument(std::string("bad rational in field ") + field);
}

json rational_to_json(const Rational& q) { return to_string(q); }

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

json spec_to_json(const ClassSpec& spec) {
  json j;
  j["kind"] = kind_name(spec.kind);
  switch (spec.kind) {
    case ClassKind::janowski:
      j["A"] = rational_to_json(spec.A_re);
      if (spec.A_im != 0) j["A_im"] = rational_to_json(spec.A_im);
      j["B"] = rational_to_json(spec.B);
      break;
    case ClassKind::spiral:
      j["alpha"] = spec.alpha;
      j["beta"] = spec.beta;
      break;
    case ClassKind::strongly_starlike:
      j["alpha"] = rational_to_json(spec.ss_alpha);
      break;
    case ClassKind::F:
    case ClassKind::G:
      j["c"] = rational_to_json(spec.c);
      break;
  }
  j["twist"] = spec.twist;
  if (spec.rotation != 0.0) j["rotation"] = spec.rotation;
  return j;
}

ClassSpec spec_from_json(const json& j) {
  if (!j.contains("kind")) throw std::invalid_argument("spec: missing \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  ClassSpec spec;
  if (kind == "janowski") {
    spec.kind = ClassKind::janowski;
    spec.A_re = rational_from_json(j.at("A"), "A");
    if (j.contains("A_im")) spec.A_im = rational_from_json(j.at("A_im"), "A_im");
    spec.B = rational_from_json(j.at("B"), "B");
  } else if (kind == "spiral") {
    spec.kind = ClassKind::spiral;
    spec.alpha = j.at("alpha").get<double>();
    spec.beta = j.at("beta").get<double>();
  } else if (kind == "strongly_starlike" || kind == "ss") {
    spec.kind = ClassKind::strongly_starlike;
    spec.ss_alpha = rational_from_json(j.at("alpha"), "alpha");
  } else if (kind == "F") {
    spec.kind = ClassKind::F;
    spec.c = rational_from_json(j.at("c"), "c");
  } else if (kind == "G") {
    spec.kind = ClassKind::G;
    spec.c = rational_from_json(j.at("c"), "c");
  } else {
    throw std::invalid_argument("spec: unknown kind \"" + kind + "\"");
  }
  if (j.contains("twist")) spec.twist = j.at("twist").get<int>();
  if (j.contains("rotation")) spec.rotation = j.at("rotation").get<double>();
  spec.validate();
  return spec;
}

json schur_to_json(const std::vector<Complex>& schur) {
  json arr = json::array();
  for (const Complex& lam : schur) arr.push_back({lam.real(), lam.imag()});
  return json{{"schur", arr}};
}

std::vector<Complex> schur_from_json(const json& j) {
  if (!j.contains("schur") || !j.at("schur").is_array())
    throw std::invalid_argument("schwarz: expected {\"schur\": [[re, im], ...]}");
  std::vector<Complex> out;
  for (const auto& item : j.at("schur")) {
    if (item.is_array() && item.size() == 2)
      out.emplace_back(item[0].get<double>(), item[1].get<double>());
    else if (item.is_number())
      out.emplace_back(item.get<double>(), 0.0);
    else
      throw std::invalid_argument("schwarz: entries must be [re, im] pairs or numbers");
  }
  return out;
}

json bound_to_json(const BoundValue& b) {
  json j;
  j["applicable"] = b.applicable;
  if (!b.applicable) {
    j["reason"] = b.reason;
  } else {
    j["value"] = b.value;
    if (b.exact) j["exact"] = to_string(*b.exact);
    j["sharp"] = b.sharp;
    j["conjectural"] = b.conjectural;
  }
  j["citation"] = b.citation;
  return j;
}

json gamma_to_json(const GammaVector<Complex>& g) {
  json arr = json::array();
  for (const Complex& v : g.values) arr.push_back({v.real(), v.imag()});
  return arr;
}

json gamma_to_json(const GammaVector<Rational>& g) {
  json arr = json::array();
  for (const Rational& v : g.values) arr.push_back(to_string(v));
  return arr;
}

namespace {

json gamma_rows_to_json(const std::vector<GammaRow>& rows) {
  json arr = json::array();
  for (const GammaRow& r : rows) {
    json j;
    j["n"] = r.n;
    j["max_abs_gamma"] = r.max_abs_gamma;
    j["argmax_trial"] = r.argmax_trial;
    j["bound"] = bound_to_json(r.bound);
    if (r.bound.applicable) j["margin"] = r.margin;
    arr.push_back(std::move(j));
  }
  return arr;
}

json violations_to_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const Violation& v : vs) {
    json j;
    j["trial"] = v.trial;
    j["quantity"] = v.quantity;
    j["observed"] = v.observed;
    j["bound"] = v.bound;
    j["citation"] = v.citation;
    json schur = json::array();
    for (const Complex& lam : v.schur) schur.push_back({lam.real(), lam.imag()});
    j["schur"] = schur;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

json report_to_json(const BoundReport& rep, bool with_timing) {
  json j;
  j["spec"] = spec_to_json(rep.spec);
  j["backend"] = rep.backend;
  j["n_max"] = rep.n_max;
  j["samples"] = rep.samples;
  j["seed"] = rep.seed;
  j["depth"] = rep.depth;
  j["tolerance"] = rep.tol;
  j["gamma"] = gamma_rows_to_json(rep.gamma_rows);
  if (!rep.prior_rows.empty()) j["gamma_prior"] = gamma_rows_to_json(rep.prior_rows);
  if (!rep.conjecture_rows.empty()) j["gamma_conjecture"] = gamma_rows_to_json(rep.conjecture_rows);
  json energies = json::array();
  for (const EnergyRow& r : rep.energy_rows) {
    json e;
    e["weight"] = r.weight;
    e["max_observed"] = r.max_observed;
    e["argmax_trial"] = r.argmax_trial;
    e["bound"] = bound_to_json(r.bound);
    e["margin"] = r.margin;
    energies.push_back(std::move(e));
  }
  j["energy"] = energies;
  j["violations"] = violations_to_json(rep.violations);
  j["findings"] = violations_to_json(rep.findings);
  if (with_timing) j["wall_seconds"] = rep.wall_seconds;
  return j;
}

std::string report_to_csv(const BoundReport& rep, bool with_timing) {
  std::ostringstream os;
  os << "# spec=" << rep.spec.describe() << "\n";
  os << "# backend=" << rep.backend << " n_max=" << rep.n_max << " samples=" << rep.samples
     << " seed=" << rep.seed << " depth=" << rep.depth << " tol=" << format_double(rep.tol) << "\n";
  if (with_timing) os << "# wall_seconds=" << format_double(rep.wall_seconds) << "\n";
  os << "family,index,max_observed,bound,margin,sharp,conjectural,applicable,citation,reason\n";
  auto emit_gamma = [&os](const char* family, const std::vector<GammaRow>& rows) {
    for (const GammaRow& r : rows) {
      os << family << "," << r.n << "," << format_double(r.max_abs_gamma) << ",";
      if (r.bound.applicable)
        os << format_double(r.bound.value) << "," << format_double(r.margin) << ","
           << (r.bound.sharp ? 1 : 0) << "," << (r.bound.conjectural ? 1 : 0) << ",1,"
           << r.bound.citation << ",";
      else
        os << ",,,,0," << r.bound.citation << "," << csv_quote(r.bound.reason);
      os << "\n";
    }
  };
  emit_gamma("gamma", rep.gamma_rows);
  emit_gamma("gamma_prior", rep.prior_rows);
  emit_gamma("gamma_conjecture", rep.conjecture_rows);
  for (const EnergyRow& r : rep.energy_rows) {
    os << "energy," << r.weight << "," << format_double(r.max_observed) << ","
       << format_double(r.bound.value) << "," << format_double(r.margin) << ","
       << (r.bound.sharp ? 1 : 0) << "," << (r.bound.conjectural ? 1 : 0) << ",1,"
       << r.bound.citation << ",\n";
  }
  for (const Violation& v : rep.violations)
    os << "violation," << v.quantity << "," << format_double(v.observed) << ","
       << format_double(v.bound) << ",,,,1," << v.citation << ",trial=" << v.trial << "\n";
  for (const Violation& v : rep.findings)
    os << "finding," << v.quantity << "," << format_double(v.observed) << ","
       << format_double(v.bound) << ",,,,1," << v.citation << ",trial=" << v.trial << "\n";
  return os.str();
}

json search_to_json(const SearchResult& res) {
  json j;
  j["backend"] = "float";
  j["best"] = res.best;
  j["best_schur"] = schur_to_json(res.best_schur).at("schur");
  j["best_rotation"] = res.best_rotation;
  j["budget_used"] = res.budget_used;
  j["seed"] = res.seed;
  json traj = json::array();
  for (const auto& [evals, value] : res.trajectory) traj.push_back({evals, value});
  j["trajectory"] = traj;
  return j;
}

json ps_oracle_to_json(const PsOracleResult& res, double mu, double upsilon) {
  json j;
  j["backend"] = "float";
  j["mu"] = mu;
  j["upsilon"] = upsilon;
  j["best"] = res.best;
  j["best_schur"] = schur_to_json(res.best_schur).at("schur");
  j["budget_used"] = res.budget_used;
  j["covered"] = res.covered;
  if (res.covered) {
    j["phi"] = res.phi;
    j["region"] = res.region;
    j["margin"] = res.phi - res.best;
  }
  return j;
}

json conjecture_to_json(const ConjectureReport& rep) {
  json j;
  j["backend"] = "float";
  j["conjecture"] = conjecture_name(rep.kind);
  j["budget"] = rep.budget;
  j["seed"] = rep.seed;
  j["note"] = rep.note;
  j["finding"] = rep.finding;
  json rows = json::array();
  for (const ConjectureRow& r : rep.rows) {
    json row;
    row["label"] = r.label;
    row["observed"] = r.observed;
    row["bound"] = r.bound;
    row["margin"] = r.margin;
    row["violated"] = r.violated;
    rows.push_back(std::move(row));
  }
  j["rows"] = rows;
  return j;
}

std::string bound_table_csv(const ClassSpec& spec, const std::vector<BoundTableRow>& rows) {
  std::ostringstream os;
  os << "class,params,quantity,n,bound,exact,sharp,conjectural,applicable,citation,reason\n";
  const std::string params = spec.describe();
  for (const BoundTableRow& row : rows) {
    os << kind_name(spec.kind) << "," << csv_quote(params) << "," << row.quantity << ","
       << row.n << ",";
    if (row.bound.applicable) {
      os << format_double(row.bound.value) << ","
         << (row.bound.exact ? to_string(*row.bound.exact) : "") << ","
         << (row.bound.sharp ? 1 : 0) << "," << (row.bound.conjectural ? 1 : 0) << ",1,"
         << row.bound.citation << ",";
    } else {
      os << ",,,,0," << row.bound.citation << "," << csv_quote(row.bound.reason);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace logcoeff
