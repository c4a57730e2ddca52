#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "logcoeff/bounds.hpp"
#include "logcoeff/classes.hpp"
#include "logcoeff/explorer.hpp"
#include "logcoeff/logcoeff.hpp"

namespace logcoeff {

using json = nlohmann::json;

// ClassSpec wire format: {"kind": "...", <params>, "twist": n, "rotation": theta}.
// Rational parameters accept JSON numbers or exact "p/q" / decimal strings.
json spec_to_json(const ClassSpec& spec);
ClassSpec spec_from_json(const json& j);

// Schwarz function wire format: {"schur": [[re, im], ...]}.
json schur_to_json(const std::vector<Complex>& schur);
std::vector<Complex> schur_from_json(const json& j);

json bound_to_json(const BoundValue& b);

// GammaVector wire format: array of [re, im] (float) or "p/q" strings (exact).
json gamma_to_json(const GammaVector<Complex>& g);
json gamma_to_json(const GammaVector<Rational>& g);

json report_to_json(const BoundReport& rep, bool with_timing = false);
std::string report_to_csv(const BoundReport& rep, bool with_timing = false);

json search_to_json(const SearchResult& res);
json ps_oracle_to_json(const PsOracleResult& res, double mu, double upsilon);
json conjecture_to_json(const ConjectureReport& rep);

// CSV columns: class,params,n,bound,sharp,applicable,citation (+quantity,reason)
std::string bound_table_csv(const ClassSpec& spec, const std::vector<BoundTableRow>& rows);

std::string format_double(double x);  // fixed 17-significant-digit form
std::string csv_quote(const std::string& s);

}  // namespace logcoeff
