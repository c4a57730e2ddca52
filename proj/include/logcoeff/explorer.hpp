#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "logcoeff/bounds.hpp"
#include "logcoeff/classes.hpp"
#include "logcoeff/logcoeff.hpp"
#include "logcoeff/schwarz.hpp"

namespace logcoeff {

// gamma_1..gamma_{n_max} of the member driven by a Schwarz function (series built one
// order past n_max so the top coefficient is meaningful).
template <class K>
GammaVector<K> member_gammas(const ClassSpec& spec, const Schwarz<K>& schwarz, int n_max) {
  GammaVector<K> g = log_coefficients(member_from_schwarz(spec, schwarz, n_max + 1), n_max);
  g.source = spec.describe() + " member";
  return g;
}

struct SampleOptions {
  int depth = 6;                    // Schur parameters per sample
  double boundary_fraction = 0.2;   // fraction of terminal-unimodular (Blaschke) samples
};

struct GammaRow {
  int n = 0;
  double max_abs_gamma = 0.0;
  long argmax_trial = -1;
  BoundValue bound;
  double margin = 0.0;  // bound - max observed, when applicable
};

struct EnergyRow {
  std::string weight;
  double max_observed = 0.0;  // truncated partial sum: a lower estimate of the left side
  long argmax_trial = -1;
  BoundValue bound;
  double margin = 0.0;
};

struct Violation {
  long trial = -1;
  std::string quantity;  // "gamma[n]" or "energy[weight]"
  double observed = 0.0;
  double bound = 0.0;
  std::string citation;
  std::vector<Complex> schur;  // offending Schur parameters
};

// Margins are recorded for every applicable bound; `violations` holds breaches of
// proven bounds (bugs by definition), `findings` breaches of conjectural ones.
struct BoundReport {
  ClassSpec spec;
  std::string backend;
  int n_max = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  int depth = 0;
  double tol = 0.0;
  std::vector<GammaRow> gamma_rows;        // theorem-route bounds
  std::vector<GammaRow> prior_rows;        // G(c) prior bound
  std::vector<GammaRow> conjecture_rows;   // labeled conjectural
  std::vector<EnergyRow> energy_rows;
  std::vector<Violation> violations;
  std::vector<Violation> findings;
  double wall_seconds = 0.0;

  bool clean() const { return violations.empty(); }
};

template <class K>
BoundReport verify_bounds(const ClassSpec& spec, int n_max, long samples, std::uint64_t seed,
                          SampleOptions opts = {});

struct SearchResult {
  double best = 0.0;
  std::vector<Complex> best_schur;
  double best_rotation = 0.0;
  std::vector<std::pair<long, double>> trajectory;  // (evaluations used, incumbent value)
  long budget_used = 0;
  std::uint64_t seed = 0;
};

// Maximizes |gamma_n| over Schur parameter vectors (dimension <= n+2) and a rotation of
// the driving variable, by restarts plus per-coordinate golden-section refinement.
// Float backend.
SearchResult search_extremal(const ClassSpec& spec, int n, long budget, std::uint64_t seed);

// Maximizes |c3 + mu c1 c2 + ups c1^3| over 3-deep Schur parametrizations and compares
// against the closed form where (mu, ups) is covered.
struct PsOracleResult {
  double best = 0.0;
  std::vector<Complex> best_schur;
  bool covered = false;
  double phi = 0.0;       // closed-form value when covered
  std::string region;
  long budget_used = 0;
};
PsOracleResult ps_oracle(double mu, double upsilon, long budget, std::uint64_t seed);

enum class ConjectureKind { F3_pointwise, F3_energy, G_general };
const char* conjecture_name(ConjectureKind k);

struct ConjectureRow {
  std::string label;
  double observed = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool violated = false;
};

struct ConjectureReport {
  ConjectureKind kind = ConjectureKind::F3_pointwise;
  long budget = 0;
  std::uint64_t seed = 0;
  std::vector<ConjectureRow> rows;
  bool finding = false;  // any violated row; a finding, not a bug
  std::string note = "conjectural comparison; a violation would be a finding, not a bug";
};

ConjectureReport conjecture_report(ConjectureKind which, long budget, std::uint64_t seed);

namespace detail {

std::uint64_t splitmix64(std::uint64_t x);
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
}
// worker count: min(hardware, LOGCOEFF_THREADS cap), at least 1
int worker_count();

}  // namespace detail

extern template BoundReport verify_bounds<Rational>(const ClassSpec&, int, long, std::uint64_t,
                                                    SampleOptions);
extern template BoundReport verify_bounds<Complex>(const ClassSpec&, int, long, std::uint64_t,
                                                   SampleOptions);

}  // namespace logcoeff
