#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logcoeff/classes.hpp"
#include "logcoeff/logcoeff.hpp"
#include "logcoeff/rational.hpp"

namespace logcoeff {

// Right-hand side of a coefficient or energy inequality. `exact` is set whenever the
// closed form is rational; `conjectural` bounds are labeled, never treated as proven.
struct BoundValue {
  bool applicable = true;
  std::string reason;  // set when not applicable
  double value = 0.0;
  std::optional<Rational> exact;
  bool sharp = false;
  bool conjectural = false;
  std::string citation;

  static BoundValue not_applicable(std::string why, std::string cite = "") {
    BoundValue b;
    b.applicable = false;
    b.reason = std::move(why);
    b.citation = std::move(cite);
    return b;
  }
};

// Li2(x) = sum x^n/n^2 on [-1,1], absolute accuracy 1e-14.
double dilog(double x);
// Li2(x)/x with the limit value 1 at x = 0.
double dilog_over_x(double x);

// A_n(alpha) = sum_{k=1}^n C(n-1,k-1) C(alpha,k) 2^k, evaluated exactly in rational
// arithmetic (the alternating sum cancels catastrophically in double past n ~ 30).
double a_n_alpha(int n, double alpha);
Rational a_n_alpha_exact(int n, const Rational& alpha);

// Sharp bound for |c3 + mu c1 c2 + ups c1^3| over Schwarz functions, on the three
// parameter regions quoted below; other regions of the original lemma are uncovered.
struct PsPhi {
  bool covered = false;
  double value = 0.0;
  std::string region;  // "D2", "D6" or "D9"
  bool in_d2 = false, in_d6 = false, in_d9 = false;
};
PsPhi ps_phi(double mu, double upsilon);

enum class IWhich { I2, I3 };

// Envelope for the |I2|/|I3| factors in the fourth/fifth coefficient bounds, gated by
// the c-ranges where each branch is justified; the in-between interval carries no bound.
struct EnvelopeValue {
  bool applicable = true;
  double value = 0.0;
  std::string branch;  // "D6" (|I| <= upsilon) or "D9"
  std::string reason;
};
EnvelopeValue i_envelope(double c, IWhich which);

// c-range edges: sharpness edges have closed forms, the D9 right edges are stored as
// the quoted decimal literals (no closed form is stated for them).
inline const Rational& i2_sharp_edge() {
  static const Rational e(144, 55);
  return e;
}
inline const Rational& i3_sharp_edge() {
  static const Rational e(80, 61);
  return e;
}
inline constexpr double kI2EnvelopeEdge = 2.71569;
inline constexpr double kI3EnvelopeEdge = 1.35541;

// Per-index bound |gamma_n| <= ... for the class; theorem route (conjectures only where
// no theorem exists, labeled conjectural).
BoundValue gamma_bound(const ClassSpec& spec, int n);
// Earlier proven bound c/(2(c+1)n) for G(c), all n.
BoundValue prior_gamma_bound(const ClassSpec& spec, int n);
// Conjectured bounds: (1 - 2^{-(n+1)})/n for F(3), c/(2n(n+1)) for G(c).
BoundValue conjecture_gamma_bound(const ClassSpec& spec, int n);

// Energy bound sum w_n |gamma_n|^2 <= ... for the weight; t applies to (n+1)^t.
BoundValue energy_bound(const ClassSpec& spec, Weight weight, double t = 0.0);

// sum_n p_n/n^2 with p_n = (n/(n+1))^2, i.e. pi^2/6 - 1; valid for every class here.
double roth_constant();

// pi^2/6 + Li2(1/4)/4 - Li2(1/2): the conjectured energy constant for F(3).
double f3_energy_constant();

// One row of the exported bound table.
struct BoundTableRow {
  std::string quantity;  // "gamma[n]" or "energy[weight]"
  int n = 0;             // index for gamma rows, 0 for energy rows
  BoundValue bound;
};
std::vector<BoundTableRow> bound_table(const ClassSpec& spec, int n_max);

namespace detail {
// sum_{n>N} n^{-s} by Euler-Maclaurin (s > 1).
double hurwitz_tail(double s, long N);
// zeta(s) - 1 for s > 1.
double zeta_minus_one(double s);
// sum_{n>=1} (n+1)^t q^n / n^2 for q in (0,1]; q = 1 requires t < 1.
double weighted_dilog_sum(double t, double q);
// sum_{n>=1} A_n(alpha)^2 / n^2.
double ss_energy_series(double alpha);
}  // namespace detail

}  // namespace logcoeff
