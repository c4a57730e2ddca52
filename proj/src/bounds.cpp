#include "logcoeff/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace logcoeff {

namespace {

constexpr double kPi = 3.14159265358979323846;

double basel() { return kPi * kPi / 6.0; }

// direct summation; caller guarantees |x| <= 0.999 so the geometric tail bound closes
double dilog_direct(double x) {
  double sum = 0.0, xp = 1.0;
  const double ax = std::abs(x);
  for (long n = 1; n < 200000; ++n) {
    xp *= x;
    sum += xp / (static_cast<double>(n) * n);
    const double tail = std::pow(ax, n + 1) / ((n + 1.0) * (n + 1.0) * (1.0 - ax));
    if (tail < 1e-16) break;
  }
  return sum;
}

Rational pow2_exact(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return Rational(p);
}

std::string gap_reason(IWhich which) {
  return which == IWhich::I2 ? "no bound stated on (2.61818, 2.71569)"
                             : "no bound stated on (1.31148, 1.35541)";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Gap-interval queries fail loud but still show what the two neighboring branches
// would give, clearly marked as not asserted.
std::string gap_reason_with_neighbors(IWhich which, double c) {
  double poly, envelope;
  if (which == IWhich::I2) {
    const double u = 1.0 + c / 18.0 - c * c / 72.0;
    poly = (c + 2.0 * c * c / 9.0 + c * c / 2.0 * u) / 40.0;
    const double i2 = (54.0 + c) / 27.0 * std::sqrt(4.0 * (54.0 + c) / (3.0 * (288.0 + 8.0 * c - c * c)));
    envelope = (c + 2.0 * c * c / 9.0 + c * c / 2.0 * i2) / 40.0;
  } else {
    const double u = 1.0 + c / 10.0 - c * c / 20.0;
    poly = (c + c * c / 2.0 + c * c * c / 24.0 + 5.0 * c * c / 12.0 * u) / 60.0;
    const double i3 = (30.0 + c) / 15.0 * std::sqrt(2.0 * (30.0 + c) / (3.0 * (80.0 + 4.0 * c - c * c)));
    envelope = (c + c * c / 2.0 + c * c * c / 24.0 + 5.0 * c * c / 12.0 * i3) / 60.0;
  }
  return gap_reason(which) + "; neighboring formulas, not asserted: polynomial branch " +
         fmt(poly) + ", envelope branch " + fmt(envelope);
}

}  // namespace

double dilog(double x) {
  if (!(x >= -1.0 && x <= 1.0)) throw std::domain_error("dilog: argument must lie in [-1, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return basel();
  if (x == -1.0) return -kPi * kPi / 12.0;
  if (x > 0.999) {
    // Li2(x) + Li2(1-x) = pi^2/6 - log(x) log(1-x)
    return basel() - std::log(x) * std::log1p(-x) - dilog_direct(1.0 - x);
  }
  if (x < -0.999) {
    // Li2(x) + Li2(-x) = Li2(x^2)/2
    return 0.5 * dilog(x * x) - dilog(-x);
  }
  return dilog_direct(x);
}

double dilog_over_x(double x) {
  if (x == 0.0) return 1.0;
  return dilog(x) / x;
}

Rational a_n_alpha_exact(int n, const Rational& alpha) {
  if (n < 1) throw std::invalid_argument("a_n_alpha: n >= 1 required");
  Rational sum = 0;
  Rational binom_n = 1;      // C(n-1, k-1)
  Rational binom_a = alpha;  // C(alpha, k)
  Rational pow2 = 2;         // 2^k
  for (int k = 1; k <= n; ++k) {
    sum += binom_n * binom_a * pow2;
    binom_n = binom_n * Rational(n - k) / Rational(k);
    binom_a = binom_a * (alpha - Rational(k)) / Rational(k + 1);
    pow2 *= 2;
  }
  return sum;
}

double a_n_alpha(int n, double alpha) { return to_double(a_n_alpha_exact(n, Rational(alpha))); }

PsPhi ps_phi(double mu, double upsilon) {
  const double m = std::abs(mu);
  PsPhi r;
  r.in_d2 = (0.5 <= m && m <= 2.0) && ((4.0 / 27.0) * std::pow(m + 1.0, 3) - (m + 1.0) <= upsilon) &&
            (upsilon <= 1.0);
  r.in_d6 = (2.0 <= m && m <= 4.0) && (upsilon >= (mu * mu + 8.0) / 12.0);
  r.in_d9 = (m >= 2.0) && (-(2.0 / 3.0) * (m + 1.0) <= upsilon) &&
            (upsilon <= 2.0 * m * (m + 1.0) / (mu * mu + 2.0 * m + 4.0));

  const double v2 = 1.0;
  const double v6 = std::abs(upsilon);
  const double v9 = (2.0 / 3.0) * (m + 1.0) * std::sqrt((m + 1.0) / (3.0 * (m + 1.0 + upsilon)));

  double value = 0.0;
  const char* region = nullptr;
  if (r.in_d2) {
    value = v2;
    region = "D2";
  }
  if (r.in_d6) {
    if (region && std::abs(value - v6) > 1e-12)
      throw std::logic_error("ps_phi: overlapping regions disagree");
    if (!region) {
      value = v6;
      region = "D6";
    }
  }
  if (r.in_d9) {
    if (region && std::abs(value - v9) > 1e-12)
      throw std::logic_error("ps_phi: overlapping regions disagree");
    if (!region) {
      value = v9;
      region = "D9";
    }
  }
  r.covered = (region != nullptr);
  if (r.covered) {
    r.value = value;
    r.region = region;
  }
  return r;
}

EnvelopeValue i_envelope(double c, IWhich which) {
  if (!(c > 0.0 && c <= 3.0)) throw std::domain_error("i_envelope: c must lie in (0, 3]");
  EnvelopeValue e;
  if (which == IWhich::I2) {
    if (c <= to_double(i2_sharp_edge())) {
      e.value = 1.0 + c / 18.0 - c * c / 72.0;
      e.branch = "D6";
      return e;
    }
    if (c > kI2EnvelopeEdge) {
      e.value = (54.0 + c) / 27.0 * std::sqrt(4.0 * (54.0 + c) / (3.0 * (288.0 + 8.0 * c - c * c)));
      e.branch = "D9";
      return e;
    }
  } else {
    if (c <= to_double(i3_sharp_edge())) {
      e.value = 1.0 + c / 10.0 - c * c / 20.0;
      e.branch = "D6";
      return e;
    }
    if (c > kI3EnvelopeEdge) {
      e.value = (30.0 + c) / 15.0 * std::sqrt(2.0 * (30.0 + c) / (3.0 * (80.0 + 4.0 * c - c * c)));
      e.branch = "D9";
      return e;
    }
  }
  e.applicable = false;
  e.reason = gap_reason(which);
  return e;
}

namespace {

BoundValue exact_bound(Rational v, bool sharp, std::string citation, bool conjectural = false) {
  BoundValue b;
  b.value = to_double(v);
  b.exact = std::move(v);
  b.sharp = sharp;
  b.conjectural = conjectural;
  b.citation = std::move(citation);
  return b;
}

BoundValue float_bound(double v, bool sharp, std::string citation, bool conjectural = false) {
  BoundValue b;
  b.value = v;
  b.sharp = sharp;
  b.conjectural = conjectural;
  b.citation = std::move(citation);
  return b;
}

// Main-theorem hypothesis for the janowski bounds: real A with -1 <= B < A <= 1.
// Complex A is a legal class parameter but the bounds are reported as outside the
// hypothesis, never as violated.
std::optional<BoundValue> janowski_gate(const ClassSpec& spec, const char* cite) {
  if (spec.has_complex_A())
    return BoundValue::not_applicable("outside theorem hypothesis (complex A)", cite);
  if (!(spec.B < spec.A_re && spec.A_re <= 1))
    return BoundValue::not_applicable("outside theorem hypothesis (-1 <= B < A <= 1 required)", cite);
  return std::nullopt;
}

BoundValue f_gamma_bound(const Rational& c, int n) {
  const Rational c2 = c * c;
  switch (n) {
    case 1:
      return exact_bound(c / 4, true, "F-gamma");
    case 2:
      return exact_bound((4 * c + c2) / 48, true, "F-gamma");
    case 3:
      return exact_bound((2 * c + c2) / 48, true, "F-gamma");
    case 4: {
      if (c <= i2_sharp_edge()) {
        // (1/40) [c + (c^2/18)(13 + c/2 - c^2/8)]
        Rational v = (c + (c2 / 18) * (Rational(13) + c / 2 - c2 / 8)) / 40;
        return exact_bound(std::move(v), true, "F-gamma");
      }
      if (to_double(c) > kI2EnvelopeEdge) {
        const double cd = to_double(c);
        const double i2 = i_envelope(cd, IWhich::I2).value;
        return float_bound((cd + 2.0 * cd * cd / 9.0 + cd * cd / 2.0 * i2) / 40.0, false,
                           "F-gamma-envelope");
      }
      return BoundValue::not_applicable(gap_reason_with_neighbors(IWhich::I2, to_double(c)),
                                        "F-gamma");
    }
    case 5: {
      if (c <= i3_sharp_edge()) {
        // (1/60) [c + (c^2/12)(11 + c - c^2/4)]
        Rational v = (c + (c2 / 12) * (Rational(11) + c - c2 / 4)) / 60;
        return exact_bound(std::move(v), true, "F-gamma");
      }
      if (to_double(c) > kI3EnvelopeEdge) {
        const double cd = to_double(c);
        const double i3 = i_envelope(cd, IWhich::I3).value;
        return float_bound(
            (cd + cd * cd / 2.0 + cd * cd * cd / 24.0 + 5.0 * cd * cd / 12.0 * i3) / 60.0, false,
            "F-gamma-envelope");
      }
      return BoundValue::not_applicable(gap_reason_with_neighbors(IWhich::I3, to_double(c)),
                                        "F-gamma");
    }
    default:
      if (c == 3) {
        Rational p = pow2_exact(n + 1);
        return exact_bound((Rational(1) - 1 / p) / n, false, "conjecture-F3", true);
      }
      return BoundValue::not_applicable("no bound stated for n >= 6 (conjecture covers only c = 3)",
                                        "F-gamma");
  }
}

}  // namespace

BoundValue gamma_bound(const ClassSpec& spec, int n) {
  spec.validate();
  if (n < 1) throw std::invalid_argument("gamma_bound: n >= 1 required");
  switch (spec.kind) {
    case ClassKind::janowski: {
      if (auto gate = janowski_gate(spec, "janowski-gamma")) return *gate;
      // (A-B)/(2n); B = 0 is the |zf'/f - 1| < A special case with the same value
      return exact_bound((spec.A_re - spec.B) / (2 * n), true,
                         spec.B == 0 ? "janowski-gamma-B0" : "janowski-gamma");
    }
    case ClassKind::spiral:
      return float_bound((1.0 - spec.beta) * std::cos(spec.alpha) / n, true, "spiral-gamma");
    case ClassKind::strongly_starlike:
      return exact_bound(spec.ss_alpha / n, true, "strongly-starlike-gamma");
    case ClassKind::F:
      return f_gamma_bound(spec.c, n);
    case ClassKind::G:
      if (n <= 3) return exact_bound(spec.c / (2 * n * (n + 1)), true, "G-gamma");
      return exact_bound(spec.c / (2 * n * (n + 1)), false, "conjecture-G", true);
  }
  throw std::logic_error("gamma_bound: unhandled kind");
}

BoundValue prior_gamma_bound(const ClassSpec& spec, int n) {
  spec.validate();
  if (n < 1) throw std::invalid_argument("prior_gamma_bound: n >= 1 required");
  if (spec.kind != ClassKind::G)
    return BoundValue::not_applicable("prior bound applies to G(c) only", "G-prior");
  return exact_bound(spec.c / (2 * (spec.c + 1) * n), false, "G-prior");
}

BoundValue conjecture_gamma_bound(const ClassSpec& spec, int n) {
  spec.validate();
  if (n < 1) throw std::invalid_argument("conjecture_gamma_bound: n >= 1 required");
  if (spec.kind == ClassKind::F && spec.c == 3) {
    Rational p = pow2_exact(n + 1);
    return exact_bound((Rational(1) - 1 / p) / n, false, "conjecture-F3", true);
  }
  if (spec.kind == ClassKind::G)
    return exact_bound(spec.c / (2 * n * (n + 1)), false, "conjecture-G", true);
  return BoundValue::not_applicable("no conjecture stated for this class", "conjecture");
}

double roth_constant() { return basel() - 1.0; }

double f3_energy_constant() { return basel() + 0.25 * dilog(0.25) - dilog(0.5); }

namespace detail {

double hurwitz_tail(double s, long N) {
  // sum_{n>N} n^{-s} = a^{1-s}/(s-1) + a^{-s}/2 + s a^{-s-1}/12
  //                    - s(s+1)(s+2) a^{-s-3}/720 + s..(s+4) a^{-s-5}/30240, a = N+1
  if (!(s > 1.0)) throw std::domain_error("hurwitz_tail: s > 1 required");
  const double a = static_cast<double>(N) + 1.0;
  const double inv = 1.0 / a;
  const double aps = std::pow(a, -s);
  double t = std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * aps + s * aps * inv / 12.0;
  t -= s * (s + 1.0) * (s + 2.0) * aps * inv * inv * inv / 720.0;
  t += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * aps * inv * inv * inv * inv * inv / 30240.0;
  return t;
}

double zeta_minus_one(double s) {
  // direct terms n = 2..64 plus the Euler-Maclaurin tail
  double sum = 0.0;
  for (long n = 2; n <= 64; ++n) sum += std::pow(static_cast<double>(n), -s);
  return sum + hurwitz_tail(s, 64);
}

double weighted_dilog_sum(double t, double q) {
  if (!(q > 0.0 && q <= 1.0)) throw std::domain_error("weighted_dilog_sum: q in (0,1] required");
  if (q == 1.0) {
    if (t >= 1.0) throw std::domain_error("weighted_dilog_sum: diverges at q=1 for t >= 1");
    // n = 1 term is 2^t; for n >= 2, expand (1+1/n)^t:
    //   sum_{n>=2} n^{t-2} (1+1/n)^t = sum_k C(t,k) (zeta(2-t+k) - 1)
    double sum = std::pow(2.0, t);
    double binom = 1.0;  // C(t, k)
    for (int k = 0; k < 600; ++k) {
      const double term = binom * zeta_minus_one(2.0 - t + k);
      sum += term;
      if (std::abs(term) < 1e-17 && k > 4) break;
      binom *= (t - k) / (k + 1.0);
    }
    return sum;
  }
  // direct summation with a geometric ratio tail bound
  double sum = 0.0, qp = 1.0;
  for (long n = 1; n <= 50'000'000; ++n) {
    qp *= q;
    const double term = std::pow(static_cast<double>(n + 1), t) / (static_cast<double>(n) * n) * qp;
    sum += term;
    // for m > n the term ratio is at most q (1 + 1/(n+1))^max(t,0)
    const double ratio = q * std::pow(1.0 + 1.0 / (n + 1.0), std::max(t, 0.0));
    if (ratio < 1.0) {
      const double tail = term * ratio / (1.0 - ratio);
      if (tail < 1e-12 * std::max(1.0, std::abs(sum))) return sum;
    }
  }
  throw std::runtime_error("weighted_dilog_sum: |B| too close to 1 for the required tail accuracy");
}

double ss_energy_series(double alpha) {
  if (alpha == 1.0) return 4.0 * basel();  // A_n = 2 for all n
  const long N = 2'000'000;
  // (n+1) A_{n+1} = 2 alpha A_n + (n-1) A_{n-1}
  double a_prev = 1.0;        // A_0
  double a_cur = 2.0 * alpha;  // A_1
  double sum = a_cur * a_cur;  // n = 1 term
  double a3 = 0, a2 = 0, a1 = 0;
  for (long n = 1; n < N + 1; ++n) {
    const double a_next = (2.0 * alpha * a_cur + (n - 1.0) * a_prev) / (n + 1.0);
    a_prev = a_cur;
    a_cur = a_next;
    const long m = n + 1;
    if (m <= N) sum += a_cur * a_cur / (static_cast<double>(m) * m);
    a3 = a2;
    a2 = a1;
    a1 = a_cur;  // A_{n+1}
  }
  // a1 = A_{N+1}, a2 = A_N, a3 = A_{N-1}; split A_n into smooth + alternating parts
  const double alt = -(((N % 2) == 0) ? 1.0 : -1.0) * (a1 + a3 - 2.0 * a2) / 4.0;  // T(N)
  const double smooth = a2 - (((N % 2) == 0) ? 1.0 : -1.0) * alt;                  // S(N)
  // S(n) ~ S(N)(n/N)^{alpha-1}, T(n) ~ T(N)(n/N)^{-alpha-1}; cross terms alternate and
  // are negligible at this N
  const double tail_smooth =
      smooth * smooth * std::pow(static_cast<double>(N), 2.0 - 2.0 * alpha) * hurwitz_tail(4.0 - 2.0 * alpha, N);
  const double tail_alt =
      alt * alt * std::pow(static_cast<double>(N), 2.0 + 2.0 * alpha) * hurwitz_tail(4.0 + 2.0 * alpha, N);
  return sum + tail_smooth + tail_alt;
}

}  // namespace detail

BoundValue energy_bound(const ClassSpec& spec, Weight weight, double t) {
  spec.validate();
  switch (weight) {
    case Weight::roth:
      // holds for every univalent member; janowski needs the real-A hypothesis for
      // univalence, the other classes are univalent by definition
      if (spec.kind == ClassKind::janowski) {
        if (auto gate = janowski_gate(spec, "roth")) return *gate;
      }
      return float_bound(roth_constant(), false, "roth");

    case Weight::ones:
      switch (spec.kind) {
        case ClassKind::janowski: {
          if (auto gate = janowski_gate(spec, "janowski-energy")) return *gate;
          const double a = to_double(spec.A_re), b = to_double(spec.B);
          const double v = (a - b) * (a - b) / 4.0 * dilog_over_x(b * b);
          BoundValue out = float_bound(v, true, spec.B == 0 ? "janowski-energy-B0" : "janowski-energy");
          if (spec.B == 0) out.exact = spec.A_re * spec.A_re / 4;  // A^2/4
          return out;
        }
        case ClassKind::spiral: {
          const double g = (1.0 - spec.beta) * std::cos(spec.alpha);
          return float_bound(basel() * g * g, true, "spiral-energy");
        }
        case ClassKind::strongly_starlike:
          return float_bound(0.25 * detail::ss_energy_series(to_double(spec.ss_alpha)), true,
                             "strongly-starlike-energy");
        case ClassKind::F:
          if (spec.c == 3) {
            BoundValue b = float_bound(f3_energy_constant(), false, "conjecture-F3-energy", true);
            return b;
          }
          return BoundValue::not_applicable("no energy bound stated for F(c), c != 3", "F-energy");
        case ClassKind::G:
          return BoundValue::not_applicable("no energy bound stated for G(c)", "G-energy");
      }
      break;

    case Weight::n_squared: {
      if (spec.kind != ClassKind::janowski)
        return BoundValue::not_applicable("n^2-weighted bound stated for janowski only",
                                          "janowski-n2-energy");
      if (auto gate = janowski_gate(spec, "janowski-n2-energy")) return *gate;
      if (spec.B == -1)
        return BoundValue::not_applicable("needs B != -1", "janowski-n2-energy");
      // (A-B)^2 / (4(1-B^2)), rational
      Rational v = (spec.A_re - spec.B) * (spec.A_re - spec.B) / (4 * (1 - spec.B * spec.B));
      return exact_bound(std::move(v), false, "janowski-n2-energy");
    }

    case Weight::n_plus1_pow_t: {
      if (spec.kind != ClassKind::janowski)
        return BoundValue::not_applicable("(n+1)^t-weighted bound stated for janowski only",
                                          "janowski-t-energy");
      if (auto gate = janowski_gate(spec, "janowski-t-energy")) return *gate;
      if (t > 2.0)
        return BoundValue::not_applicable("needs t <= 2", "janowski-t-energy");
      const double a = to_double(spec.A_re), b = to_double(spec.B);
      if (spec.B == 0) {
        // limit of ((A-B)/2B)^2 sum (n+1)^t B^{2n}/n^2 as B -> 0: only n=1 survives
        return float_bound(a * a * std::pow(2.0, t) / 4.0, false, "janowski-t-energy");
      }
      const double q = b * b;
      if (q == 1.0 && t >= 1.0)
        return BoundValue::not_applicable("series diverges at |B| = 1 for t >= 1",
                                          "janowski-t-energy");
      const double s = detail::weighted_dilog_sum(t, q);
      return float_bound((a - b) * (a - b) / (4.0 * q) * s, false, "janowski-t-energy");
    }
  }
  throw std::logic_error("energy_bound: unhandled weight");
}

std::vector<BoundTableRow> bound_table(const ClassSpec& spec, int n_max) {
  spec.validate();
  std::vector<BoundTableRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    BoundValue g = gamma_bound(spec, n);
    BoundValue conj = conjecture_gamma_bound(spec, n);
    const bool conj_is_new =
        conj.applicable && !(g.applicable && g.conjectural && g.value == conj.value);
    rows.push_back({"gamma", n, std::move(g)});
    if (spec.kind == ClassKind::G) rows.push_back({"gamma-prior", n, prior_gamma_bound(spec, n)});
    if (conj_is_new) rows.push_back({"gamma-conjecture", n, std::move(conj)});
  }
  rows.push_back({"energy[ones]", 0, energy_bound(spec, Weight::ones)});
  rows.push_back({"energy[n_squared]", 0, energy_bound(spec, Weight::n_squared)});
  rows.push_back({"energy[(n+1)^2]", 0, energy_bound(spec, Weight::n_plus1_pow_t, 2.0)});
  rows.push_back({"energy[roth]", 0, energy_bound(spec, Weight::roth)});
  return rows;
}

}  // namespace logcoeff
