// Acceptance suite: every criterion prints one PASS/FAIL line; the process exits
// with the number of failed criteria. An optional argument selects one criterion.

#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "logcoeff/bounds.hpp"
#include "logcoeff/classes.hpp"
#include "logcoeff/explorer.hpp"
#include "logcoeff/logcoeff.hpp"

using namespace logcoeff;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

bool check(bool ok, const char* what, std::ostringstream& log) {
  if (!ok) log << "    failed: " << what << "\n";
  return ok;
}

// 1. Exact extremal identities: gamma_n(z/(1-z)^2) = 1/n for n <= 64 and
//    gamma_k of the F(3) extremal = (1 - 2^{-(k+1)})/k for k <= 32, exact; < 1 s.
bool criterion1(std::ostringstream& log) {
  Timer timer;
  bool ok = true;
  const auto koebe = extremal_series<Rational>(ClassSpec::janowski_spec(1, -1), 65);
  const auto gk = log_coefficients(koebe, 64);
  for (int n = 1; n <= 64; ++n)
    ok &= check(gk.gamma(n) == Rational(1, n), "koebe gamma_n == 1/n", log);

  const auto f3 = extremal_series<Rational>(ClassSpec::F_spec(3), 33);
  const auto g3 = log_coefficients(f3, 32);
  Rational pow2 = 4;  // 2^{k+1} at k = 1
  for (int k = 1; k <= 32; ++k) {
    ok &= check(g3.gamma(k) == (1 - 1 / pow2) / k, "f3 gamma_k == (1 - 2^{-(k+1)})/k", log);
    pow2 *= 2;
  }
  const double elapsed = timer.seconds();
  log << "    elapsed " << elapsed << " s (budget 1 s)\n";
  return ok && check(elapsed < 1.0, "runtime under 1 s", log);
}

// 2. Recurrence cross-check: gamma_from_beta vs log_coefficients on 100 random F(c)
//    and 100 random G(c) members; exact equality on the exact backend, <= 1e-10 on
//    the float backend; < 10 s.
bool criterion2(std::ostringstream& log) {
  Timer timer;
  bool ok = true;
  std::mt19937_64 eng(2024);
  auto rational_schur = [&eng](int depth) {
    std::vector<Rational> p;
    for (int i = 0; i < depth; ++i) p.push_back(rat(static_cast<long>(eng() % 127) - 63, 64));
    return p;
  };
  auto complex_schur = [&eng](int depth) {
    auto u01 = [&eng] { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    std::vector<Complex> p;
    for (int i = 0; i < depth; ++i) p.push_back(std::polar(std::sqrt(u01()), 2 * kPi * u01()));
    return p;
  };

  for (int i = 0; i < 200; ++i) {
    const bool use_f = i < 100;
    const ClassSpec spec = use_f ? ClassSpec::F_spec(rat(1 + static_cast<long>(eng() % 48), 16))
                                 : ClassSpec::G_spec(rat(1 + static_cast<long>(eng() % 16), 16));
    const auto phi = schwarz_from_schur<Rational>(rational_schur(6), 7);
    const auto f = member_from_schwarz(spec, phi, 7);
    const auto via_beta = gamma_from_beta(pre_schwarzian_coeffs(f, 6).beta);
    const auto direct = log_coefficients(f, 5);
    for (int n = 1; n <= 5; ++n)
      ok &= check(via_beta[static_cast<size_t>(n - 1)] == direct.gamma(n),
                  "exact recurrence cross-check", log);
  }
  for (int i = 0; i < 200; ++i) {
    const bool use_f = i < 100;
    const ClassSpec spec = use_f ? ClassSpec::F_spec(rat(1 + static_cast<long>(eng() % 48), 16))
                                 : ClassSpec::G_spec(rat(1 + static_cast<long>(eng() % 16), 16));
    const auto phi = schwarz_from_schur<Complex>(complex_schur(6), 7);
    const auto f = member_from_schwarz(spec, phi, 7);
    const auto via_beta = gamma_from_beta(pre_schwarzian_coeffs(f, 6).beta);
    const auto direct = log_coefficients(f, 5);
    for (int n = 1; n <= 5; ++n)
      ok &= check(std::abs(via_beta[static_cast<size_t>(n - 1)] - direct.gamma(n)) <= 1e-10,
                  "float recurrence cross-check within 1e-10", log);
  }
  const double elapsed = timer.seconds();
  log << "    elapsed " << elapsed << " s (budget 10 s)\n";
  return ok && check(elapsed < 10.0, "runtime under 10 s", log);
}

// 3. Pinned corollary constants: gamma_bound(F(3),4) equals
//    (1/40)(5 + (19/2) sqrt(76/303)) and lies within 1e-6 of 0.243945;
//    gamma_bound(F(3),5) within 1e-6 of 0.2145050.
bool criterion3(std::ostringstream& log) {
  bool ok = true;
  const ClassSpec f3 = ClassSpec::F_spec(3);
  const double g4 = gamma_bound(f3, 4).value;
  const double g4_closed = (5.0 + 9.5 * std::sqrt(76.0 / 303.0)) / 40.0;
  log << "    gamma_bound(F(3),4) = " << g4 << ", closed form " << g4_closed << "\n";
  ok &= check(std::abs(g4 - g4_closed) < 1e-14, "n=4 equals its closed form", log);
  ok &= check(std::abs(g4 - 0.243945) < 1e-6, "n=4 within 1e-6 of 0.243945", log);

  const double g5 = gamma_bound(f3, 5).value;
  const double g5_closed = (69.0 / 8.0 + 33.0 / 4.0 * std::sqrt(22.0 / 83.0)) / 60.0;
  log << "    gamma_bound(F(3),5) = " << g5 << ", closed form (1/60)(69/8 + (33/4)sqrt(22/83)) = "
      << g5_closed << "\n";
  log << "    |g5 - 0.2145050| = " << std::abs(g5 - 0.2145050)
      << "; the pinned decimal appears to drop the digit 4 from 0.21454050...\n";
  ok &= check(std::abs(g5 - g5_closed) < 1e-14, "n=5 equals its closed form", log);
  ok &= check(std::abs(g5 - 0.2145050) < 1e-6, "n=5 within 1e-6 of 0.2145050", log);
  return ok;
}

// 4. Dilogarithm: dilog(1) = pi^2/6 within 1e-12; the F(3)-extremal energy partial sum
//    at N = 2000 lies within 1e-3 of pi^2/6 + Li2(1/4)/4 - Li2(1/2); < 5 s.
bool criterion4(std::ostringstream& log) {
  Timer timer;
  bool ok = check(std::abs(dilog(1.0) - kPi * kPi / 6.0) < 1e-12, "dilog(1) = pi^2/6", log);

  const int n = 2000;
  const auto f3 = extremal_series<Complex>(ClassSpec::F_spec(3), n + 1);
  const auto g = log_coefficients(f3, n);
  const auto traj = weighted_energy(g, Weight::ones);
  const double target = kPi * kPi / 6.0 + 0.25 * dilog(0.25) - dilog(0.5);
  log << "    partial sum at N=2000: " << traj.partial.back() << ", constant " << target << "\n";
  ok &= check(std::abs(traj.partial.back() - target) < 1e-3, "energy within 1e-3 of the constant",
              log);
  const double elapsed = timer.seconds();
  log << "    elapsed " << elapsed << " s (budget 5 s)\n";
  return ok && check(elapsed < 5.0, "runtime under 5 s", log);
}

// 5. Proven-bound fuzzing: 1000 samples per class at N = 16, zero violations; < 2 min.
bool criterion5(std::ostringstream& log) {
  Timer timer;
  bool ok = true;
  std::vector<ClassSpec> specs = {
      ClassSpec::janowski_spec(1, -1),          ClassSpec::janowski_spec(1, Rational(-1, 2)),
      ClassSpec::janowski_spec(1, 0),           ClassSpec::spiral_spec(kPi / 4, 0.5),
      ClassSpec::strongly_starlike_spec(Rational(1, 2)), ClassSpec::F_spec(3),
      ClassSpec::G_spec(1)};
  for (size_t i = 0; i < specs.size(); ++i) {
    const BoundReport rep = verify_bounds<Complex>(specs[i], 16, 1000, 1000 + i);
    log << "    " << specs[i].describe() << ": violations " << rep.violations.size()
        << ", findings " << rep.findings.size() << "\n";
    ok &= check(rep.violations.empty(), "zero proven-bound violations", log);
  }
  const double elapsed = timer.seconds();
  log << "    elapsed " << elapsed << " s (budget 120 s)\n";
  return ok && check(elapsed < 120.0, "runtime under 2 min", log);
}

// 6. Sharpness attainment, exact: the named extremals meet their bounds exactly.
bool criterion6(std::ostringstream& log) {
  bool ok = true;
  // janowski k_{A,B;n}: |gamma_n| = (A-B)/(2n)
  struct JCase {
    Rational A, B;
    int n;
  };
  for (const JCase& c : {JCase{1, -1, 1}, JCase{1, Rational(-1, 2), 2},
                         JCase{Rational(3, 4), Rational(-1, 4), 3}, JCase{1, 0, 2}}) {
    auto spec = ClassSpec::janowski_spec(c.A, c.B, 0, c.n);
    const auto g = log_coefficients(extremal_series<Rational>(spec, c.n + 1), c.n);
    ok &= check(abs_exact(g.gamma(c.n)) == (c.A - c.B) / (2 * c.n),
                "janowski extremal attains (A-B)/(2n)", log);
  }
  // F(c) extremal: c/4, (4c+c^2)/48, (2c+c^2)/48 at n = 1, 2, 3
  for (const Rational& c : {Rational(1, 2), Rational(1), Rational(2), Rational(3)}) {
    const auto g = log_coefficients(extremal_series<Rational>(ClassSpec::F_spec(c), 4), 3);
    ok &= check(abs_exact(g.gamma(1)) == c / 4, "F extremal gamma_1 = c/4", log);
    ok &= check(abs_exact(g.gamma(2)) == (4 * c + c * c) / 48, "F extremal gamma_2", log);
    ok &= check(abs_exact(g.gamma(3)) == (2 * c + c * c) / 48, "F extremal gamma_3", log);
  }
  // G(c) twist-n extremal: c/(2n(n+1)) at n = 1, 2, 3
  for (const Rational& c : {Rational(1, 2), Rational(1)}) {
    for (int n = 1; n <= 3; ++n) {
      const auto g =
          log_coefficients(extremal_series<Rational>(ClassSpec::G_spec(c, n), n + 1), n);
      ok &= check(abs_exact(g.gamma(n)) == c / (2 * n * (n + 1)),
                  "G twist extremal attains c/(2n(n+1))", log);
    }
  }
  return ok;
}

// 7. PS functional: oracle dominance on a 20x20 grid of covered points; attainment
//    >= 0.99 Phi at 10 interior points per region with budget 5e4; < 2 min.
bool criterion7(std::ostringstream& log) {
  Timer timer;
  bool ok = true;
  int covered = 0;
  for (int i = 0; i < 20 && ok; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double mu = -4.0 + 8.0 * i / 19.0;
      const double ups = -3.0 + 5.0 * j / 19.0;
      const PsPhi closed = ps_phi(mu, ups);
      if (!closed.covered) continue;
      ++covered;
      const PsOracleResult r = ps_oracle(mu, ups, 400, 7000 + 20 * i + j);
      if (!check(r.best <= closed.value + 1e-9, "oracle dominance on the grid", log)) {
        log << "    at mu=" << mu << " ups=" << ups << ": oracle " << r.best << " > phi "
            << closed.value << "\n";
        ok = false;
        break;
      }
    }
  }
  log << "    covered grid points: " << covered << "\n";
  ok &= check(covered >= 40, "the grid hits a meaningful covered set", log);

  struct Pt {
    double mu, ups;
  };
  const std::vector<Pt> d2 = {{0.6, 0.5},  {0.9, 0.5},  {1.2, 0.5},  {1.5, 0.5},  {1.8, 0.5},
                              {0.6, 0.9},  {0.9, 0.9},  {1.2, 0.9},  {1.5, 0.9},  {1.8, 0.9}};
  std::vector<Pt> d6, d9;
  for (double mu : {2.2, 2.6, 3.0, 3.4, 3.8}) {
    d6.push_back({mu, (mu * mu + 8) / 12 + 0.1});
    d6.push_back({mu, (mu * mu + 8) / 12 + 0.5});
    d9.push_back({mu, 0.0});
    d9.push_back({mu, -1.0});
  }
  auto attain = [&](const std::vector<Pt>& pts, const char* region) {
    for (size_t i = 0; i < pts.size(); ++i) {
      const PsPhi closed = ps_phi(pts[i].mu, pts[i].ups);
      if (!check(closed.covered && closed.region == region, "interior point lies in its region",
                 log))
        return false;
      const PsOracleResult r = ps_oracle(pts[i].mu, pts[i].ups, 50000, 7100 + i);
      if (!check(r.best >= 0.99 * closed.value, "oracle reaches 0.99 Phi", log)) {
        log << "    " << region << " at mu=" << pts[i].mu << " ups=" << pts[i].ups << ": oracle "
            << r.best << " vs phi " << closed.value << "\n";
        return false;
      }
      if (!check(r.best <= closed.value + 1e-9, "oracle never exceeds Phi", log)) return false;
    }
    return true;
  };
  ok &= attain(d2, "D2");
  ok &= attain(d6, "D6");
  ok &= attain(d9, "D9");
  const double elapsed = timer.seconds();
  log << "    elapsed " << elapsed << " s (budget 120 s)\n";
  return ok && check(elapsed < 120.0, "runtime under 2 min", log);
}

// 8. gamma_4/gamma_5 envelope consistency: polynomial branch exact, |I| branch matches
//    the envelope composition, gap queries inapplicable.
bool criterion8(std::ostringstream& log) {
  bool ok = true;
  for (const Rational& c : {Rational(1, 2), Rational(1), Rational(2), Rational(144, 55)}) {
    const BoundValue b = gamma_bound(ClassSpec::F_spec(c), 4);
    const Rational expect = (c + (c * c / 18) * (Rational(13) + c / 2 - c * c / 8)) / 40;
    ok &= check(b.applicable && b.exact && *b.exact == expect, "gamma_4 polynomial branch exact",
                log);
  }
  for (const Rational& c : {Rational(1, 2), Rational(1), Rational(80, 61)}) {
    const BoundValue b = gamma_bound(ClassSpec::F_spec(c), 5);
    const Rational expect = (c + (c * c / 12) * (Rational(11) + c - c * c / 4)) / 60;
    ok &= check(b.applicable && b.exact && *b.exact == expect, "gamma_5 polynomial branch exact",
                log);
  }
  for (double c : {2.8, 3.0}) {
    const BoundValue b = gamma_bound(ClassSpec::F_spec(Rational(c)), 4);
    const double i2 = i_envelope(c, IWhich::I2).value;
    const double expect = (c + 2 * c * c / 9 + c * c / 2 * i2) / 40;
    ok &= check(b.applicable && std::abs(b.value - expect) < 1e-15 * expect,
                "gamma_4 |I2| branch matches the envelope composition", log);
  }
  for (double c : {1.5, 3.0}) {
    const BoundValue b = gamma_bound(ClassSpec::F_spec(Rational(c)), 5);
    const double i3 = i_envelope(c, IWhich::I3).value;
    const double expect = (c + c * c / 2 + c * c * c / 24 + 5 * c * c / 12 * i3) / 60;
    ok &= check(b.applicable && std::abs(b.value - expect) < 1e-15 * expect,
                "gamma_5 |I3| branch matches the envelope composition", log);
  }
  ok &= check(!gamma_bound(ClassSpec::F_spec(Rational(53, 20)), 4).applicable,
              "gamma_4 gap query inapplicable", log);
  ok &= check(!gamma_bound(ClassSpec::F_spec(Rational(133, 100)), 5).applicable,
              "gamma_5 gap query inapplicable", log);
  ok &= check(!i_envelope(2.65, IWhich::I2).applicable, "I2 gap inapplicable", log);
  ok &= check(!i_envelope(1.33, IWhich::I3).applicable, "I3 gap inapplicable", log);
  return ok;
}

// 9. Conjecture probes: no violation of either conjecture within the default budgets;
//    violations surface as findings, never silently.
bool criterion9(std::ostringstream& log) {
  bool ok = true;
  const ConjectureReport f3p = conjecture_report(ConjectureKind::F3_pointwise, 20000, 0);
  for (const auto& row : f3p.rows)
    log << "    " << row.label << ": observed " << row.observed << " vs bound " << row.bound
        << "\n";
  ok &= check(!f3p.finding, "F3 pointwise conjecture consistent for n <= 8", log);

  const ConjectureReport f3e = conjecture_report(ConjectureKind::F3_energy, 500, 0);
  ok &= check(!f3e.finding, "F3 energy conjecture consistent", log);

  const ConjectureReport gg = conjecture_report(ConjectureKind::G_general, 24000, 0);
  ok &= check(!gg.finding, "G conjecture consistent on the c-grid for n <= 6", log);
  ok &= check(gg.rows.size() == 24, "G grid covers 4 c-values x 6 indices", log);

  // the finding path itself: a fabricated breach must be flagged, not dropped
  ConjectureRow fake;
  fake.observed = 1.0;
  fake.bound = 0.5;
  fake.violated = fake.observed > fake.bound + 1e-9;
  ok &= check(fake.violated, "finding machinery flags a breach", log);
  return ok;
}

struct Criterion {
  int id;
  const char* title;
  bool (*fn)(std::ostringstream&);
};

const Criterion kCriteria[] = {
    {1, "exact extremal identities (koebe 1/n, F(3) extremal)", criterion1},
    {2, "recurrence cross-check gamma_from_beta vs log_coefficients", criterion2},
    {3, "pinned corollary constants for gamma_bound(F(3), 4) and (F(3), 5)", criterion3},
    {4, "dilogarithm and the F(3) energy constant", criterion4},
    {5, "proven-bound fuzzing across seven classes", criterion5},
    {6, "sharpness attainment of the named extremals (exact)", criterion6},
    {7, "PS functional: oracle dominance and attainment", criterion7},
    {8, "gamma_4/gamma_5 envelope consistency and gates", criterion8},
    {9, "conjecture probes within default budgets", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  if (argc > 1) selected = std::atoi(argv[1]);
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (selected != 0 && c.id != selected) continue;
    std::ostringstream log;
    Timer timer;
    const bool ok = c.fn(log);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ("
              << timer.seconds() << " s)\n";
    if (!ok || selected != 0) std::cout << log.str();
    if (!ok) ++failures;
  }
  return failures;
}
