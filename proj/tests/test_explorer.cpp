#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "logcoeff/explorer.hpp"
#include "logcoeff/json_io.hpp"

using namespace logcoeff;

TEST_SUITE("explorer") {
  TEST_CASE("verify_bounds: proven bounds hold on G(1) and F(3) samples") {
    const BoundReport g_exact = verify_bounds<Rational>(ClassSpec::G_spec(1), 8, 300, 7);
    CHECK(g_exact.violations.empty());
    CHECK(g_exact.findings.empty());
    CHECK(g_exact.backend == "exact");

    const BoundReport g_float = verify_bounds<Complex>(ClassSpec::G_spec(1), 8, 300, 7);
    CHECK(g_float.violations.empty());
    CHECK(g_float.findings.empty());

    const BoundReport f3 = verify_bounds<Complex>(ClassSpec::F_spec(3), 3, 300, 11);
    CHECK(f3.violations.empty());
    REQUIRE(f3.gamma_rows.size() == 3);
    CHECK(f3.gamma_rows[0].bound.value == doctest::Approx(0.75));
    CHECK(f3.gamma_rows[0].margin >= 0.0);
  }

  TEST_CASE("verify_bounds records margins for every applicable bound") {
    const BoundReport rep = verify_bounds<Complex>(ClassSpec::janowski_spec(1, Rational(-1, 2)),
                                                   6, 200, 3);
    CHECK(rep.violations.empty());
    for (const auto& row : rep.gamma_rows) {
      REQUIRE(row.bound.applicable);
      CHECK(row.margin >= 0.0);
      CHECK(row.max_abs_gamma > 0.0);
      CHECK(row.argmax_trial >= 0);
    }
    // janowski carries all four energy checks: ones, n^2, (n+1)^2 and roth
    CHECK(rep.energy_rows.size() == 4);
  }

  TEST_CASE("the zero Schwarz function leaves the margin equal to the bound") {
    const auto spec = ClassSpec::G_spec(1);
    const auto phi = schwarz_from_schur<Rational>(std::vector<Rational>(6, Rational(0)), 9);
    const auto g = member_gammas(spec, phi, 8);
    for (int n = 1; n <= 8; ++n) {
      CHECK(g.gamma(n) == 0);
      const BoundValue b = gamma_bound(spec, n);
      CHECK(b.value - g.abs_gamma(n) == b.value);
    }
  }

  TEST_CASE("replay determinism: identical seeds give identical reports") {
    const auto spec = ClassSpec::F_spec(3);
    const BoundReport a = verify_bounds<Complex>(spec, 5, 150, 42);
    const BoundReport b = verify_bounds<Complex>(spec, 5, 150, 42);
    CHECK(report_to_json(a).dump() == report_to_json(b).dump());
    const BoundReport c = verify_bounds<Complex>(spec, 5, 150, 43);
    CHECK(report_to_json(a).dump() != report_to_json(c).dump());
  }

  TEST_CASE("worker count does not change the report") {
    const auto spec = ClassSpec::G_spec(Rational(1, 2));
    setenv("LOGCOEFF_THREADS", "1", 1);
    const BoundReport solo = verify_bounds<Complex>(spec, 6, 120, 5);
    setenv("LOGCOEFF_THREADS", "4", 1);
    const BoundReport quad = verify_bounds<Complex>(spec, 6, 120, 5);
    unsetenv("LOGCOEFF_THREADS");
    CHECK(report_to_json(solo).dump() == report_to_json(quad).dump());
  }

  TEST_CASE("search_extremal: budget 1 evaluates the zero start") {
    const SearchResult r = search_extremal(ClassSpec::G_spec(1), 2, 1, 9);
    CHECK(r.best == 0.0);
    REQUIRE(!r.trajectory.empty());
    CHECK(r.trajectory.front().second == 0.0);
  }

  TEST_CASE("search_extremal: G(1) n=2 reaches the twist-2 extremal value 1/12") {
    const SearchResult r = search_extremal(ClassSpec::G_spec(1), 2, 20000, 1);
    CHECK(r.best >= 0.999 / 12.0);
    CHECK(r.best <= 1.0 / 12.0 + 1e-9);
  }

  TEST_CASE("search_extremal: F(3) n=1 reaches 3/4") {
    const SearchResult r = search_extremal(ClassSpec::F_spec(3), 1, 1000, 2);
    CHECK(r.best >= 0.999 * 0.75);
    CHECK(r.best <= 0.75 + 1e-9);
  }

  TEST_CASE("optimizer adequacy on sharp cases with named extremals") {
    // janowski k_{A,B;n}
    const SearchResult j2 = search_extremal(ClassSpec::janowski_spec(1, -1), 2, 8000, 3);
    CHECK(j2.best >= 0.999 * 0.5);
    // spiral extremal at n = 1
    const auto sp = ClassSpec::spiral_spec(M_PI / 4, 0.5);
    const SearchResult s1 = search_extremal(sp, 1, 8000, 4);
    CHECK(s1.best >= 0.999 * 0.5 * std::cos(M_PI / 4));
    // G twists n = 1, 2, 3
    for (int n = 1; n <= 3; ++n) {
      const SearchResult gn = search_extremal(ClassSpec::G_spec(1), n, 20000, 5 + n);
      const double bound = to_double(*gamma_bound(ClassSpec::G_spec(1), n).exact);
      CHECK(gn.best >= 0.999 * bound);
      CHECK(gn.best <= bound + 1e-9);
    }
  }

  TEST_CASE("search determinism") {
    const SearchResult a = search_extremal(ClassSpec::F_spec(3), 2, 3000, 77);
    const SearchResult b = search_extremal(ClassSpec::F_spec(3), 2, 3000, 77);
    CHECK(search_to_json(a).dump() == search_to_json(b).dump());
  }

  TEST_CASE("ps_oracle: pure third coefficient reaches 1 at (1,1)") {
    const PsOracleResult r = ps_oracle(1.0, 1.0, 500, 1);
    CHECK(r.covered);
    CHECK(r.region == "D2");
    CHECK(r.best >= 1.0 - 1e-12);
    CHECK(r.best <= r.phi + 1e-9);
  }

  TEST_CASE("ps_oracle: D6 sharpness probed at (3, 17/12)") {
    const PsOracleResult r = ps_oracle(3.0, 17.0 / 12.0, 50000, 2);
    CHECK(r.covered);
    CHECK(r.best <= 17.0 / 12.0 + 1e-9);
    CHECK(r.best >= 0.99 * 17.0 / 12.0);
  }

  TEST_CASE("ps_oracle: the I2-at-c=3 parameter pair is covered by D9") {
    const PsOracleResult r = ps_oracle(2.0 + 1.0 / 6.0, 25.0 / 24.0, 20000, 3);
    CHECK(r.covered);
    CHECK(r.region == "D9");
    CHECK(r.best <= r.phi + 1e-9);
  }

  TEST_CASE("oracle dominance on sampled covered points") {
    for (const auto& [mu, ups] : {std::pair<double, double>{1.0, 0.5}, {-1.5, 0.2}, {2.5, 17.0 / 12.0},
                                  {3.5, -1.0}, {-3.0, 0.5}}) {
      const PsPhi closed = ps_phi(mu, ups);
      if (!closed.covered) continue;
      const PsOracleResult r = ps_oracle(mu, ups, 2000, 11);
      CHECK(r.best <= closed.value + 1e-9);
    }
  }

  TEST_CASE("conjecture_report: no findings at desk scale") {
    const ConjectureReport f3p = conjecture_report(ConjectureKind::F3_pointwise, 8000, 1);
    CHECK_FALSE(f3p.finding);
    REQUIRE(f3p.rows.size() == 8);
    for (const auto& row : f3p.rows) CHECK(row.observed <= row.bound + 1e-9);

    const ConjectureReport f3e = conjecture_report(ConjectureKind::F3_energy, 50, 2);
    CHECK_FALSE(f3e.finding);
    REQUIRE(f3e.rows.size() == 1);
    // the phi(z) = z sample alone puts the truncated energy near the constant
    CHECK(f3e.rows[0].observed > 1.10);
    CHECK(f3e.rows[0].observed <= f3_energy_constant());

    const ConjectureReport gg = conjecture_report(ConjectureKind::G_general, 6000, 3);
    CHECK_FALSE(gg.finding);
    REQUIRE(gg.rows.size() == 24);
    // c = 1, n = 1: the conjectured bound 1/4 is a theorem and is attained
    const ConjectureRow& g11 = gg.rows[18];
    CHECK(g11.label == "G(1) gamma[1]");
    CHECK(g11.bound == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(g11.observed >= 0.25 - 1e-9);
  }

  TEST_CASE("conjecture rows flag violations as findings") {
    ConjectureReport rep;
    ConjectureRow row;
    row.observed = 0.5;
    row.bound = 0.4;
    row.violated = row.observed > row.bound + 1e-9;
    rep.rows.push_back(row);
    rep.finding = row.violated;
    CHECK(rep.finding);
    const json j = conjecture_to_json(rep);
    CHECK(j.at("finding").get<bool>());
    CHECK(j.at("rows")[0].at("violated").get<bool>());
  }
}
