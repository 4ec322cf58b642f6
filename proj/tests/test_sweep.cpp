#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dualris/errors.hpp"
#include "dualris/secrecy.hpp"
#include "dualris/sweep.hpp"

using namespace dualris;

namespace {

NetworkConfig base() {
    NetworkConfig cfg;
    cfg.quadrature_order = 16;
    return cfg;
}

}  // namespace

TEST_CASE("grids") {
    const auto g = linear_grid(0.0, 60.0, 2.0);
    CHECK(g.size() == 31);
    CHECK(g.back() == 60.0);
    CHECK(linear_grid(0.0, 1.0, 0.1).size() == 11);
    CHECK_THROWS_AS(linear_grid(0.0, 1.0, 0.0), ConfigError);
    CHECK_THROWS_AS(linear_grid(2.0, 1.0, 0.5), ConfigError);
}

TEST_CASE("sweep variables") {
    const NetworkConfig cfg = base();
    CHECK(apply_variable(cfg, SweepVariable::M, 80).M1 == 80);
    CHECK(apply_variable(cfg, SweepVariable::M, 80).M2 == 80);
    const NetworkConfig p = apply_variable(cfg, SweepVariable::p_r1, 0.2);
    CHECK(p.p_r2 == doctest::Approx(0.8));
    CHECK(apply_variable(cfg, SweepVariable::m2, 7).fading.m2 == 7.0);
    CHECK(apply_variable(cfg, SweepVariable::R_s, 0.5).R_s == 0.5);
    CHECK_THROWS_AS(apply_variable(cfg, SweepVariable::M, 2.5), ConfigError);
    CHECK(parse_sweep_variable("P_dBm") == SweepVariable::P_dBm);
    CHECK_THROWS_AS(parse_sweep_variable("power"), ConfigError);
    CHECK_THROWS_AS(parse_metric("asc"), ConfigError);
}

TEST_CASE("sweep rows match single evaluations") {
    SweepSpec spec;
    spec.variable = SweepVariable::P_dBm;
    spec.grid = {0.0, 20.0, 40.0};
    spec.metrics = {Metric::asc_r1, Metric::sop_r2, Metric::see, Metric::asc_asymptotic};
    spec.oracles = {OracleKind::integral, OracleKind::mc};
    spec.mc.trials = 2000;
    const Dataset d = run_sweep(base(), spec);
    CHECK(d.columns == std::vector<std::string>{"P_dBm", "asc_r1", "asc_r1_integral", "asc_r1_mc", "sop_r2",
                                                "sop_r2_integral", "sop_r2_mc", "see", "see_integral", "see_mc",
                                                "asc_r1_asymptotic", "asc_r2_asymptotic", "asc_r1_mc_se",
                                                "sop_r2_mc_se", "see_mc_se"});
    REQUIRE(d.rows.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        const SecrecyReport r = evaluate_closed_form(apply_variable(base(), SweepVariable::P_dBm, spec.grid[i]));
        CHECK(d.rows[i][0] == spec.grid[i]);
        CHECK(d.rows[i][d.column("asc_r1")] == r.asc_r1);
        CHECK(d.rows[i][d.column("see")] == r.see);
        CHECK(d.rows[i][d.column("asc_r1_integral")] == doctest::Approx(r.asc_r1).epsilon(1e-3));
        CHECK(d.notes[i].empty());
    }
    CHECK_THROWS_AS(d.column("nope"), std::out_of_range);

    // Parallel grid evaluation gives the same table.
    spec.workers = 1;
    const Dataset serial = run_sweep(base(), spec);
    CHECK(serial.rows == d.rows);
}

TEST_CASE("a failing integral oracle leaves NaN and a note") {
    SweepSpec spec;
    spec.grid = {20.0};
    spec.metrics = {Metric::asc_r1};
    spec.oracles = {OracleKind::integral};
    spec.integral.tol = 1e-300;
    spec.integral.max_depth = 2;
    const Dataset d = run_sweep(base(), spec);
    CHECK(std::isnan(d.rows[0][d.column("asc_r1_integral")]));
    CHECK(std::isfinite(d.rows[0][d.column("asc_r1")]));
    CHECK(d.notes[0].find("integral") != std::string::npos);
}

TEST_CASE("invalid specs") {
    SweepSpec spec;
    spec.metrics = {Metric::asc_r1};
    CHECK_THROWS_AS(run_sweep(base(), spec), ConfigError);
    spec.grid = {1.0, 2.0, 1.5};
    CHECK_THROWS_AS(run_sweep(base(), spec), ConfigError);
    spec.grid = {2.0, 1.0};  // descending is fine
    CHECK_NOTHROW(spec.validate());
    spec.grid = {1.0};
    spec.metrics.clear();
    CHECK_THROWS_AS(run_sweep(base(), spec), ConfigError);
}

TEST_CASE("CSV is RFC 4180 and round-trips exactly") {
    Dataset d;
    d.columns = {"P_dBm", "asc_r1"};
    d.rows = {{0.1, 1.0 / 3.0}, {20.0, std::nan("")}};
    d.series = {"a,b", "say \"hi\""};
    d.notes = {"", "line\nbreak"};
    std::ostringstream out;
    write_csv(d, out);
    const std::string text = out.str();
    CHECK(text.starts_with("series,P_dBm,asc_r1,note\r\n"));
    CHECK(text.find("\"a,b\",0.1,") != std::string::npos);
    CHECK(text.find("\"say \"\"hi\"\"\"") != std::string::npos);
    std::istringstream in(text);
    const Dataset back = read_csv(in);
    CHECK(back.columns == d.columns);
    CHECK(back.series == d.series);
    CHECK(back.notes == d.notes);
    CHECK(back.rows[0] == d.rows[0]);
    CHECK(std::isnan(back.rows[1][1]));

    std::istringstream bad("P_dBm,asc_r1\r\n1,2\r\n");
    CHECK_THROWS_AS(read_csv(bad), ConfigError);
    CHECK_THROWS_AS(write_csv_file(d, "/nonexistent-dir/x.csv"), std::ios_base::failure);
}

TEST_CASE("presets") {
    CHECK(preset_names() == std::vector<std::string>{"fig2", "fig3", "fig4", "fig5", "fig6"});
    const Dataset f2 = run_preset("fig2", base());
    CHECK(f2.columns.front() == "P_dBm");
    CHECK(f2.rows.size() == 31);
    CHECK(f2.series.empty());
    const Dataset f4 = run_preset("fig4", base());
    CHECK(f4.series.front() == "M=25");
    CHECK(f4.series.back() == "M=80");
    const Dataset f6 = run_preset("fig6", base());
    CHECK(f6.columns.front() == "x");
    CHECK(f6.series.front() == "see_vs_M P_dBm=20");
    CHECK_THROWS_AS(run_preset("fig7", base()), ConfigError);
}
