#include <doctest.h>

#include <vector>

#include "dualris/errors.hpp"
#include "dualris/validation.hpp"

using namespace dualris;

TEST_CASE("KS distance of a perfect grid") {
    std::vector<double> xs;
    for (int i = 0; i < 100; ++i) xs.push_back((i + 0.5) / 100.0);
    CHECK(ks_statistic(xs, [](double x) { return x; }) == doctest::Approx(0.005));
    std::vector<double> shifted(100, 0.0);
    CHECK(ks_statistic(shifted, [](double x) { return x; }) == doctest::Approx(1.0));
}

TEST_CASE("reference scenario") {
    const NetworkConfig cfg = reference_config(40.0, 80, DenominatorConvention::gaussian);
    CHECK(cfg.P_dBm == 40.0);
    CHECK(cfg.elements() == 6400);
    CHECK(cfg.quadrature_order == 30);
    CHECK(cfg.convention == DenominatorConvention::gaussian);
}

TEST_CASE("cheap checks and the report format") {
    ValidationOptions opt;
    opt.trials = 1000;
    std::vector<CheckResult> r{run_check("C1", opt), run_check("C8", opt), run_check("C9", opt)};
    for (const auto& c : r) CHECK_MESSAGE(c.passed, c.id << ": " << c.detail);
    const std::string a = format_report(opt, r);
    CHECK(a == format_report(opt, r));
    CHECK(a.starts_with("dualris validation: trials=1000 seed=42 order=30\n"));
    CHECK(a.find("PASS C8") != std::string::npos);
    CHECK(a.ends_with("overall: PASS\n"));
    CHECK(all_passed(r));
    r.push_back({"X", "forced", false, "detail"});
    CHECK_FALSE(all_passed(r));
    CHECK(format_report(opt, r).ends_with("overall: FAIL\n"));
    CHECK(check_ids().size() == 9);
    CHECK_THROWS_AS(run_check("C2", opt), ConfigError);
    opt.trials = 1;
    CHECK_THROWS_AS(run_check("C1", opt), ConfigError);
}
