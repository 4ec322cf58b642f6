#include <doctest.h>

#include <cmath>

#include "dualris/channel.hpp"
#include "dualris/errors.hpp"
#include "oracles.hpp"

using namespace dualris;

TEST_CASE("link budget conversions") {
    CHECK(pathloss_db(1.0) == doctest::Approx(-37.5));
    CHECK(pathloss_db(10.0) == doctest::Approx(-59.5));
    CHECK(pathloss_db(100.0) == doctest::Approx(-81.5));
    CHECK(db_to_linear(0.0) == 1.0);
    CHECK(db_to_linear(-30.0) == doctest::Approx(1e-3).epsilon(1e-14));
    CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dbm_to_watts(-70.0) == doctest::Approx(1e-10).epsilon(1e-14));
    CHECK_THROWS_AS(pathloss_db(0.0), DomainError);
    CHECK_THROWS_AS(pathloss_db(-5.0), DomainError);
}

TEST_CASE("mean SNRs at the default noise floors") {
    NetworkConfig cfg;
    cfg.P_dBm = 20.0;
    const MeanSnr s = mean_snr(cfg);
    CHECK(s.gamma_bar == doctest::Approx(1e9).epsilon(1e-12));
    CHECK(s.gamma_bar_e == doctest::Approx(1e4).epsilon(1e-12));
    cfg.P_dBm = 0.0;
    cfg.noise_r_dBm = 0.0;
    CHECK(mean_snr(cfg).gamma_bar == doctest::Approx(1.0));
}

TEST_CASE("F element moments") {
    const FadingParams f{2.0, 3.0};
    CHECK(f.element_mean() == doctest::Approx(1.5));
    CHECK(f.element_variance() == doctest::Approx(4.5));
    const FadingParams g{4.0, 10.0};
    CHECK(g.element_mean() == doctest::Approx(oracle::f_mean(4.0, 10.0)));
    CHECK(g.element_variance() == doctest::Approx(oracle::f_variance(4.0, 10.0)));
    CHECK_THROWS_AS((FadingParams{2.0, 2.0}).validate(), ConfigError);
    CHECK_THROWS_AS((FadingParams{0.0, 3.0}).validate(), ConfigError);
}

TEST_CASE("CLT moments and link coefficients") {
    NetworkConfig cfg;
    cfg.P_dBm = 20.0;
    cfg.M1 = cfg.M2 = 50;
    const CltMoments m = clt_moments(cfg);
    const double n = 2500.0;
    CHECK(m.mu_U == doctest::Approx(n * 1.5));
    CHECK(m.var_U == doctest::Approx(n * 4.5));
    CHECK(m.mu_U2 - (m.var_U + m.mu_U * m.mu_U) == 0.0);
    CHECK(m.sigma_U() == doctest::Approx(std::sqrt(n * 4.5)));
    CHECK(m.scale(DenominatorConvention::paper) == m.var_U);
    CHECK(m.scale(DenominatorConvention::gaussian) == m.sigma_U());

    // Both LoS hops at 5 m, inter-RIS 100 m with exponent 2.1.
    const double los = std::pow(10.0, (-37.5 - 22.0 * std::log10(5.0)) / 10.0);
    const double g = los * los * std::pow(100.0, -2.1);
    CHECK(m.A1 == doctest::Approx(0.3 * g).epsilon(1e-13));
    CHECK(m.A2 == doctest::Approx(0.7 * g).epsilon(1e-13));
    CHECK(m.A2 / m.A1 == doctest::Approx(0.7 / 0.3).epsilon(1e-14));
    CHECK(m.lambda_e == doctest::Approx(1.0 / (1e4 * 0.3 * g * m.mu_U)).epsilon(1e-13));
}

TEST_CASE("per-receiver distances and the r2-side LoS reading") {
    NetworkConfig cfg;
    cfg.link_distances = LinkDistances::per_receiver;
    const LinkGains lg = link_gains(cfg);
    const double hop = [](double d) { return std::pow(10.0, (-37.5 - 22.0 * std::log10(d)) / 10.0); }(5.0);
    const double inter = std::pow(100.0, -2.1);
    CHECK(lg.r1 == doctest::Approx(hop * hop * inter).epsilon(1e-13));
    CHECK(lg.r2 == doctest::Approx(hop * std::pow(10.0, (-37.5 - 22.0 * std::log10(15.0)) / 10.0) * inter)
                       .epsilon(1e-13));
    CHECK(lg.e == doctest::Approx(lg.r1).epsilon(1e-15));

    cfg.link_distances = LinkDistances::shared;
    cfg.los_composition = LosComposition::r2_side_only;
    CHECK(link_gains(cfg).r1 == doctest::Approx(hop * inter).epsilon(1e-13));
}

TEST_CASE("configuration invariants name the offending key") {
    auto key_of = [](NetworkConfig cfg) {
        try {
            cfg.validate();
        } catch (const ConfigError& e) {
            return e.key();
        }
        return std::string("<none>");
    };
    NetworkConfig ok;
    CHECK(key_of(ok) == "<none>");

    NetworkConfig c = ok;
    c.geometry.kappa = 2.0;
    CHECK(key_of(c) == "kappa");
    c = ok;
    c.p_r1 = 0.4;
    CHECK(!key_of(c).empty());
    c = ok;
    c.p_r1 = 0.6;
    c.p_r2 = 0.4;  // receiver 1 must get the smaller share
    CHECK(key_of(c) != "<none>");
    c = ok;
    c.M1 = 0;
    CHECK(key_of(c) == "M1");
    c = ok;
    c.alpha = 0.0;
    CHECK(key_of(c) == "alpha");
    c = ok;
    c.geometry.d_r1_r2 = -1.0;
    CHECK(key_of(c) == "d_r1_r2");
    c = ok;
    c.quadrature_order = 0;
    CHECK(key_of(c) == "quadrature_order");
}
