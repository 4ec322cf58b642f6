#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "dualris/distributions.hpp"
#include "dualris/errors.hpp"
#include "dualris/quadrature.hpp"
#include "dualris/secrecy.hpp"
#include "oracles.hpp"

using namespace dualris;
using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

namespace {

NetworkConfig scenario(double P, int M, DenominatorConvention c, int order = 30) {
    NetworkConfig cfg;
    cfg.P_dBm = P;
    cfg.M1 = cfg.M2 = M;
    cfg.convention = c;
    cfg.quadrature_order = order;
    return cfg;
}

// int_0^x (1 - e^{-lam t}) / (1 + t) dt = log1p(x) - int_0^{lam x} e^{-s} / (lam + s) ds,
// the second part by adaptive quadrature cut where e^{-s} is negligible.
double eve_inner(double x, double lam) {
    if (x <= 0.0) return 0.0;
    if (std::isinf(lam)) return std::log1p(x);
    auto f = [lam](double s) { return std::exp(-s) / (lam + s); };
    const double top = std::min(lam * x, 60.0);
    double j = 0.0;
    double a = 0.0;
    for (double b : {1.0, 4.0, 12.0, 30.0, 60.0}) {
        b = std::min(b, top);
        if (b > a) j += GK::integrate(f, a, b, 12, 1e-13);
        a = std::max(a, b);
    }
    return std::log1p(x) - j;
}

// Expectation over the Gaussian model of U (negative draws clamp to 0) of
// g(u); the mass at u <= 0 contributes g(0).
template <class G>
double expect_u(const CltMoments& m, DenominatorConvention c, G&& g) {
    const double s = m.scale(c);
    const double mass0 = 0.5 * std::erfc(m.mu_U / (s * std::numbers::sqrt2));
    auto f = [&](double u) {
        const double z = (u - m.mu_U) / s;
        return std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * std::numbers::pi)) * g(u);
    };
    double total = mass0 * g(0.0);
    double a = std::max(0.0, m.mu_U - 40.0 * s);
    for (double k = -39.0; k <= 40.0; k += 1.0) {
        const double b = m.mu_U + k * s;
        if (b <= a) continue;
        total += GK::integrate(f, a, b, 12, 1e-12);
        a = b;
    }
    return total;
}

enum class Rx { r1, r2 };

double asc_oracle(const NetworkConfig& cfg, Rx rx) {
    const CltMoments m = clt_moments(cfg);
    const SnrMap s(cfg, m);
    return expect_u(m, cfg.convention, [&](double u) {
               return eve_inner(rx == Rx::r1 ? s.r1(u) : s.r2(u), m.lambda_e);
           }) /
           std::numbers::ln2;
}

// P(gamma_e >= (1 + gamma_r)/R_th - 1), averaged over U.
double sop_oracle(const NetworkConfig& cfg, Rx rx) {
    const CltMoments m = clt_moments(cfg);
    const SnrMap s(cfg, m);
    const double r_th = std::exp2(cfg.R_s);
    return expect_u(m, cfg.convention, [&](double u) {
        const double g = rx == Rx::r1 ? s.r1(u) : s.r2(u);
        return std::exp(-m.lambda_e * std::max(0.0, (1.0 + g) / r_th - 1.0));
    });
}

}  // namespace

TEST_CASE("eavesdropper-weighted logarithm") {
    for (double lam : {1e-3, 0.5, 3.0, 1e3, 5e7}) {
        for (double x : {1e-6, 0.3, 2.0, 40.0, 1e5}) {
            INFO("lambda " << lam << " x " << x);
            CHECK(eavesdropper_weighted_log(x, lam) == doctest::Approx(eve_inner(x, lam)).epsilon(1e-10));
        }
    }
    CHECK(eavesdropper_weighted_log(0.0, 2.0) == 0.0);
    CHECK(eavesdropper_weighted_log(3.0, std::numeric_limits<double>::infinity()) ==
          doctest::Approx(std::log1p(3.0)));
}

TEST_CASE("ASC closed forms match the expectation over U") {
    for (DenominatorConvention c : {DenominatorConvention::paper, DenominatorConvention::gaussian}) {
        for (double P : {0.0, 20.0, 45.0}) {
            for (int M : {25, 60}) {
                const NetworkConfig cfg = scenario(P, M, c);
                const CltMoments m = clt_moments(cfg);
                const auto lag = cached_rule(QuadratureKind::laguerre, 30);
                INFO(to_string(c) << " P " << P << " M " << M);
                CHECK(asc_r1(cfg, m, *lag) == doctest::Approx(asc_oracle(cfg, Rx::r1)).epsilon(1e-5));
                CHECK(asc_r2(cfg, m, *lag) == doctest::Approx(asc_oracle(cfg, Rx::r2)).epsilon(1e-5));
            }
        }
    }
}

TEST_CASE("ASC with per-receiver distances and a strong eavesdropper") {
    NetworkConfig cfg = scenario(30.0, 20, DenominatorConvention::gaussian);
    cfg.link_distances = LinkDistances::per_receiver;
    cfg.noise_e_dBm = -100.0;
    const CltMoments m = clt_moments(cfg);
    const auto lag = cached_rule(QuadratureKind::laguerre, 30);
    CHECK(m.lambda_e < 1.0);
    CHECK(asc_r1(cfg, m, *lag) == doctest::Approx(asc_oracle(cfg, Rx::r1)).epsilon(1e-5));
    CHECK(asc_r2(cfg, m, *lag) == doctest::Approx(asc_oracle(cfg, Rx::r2)).epsilon(1e-5));
}

TEST_CASE("SOP closed forms match the expectation over U") {
    for (DenominatorConvention c : {DenominatorConvention::paper, DenominatorConvention::gaussian}) {
        for (double P : {-10.0, 0.0, 20.0}) {
            NetworkConfig cfg = scenario(P, 30, c);
            cfg.noise_e_dBm = -60.0;  // keeps the outage probability away from 0 and 1
            const CltMoments m = clt_moments(cfg);
            const auto lag = cached_rule(QuadratureKind::laguerre, 30);
            INFO(to_string(c) << " P " << P);
            CHECK(std::fabs(sop_r1(cfg, m, *lag) - sop_oracle(cfg, Rx::r1)) <= 1e-4);
            CHECK(std::fabs(sop_r2(cfg, m, *lag) - sop_oracle(cfg, Rx::r2)) <= 1e-4);
        }
    }
}

TEST_CASE("SOP edge cases") {
    NetworkConfig cfg = scenario(20.0, 50, DenominatorConvention::paper);
    const auto lag = cached_rule(QuadratureKind::laguerre, 16);
    cfg.R_s = 2.0;  // 2^2 - 1 = 3 exceeds the receiver-2 SINR cap of 7/3
    CHECK(sop_r2(cfg, clt_moments(cfg), *lag) == 1.0);
    cfg = scenario(-150.0, 50, DenominatorConvention::paper);
    CHECK(sop_r1(cfg, clt_moments(cfg), *lag) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(asc_r1(cfg, clt_moments(cfg), *lag) <= 1e-6);
}

TEST_CASE("a silent eavesdropper leaves the plain ergodic rate") {
    NetworkConfig cfg = scenario(20.0, 50, DenominatorConvention::gaussian);
    cfg.noise_e_dBm = 400.0;
    const CltMoments m = clt_moments(cfg);
    const auto lag = cached_rule(QuadratureKind::laguerre, 30);
    const SnrMap s(cfg, m);
    const double plain = expect_u(m, cfg.convention, [&](double u) { return std::log1p(s.r1(u)); }) /
                         std::numbers::ln2;
    CHECK(asc_r1(cfg, m, *lag) == doctest::Approx(plain).epsilon(1e-8));
}

TEST_CASE("high-SNR limits") {
    const NetworkConfig cfg = scenario(60.0, 50, DenominatorConvention::gaussian);
    const CltMoments m = clt_moments(cfg);
    const double gb = mean_snr(cfg).gamma_bar;
    const double eve = oracle::e1_scaled(m.lambda_e) / std::numbers::ln2;
    CHECK(asc_r1_asymptotic(cfg, m) == doctest::Approx(std::log2(gb * m.A1 * m.mu_U2) - eve).epsilon(1e-12));
    CHECK(asc_r2_asymptotic(cfg, m) == doctest::Approx(std::log2(1.0 + 0.7 / 0.3) - eve).epsilon(1e-12));
    const auto lag = cached_rule(QuadratureKind::laguerre, 30);
    CHECK(std::fabs(asc_r1(cfg, m, *lag) - asc_r1_asymptotic(cfg, m)) <= 0.05);

    const SecrecyReport r = evaluate_asymptotic(cfg);
    CHECK(r.method == Method::asymptotic);
    CHECK(std::isnan(r.sop_r1));
    CHECK(std::isnan(r.sop_r2));
    CHECK(r.asc_total == doctest::Approx(r.asc_r1 + r.asc_r2));
}

TEST_CASE("power budget and energy efficiency") {
    const NetworkConfig cfg = scenario(20.0, 50, DenominatorConvention::paper);
    // 0.1 W / 1.2 + 100 elements at 10 mW + two terminals at 10 mW.
    const double watts = 0.1 / 1.2 + 100 * 0.01 + 2 * 0.01;
    CHECK(total_power_watts(cfg) == doctest::Approx(watts).epsilon(1e-14));
    const SecrecyReport r = evaluate_closed_form(cfg);
    CHECK(r.method == Method::closed_form);
    CHECK(r.quadrature_order == 30);
    CHECK(r.asc_total == doctest::Approx(r.asc_r1 + r.asc_r2));
    CHECK(r.see == doctest::Approx(r.asc_total / watts).epsilon(1e-14));
    CHECK(see(cfg) == doctest::Approx(r.see).epsilon(1e-14));
    CHECK(asc_total(cfg) == doctest::Approx(r.asc_total).epsilon(1e-14));
}

TEST_CASE("rule kinds are checked") {
    const NetworkConfig cfg = scenario(20.0, 50, DenominatorConvention::paper);
    const CltMoments m = clt_moments(cfg);
    const auto leg = cached_rule(QuadratureKind::legendre, 8);
    const auto lag = cached_rule(QuadratureKind::laguerre, 8);
    CHECK_THROWS_AS(asc_r1(cfg, m, *leg), DomainError);
    CHECK_THROWS_AS(sop_r2(cfg, m, *leg), DomainError);
    CHECK_THROWS_AS(asc_r2_transcribed(cfg, m, *lag), DomainError);
    CHECK_NOTHROW(asc_r2_transcribed(cfg, m, *leg));
    CHECK_NOTHROW(asc_r1_transcribed(cfg, m, *lag));
}
