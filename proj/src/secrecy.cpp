#include "dualris/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dualris/distributions.hpp"
#include "dualris/errors.hpp"
#include "dualris/special_functions.hpp"

namespace dualris {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::asymptotic: return "asymptotic";
        case Method::mc_oracle: return "mc_oracle";
        case Method::integral_oracle: return "integral_oracle";
    }
    return "unknown";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_kind(const QuadratureRule& rule, QuadratureKind kind, const char* what) {
    if (rule.kind != kind || rule.order < 1 || rule.nodes.size() != static_cast<std::size_t>(rule.order))
        throw DomainError(std::string(what) + ": wrong quadrature rule kind");
}

// E[g(U)] for U Gaussian (mean mu, scale s) with g(u) = 0 for u <= 0. The mean
// splits the line: the right half uses u = mu + (s/2) x, the left half
// u = mu e^{-h x} so that the region near zero is reached geometrically. Both
// halves are Gauss-Laguerre sums with the e^{x} factor folded into the weight.
template <class G>
double expect_over_u(double mu, double s, const QuadratureRule& rule, G&& g) {
    const double hr = 0.5 * s;
    const double hl = std::min(0.5, s / mu);
    double right = 0.0;
    double left = 0.0;
    for (int i = 0; i < rule.order; ++i) {
        const double x = rule.nodes[i];
        const double lw = std::log(rule.weights[i]) + x;
        const double zr = 0.5 * x;
        right += std::exp(lw - 0.5 * zr * zr) * g(mu + hr * x);
        const double ul = mu * std::exp(-hl * x);
        const double zl = (ul - mu) / s;
        left += std::exp(lw - 0.5 * zl * zl) * g(ul) * ul;
    }
    return (right * hr + left * hl) / (s * std::sqrt(2.0 * std::numbers::pi));
}

// One Gauss-Laguerre node mapped to the eavesdropper SNR threshold.
double sop_threshold(double x, double lambda, double r_th, double r_bar) {
    const double ge = std::isinf(lambda) ? 0.0 : x / lambda;
    return r_th * ge + r_bar;
}

}  // namespace

double eavesdropper_weighted_log(double x, double lambda) {
    if (!(x > 0.0)) return 0.0;
    if (std::isinf(lambda)) return std::log1p(x);
    // int_0^x e^{-lambda t}/(1+t) dt = e^lambda [E1(lambda) - E1(lambda (1+x))]
    const double tail = special::expint_e1_scaled(lambda) -
                        std::exp(-lambda * x) * special::expint_e1_scaled(lambda * (1.0 + x));
    return std::max(0.0, std::log1p(x) - tail);
}

double asc_r1(const NetworkConfig& cfg, const CltMoments& m, const QuadratureRule& laguerre) {
    require_kind(laguerre, QuadratureKind::laguerre, "asc_r1");
    const SnrMap snr(cfg, m);
    const double lam = m.lambda_e;
    const double v = expect_over_u(m.mu_U, m.scale(cfg.convention), laguerre,
                                   [&](double u) { return eavesdropper_weighted_log(snr.r1(u), lam); });
    return std::max(0.0, v / std::numbers::ln2);
}

double asc_r2(const NetworkConfig& cfg, const CltMoments& m, const QuadratureRule& laguerre) {
    require_kind(laguerre, QuadratureKind::laguerre, "asc_r2");
    const SnrMap snr(cfg, m);
    const double lam = m.lambda_e;
    const double v = expect_over_u(m.mu_U, m.scale(cfg.convention), laguerre,
                                   [&](double u) { return eavesdropper_weighted_log(snr.r2(u), lam); });
    const double bound = std::log2(1.0 + snr.r2_cap());
    return std::clamp(v / std::numbers::ln2, 0.0, bound);
}

double asc_r1_transcribed(const NetworkConfig& cfg, const CltMoments& m, const QuadratureRule& laguerre) {
    require_kind(laguerre, QuadratureKind::laguerre, "asc_r1_transcribed");
    double sum = 0.0;
    for (int i = 0; i < laguerre.order; ++i) {
        const double g = laguerre.nodes[i];
        const double f = cdf_gamma_e(g, m) * ccdf_gamma_r1(g, cfg, m) / (1.0 + g);
        if (f > 0.0) sum += std::exp(std::log(laguerre.weights[i]) + g) * f;
    }
    return sum / std::numbers::ln2;
}

double asc_r2_transcribed(const NetworkConfig& cfg, const CltMoments& m, const QuadratureRule& legendre) {
    require_kind(legendre, QuadratureKind::legendre, "asc_r2_transcribed");
    const double cap = snr_cap_r2(cfg);
    double sum = 0.0;
    for (int i = 0; i < legendre.order; ++i) {
        const double g = 0.5 * cap * (legendre.nodes[i] + 1.0);
        sum += legendre.weights[i] * cdf_gamma_e(g, m) * ccdf_gamma_r2(g, cfg, m) / (1.0 + g);
    }
    return 0.5 * cap * sum / std::numbers::ln2;
}

double asc_r1_asymptotic(const NetworkConfig& cfg, const CltMoments& m) {
    const double gb = mean_snr(cfg).gamma_bar;
    return std::log2(gb * m.A1 * m.mu_U2) - special::expint_e1_scaled(m.lambda_e) / std::numbers::ln2;
}

double asc_r2_asymptotic(const NetworkConfig& cfg, const CltMoments& m) {
    return std::log2(1.0 + snr_cap_r2(cfg)) - special::expint_e1_scaled(m.lambda_e) / std::numbers::ln2;
}

double sop_r1(const NetworkConfig& cfg, const CltMoments& m, const QuadratureRule& laguerre) {
    require_kind(laguerre, QuadratureKind::laguerre, "sop_r1");
    const double r_th = std::exp2(cfg.R_s);
    const double r_bar = r_th - 1.0;
    double sum = 0.0;
    for (int i = 0; i < laguerre.order; ++i)
        sum += laguerre.weights[i] *
               cdf_gamma_r1(sop_threshold(laguerre.nodes[i], m.lambda_e, r_th, r_bar), cfg, m);
    return std::clamp(sum, 0.0, 1.0);
}

double sop_r2(const NetworkConfig& cfg, const CltMoments& m, const QuadratureRule& laguerre) {
    require_kind(laguerre, QuadratureKind::laguerre, "sop_r2");
    const double r_th = std::exp2(cfg.R_s);
    const double r_bar = r_th - 1.0;
    if (r_bar >= snr_cap_r2(cfg)) return 1.0;
    double sum = 0.0;
    for (int i = 0; i < laguerre.order; ++i)
        sum += laguerre.weights[i] *
               cdf_gamma_r2(sop_threshold(laguerre.nodes[i], m.lambda_e, r_th, r_bar), cfg, m);
    return std::clamp(sum, 0.0, 1.0);
}

double total_power_watts(const NetworkConfig& cfg) {
    return dbm_to_watts(cfg.P_dBm) / cfg.alpha + cfg.M1 * dbm_to_watts(cfg.P_R1_dBm) +
           cfg.M2 * dbm_to_watts(cfg.P_R2_dBm) + dbm_to_watts(cfg.P_t1_dBm) + dbm_to_watts(cfg.P_t2_dBm);
}

double see_from_asc(double asc_total_value, const NetworkConfig& cfg) {
    const double p = total_power_watts(cfg);
    if (!(p > 0.0) || !std::isfinite(p)) throw ConfigError("total consumed power must be positive", "alpha");
    return asc_total_value / p;
}

double asc_total(const NetworkConfig& cfg) {
    const CltMoments m = clt_moments(cfg);
    const auto rule = cached_rule(QuadratureKind::laguerre, cfg.quadrature_order);
    return asc_r1(cfg, m, *rule) + asc_r2(cfg, m, *rule);
}

double see(const NetworkConfig& cfg) { return see_from_asc(asc_total(cfg), cfg); }

SecrecyReport evaluate_closed_form(const NetworkConfig& cfg) {
    cfg.validate();
    const CltMoments m = clt_moments(cfg);
    const auto rule = cached_rule(QuadratureKind::laguerre, cfg.quadrature_order);
    SecrecyReport r{};
    r.method = Method::closed_form;
    r.quadrature_order = cfg.quadrature_order;
    r.asc_r1 = asc_r1(cfg, m, *rule);
    r.asc_r2 = asc_r2(cfg, m, *rule);
    r.asc_total = r.asc_r1 + r.asc_r2;
    r.sop_r1 = sop_r1(cfg, m, *rule);
    r.sop_r2 = sop_r2(cfg, m, *rule);
    r.see = see_from_asc(r.asc_total, cfg);
    return r;
}

SecrecyReport evaluate_asymptotic(const NetworkConfig& cfg) {
    cfg.validate();
    const CltMoments m = clt_moments(cfg);
    SecrecyReport r{};
    r.method = Method::asymptotic;
    r.quadrature_order = 0;
    r.asc_r1 = asc_r1_asymptotic(cfg, m);
    r.asc_r2 = asc_r2_asymptotic(cfg, m);
    r.asc_total = r.asc_r1 + r.asc_r2;
    r.sop_r1 = kNaN;
    r.sop_r2 = kNaN;
    r.see = see_from_asc(r.asc_total, cfg);
    return r;
}

}  // namespace dualris
