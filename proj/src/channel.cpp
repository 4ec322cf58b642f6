#include "dualris/channel.hpp"

#include <cmath>
#include <string>

#include "dualris/errors.hpp"
#include "dualris/quadrature.hpp"

namespace dualris {

double pathloss_db(double distance_m) {
    if (!(distance_m > 0.0) || !std::isfinite(distance_m))
        throw DomainError("path loss needs a positive finite distance, got " + std::to_string(distance_m));
    return -37.5 - 22.0 * std::log10(distance_m);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double FadingParams::element_mean() const { return m2 / (m2 - 1.0); }

double FadingParams::element_variance() const {
    return m2 * m2 * (m1 + m2 - 1.0) / (m1 * (m2 - 1.0) * (m2 - 1.0) * (m2 - 2.0));
}

void FadingParams::validate() const {
    if (!(m1 > 0.0) || !std::isfinite(m1)) throw ConfigError("m1 must be positive", "m1");
    if (!(m2 > 2.0) || !std::isfinite(m2))
        throw ConfigError("m2 must exceed 2 for a finite element variance", "m2");
}

namespace {

void check_distance(double d, const char* key) {
    if (!(d > 0.0) || !std::isfinite(d))
        throw ConfigError(std::string(key) + " must be a positive distance", key);
}

void check_finite(double v, const char* key) {
    if (!std::isfinite(v)) throw ConfigError(std::string(key) + " must be finite", key);
}

double los_gain(const NetworkConfig& cfg, double second_hop) {
    const double rhs = db_to_linear(pathloss_db(second_hop));
    if (cfg.los_composition == LosComposition::r2_side_only) return rhs;
    return db_to_linear(pathloss_db(cfg.geometry.d_vt_r1)) * rhs;
}

}  // namespace

void Geometry::validate() const {
    check_distance(d_vt_r1, "d_vt_r1");
    check_distance(d_r2_vr1, "d_r2_vr1");
    check_distance(d_r2_vr2, "d_r2_vr2");
    check_distance(d_r2_ve, "d_r2_ve");
    check_distance(d_r1_r2, "d_r1_r2");
    if (!(kappa > 2.0) || !std::isfinite(kappa)) throw ConfigError("kappa must exceed 2", "kappa");
}

void NetworkConfig::validate() const {
    check_finite(P_dBm, "P_dBm");
    if (M1 < 1) throw ConfigError("M1 must be at least 1", "M1");
    if (M2 < 1) throw ConfigError("M2 must be at least 1", "M2");
    fading.validate();
    check_finite(noise_r_dBm, "noise_r_dBm");
    check_finite(noise_e_dBm, "noise_e_dBm");
    if (!(p_r1 > 0.0) || !(p_r1 < 1.0)) throw ConfigError("p_r1 must lie in (0, 1)", "p_r1");
    if (!(p_r2 > 0.0) || !(p_r2 < 1.0)) throw ConfigError("p_r2 must lie in (0, 1)", "p_r2");
    if (p_r2 < p_r1) throw ConfigError("p_r2 >= p_r1 violated (the far receiver needs the larger share)", "p_r1");
    if (std::fabs(p_r1 + p_r2 - 1.0) > 1e-12) throw ConfigError("p_r1 + p_r2 must equal 1", "p_r2");
    geometry.validate();
    if (!(R_s >= 0.0) || !std::isfinite(R_s)) throw ConfigError("R_s must be non-negative", "R_s");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("alpha must be positive", "alpha");
    check_finite(P_R1_dBm, "P_R1_dBm");
    check_finite(P_R2_dBm, "P_R2_dBm");
    check_finite(P_t1_dBm, "P_t1_dBm");
    check_finite(P_t2_dBm, "P_t2_dBm");
    if (quadrature_order < 1 || quadrature_order > kMaxQuadratureOrder)
        throw ConfigError("quadrature_order must lie in [1, " + std::to_string(kMaxQuadratureOrder) + "]",
                          "quadrature_order");
}

MeanSnr mean_snr(const NetworkConfig& cfg) {
    const double p = dbm_to_watts(cfg.P_dBm);
    return {p / dbm_to_watts(cfg.noise_r_dBm), p / dbm_to_watts(cfg.noise_e_dBm)};
}

LinkGains link_gains(const NetworkConfig& cfg) {
    const Geometry& g = cfg.geometry;
    const double inter = std::pow(g.d_r1_r2, -g.kappa);
    const double shared = los_gain(cfg, g.d_r2_vr1) * inter;
    if (cfg.link_distances == LinkDistances::shared) return {shared, shared, shared};
    return {shared, los_gain(cfg, g.d_r2_vr2) * inter, los_gain(cfg, g.d_r2_ve) * inter};
}

double CltMoments::sigma_U() const { return std::sqrt(var_U); }

double CltMoments::scale(DenominatorConvention c) const {
    return c == DenominatorConvention::paper ? var_U : sigma_U();
}

CltMoments clt_moments(const NetworkConfig& cfg) {
    if (!(cfg.fading.m2 > 2.0)) throw DomainError("m2 must exceed 2 for finite CLT moments");
    if (!(cfg.fading.m1 > 0.0)) throw DomainError("m1 must be positive");
    const double n = static_cast<double>(cfg.elements());
    const LinkGains g = link_gains(cfg);
    const MeanSnr snr = mean_snr(cfg);
    CltMoments m{};
    m.mu_U = n * cfg.fading.element_mean();
    m.var_U = n * cfg.fading.element_variance();
    m.mu_U2 = m.var_U + m.mu_U * m.mu_U;
    m.A1 = cfg.p_r1 * g.r1;
    m.A2 = cfg.p_r2 * g.r2;
    m.A1_at_r2 = cfg.p_r1 * g.r2;
    m.lambda_e = 1.0 / (snr.gamma_bar_e * cfg.p_r1 * g.e * m.mu_U);
    return m;
}

std::string_view to_string(LosComposition v) {
    return v == LosComposition::product ? "product" : "r2_side_only";
}

std::string_view to_string(LinkDistances v) {
    return v == LinkDistances::shared ? "shared" : "per_receiver";
}

std::string_view to_string(DenominatorConvention v) {
    return v == DenominatorConvention::paper ? "paper" : "gaussian";
}

}  // namespace dualris
