#include "dualris/distributions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "dualris/errors.hpp"
#include "dualris/special_functions.hpp"
#include "fading_kernel.hpp"

namespace dualris {

double cdf_u(double u, const CltMoments& m, DenominatorConvention c) {
    return 0.5 * special::erfc((m.mu_U - u) / (m.scale(c) * std::numbers::sqrt2));
}

double ccdf_u(double u, const CltMoments& m, DenominatorConvention c) {
    return 0.5 * special::erfc((u - m.mu_U) / (m.scale(c) * std::numbers::sqrt2));
}

double pdf_u(double u, const CltMoments& m, DenominatorConvention c) {
    const double s = m.scale(c);
    const double z = (u - m.mu_U) / s;
    return std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * std::numbers::pi));
}

SnrMap::SnrMap(const NetworkConfig& cfg, const CltMoments& m) {
    const double gb = mean_snr(cfg).gamma_bar;
    c1 = gb * m.A1;
    c2 = gb * m.A2;
    c2i = gb * m.A1_at_r2;
    csic = gb * m.A1 * (cfg.p_r2 / cfg.p_r1);
}

double snr_cap_r2(const NetworkConfig& cfg) { return cfg.p_r2 / cfg.p_r1; }

namespace {

// U level at which receiver 2 reaches SNR g (g below the cap).
double u_for_r2(double g, const SnrMap& s) { return std::sqrt(g / (s.c2 - s.c2i * g)); }

}  // namespace

double cdf_gamma_r1(double g, const NetworkConfig& cfg, const CltMoments& m) {
    if (g < 0.0) return 0.0;
    const SnrMap s(cfg, m);
    return cdf_u(std::sqrt(g / s.c1), m, cfg.convention);
}

double ccdf_gamma_r1(double g, const NetworkConfig& cfg, const CltMoments& m) {
    if (g < 0.0) return 1.0;
    const SnrMap s(cfg, m);
    return ccdf_u(std::sqrt(g / s.c1), m, cfg.convention);
}

double cdf_gamma_r2(double g, const NetworkConfig& cfg, const CltMoments& m) {
    if (g < 0.0) return 0.0;
    const SnrMap s(cfg, m);
    if (g >= s.r2_cap()) return 1.0;
    return cdf_u(u_for_r2(g, s), m, cfg.convention);
}

double ccdf_gamma_r2(double g, const NetworkConfig& cfg, const CltMoments& m) {
    if (g < 0.0) return 1.0;
    const SnrMap s(cfg, m);
    if (g >= s.r2_cap()) return 0.0;
    return ccdf_u(u_for_r2(g, s), m, cfg.convention);
}

double cdf_gamma_e(double g, const CltMoments& m) {
    if (g <= 0.0) return 0.0;
    return -std::expm1(-m.lambda_e * g);
}

double ccdf_gamma_e(double g, const CltMoments& m) {
    if (g <= 0.0) return 1.0;
    return std::exp(-m.lambda_e * g);
}

double pdf_gamma_e(double g, const CltMoments& m) {
    if (g < 0.0) return 0.0;
    return m.lambda_e * std::exp(-m.lambda_e * g);
}

GammaDomain gamma_domain(Receiver r, const NetworkConfig& cfg) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (r == Receiver::r2) return {0.0, snr_cap_r2(cfg)};
    return {0.0, inf};
}

double sample_gamma(double shape, Rng& rng) {
    if (!(shape > 0.0)) throw DomainError("gamma shape must be positive");
    if (shape < 1.0) {
        // Boost to shape + 1 and scale back with U^{1/shape}.
        return sample_gamma(shape + 1.0, rng) * std::pow(rng.uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

namespace {

constexpr int kMaxProductShape = 16;

int integer_shape(double m) {
    const double r = std::round(m);
    if (r == m && r >= 1.0 && r <= kMaxProductShape) return static_cast<int>(r);
    return 0;
}

double product_of_uniforms(int k, Rng& rng) {
    double p = rng.uniform();
    for (int j = 1; j < k; ++j) p *= rng.uniform();
    return p;
}

}  // namespace

double sample_eta(const FadingParams& f, Rng& rng) {
    const int k1 = integer_shape(f.m1);
    const int k2 = integer_shape(f.m2);
    if (k1 && k2) {
        const double a = product_of_uniforms(k1, rng);
        const double b = product_of_uniforms(k2, rng);
        return (f.m2 / f.m1) * std::log(a) / std::log(b);
    }
    const double g1 = sample_gamma(f.m1, rng);
    const double g2 = sample_gamma(f.m2, rng);
    return (g1 / f.m1) / (g2 / f.m2);
}

double sample_u(const CltMoments& m, DenominatorConvention c, Rng& rng) {
    return m.mu_U + m.scale(c) * rng.normal();
}

double sample_gamma_e(const CltMoments& m, Rng& rng) {
    return -std::log(rng.uniform()) / m.lambda_e;
}

FSumSampler::FSumSampler(const FadingParams& f, int n)
    : fading_(f), n_(n), k1_(integer_shape(f.m1)), k2_(integer_shape(f.m2)), eta_(n) {
    f.validate();
    if (n < 1) throw DomainError("element count must be positive");
    if (k1_ && k2_) {
        num_.resize(n);
        den_.resize(n);
    }
}

double FSumSampler::draw(Rng& rng, double* phased_power) {
    if (k1_ && k2_) {
        for (int i = 0; i < n_; ++i) {
            num_[i] = product_of_uniforms(k1_, rng);
            den_[i] = product_of_uniforms(k2_, rng);
        }
        detail::log_ratio(num_.data(), den_.data(), fading_.m2 / fading_.m1, eta_.data(), eta_.size());
    } else {
        for (int i = 0; i < n_; ++i) {
            const double g1 = sample_gamma(fading_.m1, rng);
            const double g2 = sample_gamma(fading_.m2, rng);
            eta_[i] = (g1 / fading_.m1) / (g2 / fading_.m2);
        }
    }
    double sum = 0.0;
    for (double e : eta_) sum += e;
    if (phased_power) {
        double re = 0.0;
        double im = 0.0;
        for (double e : eta_) {
            // Uniform phase via a uniform point in the unit disc.
            double x;
            double y;
            double r2;
            do {
                x = 2.0 * rng.uniform() - 1.0;
                y = 2.0 * rng.uniform() - 1.0;
                r2 = x * x + y * y;
            } while (!(r2 > 0.0 && r2 <= 1.0));
            const double k = e / std::sqrt(r2);
            re += x * k;
            im += y * k;
        }
        *phased_power = re * re + im * im;
    }
    return sum;
}

}  // namespace dualris
