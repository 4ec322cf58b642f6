#pragma once

#include <vector>

#include "dualris/channel.hpp"
#include "dualris/rng.hpp"

namespace dualris {

enum class Receiver { r1, r2, e };

// Gaussian model of U = sum of element gains, clamped to U >= 0 when mapped
// to SNRs. The scale follows the configured convention.
double cdf_u(double u, const CltMoments& m, DenominatorConvention c);
double ccdf_u(double u, const CltMoments& m, DenominatorConvention c);
double pdf_u(double u, const CltMoments& m, DenominatorConvention c);

// Maps from U to the instantaneous SNRs.
struct SnrMap {
    double c1;    // gamma_bar A1
    double c2;    // gamma_bar A2
    double c2i;   // gamma_bar p_r1 G_r2, interference at receiver 2
    double csic;  // gamma_bar p_r2 G_r1, receiver 2's signal seen at receiver 1

    SnrMap(const NetworkConfig& cfg, const CltMoments& m);
    double r1(double u) const { return c1 * u * u; }
    double r2(double u) const {
        const double u2 = u * u;
        return c2 * u2 / (c2i * u2 + 1.0);
    }
    double sic(double u) const {
        const double u2 = u * u;
        return csic * u2 / (c1 * u2 + 1.0);
    }
    double r2_cap() const { return c2 / c2i; }
};

double snr_cap_r2(const NetworkConfig& cfg);

double cdf_gamma_r1(double g, const NetworkConfig& cfg, const CltMoments& m);
double ccdf_gamma_r1(double g, const NetworkConfig& cfg, const CltMoments& m);
double cdf_gamma_r2(double g, const NetworkConfig& cfg, const CltMoments& m);
double ccdf_gamma_r2(double g, const NetworkConfig& cfg, const CltMoments& m);
double cdf_gamma_e(double g, const CltMoments& m);
double ccdf_gamma_e(double g, const CltMoments& m);
double pdf_gamma_e(double g, const CltMoments& m);

struct GammaDomain {
    double lower;
    double upper;  // +inf when unbounded
};
GammaDomain gamma_domain(Receiver r, const NetworkConfig& cfg);

double sample_gamma(double shape, Rng& rng);  // unit scale
double sample_eta(const FadingParams& f, Rng& rng);
double sample_u(const CltMoments& m, DenominatorConvention c, Rng& rng);
double sample_gamma_e(const CltMoments& m, Rng& rng);

// Draws the exact sum of n independent element gains, batched for speed.
// Integer shapes up to 16 use products of uniforms; others use Marsaglia-Tsang.
class FSumSampler {
public:
    FSumSampler(const FadingParams& f, int n);

    // Returns sum eta_i. If phased_power is given it also receives
    // |sum eta_i e^{j theta_i}|^2 with independent uniform phases.
    double draw(Rng& rng, double* phased_power = nullptr);

private:
    FadingParams fading_;
    int n_;
    int k1_;
    int k2_;
    std::vector<double> num_;
    std::vector<double> den_;
    std::vector<double> eta_;
};

}  // namespace dualris
