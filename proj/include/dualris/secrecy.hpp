#pragma once

#include <string_view>

#include "dualris/channel.hpp"
#include "dualris/quadrature.hpp"

namespace dualris {

enum class Method { closed_form, asymptotic, mc_oracle, integral_oracle };
std::string_view to_string(Method m);

// All rates in bit/s/Hz, SEE in bit/s/Hz/W. Fields that a method does not
// produce are NaN.
struct SecrecyReport {
    double asc_r1;
    double asc_r2;
    double asc_total;
    double sop_r1;
    double sop_r2;
    double see;
    Method method;
    int quadrature_order;
};

// Average secrecy capacity. Evaluated as a Gaussian expectation over U with a
// split Gauss-Laguerre rule (one half on each side of the mean), using the
// closed-form inner integral of F_e(t)/(1+t). Needs a Laguerre rule.
double asc_r1(const NetworkConfig& cfg, const CltMoments& m, const QuadratureRule& laguerre);
double asc_r2(const NetworkConfig& cfg, const CltMoments& m, const QuadratureRule& laguerre);

// Direct SNR-domain quadratures: Laguerre over (0, inf) for receiver 1 and
// Legendre over (0, p_r2/p_r1) for receiver 2. Accurate only when the SNR law
// is spread out on the scale of the rule; kept for comparison.
double asc_r1_transcribed(const NetworkConfig& cfg, const CltMoments& m, const QuadratureRule& laguerre);
double asc_r2_transcribed(const NetworkConfig& cfg, const CltMoments& m, const QuadratureRule& legendre);

// High-SNR limits.
double asc_r1_asymptotic(const NetworkConfig& cfg, const CltMoments& m);
double asc_r2_asymptotic(const NetworkConfig& cfg, const CltMoments& m);

// Secrecy outage probability by Gauss-Laguerre over the eavesdropper SNR.
double sop_r1(const NetworkConfig& cfg, const CltMoments& m, const QuadratureRule& laguerre);
double sop_r2(const NetworkConfig& cfg, const CltMoments& m, const QuadratureRule& laguerre);

// Total consumed power in watts: P/alpha plus RIS element and terminal circuit power.
double total_power_watts(const NetworkConfig& cfg);
double see_from_asc(double asc_total, const NetworkConfig& cfg);
double asc_total(const NetworkConfig& cfg);
double see(const NetworkConfig& cfg);

SecrecyReport evaluate_closed_form(const NetworkConfig& cfg);
SecrecyReport evaluate_asymptotic(const NetworkConfig& cfg);

// int_0^x F_e(t)/(1+t) dt for F_e(t) = 1 - e^{-lambda t}, in nats.
double eavesdropper_weighted_log(double x, double lambda);

}  // namespace dualris
