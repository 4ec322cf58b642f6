#pragma once

#include "dualris/channel.hpp"
#include "dualris/secrecy.hpp"

namespace dualris {

// Adaptive Gauss-Kronrod integration of the SNR-domain integrals, split at
// the quantiles of U and at decade points. Infinite ranges are cut where the
// relevant survival factor drops below `survival`; `truncation_scale` stretches
// that cut (2 doubles it) to verify insensitivity.
struct IntegralOptions {
    double tol{1e-9};
    double survival{1e-14};
    double truncation_scale{1.0};
    unsigned max_depth{18};
};

double integral_asc_r1(const NetworkConfig& cfg, const IntegralOptions& opt = {});
double integral_asc_r2(const NetworkConfig& cfg, const IntegralOptions& opt = {});
double integral_sop_r1(const NetworkConfig& cfg, const IntegralOptions& opt = {});
double integral_sop_r2(const NetworkConfig& cfg, const IntegralOptions& opt = {});

SecrecyReport evaluate_integral_oracle(const NetworkConfig& cfg, const IntegralOptions& opt = {});

}  // namespace dualris
