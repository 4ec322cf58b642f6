#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dualris/channel.hpp"

namespace dualris {

// Scenario used throughout the checks: NetworkConfig defaults with the given
// power, element count, convention and quadrature order.
NetworkConfig reference_config(double P_dBm, int M, DenominatorConvention c, int order = 30);

struct ValidationOptions {
    std::uint64_t trials{1000000};
    std::uint64_t seed{42};
    unsigned workers{0};
    int order{30};
};

struct CheckResult {
    std::string id;
    std::string title;
    bool passed;
    std::string detail;  // deterministic text: observed deviations and limits
};

// Closed forms against the integral and Monte Carlo oracles, trend checks and
// determinism. Each check is independent; none throws on a failed tolerance.
std::vector<CheckResult> run_validation(const ValidationOptions& opt);

// Identifiers in report order, and one check by identifier.
const std::vector<std::string>& check_ids();
CheckResult run_check(std::string_view id, const ValidationOptions& opt);

// Same options give the same text byte for byte.
std::string format_report(const ValidationOptions& opt, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

// Kolmogorov-Smirnov distance between samples (sorted in place) and a CDF.
template <class Cdf>
double ks_statistic(std::vector<double>& samples, Cdf&& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

}  // namespace dualris
