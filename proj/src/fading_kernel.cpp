#include "fading_kernel.hpp"

#include <cmath>

namespace dualris::detail {

void log_ratio(const double* __restrict num, const double* __restrict den, double scale,
               double* __restrict out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = scale * std::log(num[i]) / std::log(den[i]);
}

}  // namespace dualris::detail
