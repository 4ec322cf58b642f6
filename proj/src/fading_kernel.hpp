#pragma once

#include <cstddef>

namespace dualris::detail {

// out[i] = scale * log(num[i]) / log(den[i]); inputs must lie in (0, 1).
void log_ratio(const double* num, const double* den, double scale, double* out, std::size_t n);

}  // namespace dualris::detail
