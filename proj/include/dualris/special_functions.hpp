#pragma once

namespace dualris::special {

double erf(double x);
double erfc(double x);

// Exponential integral E1(x) for x > 0, and the scaled form e^x E1(x) which
// stays finite for large x. expint_e1_scaled(+inf) is 0.
double expint_e1(double x);
double expint_e1_scaled(double x);

}  // namespace dualris::special
