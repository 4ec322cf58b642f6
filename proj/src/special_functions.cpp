#include "dualris/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "dualris/errors.hpp"

namespace dualris::special {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 10000;

// erf(x) = 2/sqrt(pi) e^{-x^2} sum 2^n x^{2n+1} / (2n+1)!!, all terms positive.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 0; n < kMaxIter; ++n) {
        term *= 2.0 * x2 / (2.0 * n + 3.0);
        sum += term;
        if (term < 0.25 * kEps * sum) break;
    }
    return 2.0 * std::numbers::inv_sqrtpi * std::exp(-x2) * sum;
}

// erfc(x) for x >= 2 from the continued fraction
// sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))).
double erfc_cf(double x) {
    double f = x;
    double c = x;
    double d = 0.0;
    for (int j = 1; j < kMaxIter; ++j) {
        const double a = 0.5 * j;
        d = x + a * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = x + a / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < kEps) break;
    }
    return std::numbers::inv_sqrtpi * std::exp(-x * x) / f;
}

constexpr double kSeriesLimit = 2.0;

}  // namespace

double erf(double x) {
    if (std::isnan(x)) return x;
    const double ax = std::fabs(x);
    double r;
    if (ax < kSeriesLimit) {
        r = erf_series(ax);
    } else if (ax < 6.5) {
        r = 1.0 - erfc_cf(ax);
    } else {
        r = 1.0;
    }
    return std::signbit(x) ? -r : r;
}

double erfc(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return 1.0 + erf(-x);
    if (x < kSeriesLimit) return 1.0 - erf_series(x);
    if (x > 27.3) return 0.0;
    return erfc_cf(x);
}

double expint_e1_scaled(double x) {
    if (std::isnan(x)) return x;
    if (x <= 0.0) throw DomainError("expint_e1 requires x > 0");
    if (std::isinf(x)) return 0.0;
    if (x <= 1.0) return std::exp(x) * expint_e1(x);
    // Continued fraction e^x E1(x) = 1/(x+1- 1/(x+3- 4/(x+5- ...))), modified Lentz.
    double b = x + 1.0;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) return h;
    }
    throw NumericError("expint_e1 continued fraction did not converge", h, std::fabs(h) * 1e-8);
}

double expint_e1(double x) {
    if (std::isnan(x)) return x;
    if (x <= 0.0) throw DomainError("expint_e1 requires x > 0");
    if (x > 1.0) return std::exp(-x) * expint_e1_scaled(x);
    // E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < kMaxIter; ++k) {
        term *= -x / k;
        const double add = term / k;
        sum += add;
        if (std::fabs(add) < kEps * std::fabs(sum)) break;
    }
    return -std::numbers::egamma - std::log(x) - sum;
}

}  // namespace dualris::special
