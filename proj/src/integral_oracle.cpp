#include "dualris/integral_oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "dualris/distributions.hpp"
#include "dualris/errors.hpp"

namespace dualris {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

// Standard-normal z beyond which the upper tail is below p.
double tail_z(double p) {
    double lo = 0.0;
    double hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (0.5 * std::erfc(mid / std::numbers::sqrt2) > p ? lo : hi) = mid;
    }
    return hi;
}

// Offsets (in units of the CDF scale) at which the U law has structure.
constexpr double kQuantiles[] = {-12, -8, -6, -4, -3, -2, -1.5, -1, -0.5, -0.25, 0,
                                 0.25, 0.5, 1, 1.5, 2, 3, 4, 5, 6, 7};

struct Piece {
    double a, b, value, error;
    bool operator<(const Piece& o) const { return error < o.error; }
};

template <class F>
Piece kronrod_piece(F& f, double a, double b) {
    double err = 0.0;
    const double v = Kronrod::integrate(f, a, b, 0, 0.0, &err);
    return {a, b, v, err};
}

// Globally adaptive: always bisect the interval with the largest error until
// the summed error meets tol relative to the total. A per-piece relative rule
// would keep refining pieces whose contribution is negligible.
template <class F>
double integrate_pieces(F&& f, std::vector<double> points, double lo, double hi, const IntegralOptions& opt,
                        const char* what, double unit = 1.0) {
    points.push_back(lo);
    points.push_back(hi);
    std::erase_if(points, [&](double p) { return !(p >= lo && p <= hi) || !std::isfinite(p); });
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::priority_queue<Piece> heap;
    double total = 0.0;
    double err_total = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const Piece p = kronrod_piece(f, points[i], points[i + 1]);
        total += p.value;
        err_total += p.error;
        heap.push(p);
    }
    const std::size_t max_pieces = points.size() + (std::size_t{1} << std::min(opt.max_depth, 20u));
    while (!heap.empty() && err_total > opt.tol * std::fabs(total) && heap.size() < max_pieces) {
        const Piece worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            heap.push(worst);
            break;
        }
        const Piece left = kronrod_piece(f, worst.a, mid);
        const Piece right = kronrod_piece(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err_total += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to drop the drift from incremental updates.
    total = 0.0;
    err_total = 0.0;
    for (; !heap.empty(); heap.pop()) {
        total += heap.top().value;
        err_total += heap.top().error;
    }
    if (!std::isfinite(total) || err_total > opt.tol * std::fabs(total) + 1e-300) {
        std::ostringstream msg;
        msg << what << ": adaptive integration missed tolerance " << opt.tol << " (estimate " << total
            << ", error " << err_total << ")";
        throw NumericError(msg.str(), total * unit, err_total * unit);
    }
    return total * unit;
}

void add_decades(std::vector<double>& pts, double hi) {
    for (int k = -14; k <= 20; ++k) {
        const double p = std::pow(10.0, k);
        if (p >= hi) break;
        pts.push_back(p);
    }
}

struct Setup {
    CltMoments m;
    SnrMap snr;
    double s;
    double u_max;
    std::vector<double> u_points;

    Setup(const NetworkConfig& cfg, const IntegralOptions& opt)
        : m(clt_moments(cfg)), snr(cfg, m), s(m.scale(cfg.convention)) {
        cfg.validate();
        if (!(opt.tol > 0.0)) throw DomainError("integration tolerance must be positive");
        u_max = m.mu_U + tail_z(opt.survival) * s * opt.truncation_scale;
        for (double k : kQuantiles) {
            const double u = m.mu_U + k * s;
            if (u > 0.0 && u < u_max) u_points.push_back(u);
        }
    }
};

}  // namespace

double integral_asc_r1(const NetworkConfig& cfg, const IntegralOptions& opt) {
    const Setup st(cfg, opt);
    const double hi = st.snr.r1(st.u_max);
    std::vector<double> pts;
    for (double u : st.u_points) pts.push_back(st.snr.r1(u));
    add_decades(pts, hi);
    auto f = [&](double g) { return cdf_gamma_e(g, st.m) * ccdf_gamma_r1(g, cfg, st.m) / (1.0 + g); };
    return integrate_pieces(f, pts, 0.0, hi, opt, "integral_asc_r1", 1.0 / std::numbers::ln2);
}

double integral_asc_r2(const NetworkConfig& cfg, const IntegralOptions& opt) {
    const Setup st(cfg, opt);
    const double hi = std::min(st.snr.r2_cap(), st.snr.r2(st.u_max));
    std::vector<double> pts;
    for (double u : st.u_points) pts.push_back(st.snr.r2(u));
    add_decades(pts, hi);
    auto f = [&](double g) { return cdf_gamma_e(g, st.m) * ccdf_gamma_r2(g, cfg, st.m) / (1.0 + g); };
    return integrate_pieces(f, pts, 0.0, hi, opt, "integral_asc_r2", 1.0 / std::numbers::ln2);
}

namespace {

// int_0^inf e^{-x} F(R_th x / lambda + Rbar) dx, with the threshold points of
// the receiver CDF mapped into x.
template <class Cdf>
double sop_integral(const NetworkConfig& cfg, const Setup& st, const IntegralOptions& opt, double cap,
                    Cdf&& cdf, const std::vector<double>& gamma_points, const char* what) {
    const double r_th = std::exp2(cfg.R_s);
    const double r_bar = r_th - 1.0;
    if (r_bar >= cap) return 1.0;
    const double lam = st.m.lambda_e;
    if (std::isinf(lam)) return cdf(r_bar);
    const double hi = -std::log(opt.survival) * 1.25 * opt.truncation_scale;
    std::vector<double> pts;
    for (double g : gamma_points) pts.push_back(lam * (g - r_bar) / r_th);
    if (std::isfinite(cap)) pts.push_back(lam * (cap - r_bar) / r_th);
    for (double x = 0.25; x < hi; x *= 2.0) pts.push_back(x);
    auto f = [&](double x) { return std::exp(-x) * cdf(r_th * x / lam + r_bar); };
    const double v = integrate_pieces(f, pts, 0.0, hi, opt, what);
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace

double integral_sop_r1(const NetworkConfig& cfg, const IntegralOptions& opt) {
    const Setup st(cfg, opt);
    std::vector<double> pts;
    for (double u : st.u_points) pts.push_back(st.snr.r1(u));
    return sop_integral(
        cfg, st, opt, std::numeric_limits<double>::infinity(),
        [&](double g) { return cdf_gamma_r1(g, cfg, st.m); }, pts, "integral_sop_r1");
}

double integral_sop_r2(const NetworkConfig& cfg, const IntegralOptions& opt) {
    const Setup st(cfg, opt);
    std::vector<double> pts;
    for (double u : st.u_points) pts.push_back(st.snr.r2(u));
    return sop_integral(
        cfg, st, opt, st.snr.r2_cap(), [&](double g) { return cdf_gamma_r2(g, cfg, st.m); }, pts,
        "integral_sop_r2");
}

SecrecyReport evaluate_integral_oracle(const NetworkConfig& cfg, const IntegralOptions& opt) {
    SecrecyReport r{};
    r.method = Method::integral_oracle;
    r.quadrature_order = 0;
    r.asc_r1 = integral_asc_r1(cfg, opt);
    r.asc_r2 = integral_asc_r2(cfg, opt);
    r.asc_total = r.asc_r1 + r.asc_r2;
    r.sop_r1 = integral_sop_r1(cfg, opt);
    r.sop_r2 = integral_sop_r2(cfg, opt);
    r.see = see_from_asc(r.asc_total, cfg);
    return r;
}

}  // namespace dualris
