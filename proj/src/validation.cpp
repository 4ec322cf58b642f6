#include "dualris/validation.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "dualris/distributions.hpp"
#include "dualris/errors.hpp"
#include "dualris/integral_oracle.hpp"
#include "dualris/monte_carlo.hpp"
#include "dualris/quadrature.hpp"
#include "dualris/secrecy.hpp"
#include "dualris/sweep.hpp"

namespace dualris {

NetworkConfig reference_config(double P_dBm, int M, DenominatorConvention c, int order) {
    NetworkConfig cfg;
    cfg.P_dBm = P_dBm;
    cfg.M1 = cfg.M2 = M;
    cfg.convention = c;
    cfg.quadrature_order = order;
    cfg.validate();
    return cfg;
}

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string fixed(double v, int digits = 4) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

constexpr DenominatorConvention kBoth[] = {DenominatorConvention::paper, DenominatorConvention::gaussian};

CheckResult check_quadrature() {
    Rng rng(20240601);
    double worst = 0.0;
    for (QuadratureKind kind : {QuadratureKind::laguerre, QuadratureKind::legendre}) {
        for (int n : {2, 4, 8, 16, 32}) {
            const auto rule = cached_rule(kind, n);
            for (int t = 0; t < 100; ++t) {
                const int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n));
                std::vector<double> c(deg + 1);
                for (double& v : c) v = 2.0 * rng.uniform() - 1.0;
                long double exact = 0.0L;
                long double moment = 1.0L;  // k! for Laguerre
                for (int k = 0; k <= deg; ++k) {
                    if (kind == QuadratureKind::laguerre) {
                        if (k > 0) moment *= k;
                        exact += c[k] * moment;
                    } else if (k % 2 == 0) {
                        exact += c[k] * 2.0L / (k + 1);
                    }
                }
                long double approx = 0.0L;
                for (int i = 0; i < n; ++i) {
                    long double p = 0.0L;
                    for (int k = deg; k >= 0; --k) p = p * rule->nodes[i] + c[k];
                    approx += rule->weights[i] * p;
                }
                worst = std::max(worst, static_cast<double>(std::fabs(approx - exact) / std::fabs(exact)));
            }
        }
    }
    return {"C1", "quadrature exactness", worst <= 1e-10,
            "max relative error " + sci(worst) + " (limit 1.000e-10)"};
}

CheckResult check_integral_oracle(int order) {
    double asc_dev = 0.0;
    double sop_dev = 0.0;
    std::string failures;
    for (DenominatorConvention c : kBoth) {
        for (double P : {0.0, 10.0, 20.0, 30.0, 40.0, 50.0, 60.0}) {
            for (int M : {25, 50, 100}) {
                const NetworkConfig cfg = reference_config(P, M, c, order);
                const SecrecyReport cf = evaluate_closed_form(cfg);
                try {
                    const SecrecyReport io = evaluate_integral_oracle(cfg, {});
                    asc_dev = std::max({asc_dev, std::fabs(cf.asc_r1 - io.asc_r1) / io.asc_r1,
                                        std::fabs(cf.asc_r2 - io.asc_r2) / io.asc_r2});
                    sop_dev = std::max({sop_dev, std::fabs(cf.sop_r1 - io.sop_r1), std::fabs(cf.sop_r2 - io.sop_r2)});
                } catch (const NumericError& e) {
                    failures += std::string(" [") + e.what() + "]";
                }
            }
        }
    }
    const bool ok = failures.empty() && asc_dev <= 5e-3 && sop_dev <= 1e-3;
    return {"C3", "closed form vs integral oracle (both conventions, 42 points each)", ok,
            "max ASC relative deviation " + sci(asc_dev) + " (limit 5.000e-03), max SOP absolute deviation " +
                sci(sop_dev) + " (limit 1.000e-03)" + failures};
}

McSettings mc_settings(const ValidationOptions& opt, McMode mode) {
    McSettings s;
    s.trials = opt.trials;
    s.seed = opt.seed;
    s.mode = mode;
    s.workers = opt.workers;
    return s;
}

CheckResult check_monte_carlo(const ValidationOptions& opt) {
    bool ok = true;
    std::ostringstream d;
    for (int M : {50, 80}) {
        const NetworkConfig cfg = reference_config(20.0, M, DenominatorConvention::gaussian, opt.order);
        const SecrecyReport cf = evaluate_closed_form(cfg);
        const McResult mc = mc_secrecy(cfg, mc_settings(opt, McMode::clt_faithful));
        auto asc = [&](const char* name, double closed, const McEstimate& e) {
            const double dev = std::fabs(closed - e.value);
            const double lim = std::max(0.02 * std::fabs(closed), 3.0 * e.std_error);
            ok = ok && dev <= lim;
            d << " M=" << M << ' ' << name << " dev " << sci(dev) << " (limit " << sci(lim) << ");";
        };
        auto sop = [&](const char* name, double closed, const McEstimate& e) {
            const double dev = std::fabs(closed - e.value);
            const double lim = std::max(0.005, 3.0 * e.std_error);
            ok = ok && dev <= lim;
            d << " M=" << M << ' ' << name << " dev " << sci(dev) << " (limit " << sci(lim) << ");";
        };
        asc("asc_r1", cf.asc_r1, mc.asc_r1);
        asc("asc_r2", cf.asc_r2, mc.asc_r2);
        sop("sop_r1", cf.sop_r1, mc.sop_r1);
        sop("sop_r2", cf.sop_r2, mc.sop_r2);
    }
    return {"C4", "closed form vs Monte Carlo, clt_faithful, gaussian convention, P = 20 dBm", ok, d.str()};
}

CheckResult check_clt_quality(const ValidationOptions& opt) {
    const NetworkConfig cfg = reference_config(20.0, 50, DenominatorConvention::gaussian, opt.order);
    McSettings phys = mc_settings(opt, McMode::physical_f_sum);
    phys.record_snr_r1 = true;
    McResult p = mc_secrecy(cfg, phys);
    const McResult c = mc_secrecy(cfg, mc_settings(opt, McMode::clt_faithful));
    const double gap1 = std::fabs(p.asc_r1.value - c.asc_r1.value) / c.asc_r1.value;
    const double gap2 = std::fabs(p.asc_r2.value - c.asc_r2.value) / c.asc_r2.value;
    const CltMoments m = clt_moments(cfg);
    const double ks = ks_statistic(p.snr_r1_samples, [&](double g) { return cdf_gamma_r1(g, cfg, m); });
    const bool ok = gap1 <= 0.05 && gap2 <= 0.05 && ks <= 0.02;
    return {"C5", "CLT quality, physical_f_sum vs clt_faithful, M = 50", ok,
            "ASC gap r1 " + sci(gap1) + ", r2 " + sci(gap2) + " (limit 5.000e-02); KS " + sci(ks) +
                " (limit 2.000e-02)"};
}

CheckResult check_asymptotes(int order) {
    const NetworkConfig c60 = reference_config(60.0, 50, DenominatorConvention::gaussian, order);
    const NetworkConfig c50 = reference_config(50.0, 50, DenominatorConvention::gaussian, order);
    const auto lag = cached_rule(QuadratureKind::laguerre, order);
    const CltMoments m60 = clt_moments(c60);
    const CltMoments m50 = clt_moments(c50);
    const double d1 = std::fabs(asc_r1(c60, m60, *lag) - asc_r1_asymptotic(c60, m60));
    const double d2 = std::fabs(asc_r2(c50, m50, *lag) - asc_r2_asymptotic(c50, m50));
    return {"C6", "asymptotic convergence, gaussian convention, M = 50", d1 <= 0.05 && d2 <= 0.05,
            "|r1 - asymptote| at 60 dBm " + sci(d1) + ", |r2 - asymptote| at 50 dBm " + sci(d2) +
                " (limit 5.000e-02)"};
}

bool unimodal(const std::vector<double>& v) {
    const auto peak = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    if (peak == 0 || peak + 1 == v.size()) return false;
    for (std::size_t i = 1; i <= peak; ++i)
        if (v[i] < v[i - 1]) return false;
    for (std::size_t i = peak + 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

std::vector<double> column_of(const Dataset& d, const std::string& name, const std::string& series = {}) {
    const std::size_t c = d.column(name);
    std::vector<double> out;
    for (std::size_t r = 0; r < d.rows.size(); ++r)
        if (series.empty() || d.series[r] == series) out.push_back(d.rows[r][c]);
    return out;
}

CheckResult check_trends(int order) {
    bool ok = true;
    std::ostringstream d;
    for (DenominatorConvention conv : kBoth) {
        NetworkConfig base;
        base.convention = conv;
        base.quadrature_order = order;
        d << ' ' << to_string(conv) << ':';

        const Dataset f2 = run_preset("fig2", base);
        const auto p = column_of(f2, "P_dBm");
        const auto r1 = column_of(f2, "asc_r1");
        const auto r2 = column_of(f2, "asc_r2");
        bool a1 = true;
        double tail = 0.0;
        double drop = 0.0;  // r2 may sag once the eavesdropper outgrows the capped legitimate rate
        for (std::size_t i = 1; i < r1.size(); ++i) {
            a1 = a1 && r1[i] > r1[i - 1];
            drop = std::max(drop, r2[i - 1] - r2[i]);
            if (p[i] > 50.0 - 1e-9) tail = std::max(tail, r2[i] - r2[i - 1]);
        }
        const bool rises = r2.back() > r2.front();
        const bool fig2_ok = a1 && rises && tail <= 0.02;
        d << " (a) r1 increasing " << (a1 ? "yes" : "no") << ", r2 rises " << (rises ? "yes" : "no")
          << ", r2 last-10dB max step " << sci(tail) << " (limit 2.000e-02), largest r2 drop " << sci(drop) << ';';

        const Dataset f3 = run_preset("fig3", base);
        const auto mm = column_of(f3, "M");
        const auto r2m = column_of(f3, "asc_r2");
        double at100 = 0.0;
        double at200 = 0.0;
        for (std::size_t i = 0; i < mm.size(); ++i) {
            if (mm[i] == 100.0) at100 = r2m[i];
            if (mm[i] == 200.0) at200 = r2m[i];
        }
        const double inc = at200 - at100;
        const bool fig3_ok = inc <= 0.02;
        d << " (b) r2 gain M 100->200 " << sci(inc) << " (limit 2.000e-02);";

        const Dataset f4 = run_preset("fig4", base);
        bool fig4_ok = true;
        bool fig4_strict = false;
        for (const char* col : {"sop_r1", "sop_r2"}) {
            const auto a = column_of(f4, col, "M=25");
            const auto b = column_of(f4, col, "M=50");
            const auto c = column_of(f4, col, "M=80");
            for (std::size_t i = 0; i < a.size(); ++i) {
                fig4_ok = fig4_ok && a[i] >= b[i] && b[i] >= c[i];
                fig4_strict = fig4_strict || a[i] > c[i];
            }
        }
        fig4_ok = fig4_ok && fig4_strict;
        d << " (c) SOP non-increasing in M " << (fig4_ok ? "yes" : "no") << ';';

        const Dataset f5 = run_preset("fig5", base);
        bool fig5_ok = true;
        const auto p5 = column_of(f5, "P_dBm", "m1=2 m2=3");
        for (const char* col : {"sop_r1", "sop_r2"}) {
            const auto lo = column_of(f5, col, "m1=2 m2=3");
            const auto hi = column_of(f5, col, "m1=4 m2=10");
            for (std::size_t i = 0; i < lo.size(); ++i)
                if (p5[i] >= 20.0) fig5_ok = fig5_ok && hi[i] <= lo[i];
        }
        d << " (d) SOP(4,10) <= SOP(2,3) for P >= 20 " << (fig5_ok ? "yes" : "no") << ';';

        const Dataset f6 = run_preset("fig6", base);
        const bool um = unimodal(column_of(f6, "see", "see_vs_M P_dBm=20"));
        const bool up = unimodal(column_of(f6, "see", "see_vs_P_dBm M=50"));
        d << " (e) SEE unimodal in M " << (um ? "yes" : "no") << ", in P " << (up ? "yes" : "no") << ';';

        ok = ok && fig2_ok && fig3_ok && fig4_ok && fig5_ok && um && up;
    }
    return {"C7", "figure trends (both conventions)", ok, d.str()};
}

CheckResult check_slope(int order) {
    const auto lag = cached_rule(QuadratureKind::laguerre, order);
    auto r1 = [&](double P) {
        const NetworkConfig cfg = reference_config(P, 50, DenominatorConvention::gaussian, order);
        return asc_r1(cfg, clt_moments(cfg), *lag);
    };
    const double slope = (r1(60.0) - r1(40.0)) / 2.0;
    const bool ok = std::fabs(slope - 3.32) <= 0.33;
    return {"C8", "high-SNR slope of asc_r1, gaussian convention, 40 to 60 dBm", ok,
            "slope " + fixed(slope) + " bits per 10 dB (target 3.32 +/- 0.33)"};
}

CheckResult check_worker_independence(const ValidationOptions& opt) {
    const NetworkConfig cfg = reference_config(20.0, 50, DenominatorConvention::gaussian, opt.order);
    McSettings s;
    s.trials = 20000;
    s.seed = opt.seed;
    s.chunk_size = 1000;
    s.workers = 1;
    const McResult a = mc_secrecy(cfg, s);
    s.workers = 3;
    const McResult b = mc_secrecy(cfg, s);
    auto same = [](const McEstimate& x, const McEstimate& y) {
        return x.value == y.value && x.std_error == y.std_error && x.trials_used == y.trials_used;
    };
    const bool ok = same(a.asc_r1, b.asc_r1) && same(a.asc_r2, b.asc_r2) && same(a.asc_total, b.asc_total) &&
                    same(a.sop_r1, b.sop_r1) && same(a.sop_r2, b.sop_r2);
    return {"C9", "Monte Carlo result independent of worker count", ok,
            std::string("1 vs 3 workers bit-identical: ") + (ok ? "yes" : "no")};
}

CheckResult check_sampler(const ValidationOptions& opt) {
    Rng rng(opt.seed);
    const FadingParams f{2.0, 3.0};
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t i = 0; i < opt.trials; ++i) {
        const double x = sample_eta(f, rng);
        const double dlt = x - mean;
        mean += dlt / static_cast<double>(i + 1);
        m2 += dlt * (x - mean);
    }
    const double var = m2 / static_cast<double>(opt.trials - 1);
    const double em = std::fabs(mean - 1.5) / 1.5;
    const double ev = std::fabs(var - 4.5) / 4.5;
    return {"C10", "F sampler moments, m1 = 2, m2 = 3", em <= 0.01 && ev <= 0.02,
            "mean " + fixed(mean, 5) + " (rel dev " + sci(em) + ", limit 1.000e-02), variance " + fixed(var, 5) +
                " (rel dev " + sci(ev) + ", limit 2.000e-02)"};
}

}  // namespace

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids{"C1", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10"};
    return ids;
}

CheckResult run_check(std::string_view id, const ValidationOptions& opt) {
    if (opt.trials < 2) throw ConfigError("validation needs at least 2 trials", "trials");
    if (id == "C1") return check_quadrature();
    if (id == "C3") return check_integral_oracle(opt.order);
    if (id == "C4") return check_monte_carlo(opt);
    if (id == "C5") return check_clt_quality(opt);
    if (id == "C6") return check_asymptotes(opt.order);
    if (id == "C7") return check_trends(opt.order);
    if (id == "C8") return check_slope(opt.order);
    if (id == "C9") return check_worker_independence(opt);
    if (id == "C10") return check_sampler(opt);
    throw ConfigError("unknown check '" + std::string(id) + "'", "check");
}

std::vector<CheckResult> run_validation(const ValidationOptions& opt) {
    std::vector<CheckResult> out;
    for (const std::string& id : check_ids()) out.push_back(run_check(id, opt));
    return out;
}

std::string format_report(const ValidationOptions& opt, const std::vector<CheckResult>& results) {
    std::ostringstream o;
    o << "dualris validation: trials=" << opt.trials << " seed=" << opt.seed << " order=" << opt.order << '\n';
    for (const CheckResult& r : results)
        o << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.title << ":" << (r.detail.starts_with(' ') ? "" : " ")
          << r.detail << '\n';
    o << "overall: " << (all_passed(results) ? "PASS" : "FAIL") << '\n';
    return o.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace dualris
