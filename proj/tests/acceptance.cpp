// One PASS/FAIL line per acceptance criterion. Exit status is 0 only when
// every criterion passes, apart from those named with --known-red, which are
// still reported as FAIL.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dualris/quadrature.hpp"
#include "dualris/rng.hpp"
#include "dualris/special_functions.hpp"
#include "dualris/validation.hpp"
#include "oracles.hpp"

using namespace dualris;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

Outcome quadrature_exactness() {
    Rng rng(1234);
    double worst = 0.0;
    for (QuadratureKind kind : {QuadratureKind::laguerre, QuadratureKind::legendre}) {
        for (int n : {2, 4, 8, 16, 32}) {
            const QuadratureRule rule = kind == QuadratureKind::laguerre ? gauss_laguerre(n) : gauss_legendre(n);
            for (int t = 0; t < 100; ++t) {
                const int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n));
                std::vector<double> c(deg + 1);
                for (double& v : c) v = 2.0 * rng.uniform() - 1.0;
                long double exact = 0.0L;
                for (int k = 0; k <= deg; ++k)
                    exact += c[k] * (kind == QuadratureKind::laguerre ? oracle::laguerre_moment(k)
                                                                      : oracle::legendre_moment(k));
                long double got = 0.0L;
                for (int i = 0; i < n; ++i) {
                    long double p = 0.0L;
                    for (int k = deg; k >= 0; --k) p = p * rule.nodes[i] + c[k];
                    got += rule.weights[i] * p;
                }
                worst = std::max(worst, static_cast<double>(std::fabs(got - exact) / std::fabs(exact)));
            }
        }
    }
    return {worst <= 1e-10, "1000 random polynomials, max relative error " + sci(worst) + " (limit 1.000e-10)"};
}

Outcome special_function_precision() {
    constexpr int n = 10000;
    double erf_worst = 0.0;
    double erfc_worst = 0.0;
    double e1_worst = 0.0;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
        const double x = -6.0 + 12.0 * (i + 0.5) / n;
        const double want = oracle::erf(x);
        const double err = std::fabs(special::erf(x) - want);
        // Relative accuracy, except near the zero at x = 0 where 1e-13 absolute applies.
        const double r = err / std::fabs(want);
        ok = ok && (r <= 1e-12 || err <= 1e-13);
        if (std::fabs(want) >= 1e-3) erf_worst = std::max(erf_worst, r);
    }
    for (int i = 0; i < n; ++i) {
        const double x = -5.0 + 31.0 * (i + 0.5) / n;
        erfc_worst = std::max(erfc_worst, std::fabs(special::erfc(x) / oracle::erfc(x) - 1.0));
    }
    for (int i = 0; i < n; ++i) {
        const double x = 1e-8 * std::pow(700.0 / 1e-8, (i + 0.5) / n);
        e1_worst = std::max(e1_worst, std::fabs(special::expint_e1(x) / oracle::e1(x) - 1.0));
    }
    ok = ok && erfc_worst <= 1e-12 && e1_worst <= 1e-12;
    return {ok, "erf on [-6, 6] max rel " + sci(erf_worst) + ", erfc on [-5, 26] max rel " + sci(erfc_worst) +
                    ", E1 on [1e-8, 700] max rel " + sci(e1_worst) + " (limit 1.000e-12, 10000 points each)"};
}

Outcome report_determinism(const ValidationOptions& opt) {
    ValidationOptions small = opt;
    small.trials = 20000;
    const std::string a = format_report(small, run_validation(small));
    const std::string b = format_report(small, run_validation(small));
    const CheckResult workers = run_check("C9", opt);
    const bool same = a == b;
    return {same && workers.passed, std::string("two validation reports at ") + std::to_string(small.trials) +
                                        " trials byte-identical: " + (same ? "yes" : "no") + "; " + workers.detail};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria 1-10"};
    ValidationOptions opt;
    std::vector<std::string> known_red;
    app.add_option("--trials", opt.trials, "Monte Carlo trials and sampler draws");
    app.add_option("--seed", opt.seed, "Seed");
    app.add_option("--workers", opt.workers, "Worker threads (0: all cores)");
    app.add_option("--known-red", known_red, "Criteria expected to fail (still printed as FAIL)")->delimiter(',');
    CLI11_PARSE(app, argc, argv);
    const std::set<std::string> red(known_red.begin(), known_red.end());

    struct Criterion {
        std::string id;
        std::string title;
        double limit_s;  // 0: no runtime limit
    };
    const std::vector<Criterion> criteria{
        {"C1", "quadrature correctness", 1.0},
        {"C2", "special-function precision", 5.0},
        {"C3", "closed form vs integral oracle", 30.0},
        {"C4", "closed form vs Monte Carlo", 60.0},
        {"C5", "CLT quality", 120.0},
        {"C6", "asymptotic convergence", 0.0},
        {"C7", "trend reproduction", 30.0},
        {"C8", "high-SNR slope", 0.0},
        {"C9", "determinism", 0.0},
        {"C10", "F-sampler moments", 0.0},
    };

    int unexpected = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        if (c.id == "C1") {
            o = quadrature_exactness();
        } else if (c.id == "C2") {
            o = special_function_precision();
        } else if (c.id == "C9") {
            o = report_determinism(opt);
        } else {
            const CheckResult r = run_check(c.id, opt);
            o = {r.passed, r.detail.substr(std::min(r.detail.find_first_not_of(' '), r.detail.size()))};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        const bool in_time = c.limit_s == 0.0 || secs < c.limit_s;
        const bool passed = o.passed && in_time;
        std::ostringstream line;
        line << (passed ? "PASS " : "FAIL ") << c.id << ' ' << c.title << ": " << o.detail;
        char t[64];
        if (c.limit_s > 0.0)
            std::snprintf(t, sizeof t, " [%.2f s, limit %.0f s]", secs, c.limit_s);
        else
            std::snprintf(t, sizeof t, " [%.2f s]", secs);
        line << t;
        if (red.contains(c.id)) line << (passed ? " [listed as known red, passed]" : " [known red]");
        std::cout << line.str() << std::endl;
        if (!passed && !red.contains(c.id)) ++unexpected;
    }
    std::cout << (unexpected ? "acceptance: FAIL" : "acceptance: PASS") << " (" << unexpected
              << " unexpected failures, known red: " << (red.empty() ? "none" : "");
    for (auto it = red.begin(); it != red.end(); ++it) std::cout << (it == red.begin() ? "" : ",") << *it;
    std::cout << ")\n";
    return unexpected ? 1 : 0;
}
