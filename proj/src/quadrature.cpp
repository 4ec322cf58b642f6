#include "dualris/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "dualris/errors.hpp"

namespace dualris {

namespace {

void check_order(int order) {
    if (order < 1 || order > kMaxQuadratureOrder)
        throw ConfigError("quadrature order " + std::to_string(order) + " outside [1, " +
                              std::to_string(kMaxQuadratureOrder) + "]",
                          "quadrature_order");
}

// Golub-Welsch: nodes are the eigenvalues of the symmetric Jacobi matrix.
std::vector<double> jacobi_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, offdiag, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericError("tridiagonal eigenvalue solve failed", 0.0, 0.0);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end());
    return out;
}

// L_n(x) and L_{n-1}(x) by the three-term recurrence.
std::pair<long double, long double> laguerre_pair(int n, long double x) {
    long double p0 = 1.0L;
    long double p1 = 1.0L - x;
    if (n == 0) return {p0, 0.0L};
    for (int k = 1; k < n; ++k) {
        const long double p2 = ((2.0L * k + 1.0L - x) * p1 - k * p0) / (k + 1.0L);
        p0 = p1;
        p1 = p2;
    }
    return {p1, p0};
}

std::pair<long double, long double> legendre_pair(int n, long double x) {
    long double p0 = 1.0L;
    long double p1 = x;
    if (n == 0) return {p0, 0.0L};
    for (int k = 1; k < n; ++k) {
        const long double p2 = ((2.0L * k + 1.0L) * x * p1 - k * p0) / (k + 1.0L);
        p0 = p1;
        p1 = p2;
    }
    return {p1, p0};
}

}  // namespace

QuadratureRule gauss_laguerre(int order) {
    check_order(order);
    const int n = order;
    Eigen::VectorXd diag(n);
    Eigen::VectorXd off(std::max(n - 1, 0));
    for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + 1.0;
    for (int i = 1; i < n; ++i) off[i - 1] = i;

    QuadratureRule rule;
    rule.kind = QuadratureKind::laguerre;
    rule.order = n;
    rule.nodes = jacobi_eigenvalues(diag, off);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        long double x = rule.nodes[i];
        for (int it = 0; it < 8; ++it) {
            auto [ln, lm] = laguerre_pair(n, x);
            const long double dl = n * (ln - lm) / x;
            const long double dx = ln / dl;
            x -= dx;
            if (std::fabs(dx) <= 1e-19L * x) break;
        }
        const long double ln1 = laguerre_pair(n + 1, x).first;
        rule.nodes[i] = static_cast<double>(x);
        rule.weights[i] = static_cast<double>(x / ((n + 1.0L) * (n + 1.0L) * ln1 * ln1));
    }
    return rule;
}

QuadratureRule gauss_legendre(int order) {
    check_order(order);
    const int n = order;
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd off(std::max(n - 1, 0));
    for (int i = 1; i < n; ++i) off[i - 1] = i / std::sqrt(4.0 * i * i - 1.0);

    QuadratureRule rule;
    rule.kind = QuadratureKind::legendre;
    rule.order = n;
    rule.nodes = jacobi_eigenvalues(diag, off);
    rule.weights.resize(n);
    // Polish the non-negative half and mirror it so the rule is exactly symmetric.
    for (int i = n / 2; i < n; ++i) {
        long double x = (2 * i + 1 == n) ? 0.0L : rule.nodes[i];
        long double dp = 0.0L;
        for (int it = 0; it < 8; ++it) {
            auto [pn, pm] = legendre_pair(n, x);
            dp = n * (x * pn - pm) / (x * x - 1.0L);
            const long double dx = pn / dp;
            x -= dx;
            if (std::fabs(dx) <= 1e-19L) break;
        }
        auto [pn, pm] = legendre_pair(n, x);
        dp = n * (x * pn - pm) / (x * x - 1.0L);
        const double w = static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp));
        rule.nodes[i] = static_cast<double>(x);
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = -static_cast<double>(x);
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

std::shared_ptr<const QuadratureRule> cached_rule(QuadratureKind kind, int order) {
    check_order(order);
    static std::shared_mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const QuadratureRule>> cache;
    const std::pair<int, int> key{static_cast<int>(kind), order};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto rule = std::make_shared<const QuadratureRule>(
        kind == QuadratureKind::laguerre ? gauss_laguerre(order) : gauss_legendre(order));
    std::unique_lock lock(mutex);
    return cache.try_emplace(key, std::move(rule)).first->second;
}

}  // namespace dualris
