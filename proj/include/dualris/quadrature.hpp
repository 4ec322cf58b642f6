#pragma once

#include <memory>
#include <vector>

namespace dualris {

enum class QuadratureKind { laguerre, legendre };

inline constexpr int kMaxQuadratureOrder = 128;

// Gauss rule: Laguerre integrates against e^{-x} on [0, inf), Legendre against
// 1 on [-1, 1]. Nodes are ascending.
struct QuadratureRule {
    QuadratureKind kind{QuadratureKind::laguerre};
    int order{0};
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule gauss_laguerre(int order);
QuadratureRule gauss_legendre(int order);

// Shared, immutable rule; computed once per (kind, order) and safe to use from
// several threads.
std::shared_ptr<const QuadratureRule> cached_rule(QuadratureKind kind, int order);

}  // namespace dualris
