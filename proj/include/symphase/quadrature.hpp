#pragma once

#include <vector>

namespace symphase::linalg {

/// Gauss-Legendre rule on [-1, 1]. Nodes are cos(theta) values, strictly
/// increasing; weights are positive and sum to 2.
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule, exact for polynomials up to degree 2n-1.
QuadratureRule gauss_legendre(int n);

}  // namespace symphase::linalg
