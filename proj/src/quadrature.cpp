#include "symphase/quadrature.hpp"

#include <cmath>

#include "symphase/errors.hpp"

namespace symphase::linalg {

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw Error("gauss_legendre: order must be >= 1");
    QuadratureRule rule;
    rule.order = n;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const double pi = std::acos(-1.0);
    const int half = (n + 1) / 2;
    for (int i = 1; i <= half; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double z = std::cos(pi * (i - 0.25) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.nodes[i - 1] = -z;
        rule.nodes[n - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[i - 1] = w;
        rule.weights[n - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace symphase::linalg
