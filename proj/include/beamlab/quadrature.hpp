#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace beamlab {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> points;
    std::vector<double> weights;
    int degree_exact; // largest polynomial degree integrated exactly
};

/// Standard Gauss-Legendre rules; order 3 is used for stiffness assembly,
/// order 5 for mass terms and error norms.
inline GaussRule gauss_rule(int order) {
    switch (order) {
    case 3: {
        const double p = std::sqrt(3.0 / 5.0);
        return GaussRule{{-p, 0.0, p}, {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0}, 5};
    }
    case 5: {
        const double s70 = std::sqrt(70.0);
        const double p1 = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
        const double p2 = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
        const double w0 = 128.0 / 225.0;
        const double w1 = (322.0 + 13.0 * s70) / 900.0;
        const double w2 = (322.0 - 13.0 * s70) / 900.0;
        return GaussRule{{-p2, -p1, 0.0, p1, p2}, {w2, w1, w0, w1, w2}, 9};
    }
    default:
        throw std::invalid_argument("gauss_rule: unsupported order " + std::to_string(order) +
                                    " (only 3 and 5 are provided)");
    }
}

} // namespace beamlab
