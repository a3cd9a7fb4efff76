#pragma once

#include <functional>
#include <stdexcept>

namespace beamlab {
namespace fd {

using LongFn = std::function<long double(long double)>;

namespace detail {

// 4th-order central stencils for derivative orders 1..4.
inline long double stencil(const LongFn& f, long double x, int order, long double e) {
    switch (order) {
    case 1:
        return (-f(x + 2 * e) + 8 * f(x + e) - 8 * f(x - e) + f(x - 2 * e)) / (12 * e);
    case 2:
        return (-f(x + 2 * e) + 16 * f(x + e) - 30 * f(x) + 16 * f(x - e) - f(x - 2 * e)) /
               (12 * e * e);
    case 3:
        return (-f(x - 3 * e) + 8 * f(x - 2 * e) - 13 * f(x - e) + 13 * f(x + e) -
                8 * f(x + 2 * e) + f(x + 3 * e)) /
               (8 * e * e * e);
    case 4:
        return (-f(x - 3 * e) + 12 * f(x - 2 * e) - 39 * f(x - e) + 56 * f(x) - 39 * f(x + e) +
                12 * f(x + 2 * e) - f(x + 3 * e)) /
               (6 * e * e * e * e);
    default:
        throw std::invalid_argument("fd::derivative: order must be 1..4");
    }
}

} // namespace detail

/// Numerical derivative of f at x, orders 1..4. One Richardson level on a
/// 4th-order central stencil, evaluated in long double; accurate to roughly
/// 1e-9 for smooth O(1) functions, independent of any analytic derivative
/// algebra being checked against it.
inline long double derivative(const LongFn& f, long double x, int order,
                              long double step = 0.0L) {
    if (step <= 0.0L)
        step = (order == 4) ? 0.02L : (order == 3 ? 0.015L : 0.01L);
    const long double coarse = detail::stencil(f, x, order, step);
    const long double fine = detail::stencil(f, x, order, step / 2);
    return (16.0L * fine - coarse) / 15.0L;
}

} // namespace fd
} // namespace beamlab
