#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "beamlab/mesh.hpp"

namespace beamlab {

/// Values and x-derivatives of the four local Hermite cubic shape functions
/// at one physical point of an element. Local ordering: value-left,
/// slope-left, value-right, slope-right; slope DOFs are physical slopes, so
/// the slope shapes carry units of length.
struct ShapeValues {
    std::array<double, 4> value;
    std::array<double, 4> d1;
    std::array<double, 4> d2;
};

/// Evaluate the local Hermite cubics of element m at physical coordinate x.
///
/// With xb = x - x_m and h the element size:
///   H1 = 1 - 3 xb^2/h^2 + 2 xb^3/h^3     H2 = xb - 2 xb^2/h + xb^3/h^2
///   H3 = 3 xb^2/h^2 - 2 xb^3/h^3         H4 = -xb^2/h + xb^3/h^2
inline ShapeValues shape_eval(const Mesh1D& mesh, std::size_t m, double x) {
    const double xl = mesh.node(m);
    const double xr = mesh.node(m + 1);
    const double h = xr - xl;
    const double tol = 1e-12 * mesh.length();
    if (x < xl - tol || x > xr + tol)
        throw std::out_of_range("shape_eval: x = " + std::to_string(x) + " outside element " +
                                std::to_string(m));
    const double u = (x - xl) / h;
    const double u2 = u * u;
    const double u3 = u2 * u;

    ShapeValues sv;
    sv.value = {1.0 - 3.0 * u2 + 2.0 * u3, h * (u - 2.0 * u2 + u3),
                3.0 * u2 - 2.0 * u3, h * (u3 - u2)};
    sv.d1 = {(6.0 * u2 - 6.0 * u) / h, 1.0 - 4.0 * u + 3.0 * u2,
             (6.0 * u - 6.0 * u2) / h, 3.0 * u2 - 2.0 * u};
    const double h2 = h * h;
    sv.d2 = {(12.0 * u - 6.0) / h2, (6.0 * u - 4.0) / h,
             (6.0 - 12.0 * u) / h2, (6.0 * u - 2.0) / h};
    return sv;
}

/// Second derivatives of the four shapes expressed on the reference element,
/// x = x_m + (h/2)(xi + 1): returns (6 xi/h, 3 xi - 1, -6 xi/h, 3 xi + 1)/h.
/// Agrees with shape_eval().d2 at the mapped point.
inline std::array<double, 4> reference_second_derivatives(double h, double xi) {
    if (!(h > 0.0))
        throw std::invalid_argument("reference_second_derivatives: h must be positive");
    return {6.0 * xi / (h * h), (3.0 * xi - 1.0) / h,
            -6.0 * xi / (h * h), (3.0 * xi + 1.0) / h};
}

} // namespace beamlab
