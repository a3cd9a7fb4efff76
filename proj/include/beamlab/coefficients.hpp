#pragma once

#include <functional>

namespace beamlab {

using ScalarFn = std::function<double(double)>;
using SpaceTimeFn = std::function<double(double, double)>;
using TimeFn = std::function<double(double)>;

/// Spatial coefficients of the beam operator
///   L w = (r w'')'' - (j w')' + s w
/// plus damping eta and mass density rho for the unsteady problem.
/// r must stay positive on the domain; this is checked at the quadrature
/// points during assembly.
struct CoefficientSet {
    ScalarFn r;
    ScalarFn s = [](double) { return 0.0; };
    ScalarFn j = [](double) { return 0.0; };
    ScalarFn eta = [](double) { return 0.0; };
    ScalarFn rho = [](double) { return 1.0; };

    // Analytic derivative hooks, needed only by the homogenized steady path
    // (numerical differentiation of coefficients would pollute its
    // validation role). Leave empty when unused.
    ScalarFn dr;
    ScalarFn d2r;
    ScalarFn dj;
};

} // namespace beamlab
