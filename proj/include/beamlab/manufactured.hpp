#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <utility>

#include "beamlab/coefficients.hpp"
#include "beamlab/errors.hpp"
#include "beamlab/fd_oracle.hpp"
#include "beamlab/steady.hpp"
#include "beamlab/unsteady.hpp"

namespace beamlab {

/// A test problem with a chosen exact solution and all data (load, initial
/// and boundary conditions) derived from it in closed form. Construction
/// validates the derived load against a finite-difference oracle of the
/// exact solution, so a slip in the derivative algebra cannot survive.
struct ManufacturedCase {
    std::string name;
    bool time_dependent = false;
    double l = 1.0;
    double T = 1.0;
    CoefficientSet coeffs;

    // exact solution and the derivatives the studies compare against;
    // steady cases ignore t
    SpaceTimeFn w;
    SpaceTimeFn w_x;
    SpaceTimeFn w_t;
    SpaceTimeFn w_xt;
    // same solution in extended precision, for the oracle only
    std::function<long double(long double, long double)> w_ld;

    ScalarFn f;   // steady load
    SpaceTimeFn g; // unsteady load
    ScalarFn p, q;
    TimeFn a, a_tilde, b, b_tilde;
    SteadyBC steady_bc;
};

/// Strong-form residual at one point, with every derivative of the exact
/// solution taken numerically. Uses the analytic coefficient derivatives to
/// expand (r w'')'' = r'' w'' + 2 r' w''' + r w'''' and
/// (j w')' = j' w' + j w''.
inline double strong_form_residual(const ManufacturedCase& mc, double x, double t = 0.0) {
    const long double tl = static_cast<long double>(t);
    const auto w_of_x = [&](long double xx) { return mc.w_ld(xx, tl); };
    const double d1 = static_cast<double>(fd::derivative(w_of_x, x, 1));
    const double d2 = static_cast<double>(fd::derivative(w_of_x, x, 2));
    const double d3 = static_cast<double>(fd::derivative(w_of_x, x, 3));
    const double d4 = static_cast<double>(fd::derivative(w_of_x, x, 4));

    const double bending = mc.coeffs.d2r(x) * d2 + 2.0 * mc.coeffs.dr(x) * d3 +
                           mc.coeffs.r(x) * d4;
    const double traction = mc.coeffs.dj(x) * d1 + mc.coeffs.j(x) * d2;
    const double wval = static_cast<double>(mc.w_ld(x, tl));
    const double spatial = bending - traction + mc.coeffs.s(x) * wval;

    if (!mc.time_dependent)
        return spatial - mc.f(x);

    const auto w_of_t = [&](long double tt) { return mc.w_ld(x, tt); };
    const double wt = static_cast<double>(fd::derivative(w_of_t, t, 1));
    const double wtt = static_cast<double>(fd::derivative(w_of_t, t, 2));
    return wtt + mc.coeffs.eta(x) * wt + spatial - mc.g(x, t);
}

namespace detail {

inline void run_residual_gate(const ManufacturedCase& mc) {
    std::mt19937 rng(20240517u);
    std::uniform_real_distribution<double> ux(0.0, mc.l);
    std::uniform_real_distribution<double> ut(0.0, mc.T);
    for (int i = 0; i < 50; ++i) {
        const double x = ux(rng);
        const double t = mc.time_dependent ? ut(rng) : 0.0;
        const double resid = strong_form_residual(mc, x, t);
        if (!(std::abs(resid) <= 1e-8))
            throw ManufactureError(mc.name + ": strong-form residual " + std::to_string(resid) +
                                   " at x = " + std::to_string(x) +
                                   (mc.time_dependent ? ", t = " + std::to_string(t) : "") +
                                   " exceeds 1e-8");
    }
}

// shared spatial profile 1 - x + sin^2 x and its derivatives
inline double profile(double x) { return 1.0 - x + std::sin(x) * std::sin(x); }
inline double profile_d1(double x) { return -1.0 + std::sin(2.0 * x); }
inline double profile_d2(double x) { return 2.0 * std::cos(2.0 * x); }
inline double profile_d3(double x) { return -4.0 * std::sin(2.0 * x); }
inline double profile_d4(double x) { return -8.0 * std::cos(2.0 * x); }

} // namespace detail

/// Steady benchmark: r = 1 + x, s = cos x, j = 3 on (0, 1) with exact
/// solution w = 1 - x + sin^2 x.
inline ManufacturedCase manufacture_steady() {
    using namespace detail;
    ManufacturedCase mc;
    mc.name = "paper-steady";
    mc.time_dependent = false;
    mc.l = 1.0;
    mc.coeffs.r = [](double x) { return 1.0 + x; };
    mc.coeffs.s = [](double x) { return std::cos(x); };
    mc.coeffs.j = [](double) { return 3.0; };
    mc.coeffs.dr = [](double) { return 1.0; };
    mc.coeffs.d2r = [](double) { return 0.0; };
    mc.coeffs.dj = [](double) { return 0.0; };

    mc.w = [](double x, double) { return profile(x); };
    mc.w_x = [](double x, double) { return profile_d1(x); };
    mc.w_t = [](double, double) { return 0.0; };
    mc.w_xt = [](double, double) { return 0.0; };
    mc.w_ld = [](long double x, long double) {
        const long double s = std::sin(x);
        return 1.0L - x + s * s;
    };

    // f = (r w'')'' + s w - (j w')' with r linear and j constant:
    //     2 w''' + (1+x) w'''' + cos(x) w - 3 w''
    mc.f = [](double x) {
        return 2.0 * profile_d3(x) + (1.0 + x) * profile_d4(x) + std::cos(x) * profile(x) -
               3.0 * profile_d2(x);
    };

    const double b_val = profile(1.0);
    const double btilde_val = 2.0 * profile_d2(1.0); // r(1) = 2
    mc.steady_bc = SteadyBC{1.0, 2.0, b_val, btilde_val};
    mc.a = [](double) { return 1.0; };
    mc.a_tilde = [](double) { return 2.0; };
    mc.b = [b_val](double) { return b_val; };
    mc.b_tilde = [btilde_val](double) { return btilde_val; };
    mc.p = [](double) { return 0.0; };
    mc.q = [](double) { return 0.0; };

    detail::run_residual_gate(mc);
    return mc;
}

/// Unsteady benchmark: r = 1 + x, eta = 2, j = 3x, s = cos x on
/// (0,1) x (0,1] with exact solution w = (1 - x + sin^2 x) sin t.
inline ManufacturedCase manufacture_unsteady() {
    using namespace detail;
    ManufacturedCase mc;
    mc.name = "paper-unsteady";
    mc.time_dependent = true;
    mc.l = 1.0;
    mc.T = 1.0;
    mc.coeffs.r = [](double x) { return 1.0 + x; };
    mc.coeffs.s = [](double x) { return std::cos(x); };
    mc.coeffs.j = [](double x) { return 3.0 * x; };
    mc.coeffs.eta = [](double) { return 2.0; };
    mc.coeffs.dr = [](double) { return 1.0; };
    mc.coeffs.d2r = [](double) { return 0.0; };
    mc.coeffs.dj = [](double) { return 3.0; };

    mc.w = [](double x, double t) { return profile(x) * std::sin(t); };
    mc.w_x = [](double x, double t) { return profile_d1(x) * std::sin(t); };
    mc.w_t = [](double x, double t) { return profile(x) * std::cos(t); };
    mc.w_xt = [](double x, double t) { return profile_d1(x) * std::cos(t); };
    mc.w_ld = [](long double x, long double t) {
        const long double s = std::sin(x);
        return (1.0L - x + s * s) * std::sin(t);
    };

    // g = w_tt + eta w_t + sin(t) [(r phi'')'' - (j phi')' + s phi]
    //   = phi (2 cos t - sin t) + sin(t) L phi
    const auto spatial_operator = [](double x) {
        return 2.0 * profile_d3(x) + (1.0 + x) * profile_d4(x) - 3.0 * profile_d1(x) -
               3.0 * x * profile_d2(x) + std::cos(x) * profile(x);
    };
    mc.g = [spatial_operator](double x, double t) {
        return profile(x) * (2.0 * std::cos(t) - std::sin(t)) +
               std::sin(t) * spatial_operator(x);
    };

    mc.p = [](double) { return 0.0; };
    mc.q = [](double x) { return profile(x); };

    const double phi_l = profile(1.0);
    const double moment_l = 2.0 * profile_d2(1.0); // r(1) phi''(1)
    mc.a = [](double t) { return std::sin(t); };
    mc.a_tilde = [](double t) { return 2.0 * std::sin(t); };
    mc.b = [phi_l](double t) { return phi_l * std::sin(t); };
    mc.b_tilde = [moment_l](double t) { return moment_l * std::sin(t); };
    mc.steady_bc = SteadyBC{};

    detail::run_residual_gate(mc);
    return mc;
}

/// Steady problem for the case on a uniform mesh with M elements.
inline SteadyProblem steady_problem(const ManufacturedCase& mc, std::size_t element_count) {
    if (mc.time_dependent)
        throw std::invalid_argument("steady_problem: case is time-dependent");
    return SteadyProblem{Mesh1D::uniform(mc.l, element_count), mc.coeffs, mc.f, mc.steady_bc};
}

/// Unsteady problem for the case with M elements and N time steps.
inline UnsteadyProblem unsteady_problem(const ManufacturedCase& mc, std::size_t element_count,
                                        std::size_t step_count) {
    if (!mc.time_dependent)
        throw std::invalid_argument("unsteady_problem: case is steady");
    return UnsteadyProblem{Mesh1D::uniform(mc.l, element_count),
                           TimeGrid(mc.T, step_count),
                           mc.coeffs,
                           mc.g,
                           mc.p,
                           mc.q,
                           TimeBC{mc.a, mc.a_tilde, mc.b, mc.b_tilde}};
}

} // namespace beamlab
