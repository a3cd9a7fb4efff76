#pragma once

#include <stdexcept>
#include <utility>

#include "beamlab/assembly.hpp"
#include "beamlab/banded.hpp"
#include "beamlab/coefficients.hpp"
#include "beamlab/field.hpp"
#include "beamlab/mesh.hpp"

namespace beamlab {

/// Boundary data of the hinged beam: essential displacements a = w(0),
/// b = w(l) and natural moments a_tilde = r(0) w''(0), b_tilde = r(l) w''(l).
struct SteadyBC {
    double a = 0.0;
    double a_tilde = 0.0;
    double b = 0.0;
    double b_tilde = 0.0;
};

/// Stationary hinged-beam boundary value problem
///   (r w'')'' + s w - (j w')' = f  on (0, l)
struct SteadyProblem {
    Mesh1D mesh;
    CoefficientSet coeffs;
    ScalarFn f;
    SteadyBC bc;
};

/// Direct Galerkin solve with nonhomogeneous essential BCs imposed by row
/// replacement. The returned field satisfies eval(0) = a and eval(l) = b to
/// roundoff.
inline HermiteField solve_steady(const SteadyProblem& problem) {
    AssembledSystem system{assemble_operator(problem.mesh, problem.coeffs),
                           assemble_load(problem.mesh, problem.f, problem.bc.a_tilde,
                                         problem.bc.b_tilde),
                           false};
    apply_essential_bc(system, problem.bc.a, problem.bc.b);
    const BandedLU lu(system.R);
    return HermiteField(problem.mesh, lu.solve(std::move(system.C)));
}

/// Cubic satisfying theta(0) = a, r(0) theta''(0) = a_tilde, theta(l) = b,
/// r(l) theta''(l) = b_tilde:
///   theta = a (l-x)/l + b x/l + (a_tilde/r0) [(l-x)^3/(6l) - (l/6)(l-x)]
///         + (b_tilde/rl) [x^3/(6l) - x l/6]
class AuxiliaryCubic {
public:
    AuxiliaryCubic(double l, double r0, double rl, SteadyBC bc)
        : l_(l), ca_(bc.a_tilde / r0), cb_(bc.b_tilde / rl), a_(bc.a), b_(bc.b) {
        if (!(l > 0.0) || !(r0 > 0.0) || !(rl > 0.0))
            throw std::invalid_argument("AuxiliaryCubic: l, r(0), r(l) must be positive");
    }

    double value(double x) const {
        const double y = l_ - x;
        return a_ * y / l_ + b_ * x / l_ + ca_ * (y * y * y / (6.0 * l_) - l_ * y / 6.0) +
               cb_ * (x * x * x / (6.0 * l_) - x * l_ / 6.0);
    }
    double dx(double x) const {
        const double y = l_ - x;
        return (b_ - a_) / l_ + ca_ * (l_ / 6.0 - y * y / (2.0 * l_)) +
               cb_ * (x * x / (2.0 * l_) - l_ / 6.0);
    }
    double dxx(double x) const { return ca_ * (l_ - x) / l_ + cb_ * x / l_; }
    double dxxx(double) const { return (cb_ - ca_) / l_; }

    double operator()(double x) const { return value(x); }

private:
    double l_, ca_, cb_, a_, b_;
};

inline AuxiliaryCubic auxiliary_theta(double l, double r0, double rl, SteadyBC bc) {
    return AuxiliaryCubic(l, r0, rl, bc);
}

/// Homogenization route: solve for wt with zero boundary data and the
/// shifted load
///   ft = f - (r theta'')'' - s theta + (j theta')'
/// then return wt + theta. Requires the analytic dr, d2r, dj hooks so that
/// (r theta'')'' = d2r theta'' + 2 dr theta''' and (j theta')' =
/// dj theta' + j theta'' can be formed without numerical differentiation.
inline HermiteField solve_steady_homogenized(const SteadyProblem& problem) {
    const CoefficientSet& c = problem.coeffs;
    if (!c.dr || !c.d2r || !c.dj)
        throw std::invalid_argument(
            "solve_steady_homogenized: coefficient derivative hooks dr, d2r, dj are required");

    const double l = problem.mesh.length();
    const AuxiliaryCubic theta(l, c.r(0.0), c.r(l), problem.bc);

    const ScalarFn f = problem.f;
    const ScalarFn ft = [&c, f, theta](double x) {
        const double bending = c.d2r(x) * theta.dxx(x) + 2.0 * c.dr(x) * theta.dxxx(x);
        const double traction = c.dj(x) * theta.dx(x) + c.j(x) * theta.dxx(x);
        return f(x) - bending - c.s(x) * theta.value(x) + traction;
    };

    SteadyProblem homogeneous{problem.mesh, problem.coeffs, ft, SteadyBC{}};
    const HermiteField wt = solve_steady(homogeneous);

    std::vector<double> dofs = wt.dofs();
    for (std::size_t m = 0; m < problem.mesh.node_count(); ++m) {
        const double xm = problem.mesh.node(m);
        dofs[2 * m] += theta.value(xm);
        dofs[2 * m + 1] += theta.dx(xm);
    }
    return HermiteField(problem.mesh, std::move(dofs));
}

} // namespace beamlab
