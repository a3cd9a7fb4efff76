#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "beamlab/banded.hpp"
#include "beamlab/coefficients.hpp"
#include "beamlab/errors.hpp"
#include "beamlab/field.hpp"
#include "beamlab/hermite.hpp"
#include "beamlab/mesh.hpp"
#include "beamlab/quadrature.hpp"

namespace beamlab {

// Element DOFs 2m..2m+3 couple only indices with |i - j| <= 3.
inline constexpr std::size_t kOperatorBandwidth = 3;

/// Galerkin system R Gamma = C for one steady problem.
struct AssembledSystem {
    BandedMatrix R;
    std::vector<double> C;
    bool bc_applied = false;
};

/// Assemble the operator matrix
///   R_ij = int r phi_j'' phi_i'' + int j phi_j' phi_i' + int sbar phi_i phi_j
/// with sbar = s_override if given, else coeffs.s. Bending and traction
/// terms use the 3-point rule; the zeroth-order term uses the 5-point rule,
/// which integrates the degree-6 shape products exactly.
///
/// check_coefficients verifies r > 0 at the bending quadrature points; tests
/// that assemble degenerate blocks may disable it.
inline BandedMatrix assemble_operator(const Mesh1D& mesh, const CoefficientSet& coeffs,
                                      const ScalarFn& s_override = {},
                                      bool check_coefficients = true) {
    const std::size_t n = mesh.dof_count();
    BandedMatrix R(n, kOperatorBandwidth, kOperatorBandwidth);
    const GaussRule stiff_rule = gauss_rule(3);
    const GaussRule mass_rule = gauss_rule(5);
    const ScalarFn& sbar = s_override ? s_override : coeffs.s;

    for (std::size_t m = 0; m < mesh.element_count(); ++m) {
        const double h = mesh.element_size(m);
        const double xm = mesh.node(m);
        const std::size_t base = 2 * m;
        double local[4][4] = {};

        for (std::size_t q = 0; q < stiff_rule.points.size(); ++q) {
            const double x = xm + 0.5 * h * (stiff_rule.points[q] + 1.0);
            const double wq = 0.5 * h * stiff_rule.weights[q];
            const double rq = coeffs.r(x);
            if (check_coefficients && !(rq > 0.0))
                throw CoefficientError("r", x, rq);
            const double jq = coeffs.j(x);
            const ShapeValues sv = shape_eval(mesh, m, x);
            for (int a = 0; a < 4; ++a)
                for (int b = a; b < 4; ++b)
                    local[a][b] += wq * (rq * sv.d2[a] * sv.d2[b] + jq * sv.d1[a] * sv.d1[b]);
        }
        for (std::size_t q = 0; q < mass_rule.points.size(); ++q) {
            const double x = xm + 0.5 * h * (mass_rule.points[q] + 1.0);
            const double wq = 0.5 * h * mass_rule.weights[q];
            const double sq = sbar(x);
            const ShapeValues sv = shape_eval(mesh, m, x);
            for (int a = 0; a < 4; ++a)
                for (int b = a; b < 4; ++b)
                    local[a][b] += wq * sq * sv.value[a] * sv.value[b];
        }
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) {
                R.add(base + a, base + b, local[a][b]);
                if (b != a)
                    R.add(base + b, base + a, local[a][b]);
            }
    }
    return R;
}

/// (weight phi_j, phi_i) with the 5-point rule; weight defaults to 1.
inline BandedMatrix assemble_mass(const Mesh1D& mesh, const ScalarFn& weight = {}) {
    const ScalarFn one = [](double) { return 1.0; };
    CoefficientSet zero_op;
    zero_op.r = [](double) { return 0.0; };
    return assemble_operator(mesh, zero_op, weight ? weight : one, false);
}

/// Load vector C_j = int f phi_j + b_tilde phi_j'(l) - a_tilde phi_j'(0).
/// Only the slope DOFs at the two boundary nodes receive the point terms.
/// quad_order 3 matches the operator assembly; projection and time-stepping
/// right-hand sides pass 5.
inline std::vector<double> assemble_load(const Mesh1D& mesh, const ScalarFn& f, double a_tilde,
                                         double b_tilde, int quad_order = 3) {
    const std::size_t n = mesh.dof_count();
    std::vector<double> C(n, 0.0);
    const GaussRule rule = gauss_rule(quad_order);
    for (std::size_t m = 0; m < mesh.element_count(); ++m) {
        const double h = mesh.element_size(m);
        const double xm = mesh.node(m);
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            const double x = xm + 0.5 * h * (rule.points[q] + 1.0);
            const double wq = 0.5 * h * rule.weights[q];
            const double fq = f(x);
            const ShapeValues sv = shape_eval(mesh, m, x);
            for (std::size_t a = 0; a < 4; ++a)
                C[2 * m + a] += wq * fq * sv.value[a];
        }
    }
    C[1] -= a_tilde;     // phi'(0) = 1 only for the first slope shape
    C[n - 1] += b_tilde; // phi'(l) = 1 only for the last slope shape
    return C;
}

/// Replace the two essential-BC rows by unit rows: row of the value DOF at
/// x=0 becomes e_1 with C = a, row of the value DOF at x=l becomes a unit
/// row with C = b. Everything else is untouched; symmetry is lost.
inline void apply_essential_bc(AssembledSystem& system, double a, double b) {
    if (system.bc_applied)
        throw std::logic_error("apply_essential_bc: already applied to this system");
    const std::size_t n = system.R.size();
    if (system.C.size() != n)
        throw std::invalid_argument("apply_essential_bc: system dimensions disagree");
    const std::size_t last_value_dof = n - 2;
    system.R.clear_row(0);
    system.R.set(0, 0, 1.0);
    system.C[0] = a;
    system.R.clear_row(last_value_dof);
    system.R.set(last_value_dof, last_value_dof, 1.0);
    system.C[last_value_dof] = b;
    system.bc_applied = true;
}

/// L2 projection of u onto the Hermite space: solve M Gamma = b with
/// M_ij = (phi_j, phi_i) and b_i = (u, phi_i), both with the 5-point rule.
inline HermiteField l2_project(const Mesh1D& mesh, const ScalarFn& u) {
    const BandedMatrix M = assemble_mass(mesh);
    std::vector<double> b = assemble_load(mesh, u, 0.0, 0.0, 5);
    const BandedLU lu(M);
    return HermiteField(mesh, lu.solve(std::move(b)));
}

} // namespace beamlab
