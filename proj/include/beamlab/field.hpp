#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "beamlab/coefficients.hpp"
#include "beamlab/hermite.hpp"
#include "beamlab/mesh.hpp"
#include "beamlab/quadrature.hpp"

namespace beamlab {

/// Piecewise Hermite-cubic function stored as per-node (value, slope)
/// degrees of freedom: dof[2m] is the value at node m, dof[2m+1] the slope.
/// Immutable after construction.
class HermiteField {
public:
    HermiteField(Mesh1D mesh, std::vector<double> dofs)
        : mesh_(std::move(mesh)), dofs_(std::move(dofs)) {
        if (dofs_.size() != mesh_.dof_count())
            throw std::invalid_argument("HermiteField: expected " +
                                        std::to_string(mesh_.dof_count()) + " dofs, got " +
                                        std::to_string(dofs_.size()));
    }

    /// Nodal interpolant of u built from (value, slope) data; exact whenever
    /// u is a piecewise cubic on this mesh.
    static HermiteField interpolate(const Mesh1D& mesh, const ScalarFn& u, const ScalarFn& du) {
        std::vector<double> dofs(mesh.dof_count());
        for (std::size_t m = 0; m < mesh.node_count(); ++m) {
            dofs[2 * m] = u(mesh.node(m));
            dofs[2 * m + 1] = du(mesh.node(m));
        }
        return HermiteField(mesh, std::move(dofs));
    }

    const Mesh1D& mesh() const noexcept { return mesh_; }
    const std::vector<double>& dofs() const noexcept { return dofs_; }

    double eval(double x) const { return eval_local(mesh_.find_element(x), x, 0); }
    double eval_dx(double x) const { return eval_local(mesh_.find_element(x), x, 1); }

    /// Second derivative; discontinuous across nodes, the left element wins
    /// at shared nodes.
    double eval_dxx(double x) const { return eval_local(mesh_.find_element(x, true), x, 2); }

private:
    double eval_local(std::size_t m, double x, int deriv) const {
        const ShapeValues sv = shape_eval(mesh_, m, x);
        const auto& shapes = (deriv == 0) ? sv.value : (deriv == 1 ? sv.d1 : sv.d2);
        double acc = 0.0;
        for (std::size_t k = 0; k < 4; ++k)
            acc += shapes[k] * dofs_[2 * m + k];
        return acc;
    }

    Mesh1D mesh_;
    std::vector<double> dofs_;
};

namespace detail {

template <typename FieldEval>
double l2_elementwise(const Mesh1D& mesh, const FieldEval& difference) {
    const GaussRule rule = gauss_rule(5);
    double acc = 0.0;
    for (std::size_t m = 0; m < mesh.element_count(); ++m) {
        const double h = mesh.element_size(m);
        const double xm = mesh.node(m);
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            const double x = xm + 0.5 * h * (rule.points[q] + 1.0);
            const double d = difference(m, x);
            acc += 0.5 * h * rule.weights[q] * d * d;
        }
    }
    return std::sqrt(acc);
}

} // namespace detail

/// L2(0, l) norm of (field - u_exact), 5-point Gauss per element.
inline double l2_norm_error(const HermiteField& field, const ScalarFn& u_exact) {
    return detail::l2_elementwise(field.mesh(), [&](std::size_t m, double x) {
        const ShapeValues sv = shape_eval(field.mesh(), m, x);
        double v = 0.0;
        for (std::size_t k = 0; k < 4; ++k)
            v += sv.value[k] * field.dofs()[2 * m + k];
        return v - u_exact(x);
    });
}

/// L2(0, l) norm of (field' - du_exact).
inline double l2_norm_error_dx(const HermiteField& field, const ScalarFn& du_exact) {
    return detail::l2_elementwise(field.mesh(), [&](std::size_t m, double x) {
        const ShapeValues sv = shape_eval(field.mesh(), m, x);
        double v = 0.0;
        for (std::size_t k = 0; k < 4; ++k)
            v += sv.d1[k] * field.dofs()[2 * m + k];
        return v - du_exact(x);
    });
}

inline double l2_norm(const HermiteField& field) {
    return l2_norm_error(field, [](double) { return 0.0; });
}

} // namespace beamlab
