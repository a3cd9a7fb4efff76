#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "beamlab/assembly.hpp"
#include "beamlab/banded.hpp"
#include "beamlab/coefficients.hpp"
#include "beamlab/field.hpp"
#include "beamlab/mesh.hpp"
#include "beamlab/steady.hpp"

namespace beamlab {

/// Uniform partition of [0, T] into N steps of size tau = T/N.
struct TimeGrid {
    double T;
    std::size_t N;

    TimeGrid(double final_time, std::size_t steps) : T(final_time), N(steps) {
        if (!(T > 0.0))
            throw std::invalid_argument("TimeGrid: T must be positive");
        if (N < 1)
            throw std::invalid_argument("TimeGrid: need at least one step");
    }

    double tau() const noexcept { return T / static_cast<double>(N); }
    /// t_n for n = 0..N; node(0) = 0 and node(N) = T.
    double node(std::size_t n) const { return T * static_cast<double>(n) / static_cast<double>(N); }
};

/// Time-dependent boundary data: essential displacements a(t), b(t) and
/// natural moments a_tilde(t) = r(0) w_xx(0,t), b_tilde(t) = r(l) w_xx(l,t).
struct TimeBC {
    TimeFn a = [](double) { return 0.0; };
    TimeFn a_tilde = [](double) { return 0.0; };
    TimeFn b = [](double) { return 0.0; };
    TimeFn b_tilde = [](double) { return 0.0; };
};

/// Damped unsteady hinged beam
///   w_tt + eta w_t + (r w_xx)_xx - (j w_x)_x + s w = g
/// with w(x,0) = p, w_t(x,0) = q. The mass density is required to be the
/// constant 1.
struct UnsteadyProblem {
    Mesh1D mesh;
    TimeGrid grid;
    CoefficientSet coeffs;
    SpaceTimeFn g = [](double, double) { return 0.0; };
    ScalarFn p = [](double) { return 0.0; };
    ScalarFn q = [](double) { return 0.0; };
    TimeBC bc;
};

/// Initial-data compatibility notes (p vs a(0), b(0) at the endpoints).
/// Violations are reported, never fatal.
inline std::vector<std::string> compatibility_warnings(const UnsteadyProblem& problem) {
    std::vector<std::string> notes;
    const double l = problem.mesh.length();
    const double da = std::abs(problem.p(0.0) - problem.bc.a(0.0));
    const double db = std::abs(problem.p(l) - problem.bc.b(0.0));
    if (da > 1e-10)
        notes.push_back("initial displacement disagrees with a(0) at x=0 by " +
                        std::to_string(da));
    if (db > 1e-10)
        notes.push_back("initial displacement disagrees with b(0) at x=l by " +
                        std::to_string(db));
    return notes;
}

/// Time-indexed family of displacement and velocity fields W_n, Z_n at the
/// grid nodes, with linear interpolation between them.
class Trajectory {
public:
    Trajectory(TimeGrid grid, std::vector<HermiteField> W, std::vector<HermiteField> Z)
        : grid_(grid), W_(std::move(W)), Z_(std::move(Z)) {
        if (W_.size() != grid_.N + 1 || Z_.size() != grid_.N + 1)
            throw std::invalid_argument("Trajectory: need N+1 displacement and velocity fields");
    }

    const TimeGrid& grid() const noexcept { return grid_; }
    const HermiteField& W(std::size_t n) const { return W_.at(n); }
    const HermiteField& Z(std::size_t n) const { return Z_.at(n); }
    std::size_t step_count() const noexcept { return grid_.N; }

    double interp_W(double x, double t) const {
        return blend(t, [&](std::size_t n) { return W_[n].eval(x); });
    }
    double interp_Z(double x, double t) const {
        return blend(t, [&](std::size_t n) { return Z_[n].eval(x); });
    }
    double interp_dxW(double x, double t) const {
        return blend(t, [&](std::size_t n) { return W_[n].eval_dx(x); });
    }
    double interp_dxZ(double x, double t) const {
        return blend(t, [&](std::size_t n) { return Z_[n].eval_dx(x); });
    }

private:
    template <typename EvalAt>
    double blend(double t, const EvalAt& value_at) const {
        const double tau = grid_.tau();
        const double tol = 1e-12 * grid_.T;
        if (t < -tol || t > grid_.T + tol)
            throw std::out_of_range("Trajectory: t = " + std::to_string(t) + " outside [0, " +
                                    std::to_string(grid_.T) + "]");
        std::size_t n = static_cast<std::size_t>(std::max(0.0, std::floor(t / tau)));
        n = std::min(n, grid_.N - 1);
        const double tn = grid_.node(n);
        const double tn1 = grid_.node(n + 1);
        return (t - tn) / tau * value_at(n + 1) - (t - tn1) / tau * value_at(n);
    }

    TimeGrid grid_;
    std::vector<HermiteField> W_, Z_;
};

/// L2 projections of the initial displacement and velocity, taken over the
/// whole Hermite space with no essential-BC override.
inline std::pair<HermiteField, HermiteField> initialize(const UnsteadyProblem& problem) {
    return {l2_project(problem.mesh, problem.p), l2_project(problem.mesh, problem.q)};
}

/// One-step trapezium reduction of the first-order system (w_t = z,
/// z_t = -eta z - L w + g) to a steady problem per step.
///
/// Each step solves, for W = W_{n+1} with W(0) = a_{n+1}, W(l) = b_{n+1},
///   (r W'', v'') + (stilde W, v) + (j W', v')
///     = btilde_{n+1} v'(l) - atilde_{n+1} v'(0)
///     - [(r W_n'', v'') - btilde_n v'(l) + atilde_n v'(0)]
///     + ((4/tau^2 + (2/tau) eta - s) W_n, v) + (4/tau)(Z_n, v)
///     - (j W_n', v') + (G_n + G_{n+1}, v)
/// with stilde = 4/tau^2 + (2/tau) eta + s, then updates the velocity by
///   Z_{n+1} = (2/tau)(W_{n+1} - W_n) - Z_n.
/// Dropping the -Z_n term (or flipping the sign of s in the W_n
/// coefficient) reduces the scheme to first order in time.
///
/// stilde does not depend on the step, so the stepping matrix is assembled
/// and factored once; right-hand-side integrals against the known fields
/// are banded matrix products with the same matrices that built the
/// operator, which makes a discrete steady state an exact fixed point.
class CrankNicolsonStepper {
public:
    explicit CrankNicolsonStepper(const UnsteadyProblem& problem)
        : problem_(problem), tau_(problem.grid.tau()),
          stiffness_(assemble_operator(problem.mesh, problem.coeffs, zero_fn())),
          mass_(assemble_mass(problem.mesh)),
          mass_eta_(assemble_mass(problem.mesh, problem.coeffs.eta)),
          mass_s_(assemble_mass(problem.mesh, problem.coeffs.s)),
          stepping_lu_(build_stepping_matrix()) {
        require_unit_density();
    }

    /// Advance from t_n to t_{n+1}; n is the 0-based step index in [0, N).
    std::pair<HermiteField, HermiteField> step(std::size_t n, const HermiteField& W_prev,
                                               const HermiteField& Z_prev) const {
        if (n >= problem_.grid.N)
            throw std::invalid_argument("CrankNicolsonStepper: step index out of range");
        const double tn = problem_.grid.node(n);
        const double tn1 = problem_.grid.node(n + 1);
        const SpaceTimeFn& g = problem_.g;

        std::vector<double> rhs = assemble_load(
            problem_.mesh, [&](double x) { return g(x, tn) + g(x, tn1); },
            problem_.bc.a_tilde(tn) + problem_.bc.a_tilde(tn1),
            problem_.bc.b_tilde(tn) + problem_.bc.b_tilde(tn1), 5);

        const std::vector<double>& wp = W_prev.dofs();
        const std::vector<double>& zp = Z_prev.dofs();
        accumulate(rhs, stiffness_.multiply(wp), -1.0);
        accumulate(rhs, mass_.multiply(wp), 4.0 / (tau_ * tau_));
        accumulate(rhs, mass_eta_.multiply(wp), 2.0 / tau_);
        accumulate(rhs, mass_s_.multiply(wp), -1.0);
        accumulate(rhs, mass_.multiply(zp), 4.0 / tau_);

        rhs[0] = problem_.bc.a(tn1);
        rhs[rhs.size() - 2] = problem_.bc.b(tn1);

        std::vector<double> wn = stepping_lu_.solve(std::move(rhs));
        std::vector<double> zn(wn.size());
        for (std::size_t i = 0; i < wn.size(); ++i)
            zn[i] = 2.0 / tau_ * (wn[i] - wp[i]) - zp[i];
        return {HermiteField(problem_.mesh, std::move(wn)),
                HermiteField(problem_.mesh, std::move(zn))};
    }

private:
    static ScalarFn zero_fn() {
        return [](double) { return 0.0; };
    }

    BandedLU build_stepping_matrix() const {
        BandedMatrix A = stiffness_;
        A.add_scaled(mass_, 4.0 / (tau_ * tau_));
        A.add_scaled(mass_eta_, 2.0 / tau_);
        A.add_scaled(mass_s_, 1.0);
        AssembledSystem system{std::move(A), std::vector<double>(problem_.mesh.dof_count(), 0.0),
                               false};
        apply_essential_bc(system, 0.0, 0.0);
        return BandedLU(system.R);
    }

    void require_unit_density() const {
        const GaussRule rule = gauss_rule(3);
        for (std::size_t m = 0; m < problem_.mesh.element_count(); ++m) {
            const double h = problem_.mesh.element_size(m);
            const double xm = problem_.mesh.node(m);
            for (double pt : rule.points) {
                const double x = xm + 0.5 * h * (pt + 1.0);
                if (std::abs(problem_.coeffs.rho(x) - 1.0) > 1e-12)
                    throw std::invalid_argument(
                        "UnsteadyProblem: mass density must be the constant 1 (rho(" +
                        std::to_string(x) + ") = " + std::to_string(problem_.coeffs.rho(x)) + ")");
            }
        }
    }

    static void accumulate(std::vector<double>& target, const std::vector<double>& source,
                           double factor) {
        for (std::size_t i = 0; i < target.size(); ++i)
            target[i] += factor * source[i];
    }

    const UnsteadyProblem& problem_;
    double tau_;
    BandedMatrix stiffness_, mass_, mass_eta_, mass_s_;
    BandedLU stepping_lu_;
};

/// Single step without stepper reuse; convenience for tests and one-off use.
inline std::pair<HermiteField, HermiteField> cn_step(const UnsteadyProblem& problem, std::size_t n,
                                                     const HermiteField& W_prev,
                                                     const HermiteField& Z_prev) {
    return CrankNicolsonStepper(problem).step(n, W_prev, Z_prev);
}

/// Project the initial data, then advance N Crank-Nicolson steps with one
/// factorization of the stepping matrix.
inline Trajectory run(const UnsteadyProblem& problem) {
    const CrankNicolsonStepper stepper(problem);
    auto [w, z] = initialize(problem);
    std::vector<HermiteField> W{w};
    std::vector<HermiteField> Z{z};
    W.reserve(problem.grid.N + 1);
    Z.reserve(problem.grid.N + 1);
    for (std::size_t n = 0; n < problem.grid.N; ++n) {
        auto [wn, zn] = stepper.step(n, W.back(), Z.back());
        W.push_back(std::move(wn));
        Z.push_back(std::move(zn));
    }
    return Trajectory(problem.grid, std::move(W), std::move(Z));
}

} // namespace beamlab
