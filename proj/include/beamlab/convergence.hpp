#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "beamlab/manufactured.hpp"
#include "beamlab/steady.hpp"
#include "beamlab/unsteady.hpp"

namespace beamlab {

struct ConvergenceRow {
    double h;
    std::optional<double> tau;
    double err_W;
    std::optional<double> err_Z;
};

struct FitResult {
    double slope;
    double max_residual; // largest absolute log-residual of the fit
};

/// Rows of a convergence sweep, sorted by decreasing h, plus least-squares
/// observed orders when at least three points are available.
struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    std::optional<FitResult> slope_W;
    std::optional<FitResult> slope_Z;
    std::string norm;
};

/// Least-squares line through (log step, log error); returns the slope and
/// the largest absolute residual in log space.
inline FitResult fit_order(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3)
        throw std::invalid_argument("fit_order: need at least 3 points");
    std::vector<double> X, Y;
    for (const auto& [step, error] : points) {
        if (!(step > 0.0) || !(error > 0.0))
            throw std::invalid_argument("fit_order: steps and errors must be positive");
        X.push_back(std::log(step));
        Y.push_back(std::log(error));
    }
    const double n = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        mx += X[i];
        my += Y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        sxy += (X[i] - mx) * (Y[i] - my);
        sxx += (X[i] - mx) * (X[i] - mx);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double max_resid = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i)
        max_resid = std::max(max_resid, std::abs(Y[i] - (slope * X[i] + intercept)));
    return FitResult{slope, max_resid};
}

namespace detail {

inline std::size_t divide_evenly(double total, double step, const char* what) {
    const double ratio = total / step;
    const auto count = static_cast<std::size_t>(std::llround(ratio));
    if (count < 1 || std::abs(ratio - static_cast<double>(count)) > 1e-9)
        throw std::invalid_argument(std::string(what) + " = " + std::to_string(step) +
                                    " does not divide " + std::to_string(total) + " evenly");
    return count;
}

} // namespace detail

/// Solve the steady case at each h and record the L2 error against the
/// exact solution.
inline ConvergenceReport run_steady_study(const ManufacturedCase& mc,
                                          const std::vector<double>& h_list) {
    if (h_list.size() < 3)
        throw std::invalid_argument("run_steady_study: need at least 3 mesh sizes");
    ConvergenceReport report;
    report.norm = "L2(0,l)";
    for (double h : h_list) {
        const std::size_t M = detail::divide_evenly(mc.l, h, "h");
        const HermiteField solution = solve_steady(steady_problem(mc, M));
        const double err = l2_norm_error(solution, [&](double x) { return mc.w(x, 0.0); });
        report.rows.push_back(ConvergenceRow{h, std::nullopt, err, std::nullopt});
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const ConvergenceRow& p, const ConvergenceRow& q) { return p.h > q.h; });
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : report.rows)
        pts.emplace_back(row.h, row.err_W);
    report.slope_W = fit_order(pts);
    return report;
}

/// Run the time stepper for each (h, tau) pair and record
/// max_n || W_n - w(., t_n) || and max_n || Z_n - w_t(., t_n) ||, the
/// C(0,T;L2) norm evaluated at the discrete time nodes. Observed orders are
/// fitted against h when h varies, else against tau.
inline ConvergenceReport run_unsteady_study(const ManufacturedCase& mc,
                                            const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.empty())
        throw std::invalid_argument("run_unsteady_study: need at least one (h, tau) pair");
    ConvergenceReport report;
    report.norm = "max over time nodes of L2(0,l)";
    for (const auto& [h, tau] : pairs) {
        const std::size_t M = detail::divide_evenly(mc.l, h, "h");
        const std::size_t N = detail::divide_evenly(mc.T, tau, "tau");
        const UnsteadyProblem problem = unsteady_problem(mc, M, N);
        const Trajectory traj = run(problem);
        double err_w = 0.0, err_z = 0.0;
        for (std::size_t n = 0; n <= N; ++n) {
            const double tn = problem.grid.node(n);
            err_w = std::max(err_w, l2_norm_error(traj.W(n),
                                                  [&](double x) { return mc.w(x, tn); }));
            err_z = std::max(err_z, l2_norm_error(traj.Z(n),
                                                  [&](double x) { return mc.w_t(x, tn); }));
        }
        report.rows.push_back(ConvergenceRow{h, tau, err_w, err_z});
    }
    std::sort(report.rows.begin(), report.rows.end(), [](const ConvergenceRow& p,
                                                         const ConvergenceRow& q) {
        if (p.h != q.h)
            return p.h > q.h;
        return p.tau.value() > q.tau.value();
    });

    if (report.rows.size() >= 3) {
        const bool h_varies = std::any_of(report.rows.begin(), report.rows.end(),
                                          [&](const ConvergenceRow& row) {
                                              return row.h != report.rows.front().h;
                                          });
        std::vector<std::pair<double, double>> pw, pz;
        for (const auto& row : report.rows) {
            const double step = h_varies ? row.h : row.tau.value();
            pw.emplace_back(step, row.err_W);
            pz.emplace_back(step, row.err_Z.value());
        }
        report.slope_W = fit_order(pw);
        report.slope_Z = fit_order(pz);
    }
    return report;
}

} // namespace beamlab
