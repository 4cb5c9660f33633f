#include "risim/deployment.hpp"

#include <algorithm>
#include <cmath>

namespace risim {

namespace {

double p2_objective(int n, const UnitsProblem& p) {
    const double theta_h =
        hpbw_closed_form(n, p.lambda.lambda / 2.0, p.lambda, p.theta_s).width;
    const double aperture = n * p.lambda.lambda / 2.0;
    return std::abs(2.0 * p.feed_distance * std::sin(0.5 * theta_h) -
                    aperture * std::cos(p.alpha));
}

int p2_round(int n, const UnitsProblem& p) {
    const double theta_h =
        hpbw_closed_form(n, p.lambda.lambda / 2.0, p.lambda, p.theta_s).width;
    const double v = 4.0 * p.feed_distance * std::sin(0.5 * theta_h) /
                     (p.lambda.lambda * std::cos(p.alpha));
    return static_cast<int>(std::lround(v));
}

} // namespace

DistanceResult optimal_distance(const DistanceProblem& problem) {
    DistanceResult out;
    out.hpbw = hpbw_closed_form(problem.units_along_cut, problem.spacing, problem.lambda,
                                problem.theta_s);
    if (out.hpbw.edge_clamped) {
        out.feasible = false;
        return out;
    }
    const double s = std::sin(0.5 * out.hpbw.width);
    out.r_opt = problem.aperture_length * std::cos(problem.alpha) / (2.0 * s);
    out.objective_residual = std::abs(2.0 * out.r_opt * s -
                                      problem.aperture_length * std::cos(problem.alpha));
    out.eab = eab_ratio(problem.aperture_length, problem.alpha, out.r_opt, out.hpbw.width);
    return out;
}

UnitsResult optimal_units(const UnitsProblem& problem) {
    if (!(problem.feed_distance > 0.0))
        throw GeometryError("feed distance must be positive");

    UnitsResult out;

    // Fixed-point iteration from N = 8, kept for reporting; it can 2-cycle
    // without visiting the optimum, so the integer scan below decides.
    int n = 8;
    out.iterates.push_back(n);
    for (int it = 0; it < 64; ++it) {
        const int next = std::clamp(p2_round(n, problem), 2, problem.scan_hi);
        if (next == n) break;
        if (std::find(out.iterates.begin(), out.iterates.end(), next) !=
            out.iterates.end()) {
            out.iterates.push_back(next);
            break;
        }
        out.iterates.push_back(next);
        n = next;
    }

    int best_n = problem.scan_lo;
    double best_obj = p2_objective(best_n, problem);
    for (int cand = problem.scan_lo + 1; cand <= problem.scan_hi; ++cand) {
        const double obj = p2_objective(cand, problem);
        if (obj < best_obj) {
            best_obj = obj;
            best_n = cand;
        }
    }
    out.n_opt = best_n;
    out.objective = best_obj;
    out.fixed_point = (p2_round(best_n, problem) == best_n);

    const double theta_h =
        hpbw_closed_form(best_n, problem.lambda.lambda / 2.0, problem.lambda,
                         problem.theta_s)
            .width;
    out.eab = eab_ratio(best_n * problem.lambda.lambda / 2.0, problem.alpha,
                        problem.feed_distance, theta_h)
                  .value;
    out.in_range = (out.eab >= 0.5 && out.eab <= 2.0);
    return out;
}

} // namespace risim
