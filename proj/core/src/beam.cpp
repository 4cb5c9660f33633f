#include "risim/beam.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace risim {

Illumination classify_eab(double abr, double tol) {
    if (abr > 1.0 + tol) return Illumination::Partial;
    if (abr >= 1.0 - tol) return Illumination::Exact;
    return Illumination::Over;
}

namespace {

struct CutAxes {
    Vec3 axis;  // receiving axis (world)
    int recv_units;
    double recv_length;
    int feed_units;
};

// Pair the receiving-board axes with the feeding-board axes through the
// incidence-plane direction w.
CutAxes pick_cut(const UnitGrid& feeding, const UnitGrid& receiving, const Vec3& w,
                 bool in_plane) {
    const Vec3 rex = receiving.frame().ex();
    const Vec3 rey = receiving.frame().ey();
    const bool recv_x_in_plane = std::abs(rex.dot(w)) >= std::abs(rey.dot(w));

    const Vec3 fex = feeding.frame().ex();
    const Vec3 fey = feeding.frame().ey();
    const bool feed_x_in_plane = std::abs(fex.dot(w)) >= std::abs(fey.dot(w));

    CutAxes out;
    const bool use_recv_x = in_plane ? recv_x_in_plane : !recv_x_in_plane;
    const bool use_feed_x = in_plane ? feed_x_in_plane : !feed_x_in_plane;
    out.axis = use_recv_x ? rex : rey;
    out.recv_units = use_recv_x ? receiving.cols() : receiving.rows();
    out.recv_length = use_recv_x ? receiving.length_cols() : receiving.length_rows();
    out.feed_units = use_feed_x ? feeding.cols() : feeding.rows();
    return out;
}

} // namespace

BoardIllumination classify_illumination(const UnitGrid& feeding,
                                        const UnitGrid& receiving, Wavelength lambda,
                                        double tol) {
    BoardIllumination out;
    const Vec3 fr = feeding.reference();
    const Vec3 to_center = receiving.center() - fr;
    out.distance = to_center.norm();
    if (out.distance <= 0.0) throw GeometryError("boards coincide");
    const Vec3 u = to_center / out.distance;

    const Vec3 n_feed = feeding.normal();
    out.theta_s = std::acos(std::clamp(std::abs(u.dot(n_feed)), 0.0, 1.0));
    out.alpha = std::acos(std::clamp(std::abs(u.dot(receiving.normal())), 0.0, 1.0));

    // in-plane direction: center direction with the feeding normal removed
    Vec3 w = to_center - n_feed * to_center.dot(n_feed);
    if (w.norm() < 1e-12 * out.distance)
        w = receiving.frame().ex() - n_feed * receiving.frame().ex().dot(n_feed);
    w = w.normalized();

    const auto make_cut = [&](bool in_plane) {
        const CutAxes axes = pick_cut(feeding, receiving, w, in_plane);
        CutIllumination cut;
        cut.cut_axis = axes.axis;
        cut.units = axes.recv_units;
        cut.length = axes.recv_length;
        cut.feed_units = axes.feed_units;
        const double theta2 = in_plane ? out.theta_s : 0.0;
        const HpbwResult beam =
            hpbw_closed_form(axes.feed_units, feeding.spacing(), lambda, theta2);
        if (beam.edge_clamped)
            throw GeometryError("beamwidth edge-clamped; illumination undefined");
        // projection of the cut axis onto the plane orthogonal to the link
        const double proj = std::clamp(std::abs(axes.axis.dot(u)), 0.0, 1.0);
        const double alpha_cut = std::asin(proj);
        cut.eab = eab_ratio(axes.recv_length, alpha_cut, out.distance, beam.width);
        cut.kind = classify_eab(cut.eab.value, tol);
        return cut;
    };

    out.in_plane = make_cut(true);
    out.cross = make_cut(false);
    return out;
}

int sampling_count(double abr) {
    if (abr <= 1.0) return 1;
    return 2 * static_cast<int>(std::ceil(abr)) - 1;
}

namespace {

Vec3 snap_to_unit(const UnitGrid& grid, const Vec3& p) {
    const Vec3 local = grid.frame().to_local(p - grid.first_unit());
    const double d = grid.spacing();
    const int b = std::clamp(static_cast<int>(std::lround(local.x / d)), 0,
                             grid.cols() - 1);
    const int a = std::clamp(static_cast<int>(std::lround(local.y / d)), 0,
                             grid.rows() - 1);
    return grid.position(a * grid.cols() + b);
}

std::vector<double> cut_offsets(int z, double length) {
    std::vector<double> offs(static_cast<size_t>(z));
    for (int i = 0; i < z; ++i)
        offs[static_cast<size_t>(i)] = (i - (z - 1) / 2.0) * (length / z);
    return offs;
}

} // namespace

SamplingPlan sampling_plan(const EabRatio& eab, const UnitGrid& receiving) {
    SamplingPlan plan;
    plan.z_in_plane = sampling_count(eab.value);
    plan.z = plan.z_in_plane;
    const Vec3 axis = receiving.frame().ex();
    for (double o : cut_offsets(plan.z_in_plane, receiving.length_cols()))
        plan.points.push_back(snap_to_unit(receiving, receiving.center() + axis * o));
    return plan;
}

SamplingPlan sampling_plan(const BoardIllumination& illum, const UnitGrid& receiving,
                           bool lattice) {
    SamplingPlan plan;
    const int zi = illum.in_plane.kind == Illumination::Partial
                       ? sampling_count(illum.in_plane.eab.value)
                       : 1;
    const int zc = illum.cross.kind == Illumination::Partial
                       ? sampling_count(illum.cross.eab.value)
                       : 1;
    plan.z_in_plane = zi;
    plan.z_cross = lattice ? zc : 1;
    plan.z = plan.z_in_plane * plan.z_cross;

    const auto offs_i = cut_offsets(plan.z_in_plane, illum.in_plane.length);
    const auto offs_c = cut_offsets(plan.z_cross, illum.cross.length);
    for (double oc : offs_c)
        for (double oi : offs_i)
            plan.points.push_back(snap_to_unit(
                receiving, receiving.center() + illum.in_plane.cut_axis * oi +
                               illum.cross.cut_axis * oc));
    return plan;
}

PhaseProfile single_beam_phases(const Vec3& source, const Vec3& target,
                                const UnitGrid& grid, Wavelength lambda) {
    const double k = lambda.wavenumber();
    PhaseProfile out;
    out.omegas.resize(static_cast<size_t>(grid.size()));
    for (int n = 0; n < grid.size(); ++n) {
        const Vec3 p = grid.position(n);
        const double ri = (p - source).norm();
        const double rs = (target - p).norm();
        if (ri <= 0.0 || rs <= 0.0)
            throw GeometryError("source or target coincides with a unit");
        out.omegas[static_cast<size_t>(n)] = wrap_angle(k * (ri + rs));
    }
    return out;
}

PhaseProfile last_ris_phases(const ComplexFieldMap& incident, const Vec3& target,
                             Wavelength lambda) {
    const double k = lambda.wavenumber();
    const UnitGrid& grid = incident.grid();
    bool any_nonzero = false;
    PhaseProfile out;
    out.omegas.resize(static_cast<size_t>(grid.size()));
    for (int n = 0; n < grid.size(); ++n) {
        const Complex e = incident.value(n);
        const double rs = (target - grid.position(n)).norm();
        if (rs <= 0.0) throw GeometryError("target coincides with a unit");
        if (std::abs(e) == 0.0) {
            out.omegas[static_cast<size_t>(n)] = 0.0;
            continue;
        }
        any_nonzero = true;
        out.omegas[static_cast<size_t>(n)] = wrap_angle(-std::arg(e) + k * rs);
    }
    if (!any_nonzero) throw GeometryError("incident field is zero on every unit");
    return out;
}

int quantization_index(double omega, int bits) {
    if (bits < 1) throw GeometryError("quantization needs at least 1 bit");
    const int levels = 1 << bits;
    const double step = kTwoPi / levels;
    // nearest level, ties toward the lower one
    const int q = static_cast<int>(std::ceil(omega / step - 0.5));
    return ((q % levels) + levels) % levels;
}

PhaseProfile quantize(const PhaseProfile& profile, int bits) {
    const int levels = 1 << bits;
    const double step = kTwoPi / levels;
    PhaseProfile out;
    out.omegas.reserve(profile.omegas.size());
    for (double w : profile.omegas)
        out.omegas.push_back(quantization_index(w, bits) * step);
    out.quantization_bits = bits;
    return out;
}

MaxMinProblem build_max_min_problem(const ComplexFieldMap& incident,
                                    const std::vector<Vec3>& targets, double tau,
                                    Wavelength lambda) {
    const double k = lambda.wavenumber();
    const UnitGrid& grid = incident.grid();
    MaxMinProblem prob;
    prob.n = grid.size();
    prob.z = static_cast<int>(targets.size());
    prob.h.resize(static_cast<size_t>(prob.n) * prob.z);
    for (int zi = 0; zi < prob.z; ++zi) {
        for (int ni = 0; ni < prob.n; ++ni) {
            const double r = (targets[static_cast<size_t>(zi)] - grid.position(ni)).norm();
            if (r <= 0.0) throw GeometryError("target coincides with a unit");
            prob.h[static_cast<size_t>(zi) * prob.n + ni] =
                tau * incident.value(ni) * std::polar(1.0 / r, -k * r);
        }
    }
    return prob;
}

namespace {

struct Workspace {
    std::vector<Complex> s;  // per-point field sums
    std::vector<double> p;   // per-point powers
};

void recompute(const MaxMinProblem& prob, const std::vector<double>& om, Workspace& ws) {
    ws.s.assign(static_cast<size_t>(prob.z), Complex{});
    std::vector<Complex> x(static_cast<size_t>(prob.n));
    for (int ni = 0; ni < prob.n; ++ni) x[static_cast<size_t>(ni)] = std::polar(1.0, om[static_cast<size_t>(ni)]);
    for (int zi = 0; zi < prob.z; ++zi) {
        Complex acc{};
        const Complex* row = &prob.h[static_cast<size_t>(zi) * prob.n];
        for (int ni = 0; ni < prob.n; ++ni) acc += x[static_cast<size_t>(ni)] * row[ni];
        ws.s[static_cast<size_t>(zi)] = acc;
    }
    ws.p.resize(static_cast<size_t>(prob.z));
    for (int zi = 0; zi < prob.z; ++zi) ws.p[static_cast<size_t>(zi)] = std::norm(ws.s[static_cast<size_t>(zi)]);
}

double min_power(const Workspace& ws) {
    double m = ws.p.empty() ? 0.0 : ws.p[0];
    for (double v : ws.p) m = std::min(m, v);
    return m;
}

double softmin(const MaxMinProblem& prob, const std::vector<double>& om, double temp,
               Workspace& ws) {
    recompute(prob, om, ws);
    const double mn = min_power(ws);
    double acc = 0.0;
    for (double v : ws.p) acc += std::exp(-(v - mn) / temp);
    return mn - temp * std::log(acc / prob.z);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97f4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

SolverResult solve_max_min(const MaxMinProblem& problem, const SolverConfig& config) {
    if (problem.n < 1 || problem.z < 1)
        throw GeometryError("max-min problem needs at least one unit and one point");

    SolverResult result;
    result.seed = config.seed;

    // start list: caller warm starts, then conjugate starts, then random
    std::vector<std::vector<double>> starts;
    for (const auto& ws : config.warm_starts) {
        if (ws.size() != static_cast<size_t>(problem.n))
            throw GeometryError("warm start length does not match unit count");
        starts.push_back(ws.omegas);
    }
    {
        std::vector<double> om(static_cast<size_t>(problem.n));
        const int zc = problem.z / 2;
        for (int ni = 0; ni < problem.n; ++ni)
            om[static_cast<size_t>(ni)] = -std::arg(problem.at(zc, ni));
        starts.push_back(om);
        if (problem.z > 1) {
            std::vector<double> om2(static_cast<size_t>(problem.n));
            for (int ni = 0; ni < problem.n; ++ni) {
                Complex acc{};
                for (int zi = 0; zi < problem.z; ++zi) acc += problem.at(zi, ni);
                om2[static_cast<size_t>(ni)] = std::abs(acc) > 0.0 ? -std::arg(acc) : 0.0;
            }
            starts.push_back(om2);
        }
    }
    while (static_cast<int>(starts.size()) < std::max(config.restarts, 1)) {
        std::mt19937_64 rng(splitmix64(config.seed ^ (0x1234ULL + starts.size())));
        std::uniform_real_distribution<double> uni(0.0, kTwoPi);
        std::vector<double> om(static_cast<size_t>(problem.n));
        for (auto& v : om) v = uni(rng);
        starts.push_back(std::move(om));
    }
    if (static_cast<int>(starts.size()) > std::max(config.restarts, 1))
        starts.resize(static_cast<size_t>(std::max(config.restarts, 1)));

    Workspace ws;
    std::vector<double> best_om;
    double best_min = -1.0;
    double running_best = -1.0;
    bool converged_any = false;

    for (const auto& start : starts) {
        std::vector<double> om = start;
        recompute(problem, om, ws);
        double pmax = 0.0;
        for (double v : ws.p) pmax = std::max(pmax, v);
        double lo = min_power(ws);
        double temp = std::max(pmax - lo, 0.1 * pmax) + 1e-300;
        double step = 0.3;

        std::vector<double> grad(static_cast<size_t>(problem.n));
        std::vector<double> trial(static_cast<size_t>(problem.n));
        int it = 0;
        for (; it < config.max_iterations; ++it) {
            recompute(problem, om, ws);
            result.trace.push_back(running_best = std::max(running_best, min_power(ws)));

            const double mn = min_power(ws);
            double asum = 0.0;
            std::vector<double> a(static_cast<size_t>(problem.z));
            for (int zi = 0; zi < problem.z; ++zi) {
                a[static_cast<size_t>(zi)] = std::exp(-(ws.p[static_cast<size_t>(zi)] - mn) / temp);
                asum += a[static_cast<size_t>(zi)];
            }
            for (auto& v : a) v /= asum;

            double gnorm2 = 0.0;
            for (int ni = 0; ni < problem.n; ++ni) {
                const Complex x = std::polar(1.0, om[static_cast<size_t>(ni)]);
                double g = 0.0;
                for (int zi = 0; zi < problem.z; ++zi) {
                    const Complex y =
                        std::conj(ws.s[static_cast<size_t>(zi)]) * x * problem.at(zi, ni);
                    g += a[static_cast<size_t>(zi)] * (-2.0) * y.imag();
                }
                grad[static_cast<size_t>(ni)] = g;
                gnorm2 += g * g;
            }
            const double gnorm = std::sqrt(gnorm2);
            if (gnorm < 1e-13 * std::max(pmax, 1.0)) break;

            const double f0 = softmin(problem, om, temp, ws);
            double st = step;
            bool moved = false;
            for (int bt = 0; bt < 6; ++bt) {
                for (int ni = 0; ni < problem.n; ++ni)
                    trial[static_cast<size_t>(ni)] =
                        om[static_cast<size_t>(ni)] + st * grad[static_cast<size_t>(ni)] / gnorm;
                if (softmin(problem, trial, temp, ws) > f0) {
                    om = trial;
                    moved = true;
                    break;
                }
                st *= 0.5;
            }
            step = moved ? std::min(2.0 * st, 1.0) : std::max(0.5 * st, 1e-6);
            if ((it + 1) % 20 == 0) temp = std::max(0.4 * temp, 1e-9 * pmax);
        }
        result.iterations += it;

        // coordinate-wise polish on the true min
        recompute(problem, om, ws);
        bool improved_last_sweep = false;
        for (int sweep = 0; sweep < config.polish_sweeps; ++sweep) {
            improved_last_sweep = false;
            for (int ni = 0; ni < problem.n; ++ni) {
                const Complex x = std::polar(1.0, om[static_cast<size_t>(ni)]);
                double cur = min_power(ws);
                int zworst = 0;
                for (int zi = 1; zi < problem.z; ++zi)
                    if (ws.p[static_cast<size_t>(zi)] < ws.p[static_cast<size_t>(zworst)]) zworst = zi;
                const Complex base_w =
                    ws.s[static_cast<size_t>(zworst)] - x * problem.at(zworst, ni);
                const Complex hw = problem.at(zworst, ni);
                if (std::abs(hw) == 0.0) continue;
                const double cand = std::abs(base_w) > 0.0
                                        ? std::arg(base_w) - std::arg(hw)
                                        : -std::arg(hw);
                // evaluate candidate against all points
                double newmin = 1e300;
                const Complex xc = std::polar(1.0, cand);
                for (int zi = 0; zi < problem.z; ++zi) {
                    const Complex sv = ws.s[static_cast<size_t>(zi)] +
                                       (xc - x) * problem.at(zi, ni);
                    newmin = std::min(newmin, std::norm(sv));
                }
                if (newmin > cur * (1.0 + 1e-14) && newmin > cur) {
                    for (int zi = 0; zi < problem.z; ++zi) {
                        ws.s[static_cast<size_t>(zi)] += (xc - x) * problem.at(zi, ni);
                        ws.p[static_cast<size_t>(zi)] = std::norm(ws.s[static_cast<size_t>(zi)]);
                    }
                    om[static_cast<size_t>(ni)] = cand;
                    improved_last_sweep = true;
                }
            }
            result.trace.push_back(running_best = std::max(running_best, min_power(ws)));
            if (!improved_last_sweep) break;
        }
        if (!improved_last_sweep) converged_any = true;

        const double pmin = min_power(ws);
        if (pmin > best_min) {
            best_min = pmin;
            best_om = om;
        }
    }

    result.converged = converged_any;
    result.restarts_used = static_cast<int>(starts.size());
    result.phases.omegas.resize(best_om.size());
    for (size_t i = 0; i < best_om.size(); ++i)
        result.phases.omegas[i] = wrap_angle(best_om[i]);
    recompute(problem, result.phases.omegas, ws);
    result.point_powers = ws.p;
    result.min_power = min_power(ws);
    return result;
}

ChainProfiles configure_chain(const ChainSpec& chain, const ChainConfig& config) {
    if (chain.boards.empty()) throw GeometryError("chain must contain at least one board");
    const size_t k_total = chain.boards.size();

    ChainProfiles out;
    ComplexFieldMap incident;
    for (size_t k = 0; k < k_total; ++k) {
        try {
            if (k == 0) {
                incident = incident_field(chain.source, chain.boards[0], chain.lambda);
            } else {
                incident = scatter_to_surface(incident, out.profiles[k - 1],
                                              chain.tau(k - 1), chain.boards[k],
                                              chain.lambda);
            }

            PhaseProfile profile;
            if (k + 1 < k_total) {
                const BoardIllumination illum = classify_illumination(
                    chain.boards[k], chain.boards[k + 1], chain.lambda, config.eab_tol);
                out.illumination.push_back(illum);
                const Vec3 next_center = chain.boards[k + 1].center();
                if (illum.any_partial() && config.strategy == ChainStrategy::MultiBeam) {
                    const SamplingPlan plan =
                        sampling_plan(illum, chain.boards[k + 1], config.lattice_sampling);
                    out.plans.push_back(plan);
                    const MaxMinProblem prob = build_max_min_problem(
                        incident, plan.points, chain.tau(k), chain.lambda);
                    SolverConfig solver = config.solver;
                    solver.warm_starts.push_back(
                        last_ris_phases(incident, next_center, chain.lambda));
                    SolverResult res = solve_max_min(prob, solver);
                    out.converged = out.converged && res.converged;
                    profile = res.phases;
                    out.solver_results.push_back(std::move(res));
                } else {
                    out.plans.push_back(SamplingPlan{});
                    profile = last_ris_phases(incident, next_center, chain.lambda);
                }
            } else {
                profile = last_ris_phases(incident, chain.receiver, chain.lambda);
            }

            if (k < config.quantization_bits.size() && config.quantization_bits[k] > 0)
                profile = quantize(profile, config.quantization_bits[k]);
            out.profiles.push_back(std::move(profile));
        } catch (const GeometryError& e) {
            throw GeometryError("hop " + std::to_string(k + 1) + ": " + e.what());
        }
    }
    return out;
}

} // namespace risim
