#include "risim/aperture.hpp"

#include <algorithm>
#include <cmath>

#include "risim/quadrature.hpp"

namespace risim {

double illumination_efficiency(const ComplexFieldMap& field) {
    double sum_mag = 0.0;
    double sum_sq = 0.0;
    for (const auto& v : field.values()) {
        const double m = std::abs(v);
        sum_mag += m;
        sum_sq += m * m;
    }
    if (sum_sq <= 0.0) throw GeometryError("illumination efficiency of an all-zero field");
    return sum_mag * sum_mag / (field.size() * sum_sq);
}

double spillover_efficiency(const FeedPattern& pattern, double theta0) {
    if (theta0 < 0.0 || theta0 > kPi / 2.0 + 1e-12)
        throw GeometryError("spillover cone angle must be in [0, pi/2]");
    theta0 = std::min(theta0, kPi / 2.0);
    if (theta0 == 0.0) return 0.0;
    const auto integrand = [&](double t) {
        const double f = pattern.value(t);
        return f * f * std::sin(t);
    };
    const double num = adaptive_simpson(integrand, 0.0, theta0, 1e-7);
    const double den = adaptive_simpson(integrand, 0.0, kPi / 2.0, 1e-7);
    return std::min(num / den, 1.0);
}

double spillover_efficiency(const PatternCut& cut, double theta_lo, double theta_hi) {
    if (cut.samples.size() < 2) throw GeometryError("pattern cut needs >= 2 samples");
    double num = 0.0;
    double den = 0.0;
    for (size_t i = 0; i + 1 < cut.samples.size(); ++i) {
        const auto& a = cut.samples[i];
        const auto& b = cut.samples[i + 1];
        const double fa = a.magnitude * a.magnitude * std::sin(a.theta);
        const double fb = b.magnitude * b.magnitude * std::sin(b.theta);
        const double piece = 0.5 * (fa + fb) * (b.theta - a.theta);
        den += piece;
        // trapezoid clipped to the window
        const double lo = std::max(a.theta, theta_lo);
        const double hi = std::min(b.theta, theta_hi);
        if (hi > lo) {
            const double t0 = (lo - a.theta) / (b.theta - a.theta);
            const double t1 = (hi - a.theta) / (b.theta - a.theta);
            const double f0 = fa + (fb - fa) * t0;
            const double f1 = fa + (fb - fa) * t1;
            num += 0.5 * (f0 + f1) * (hi - lo);
        }
    }
    if (den <= 0.0) throw GeometryError("pattern cut carries no power");
    return std::min(num / den, 1.0);
}

EfficiencyReport make_efficiency_report(double e_r, double eps_s, double physical_aperture,
                                        Wavelength lambda) {
    EfficiencyReport r;
    r.e_r = e_r;
    r.eps_s = eps_s;
    r.eps_ap = e_r * eps_s;
    r.physical_aperture = physical_aperture;
    r.d_max = 4.0 * kPi * physical_aperture / (lambda.lambda * lambda.lambda);
    r.gain = r.eps_ap * r.d_max;
    r.gain_dbi = 10.0 * std::log10(std::max(r.gain, 1e-300));
    return r;
}

EfficiencyReport aperture_report(const ComplexFieldMap& field, const FeedPattern& pattern,
                                 double theta0, double physical_aperture,
                                 Wavelength lambda) {
    return make_efficiency_report(illumination_efficiency(field),
                                  spillover_efficiency(pattern, theta0),
                                  physical_aperture, lambda);
}

EabRatio eab_ratio(double aperture_length, double alpha, double feed_distance,
                   double theta_h) {
    if (!(aperture_length > 0.0) || !(feed_distance > 0.0))
        throw GeometryError("aperture length and feed distance must be positive");
    if (alpha < 0.0 || alpha >= kPi / 2.0)
        throw GeometryError("incidence angle must be in [0, pi/2)");
    if (!(theta_h > 0.0)) throw GeometryError("beamwidth must be positive");
    EabRatio r;
    r.aperture_length = aperture_length;
    r.incidence_alpha = alpha;
    r.feed_distance = feed_distance;
    r.hpbw = theta_h;
    r.value = aperture_length * std::cos(alpha) /
              (2.0 * feed_distance * std::sin(0.5 * theta_h));
    return r;
}

double inscribed_cone_angle(const Vec3& feed, const UnitGrid& board) {
    const Vec3 c = board.center();
    const Vec3 axis = (c - feed).normalized();
    const double hx = 0.5 * board.length_cols();
    const double hy = 0.5 * board.length_rows();
    const Vec3 ex = board.frame().ex();
    const Vec3 ey = board.frame().ey();
    const Vec3 mids[4] = {c + ex * hx, c - ex * hx, c + ey * hy, c - ey * hy};
    double best = kPi;
    for (const auto& m : mids) {
        const Vec3 d = (m - feed).normalized();
        best = std::min(best, std::acos(std::clamp(d.dot(axis), -1.0, 1.0)));
    }
    return best;
}

CutWindow subtended_window(const UnitGrid& feeding, const UnitGrid& receiving) {
    const Vec3 fr = feeding.reference();
    const Vec3 to_center = receiving.center() - fr;
    const double dist = to_center.norm();
    if (dist <= 0.0) throw GeometryError("boards coincide");
    const Vec3 n = feeding.normal();
    Vec3 w = to_center - n * to_center.dot(n);
    if (w.norm() < 1e-12 * dist) {
        // boresight link: use the receiving in-plane x-axis projection
        w = receiving.frame().ex() - n * receiving.frame().ex().dot(n);
    }
    w = w.normalized();

    CutWindow window;
    const Vec3 wl = feeding.frame().to_local(w);
    window.cut_phi = wrap_angle(std::atan2(wl.y, wl.x));

    // Clip the receiving rectangle against the cut plane (normal n x w).
    const Vec3 pn = n.cross(w);
    const double hx = 0.5 * receiving.length_cols();
    const double hy = 0.5 * receiving.length_rows();
    const Vec3 c = receiving.center();
    const Vec3 ex = receiving.frame().ex();
    const Vec3 ey = receiving.frame().ey();
    const Vec3 corners[4] = {c + ex * hx + ey * hy, c + ex * hx - ey * hy,
                             c - ex * hx - ey * hy, c - ex * hx + ey * hy};
    std::vector<Vec3> hits;
    for (int i = 0; i < 4; ++i) {
        const Vec3& p0 = corners[i];
        const Vec3& p1 = corners[(i + 1) % 4];
        const double d0 = pn.dot(p0 - fr);
        const double d1 = pn.dot(p1 - fr);
        if (std::abs(d0) < 1e-15) hits.push_back(p0);
        if ((d0 < 0.0) != (d1 < 0.0)) {
            const double t = d0 / (d0 - d1);
            hits.push_back(p0 + (p1 - p0) * t);
        }
    }
    if (hits.size() < 2)
        throw GeometryError("receiving board does not intersect the incidence-plane cut");

    double lo = kPi, hi = 0.0;
    for (const auto& h : hits) {
        const Vec3 d = h - fr;
        const double theta =
            std::acos(std::clamp(d.dot(n) / d.norm(), -1.0, 1.0));
        lo = std::min(lo, theta);
        hi = std::max(hi, theta);
    }
    window.theta_lo = lo;
    window.theta_hi = hi;
    return window;
}

namespace {

bool ray_hits_board(const Vec3& origin, const Vec3& dir, const UnitGrid& board) {
    const Vec3 n = board.normal();
    const double dn = dir.dot(n);
    if (std::abs(dn) < 1e-15) return false;
    const double t = (board.center() - origin).dot(n) / dn;
    if (t <= 0.0) return false;
    const Vec3 q = origin + dir * t - board.center();
    return std::abs(q.dot(board.frame().ex())) <= 0.5 * board.length_cols() &&
           std::abs(q.dot(board.frame().ey())) <= 0.5 * board.length_rows();
}

} // namespace

double spillover_scattered(const ComplexFieldMap& incident_on_feeding,
                           const PhaseProfile& phases, double tau, Wavelength lambda,
                           const UnitGrid& receiving, SpilloverRegion region,
                           double cut_step) {
    const UnitGrid& feeding = incident_on_feeding.grid();
    const Vec3 fr = feeding.reference();
    const double r = (receiving.center() - fr).norm();

    if (region == SpilloverRegion::PatternCutWindow) {
        const CutWindow window = subtended_window(feeding, receiving);
        const Vec3 n = feeding.normal();
        const Vec3 w = feeding.frame().to_world(
            {std::cos(window.cut_phi), std::sin(window.cut_phi), 0.0});
        const auto magnitude = [&](double theta) {
            const Vec3 p = fr + (n * std::cos(theta) + w * std::sin(theta)) * r;
            return std::abs(
                scatter_to_point(incident_on_feeding, phases, tau, p, lambda));
        };
        const PatternCut cut = sample_cut(magnitude, window.cut_phi, cut_step);
        return spillover_efficiency(cut, window.theta_lo, window.theta_hi);
    }

    // Solid-angle route: rings around the center axis, refined across the
    // angular band containing the board rim, clipped to the hemisphere.
    const Vec3 axis = (receiving.center() - fr).normalized();
    const Vec3 n = feeding.normal();
    const Vec3 c = receiving.center();
    const Vec3 ex = receiving.frame().ex();
    const Vec3 ey = receiving.frame().ey();
    const double hx = 0.5 * receiving.length_cols();
    const double hy = 0.5 * receiving.length_rows();
    double rim_lo = kPi, rim_hi = 0.0;
    const Vec3 rim[8] = {c + ex * hx, c - ex * hx, c + ey * hy, c - ey * hy,
                         c + ex * hx + ey * hy, c + ex * hx - ey * hy,
                         c - ex * hx + ey * hy, c - ex * hx - ey * hy};
    for (const auto& p : rim) {
        const double ang = std::acos(
            std::clamp((p - fr).normalized().dot(axis), -1.0, 1.0));
        rim_lo = std::min(rim_lo, ang);
        rim_hi = std::max(rim_hi, ang);
    }

    std::vector<double> edges;
    for (double e : panel_edges(0.0, rim_lo, deg2rad(0.4))) edges.push_back(e);
    for (double e : panel_edges(rim_lo, rim_hi, deg2rad(0.1)))
        if (e > edges.back()) edges.push_back(e);
    for (double e : panel_edges(rim_hi, deg2rad(25.0), deg2rad(0.4)))
        if (e > edges.back()) edges.push_back(e);
    for (double e : panel_edges(deg2rad(25.0), deg2rad(135.0), deg2rad(1.5)))
        if (e > edges.back()) edges.push_back(e);

    const auto nodes = spherical_cap_nodes(axis, edges, 5, deg2rad(1.0));
    double num = 0.0;
    double den = 0.0;
    for (const auto& node : nodes) {
        if (node.dir.dot(n) <= 1e-12) continue; // below the board plane
        const double p = std::norm(
            scatter_to_point(incident_on_feeding, phases, tau, fr + node.dir * r, lambda));
        den += p * node.weight;
        if (ray_hits_board(fr, node.dir, receiving)) num += p * node.weight;
    }
    if (den <= 0.0) throw GeometryError("scattered pattern carries no power");
    return std::min(num / den, 1.0);
}

} // namespace risim
