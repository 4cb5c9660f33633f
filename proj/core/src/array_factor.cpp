#include "risim/array_factor.hpp"

#include <algorithm>
#include <cmath>

namespace risim {

namespace {

// sin(N*psi/2)/sin(psi/2) with the removable singularity evaluated by limit.
double sine_ratio(int n, double psi) {
    const double den = std::sin(0.5 * psi);
    if (std::abs(den) < 1e-9)
        return n * std::cos(0.5 * n * psi) / std::cos(0.5 * psi);
    return std::sin(0.5 * n * psi) / den;
}

double sinc(double x) {
    if (std::abs(x) < 1e-9) return 1.0;
    return std::sin(x) / x;
}

struct CutPsis {
    double psi1; // row direction (A units)
    double psi2; // column direction (B units)
};

CutPsis psis(const SteeringSpec& spec, const SphericalDirection& observe) {
    const double kd = spec.lambda.wavenumber() * spec.grid.spacing();
    const double st = std::sin(observe.theta);
    const double st2 = std::sin(spec.reflect.theta);
    return {kd * (std::sin(observe.phi) * st - std::sin(spec.reflect.phi) * st2),
            kd * (std::cos(observe.phi) * st - std::cos(spec.reflect.phi) * st2)};
}

} // namespace

PhaseProfile steering_phases(const SteeringSpec& spec) {
    const double k = spec.lambda.wavenumber();
    const Vec3 r1 = spec.incident.unit();
    const Vec3 r2 = spec.reflect.unit();
    PhaseProfile out;
    out.omegas.resize(static_cast<size_t>(spec.grid.size()));
    for (int n = 0; n < spec.grid.size(); ++n) {
        const Vec3 rab = spec.grid.local_offset(n);
        out.omegas[static_cast<size_t>(n)] = wrap_angle(-k * (r1.dot(rab) + r2.dot(rab)));
    }
    return out;
}

Complex array_factor_exact(const SteeringSpec& spec, const SphericalDirection& observe) {
    const double k = spec.lambda.wavenumber();
    const Vec3 r = observe.unit();
    const Vec3 r2 = spec.reflect.unit();
    Complex sum{};
    for (int n = 0; n < spec.grid.size(); ++n) {
        const Vec3 rab = spec.grid.local_offset(n);
        sum += std::polar(1.0, k * (r.dot(rab) - r2.dot(rab)));
    }
    return sum;
}

Complex array_factor_closed_form(const SteeringSpec& spec,
                                 const SphericalDirection& observe) {
    const auto [psi1, psi2] = psis(spec, observe);
    const int a = spec.grid.rows();
    const int b = spec.grid.cols();
    const double mag = sine_ratio(a, psi1) * sine_ratio(b, psi2);
    if (spec.grid.anchor() == GridAnchor::FirstUnit)
        return mag * std::polar(1.0, 0.5 * ((a - 1) * psi1 + (b - 1) * psi2));
    return {mag, 0.0};
}

double array_factor_normalized(const SteeringSpec& spec, const SphericalDirection& observe,
                               AfModel model) {
    const auto [psi1, psi2] = psis(spec, observe);
    const int a = spec.grid.rows();
    const int b = spec.grid.cols();
    double v;
    if (model == AfModel::SincApprox) {
        v = std::abs(sinc(0.5 * a * psi1) * sinc(0.5 * b * psi2));
    } else {
        v = std::abs(sine_ratio(a, psi1) * sine_ratio(b, psi2)) / (a * b);
    }
    return std::min(v, 1.0);
}

HpbwResult hpbw_closed_form(int units_along_cut, double spacing, Wavelength lambda,
                            double theta2) {
    if (units_along_cut < 2)
        throw GeometryError("beamwidth needs at least 2 units along the cut");
    const double kd = lambda.wavenumber() * spacing;
    const double x = kHalfPowerArg * 2.0 / (units_along_cut * kd);
    const double s2 = std::sin(theta2);

    HpbwResult out;
    const double hi_arg = x + s2;
    if (hi_arg > 1.0) {
        out.theta_hi = kPi / 2.0;
        out.edge_clamped = true;
    } else {
        out.theta_hi = std::asin(hi_arg);
    }
    out.theta_lo = std::asin(std::max(-1.0, s2 - x));
    out.width = std::abs(out.theta_hi - out.theta_lo);
    return out;
}

HpbwResult hpbw_numerical(const SteeringSpec& spec, double cut_phi) {
    const double target = 1.0 / std::sqrt(2.0);
    const auto f = [&](double theta) {
        return array_factor_normalized(spec, {theta, cut_phi}, AfModel::Exact);
    };

    // Locate the main-lobe peak on this cut.
    const double coarse = deg2rad(0.02);
    double peak_theta = 0.0, peak_val = -1.0;
    for (double t = 0.0; t <= kPi / 2.0 + 1e-12; t += coarse) {
        const double v = f(t);
        if (v > peak_val) {
            peak_val = v;
            peak_theta = t;
        }
    }
    if (peak_val < target)
        throw GeometryError("no main lobe above the half-power level on this cut");

    const double step = deg2rad(0.01);
    // Bisect the crossing bracketed by [lo, hi] (any ordering of signs).
    const auto bisect = [&](double lo, double hi) {
        double flo = f(lo) - target;
        for (int i = 0; i < 60 && (hi - lo) > deg2rad(1e-5); ++i) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid) - target;
            if ((fm > 0.0) == (flo > 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    HpbwResult out;
    // upper crossing
    double t = peak_theta;
    bool found_hi = false;
    while (t + step <= kPi / 2.0) {
        if (f(t + step) < target) {
            out.theta_hi = bisect(t, t + step);
            found_hi = true;
            break;
        }
        t += step;
    }
    // lower crossing
    t = peak_theta;
    bool found_lo = false;
    while (t - step >= 0.0) {
        if (f(t - step) < target) {
            out.theta_lo = bisect(t - step, t);
            found_lo = true;
            break;
        }
        t -= step;
    }

    if (!found_hi) {
        out.theta_hi = kPi / 2.0;
        out.truncated = true;
    }
    if (!found_lo) {
        out.theta_lo = 0.0;
        out.truncated = true;
    }
    out.width = out.theta_hi - out.theta_lo;
    return out;
}

PatternCut sample_pattern_cut(const SteeringSpec& spec, double cut_phi, double theta_step,
                              double theta_min, double theta_max, AfModel model) {
    PatternCut cut;
    cut.phi = cut_phi;
    for (double t = theta_min; t <= theta_max + 1e-15; t += theta_step)
        cut.samples.push_back({t, array_factor_normalized(spec, {t, cut_phi}, model)});
    return cut;
}

} // namespace risim
