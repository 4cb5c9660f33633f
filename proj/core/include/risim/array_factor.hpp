#ifndef RISIM_ARRAY_FACTOR_HPP
#define RISIM_ARRAY_FACTOR_HPP

#include <vector>

#include "risim/field.hpp"
#include "risim/geometry.hpp"

namespace risim {

// Argument of the half-power point: sin(x)/x = 1/sqrt(2) at x = 1.391.
inline constexpr double kHalfPowerArg = 1.391;

struct SteeringSpec {
    SphericalDirection incident; // (theta_1, phi_1), toward the transmitter
    SphericalDirection reflect;  // (theta_2, phi_2), main beam direction
    UnitGrid grid;
    Wavelength lambda;
};

// Far-field steering rule: phi_ab = -k (r1 + r2).r_ab, wrapped to [0, 2*pi),
// with r_ab measured from the grid's reference anchor.
PhaseProfile steering_phases(const SteeringSpec& spec);

// Double sum over units: sum_ab exp(j k (r - r2).r_ab). Equals A*B at the
// beam direction.
Complex array_factor_exact(const SteeringSpec& spec, const SphericalDirection& observe);

// Geometric-series closed form (product of sine ratios, times the anchor
// phase factor), algebraically equal to the double sum.
Complex array_factor_closed_form(const SteeringSpec& spec,
                                 const SphericalDirection& observe);

enum class AfModel { Exact, SincApprox };

// |AF|/(A*B) in [0, 1]; removable singularities evaluated by limit.
double array_factor_normalized(const SteeringSpec& spec, const SphericalDirection& observe,
                               AfModel model = AfModel::Exact);

struct HpbwResult {
    double width = 0.0;     // radians
    double theta_lo = 0.0;  // lower 3-dB crossing
    double theta_hi = 0.0;  // upper 3-dB crossing
    bool edge_clamped = false; // + branch clipped at pi/2 (closed form)
    bool truncated = false;    // lobe clipped at the scan boundary (numerical)
};

// Theorem-style closed form for the beamwidth of a linear cut:
// theta*_{1,2} = asin(+-1.391 * 2/(B k d) + sin theta_2).
HpbwResult hpbw_closed_form(int units_along_cut, double spacing, Wavelength lambda,
                            double theta2);

// 3-dB crossings of the exact normalized pattern on the phi = cut_phi plane,
// found by bracketed bisection (1e-4 degree resolution).
HpbwResult hpbw_numerical(const SteeringSpec& spec, double cut_phi);

struct PatternSample {
    double theta = 0.0;     // radians
    double magnitude = 0.0; // normalized, in [0, 1]
};

// Radiation-pattern cut at fixed azimuth: samples sorted by theta.
struct PatternCut {
    double phi = 0.0;
    std::vector<PatternSample> samples;
};

// Uniform theta sampling of the normalized AF over [theta_min, theta_max].
PatternCut sample_pattern_cut(const SteeringSpec& spec, double cut_phi,
                              double theta_step = deg2rad(0.01), double theta_min = 0.0,
                              double theta_max = kPi / 2.0,
                              AfModel model = AfModel::Exact);

// Cut of an arbitrary direction -> magnitude function (peak-normalized).
template <typename F>
PatternCut sample_cut(F&& magnitude, double cut_phi, double theta_step,
                      double theta_min = 0.0, double theta_max = kPi / 2.0) {
    PatternCut cut;
    cut.phi = cut_phi;
    double peak = 0.0;
    for (double t = theta_min; t <= theta_max + 1e-15; t += theta_step) {
        const double m = magnitude(t);
        cut.samples.push_back({t, m});
        peak = std::max(peak, m);
    }
    if (peak > 0.0)
        for (auto& s : cut.samples) s.magnitude /= peak;
    return cut;
}

} // namespace risim

#endif
