#ifndef RISIM_APERTURE_HPP
#define RISIM_APERTURE_HPP

#include "risim/array_factor.hpp"
#include "risim/field.hpp"
#include "risim/geometry.hpp"

namespace risim {

struct EfficiencyReport {
    double e_r = 0.0;       // illumination efficiency
    double eps_s = 0.0;     // spillover efficiency
    double eps_ap = 0.0;    // aperture efficiency = e_r * eps_s
    double d_max = 0.0;     // 4 pi A_p / lambda^2
    double gain = 0.0;      // eps_ap * d_max
    double gain_dbi = 0.0;
    double physical_aperture = 0.0; // m^2
};

struct EabRatio {
    double value = 0.0;
    double aperture_length = 0.0; // L (m)
    double incidence_alpha = 0.0; // radians
    double feed_distance = 0.0;   // r (m)
    double hpbw = 0.0;            // theta_h (radians)
};

// |sum |E||^2 / (N * sum |E|^2); 1 iff all magnitudes are equal.
double illumination_efficiency(const ComplexFieldMap& field);

// Fraction of the feed pattern inside the cone of half-angle theta0,
// relative to the forward hemisphere (adaptive quadrature, rel err <= 1e-6).
double spillover_efficiency(const FeedPattern& pattern, double theta0);

// Fraction of a sampled pattern cut inside [theta_lo, theta_hi], with the
// sin(theta) surface weight, relative to the whole sampled cut.
double spillover_efficiency(const PatternCut& cut, double theta_lo, double theta_hi);

EfficiencyReport make_efficiency_report(double e_r, double eps_s, double physical_aperture,
                                        Wavelength lambda);

// Horn-fed report: e_r from the aperture field, eps_s from the feed pattern.
EfficiencyReport aperture_report(const ComplexFieldMap& field, const FeedPattern& pattern,
                                 double theta0, double physical_aperture,
                                 Wavelength lambda);

// L cos(alpha) / (2 r sin(theta_h / 2)).
EabRatio eab_ratio(double aperture_length, double alpha, double feed_distance,
                   double theta_h);

// Cone half-angle from `feed` to the nearest edge midpoint of the board,
// measured against the feed-to-center axis.
double inscribed_cone_angle(const Vec3& feed, const UnitGrid& board);

// Elevation window subtended by the receiving board in the feeding board's
// incidence-plane cut (the plane spanned by the feeding normal and the
// center-to-center direction).
struct CutWindow {
    double theta_lo = 0.0;
    double theta_hi = 0.0;
    double cut_phi = 0.0; // azimuth of the cut in the feeding board frame
};
CutWindow subtended_window(const UnitGrid& feeding, const UnitGrid& receiving);

enum class SpilloverRegion {
    PatternCutWindow,  // principal-cut fraction (default)
    SolidAnglePolygon, // exact solid angle subtended by the board
};

// Spillover of a configured feeding board toward a receiving board, using
// the feeding board's exact scattered pattern.
double spillover_scattered(const ComplexFieldMap& incident_on_feeding,
                           const PhaseProfile& phases, double tau, Wavelength lambda,
                           const UnitGrid& receiving,
                           SpilloverRegion region = SpilloverRegion::PatternCutWindow,
                           double cut_step = deg2rad(0.01));

} // namespace risim

#endif
