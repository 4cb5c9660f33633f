#ifndef RISIM_DEPLOYMENT_HPP
#define RISIM_DEPLOYMENT_HPP

#include <vector>

#include "risim/aperture.hpp"
#include "risim/array_factor.hpp"
#include "risim/geometry.hpp"

namespace risim {

// Fixed aperture, find the feed distance r with unit EA-B ratio.
struct DistanceProblem {
    int units_along_cut = 0;   // feeding-board units in the cut
    double spacing = 0.0;      // unit spacing d (m)
    Wavelength lambda{};
    double aperture_length = 0.0; // receiving aperture L (m)
    double alpha = 0.0;           // incidence angle on the receiving board
    double theta_s = 0.0;         // reflecting elevation of the feeding board
};

struct DistanceResult {
    double r_opt = 0.0;
    double objective_residual = 0.0; // |2 r sin(theta_h/2) - L cos(alpha)|
    bool feasible = true;            // false when the beamwidth is edge-clamped
    HpbwResult hpbw;
    EabRatio eab;
};

DistanceResult optimal_distance(const DistanceProblem& problem);

// Fixed feed distance, find the unit count (d = lambda/2, L = N*lambda/2).
struct UnitsProblem {
    double feed_distance = 0.0; // r (m)
    Wavelength lambda{};
    double alpha = 0.0;
    double theta_s = 0.0;
    int scan_lo = 2;
    int scan_hi = 512;
};

struct UnitsResult {
    int n_opt = 0;
    double objective = 0.0; // |2 r sin(theta_h(N)/2) - N (lambda/2) cos(alpha)|
    double eab = 0.0;
    bool fixed_point = false; // rounding formula maps n_opt to itself
    bool in_range = true;     // EA-B ratio at the optimum within [0.5, 2]
    std::vector<int> iterates; // fixed-point trajectory from N = 8
};

UnitsResult optimal_units(const UnitsProblem& problem);

} // namespace risim

#endif
