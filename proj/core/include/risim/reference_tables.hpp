#ifndef RISIM_REFERENCE_TABLES_HPP
#define RISIM_REFERENCE_TABLES_HPP

#include <vector>

namespace risim {

// Published reference values the reproduction harness regenerates and
// diffs against.

// Half-power beamwidth of uniform linear arrays at d = lambda/2.
struct HpbwReferenceRow {
    int units;
    double theta2_deg;
    double theoretical_deg;
    double measured_deg;
};
const std::vector<HpbwReferenceRow>& hpbw_reference_rows();

// Two-hop 32x32 deployment sweep at 3.4 GHz: the second board centered at
// (x, 0, x), first board at the origin, transmitter at (0, 0, 3).
struct DeploymentReferenceRow {
    double x;              // board center (x, 0, x)
    double distance_m;     // printed center-to-center distance
    double eab;            // EA-B ratio
    double eps_ap;         // aperture efficiency
    double gain_dbi;       // direction gain
};
const std::vector<DeploymentReferenceRow>& deployment_reference_rows();

// Reference constants for the deployment scenario.
inline constexpr double kReferenceFrequencyHz = 3.4e9;
inline constexpr int kReferenceUnitsPerSide = 32;
inline constexpr double kReferenceTxHeight = 3.0;
inline constexpr int kReferenceOptimalUnits = 24;    // units-per-side optimum at (5,0,5)
inline constexpr double kReferenceOptimalUnitsEab = 1.0132;

} // namespace risim

#endif
