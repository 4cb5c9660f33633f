#ifndef RISIM_BEAM_HPP
#define RISIM_BEAM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "risim/aperture.hpp"
#include "risim/array_factor.hpp"
#include "risim/field.hpp"
#include "risim/geometry.hpp"

namespace risim {

enum class Illumination { Partial, Exact, Over };

// partial iff ABR > 1 + tol; exact iff |ABR - 1| <= tol; over otherwise.
Illumination classify_eab(double abr, double tol = 0.05);

struct CutIllumination {
    EabRatio eab;
    Illumination kind = Illumination::Exact;
    Vec3 cut_axis{};     // receiving-board axis of this cut (world frame)
    int units = 0;       // receiving units along the cut
    double length = 0.0; // receiving aperture length along the cut (m)
    int feed_units = 0;  // feeding-board units along the paired cut
};

struct BoardIllumination {
    CutIllumination in_plane; // cut in the incidence plane
    CutIllumination cross;    // orthogonal principal cut
    double alpha = 0.0;       // incidence angle on the receiving board
    double theta_s = 0.0;     // departure elevation at the feeding board
    double distance = 0.0;    // reference-to-center distance (m)

    bool any_partial() const {
        return in_plane.kind == Illumination::Partial ||
               cross.kind == Illumination::Partial;
    }
};

// Beamwidth-vs-aperture classification of the link between two boards.
BoardIllumination classify_illumination(const UnitGrid& feeding,
                                        const UnitGrid& receiving, Wavelength lambda,
                                        double tol = 0.05);

// Z = 2*ceil(ABR) - 1 (1 when ABR <= 1).
int sampling_count(double abr);

struct SamplingPlan {
    int z = 1;          // total points (odd)
    int z_in_plane = 1;
    int z_cross = 1;
    std::vector<Vec3> points; // snapped to unit positions, board center included
};

// 1-D plan along the receiving board's column axis.
SamplingPlan sampling_plan(const EabRatio& eab, const UnitGrid& receiving);

// Lattice plan over both principal cuts (1-D when only one cut is partial,
// or when lattice = false).
SamplingPlan sampling_plan(const BoardIllumination& illum, const UnitGrid& receiving,
                           bool lattice = true);

// Phase conjugation for a point source feed: omega_n = k (r_i(n) + r_s(n)).
PhaseProfile single_beam_phases(const Vec3& source, const Vec3& target,
                                const UnitGrid& grid, Wavelength lambda);

// Phase conjugation under an arbitrary incident field:
// omega_n = -arg E_inc(n) + k r_s(n); zero-field units get phase 0.
PhaseProfile last_ris_phases(const ComplexFieldMap& incident, const Vec3& target,
                             Wavelength lambda);

// Snap each phase to the nearest of 2^bits uniform levels, ties toward the
// lower level.
PhaseProfile quantize(const PhaseProfile& profile, int bits);
int quantization_index(double omega, int bits);

// Max-min beam design: maximize min_z |sum_n e^{j omega_n} h_{z,n}|^2 over
// per-unit phases.
struct MaxMinProblem {
    int n = 0;
    int z = 0;
    std::vector<Complex> h; // row-major, h[z * n + i]

    Complex at(int zi, int ni) const { return h[static_cast<size_t>(zi) * n + ni]; }
};

// h_{z,n} = E_inc(n) * tau * exp(-j k r_{z,n}) / r_{z,n}.
MaxMinProblem build_max_min_problem(const ComplexFieldMap& incident,
                                    const std::vector<Vec3>& targets, double tau,
                                    Wavelength lambda);

struct SolverConfig {
    std::uint64_t seed = 1;
    int restarts = 16;
    int max_iterations = 300; // smoothed-minimum ascent budget per restart
    int polish_sweeps = 60;   // coordinate-wise polish budget per restart
    std::vector<PhaseProfile> warm_starts; // tried before the built-in starts
};

struct SolverResult {
    PhaseProfile phases;
    double min_power = 0.0;
    std::vector<double> point_powers;
    int iterations = 0;
    int restarts_used = 0;
    std::uint64_t seed = 0;
    bool converged = true;
    std::vector<double> trace; // best-found min power, non-decreasing
};

SolverResult solve_max_min(const MaxMinProblem& problem, const SolverConfig& config);

// Algorithm-1 style per-board configuration of a whole chain.
enum class ChainStrategy {
    MultiBeam,  // partial hops solved as max-min multi-beam problems
    SingleBeam, // every hop phase-conjugated to the next center
};

struct ChainConfig {
    SolverConfig solver;
    ChainStrategy strategy = ChainStrategy::MultiBeam;
    bool lattice_sampling = true;
    double eab_tol = 0.05;
    std::vector<int> quantization_bits; // per board; empty or 0 = continuous
};

struct ChainProfiles {
    std::vector<PhaseProfile> profiles;
    std::vector<BoardIllumination> illumination; // per inter-board hop
    std::vector<SamplingPlan> plans;             // per inter-board hop (z = 1 rows skipped)
    std::vector<SolverResult> solver_results;    // per partial hop
    bool converged = true;
};

ChainProfiles configure_chain(const ChainSpec& chain, const ChainConfig& config);

} // namespace risim

#endif
