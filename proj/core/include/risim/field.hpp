#ifndef RISIM_FIELD_HPP
#define RISIM_FIELD_HPP

#include <complex>
#include <optional>
#include <vector>

#include "risim/geometry.hpp"

namespace risim {

using Complex = std::complex<double>;

// Feed radiation pattern, amplitude ~ cos^q of the angle from boresight
// (q = 0 is isotropic). Zero behind the boresight half-space.
struct FeedPattern {
    double q = 0.0;

    static FeedPattern isotropic() { return {0.0}; }
    static FeedPattern cosine_power(double q);

    // Amplitude at `angle` radians off boresight.
    double value(double angle) const;
    bool is_isotropic() const { return q == 0.0; }
};

struct SourceSpec {
    Vec3 position{};
    Complex amplitude{1.0, 0.0}; // field at 1 m reference
    FeedPattern pattern{};
    // Boresight unit vector; when unset the source is aimed at the
    // illuminated grid's reference point.
    std::optional<Vec3> boresight;
};

// Per-unit phase configuration, omegas in [0, 2*pi).
struct PhaseProfile {
    std::vector<double> omegas;
    std::optional<int> quantization_bits;

    size_t size() const { return omegas.size(); }
};

// Complex field samples, one per grid unit (relative V/m scale).
class ComplexFieldMap {
  public:
    ComplexFieldMap() = default;
    ComplexFieldMap(UnitGrid grid, std::vector<Complex> values);

    const UnitGrid& grid() const { return grid_; }
    const std::vector<Complex>& values() const { return values_; }
    std::vector<Complex>& values() { return values_; }
    Complex value(int n) const { return values_[static_cast<size_t>(n)]; }
    int size() const { return static_cast<int>(values_.size()); }

  private:
    UnitGrid grid_;
    std::vector<Complex> values_;
};

// Spherical-wave incident field on every grid unit:
//   E(n) = amplitude * pattern(angle) * exp(-j*2*pi*r(n)/lambda) / r(n).
ComplexFieldMap incident_field(const SourceSpec& source, const UnitGrid& grid,
                               Wavelength lambda);

// Field scattered by a configured surface, observed at a point:
//   sum_n tau * exp(j*omega_n) * E_inc(n) * exp(-j*2*pi*r_s(n)/lambda) / r_s(n).
Complex scatter_to_point(const ComplexFieldMap& incident, const PhaseProfile& phases,
                         double tau, const Vec3& observation, Wavelength lambda);

// Scattered field sampled on every unit of the next surface, with exact
// per-unit-pair distances.
ComplexFieldMap scatter_to_surface(const ComplexFieldMap& incident,
                                   const PhaseProfile& phases, double tau,
                                   const UnitGrid& next_grid, Wavelength lambda);

struct ChainSpec {
    SourceSpec source;
    std::vector<UnitGrid> boards;
    std::vector<double> taus; // per board; empty = all 1.0
    Vec3 receiver{};
    Wavelength lambda{};

    double tau(size_t board) const {
        return board < taus.size() ? taus[board] : 1.0;
    }
};

struct HopInfo {
    double distance = 0.0;           // previous reference -> this reference
    SphericalDirection departure;    // direction leaving the previous board frame
    SphericalDirection arrival;      // direction seen in this board frame
};

struct ChainResult {
    Complex receiver_field{};
    std::vector<ComplexFieldMap> surface_fields; // incident field per board
    std::vector<HopInfo> hops;                   // one per board plus the receiver leg

    double receiver_power() const { return std::norm(receiver_field); }
    double receiver_power_db() const;
};

// Full cascade: source -> board 1 -> ... -> board K -> receiver.
ChainResult propagate_chain(const ChainSpec& chain,
                            const std::vector<PhaseProfile>& profiles);

// Two-hop canonical matrix form (row vector * diag * matrix * diag * column
// vector * source scalar), kept as an independent route for cross-checking
// the iterative engine.
Complex two_hop_matrix_field(const SourceSpec& source, const UnitGrid& first,
                             const PhaseProfile& first_phases, const UnitGrid& second,
                             const PhaseProfile& second_phases, double tau,
                             const Vec3& receiver, Wavelength lambda);

double power_db(double power);
double field_power_db(Complex field);

} // namespace risim

#endif
