#include "risim/field.hpp"

#include <algorithm>
#include <cmath>

namespace risim {

namespace {

Complex path_factor(double r, double k) {
    return std::polar(1.0 / r, -k * r);
}

void check_profile(const PhaseProfile& phases, const UnitGrid& grid) {
    if (phases.size() != static_cast<size_t>(grid.size()))
        throw GeometryError("phase profile length does not match grid unit count");
}

} // namespace

FeedPattern FeedPattern::cosine_power(double q) {
    if (q < 0.0) throw GeometryError("feed pattern exponent must be >= 0");
    return {q};
}

double FeedPattern::value(double angle) const {
    if (q == 0.0) return 1.0;
    const double c = std::cos(angle);
    if (c <= 0.0) return 0.0;
    return std::pow(c, q);
}

ComplexFieldMap::ComplexFieldMap(UnitGrid grid, std::vector<Complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(grid_.size()))
        throw GeometryError("field map length does not match grid unit count");
}

ComplexFieldMap incident_field(const SourceSpec& source, const UnitGrid& grid,
                               Wavelength lambda) {
    const double k = lambda.wavenumber();
    Vec3 axis{};
    if (!source.pattern.is_isotropic()) {
        axis = source.boresight ? source.boresight->normalized()
                                : (grid.reference() - source.position).normalized();
    }
    std::vector<Complex> vals(static_cast<size_t>(grid.size()));
    for (int n = 0; n < grid.size(); ++n) {
        const Vec3 d = grid.position(n) - source.position;
        const double r = d.norm();
        if (r <= 0.0) throw GeometryError("source coincides with a grid unit");
        double gain = 1.0;
        if (!source.pattern.is_isotropic()) {
            const double ca = std::clamp(d.dot(axis) / r, -1.0, 1.0);
            gain = source.pattern.value(std::acos(ca));
        }
        vals[static_cast<size_t>(n)] = source.amplitude * gain * path_factor(r, k);
    }
    return {grid, std::move(vals)};
}

Complex scatter_to_point(const ComplexFieldMap& incident, const PhaseProfile& phases,
                         double tau, const Vec3& observation, Wavelength lambda) {
    check_profile(phases, incident.grid());
    const double k = lambda.wavenumber();
    Complex sum{};
    for (int n = 0; n < incident.size(); ++n) {
        const double r = (observation - incident.grid().position(n)).norm();
        if (r <= 0.0) throw GeometryError("observation point coincides with a unit");
        sum += tau * std::polar(1.0, phases.omegas[static_cast<size_t>(n)]) *
               incident.value(n) * path_factor(r, k);
    }
    return sum;
}

ComplexFieldMap scatter_to_surface(const ComplexFieldMap& incident,
                                   const PhaseProfile& phases, double tau,
                                   const UnitGrid& next_grid, Wavelength lambda) {
    check_profile(phases, incident.grid());
    const double k = lambda.wavenumber();
    const auto src = incident.grid().positions();
    std::vector<Complex> coeff(src.size());
    for (size_t n = 0; n < src.size(); ++n)
        coeff[n] = tau * std::polar(1.0, phases.omegas[n]) * incident.value(static_cast<int>(n));

    std::vector<Complex> vals(static_cast<size_t>(next_grid.size()));
    for (int m = 0; m < next_grid.size(); ++m) {
        const Vec3 pm = next_grid.position(m);
        Complex sum{};
        for (size_t n = 0; n < src.size(); ++n) {
            const double r = (pm - src[n]).norm();
            if (r <= 0.0) throw GeometryError("grids overlap: zero unit-pair distance");
            sum += coeff[n] * path_factor(r, k);
        }
        vals[static_cast<size_t>(m)] = sum;
    }
    return {next_grid, std::move(vals)};
}

double ChainResult::receiver_power_db() const { return power_db(receiver_power()); }

ChainResult propagate_chain(const ChainSpec& chain,
                            const std::vector<PhaseProfile>& profiles) {
    if (chain.boards.empty()) throw GeometryError("chain must contain at least one board");
    if (profiles.size() != chain.boards.size())
        throw GeometryError("need exactly one phase profile per board");

    ChainResult result;
    result.surface_fields.reserve(chain.boards.size());

    Vec3 prev_ref = chain.source.position;
    for (size_t k = 0; k < chain.boards.size(); ++k) {
        const UnitGrid& board = chain.boards[k];
        HopInfo hop;
        auto arr = direction_between(prev_ref, board.reference(), board.frame());
        hop.distance = arr.distance;
        hop.arrival = arr.direction;
        if (k > 0) {
            hop.departure = direction_between(chain.boards[k - 1].reference(),
                                              board.reference(),
                                              chain.boards[k - 1].frame())
                                .direction;
        }
        result.hops.push_back(hop);

        try {
            if (k == 0) {
                result.surface_fields.push_back(
                    incident_field(chain.source, board, chain.lambda));
            } else {
                result.surface_fields.push_back(
                    scatter_to_surface(result.surface_fields[k - 1], profiles[k - 1],
                                       chain.tau(k - 1), board, chain.lambda));
            }
        } catch (const GeometryError& e) {
            throw GeometryError("hop " + std::to_string(k + 1) + ": " + e.what());
        }
        prev_ref = board.reference();
    }

    const size_t last = chain.boards.size() - 1;
    HopInfo leg;
    auto dep = direction_between(chain.boards[last].reference(), chain.receiver,
                                 chain.boards[last].frame());
    leg.distance = dep.distance;
    leg.departure = dep.direction;
    result.hops.push_back(leg);

    try {
        result.receiver_field = scatter_to_point(result.surface_fields[last],
                                                 profiles[last], chain.tau(last),
                                                 chain.receiver, chain.lambda);
    } catch (const GeometryError& e) {
        throw GeometryError("hop " + std::to_string(chain.boards.size() + 1) + ": " +
                            e.what());
    }
    return result;
}

Complex two_hop_matrix_field(const SourceSpec& source, const UnitGrid& first,
                             const PhaseProfile& first_phases, const UnitGrid& second,
                             const PhaseProfile& second_phases, double tau,
                             const Vec3& receiver, Wavelength lambda) {
    check_profile(first_phases, first);
    check_profile(second_phases, second);
    const double k = lambda.wavenumber();
    const int n_units = first.size();
    const int m_units = second.size();

    // column vector: incident path factors onto the first board
    std::vector<Complex> in(static_cast<size_t>(n_units));
    Vec3 axis{};
    if (!source.pattern.is_isotropic()) {
        axis = source.boresight ? source.boresight->normalized()
                                : (first.reference() - source.position).normalized();
    }
    for (int n = 0; n < n_units; ++n) {
        const Vec3 d = first.position(n) - source.position;
        const double r = d.norm();
        double gain = 1.0;
        if (!source.pattern.is_isotropic()) {
            const double ca = std::clamp(d.dot(axis) / r, -1.0, 1.0);
            gain = source.pattern.value(std::acos(ca));
        }
        in[static_cast<size_t>(n)] = gain * path_factor(r, k);
    }

    // inter-board path matrix (m_units x n_units)
    std::vector<Complex> mid(static_cast<size_t>(m_units) * n_units);
    for (int m = 0; m < m_units; ++m)
        for (int n = 0; n < n_units; ++n)
            mid[static_cast<size_t>(m) * n_units + n] =
                path_factor((second.position(m) - first.position(n)).norm(), k);

    // row vector: second board to the receiver
    std::vector<Complex> out(static_cast<size_t>(m_units));
    for (int m = 0; m < m_units; ++m)
        out[static_cast<size_t>(m)] = path_factor((receiver - second.position(m)).norm(), k);

    // diag(e^{j omega_N}) * in
    std::vector<Complex> t1(static_cast<size_t>(n_units));
    for (int n = 0; n < n_units; ++n)
        t1[static_cast<size_t>(n)] =
            std::polar(1.0, first_phases.omegas[static_cast<size_t>(n)]) *
            in[static_cast<size_t>(n)];

    // mid * t1
    std::vector<Complex> t2(static_cast<size_t>(m_units));
    for (int m = 0; m < m_units; ++m) {
        Complex acc{};
        for (int n = 0; n < n_units; ++n)
            acc += mid[static_cast<size_t>(m) * n_units + n] * t1[static_cast<size_t>(n)];
        t2[static_cast<size_t>(m)] = acc;
    }

    // out * diag(e^{j omega_M}) * t2
    Complex acc{};
    for (int m = 0; m < m_units; ++m)
        acc += out[static_cast<size_t>(m)] *
               std::polar(1.0, second_phases.omegas[static_cast<size_t>(m)]) *
               t2[static_cast<size_t>(m)];

    return tau * tau * acc * source.amplitude;
}

double power_db(double power) {
    return 10.0 * std::log10(std::max(power, 1e-300));
}

double field_power_db(Complex field) { return power_db(std::norm(field)); }

} // namespace risim
