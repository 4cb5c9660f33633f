#ifndef RISIM_QUADRATURE_HPP
#define RISIM_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "risim/geometry.hpp"

namespace risim {

// Adaptive Simpson integration to the requested relative tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-6, int max_depth = 40);

struct SphereNode {
    Vec3 dir;
    double weight; // solid-angle weight (sr)
};

// Gauss-Legendre rings around `axis`: panels in the polar angle (panel widths
// from `theta_edges`), uniform azimuth samples per ring sized by `arc`
// (radians of arc length between samples). Integrates f over the cap
// theta in [theta_edges.front(), theta_edges.back()].
std::vector<SphereNode> spherical_cap_nodes(const Vec3& axis,
                                            const std::vector<double>& theta_edges,
                                            int gauss_order, double arc);

// Convenience: evenly split [lo, hi] into panels of at most `panel` radians.
std::vector<double> panel_edges(double lo, double hi, double panel);

} // namespace risim

#endif
