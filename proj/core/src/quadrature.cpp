#include "risim/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace risim {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b,
               double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa,
                     double b, double fb, double m, double fm, double whole,
                     double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

// Nodes/weights on [-1, 1] for small fixed orders.
struct GaussRule {
    std::vector<double> x, w;
};

GaussRule gauss_rule(int order) {
    switch (order) {
        case 2:
            return {{-0.5773502691896257, 0.5773502691896257}, {1.0, 1.0}};
        case 3:
            return {{-0.7745966692414834, 0.0, 0.7745966692414834},
                    {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0}};
        case 4:
            return {{-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                     0.8611363115940526},
                    {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                     0.3478548451374538}};
        case 5:
            return {{-0.9061798459386640, -0.5384693101056831, 0.0,
                     0.5384693101056831, 0.9061798459386640},
                    {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                     0.4786286704993665, 0.2369268850561891}};
        default:
            return {{-0.9324695142031521, -0.6612093864662645, -0.2386191860831969,
                     0.2386191860831969, 0.6612093864662645, 0.9324695142031521},
                    {0.1713244923791704, 0.3607615730481386, 0.4679139345726910,
                     0.4679139345726910, 0.3607615730481386, 0.1713244923791704}};
    }
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = simpson(f, a, fa, b, fb, m, fm);
    const double scale = std::max({std::abs(whole), std::abs(b - a) * std::abs(fm), 1e-300});
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, rel_tol * scale, max_depth);
}

std::vector<double> panel_edges(double lo, double hi, double panel) {
    std::vector<double> edges;
    const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel)));
    edges.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) edges.push_back(lo + (hi - lo) * i / n);
    return edges;
}

std::vector<SphereNode> spherical_cap_nodes(const Vec3& axis,
                                            const std::vector<double>& theta_edges,
                                            int gauss_order, double arc) {
    const Vec3 a = axis.normalized();
    const Vec3 helper = std::abs(a.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    const Vec3 e1 = a.cross(helper).normalized();
    const Vec3 e2 = a.cross(e1);
    const GaussRule rule = gauss_rule(gauss_order);

    std::vector<SphereNode> nodes;
    for (size_t p = 0; p + 1 < theta_edges.size(); ++p) {
        const double lo = theta_edges[p];
        const double hi = theta_edges[p + 1];
        for (size_t i = 0; i < rule.x.size(); ++i) {
            const double t = 0.5 * (hi - lo) * rule.x[i] + 0.5 * (hi + lo);
            const double wt = 0.5 * (hi - lo) * rule.w[i];
            const double st = std::sin(t);
            const int nphi =
                std::max(12, static_cast<int>(std::ceil(kTwoPi * std::max(st, 1e-9) / arc)));
            const double wphi = kTwoPi / nphi;
            for (int j = 0; j < nphi; ++j) {
                const double ph = j * wphi;
                const Vec3 dir = a * std::cos(t) +
                                 (e1 * std::cos(ph) + e2 * std::sin(ph)) * st;
                nodes.push_back({dir, wt * st * wphi});
            }
        }
    }
    return nodes;
}

} // namespace risim
