#include "risim/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace risim {

Frame::Frame(const Vec3& ex, const Vec3& ey) {
    constexpr double tol = 1e-9;
    if (std::abs(ex.norm() - 1.0) > tol || std::abs(ey.norm() - 1.0) > tol)
        throw GeometryError("frame axes must be unit vectors");
    if (std::abs(ex.dot(ey)) > tol)
        throw GeometryError("frame axes must be orthogonal");
    ex_ = ex;
    ey_ = ey;
    ez_ = ex.cross(ey);
}

UnitGrid::UnitGrid(int rows, int cols, double spacing, const Vec3& origin,
                   const Frame& frame, GridAnchor anchor)
    : rows_(rows), cols_(cols), spacing_(spacing), origin_(origin), frame_(frame),
      anchor_(anchor) {
    if (rows < 1 || cols < 1) throw GeometryError("grid dimensions must be >= 1");
    if (!(spacing > 0.0)) throw GeometryError("grid spacing must be positive");
    if (!origin.finite()) throw GeometryError("grid origin must be finite");
}

UnitGrid UnitGrid::centered(int rows, int cols, double spacing, const Vec3& center,
                            const Frame& frame, GridAnchor anchor) {
    const Vec3 center_local{(cols - 1) * spacing / 2.0, (rows - 1) * spacing / 2.0, 0.0};
    return UnitGrid(rows, cols, spacing, center - frame.to_world(center_local), frame,
                    anchor);
}

Vec3 UnitGrid::position(int n) const {
    if (n < 0 || n >= size()) throw GeometryError("unit index out of range");
    const int a = n / cols_;
    const int b = n % cols_;
    return origin_ + frame_.to_world({b * spacing_, a * spacing_, 0.0});
}

Vec3 UnitGrid::position_ab(int a, int b) const {
    if (a < 1 || a > rows_ || b < 1 || b > cols_)
        throw GeometryError("unit row/column out of range");
    return position((a - 1) * cols_ + (b - 1));
}

std::vector<Vec3> UnitGrid::positions() const {
    std::vector<Vec3> out;
    out.reserve(static_cast<size_t>(size()));
    for (int n = 0; n < size(); ++n) out.push_back(position(n));
    return out;
}

Vec3 UnitGrid::center() const {
    const Vec3 center_local{(cols_ - 1) * spacing_ / 2.0, (rows_ - 1) * spacing_ / 2.0,
                            0.0};
    return origin_ + frame_.to_world(center_local);
}

Vec3 UnitGrid::reference() const {
    return anchor_ == GridAnchor::Center ? center() : first_unit();
}

Vec3 UnitGrid::local_offset(int n) const {
    return frame_.to_local(position(n) - reference());
}

UnitGrid build_grid(int rows, int cols, double spacing, const Vec3& origin,
                    const Frame& frame, GridAnchor anchor) {
    return UnitGrid(rows, cols, spacing, origin, frame, anchor);
}

DirectionResult direction_between(const Vec3& from, const Vec3& to, const Frame& frame) {
    const Vec3 d = to - from;
    const double dist = d.norm();
    if (dist <= 0.0) throw GeometryError("direction between coincident points");
    const Vec3 local = frame.to_local(d / dist);
    const double ct = std::clamp(local.z, -1.0, 1.0);
    SphericalDirection dir;
    dir.theta = std::acos(ct);
    dir.phi = (local.x == 0.0 && local.y == 0.0) ? 0.0
                                                 : wrap_angle(std::atan2(local.y, local.x));
    return {dist, dir};
}

} // namespace risim
