#ifndef RISIM_GEOMETRY_HPP
#define RISIM_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace risim {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kSpeedOfLight = 299792458.0; // m/s

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Wraps an angle to [0, 2*pi).
inline double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
}

struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const;
    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline Vec3 Vec3::normalized() const {
    const double n = norm();
    if (n <= 0.0) throw GeometryError("cannot normalize zero vector");
    return *this / n;
}

// Elevation theta measured from the board normal, azimuth phi from the
// board x-axis, both in radians. theta in [0, pi/2] on the reflection
// hemisphere.
struct SphericalDirection {
    double theta = 0.0;
    double phi = 0.0;

    // Unit vector [cos(phi) sin(theta), sin(phi) sin(theta), cos(theta)].
    Vec3 unit() const {
        return {std::cos(phi) * std::sin(theta), std::sin(phi) * std::sin(theta),
                std::cos(theta)};
    }
};

// Right-handed orthonormal board frame: ex, ey span the board plane,
// ez = ex x ey is the board normal.
class Frame {
  public:
    Frame() : ex_{1, 0, 0}, ey_{0, 1, 0}, ez_{0, 0, 1} {}
    Frame(const Vec3& ex, const Vec3& ey);

    static Frame identity() { return Frame(); }

    const Vec3& ex() const { return ex_; }
    const Vec3& ey() const { return ey_; }
    const Vec3& ez() const { return ez_; }

    Vec3 to_local(const Vec3& world) const {
        return {world.dot(ex_), world.dot(ey_), world.dot(ez_)};
    }
    Vec3 to_world(const Vec3& local) const {
        return ex_ * local.x + ey_ * local.y + ez_ * local.z;
    }

  private:
    Vec3 ex_, ey_, ez_;
};

struct Wavelength {
    double lambda = 1.0; // m

    static Wavelength from_frequency(double hz) {
        if (!(hz > 0.0)) throw GeometryError("frequency must be positive");
        return Wavelength{kSpeedOfLight / hz};
    }
    double wavenumber() const { return kTwoPi / lambda; }
};

enum class GridAnchor { Center, FirstUnit };

// Rectangular grid of RIS units. Unit (a, b) sits at local coordinates
// [(b-1)d, (a-1)d, 0] (1-based indices, rows along the local y-axis), so
// `origin` is the world position of unit (1,1). Unit positions do not
// depend on the anchor rule; the anchor only selects the reference point
// used for distances, steering and phase reporting.
class UnitGrid {
  public:
    UnitGrid() = default;
    UnitGrid(int rows, int cols, double spacing, const Vec3& origin,
             const Frame& frame, GridAnchor anchor = GridAnchor::Center);

    // Places the grid by its geometric center instead of unit (1,1).
    static UnitGrid centered(int rows, int cols, double spacing, const Vec3& center,
                             const Frame& frame, GridAnchor anchor = GridAnchor::Center);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int size() const { return rows_ * cols_; }
    double spacing() const { return spacing_; }
    const Frame& frame() const { return frame_; }
    GridAnchor anchor() const { return anchor_; }

    // Linear index is row-major from unit (1,1): n = (a-1)*cols + (b-1).
    Vec3 position(int n) const;
    Vec3 position_ab(int a, int b) const; // 1-based row/column
    std::vector<Vec3> positions() const;

    // Local position of unit n relative to the reference anchor.
    Vec3 local_offset(int n) const;

    Vec3 first_unit() const { return origin_; }
    Vec3 center() const;
    Vec3 reference() const; // anchor point per the anchor rule
    Vec3 normal() const { return frame_.ez(); }

    // Aperture side lengths including the unit footprint (count * spacing).
    double length_cols() const { return cols_ * spacing_; }
    double length_rows() const { return rows_ * spacing_; }
    double physical_aperture() const { return length_rows() * length_cols(); }

  private:
    int rows_ = 1;
    int cols_ = 1;
    double spacing_ = 1.0;
    Vec3 origin_{};
    Frame frame_{};
    GridAnchor anchor_ = GridAnchor::Center;
};

UnitGrid build_grid(int rows, int cols, double spacing, const Vec3& origin,
                    const Frame& frame, GridAnchor anchor = GridAnchor::Center);

struct DirectionResult {
    double distance = 0.0;
    SphericalDirection direction;
};

// Distance and board-frame direction from one point to another.
DirectionResult direction_between(const Vec3& from, const Vec3& to, const Frame& frame);

} // namespace risim

#endif
