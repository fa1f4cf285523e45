#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace nanofield {

/// Real 3-vector used for positions, velocities, forces and fields.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Spatial point. y is the plate normal; the plates sit at y = ±d/2.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    /// Cylindrical radius about the aperture axis.
    double r() const { return std::hypot(x, z); }
};

enum class WaveguideMode { kHole, kDot };

/// Exclusion ring around each aperture rim, in units of the aperture radius.
/// Points closer than this are flagged and evaluated at the clamped location.
inline constexpr double kRimEpsilonScale = 1e-6;

/// Number of plate-image pairs summed when evaluating the photon-hole
/// potential between the plates. The residual tangential field on the
/// plates after N pairs scales like (a/(N d))^4.
inline constexpr int kHoleImagePairs = 64;

/**
 * Geometry of the two-plate waveguide with a coaxial aperture pair.
 *
 * Hole mode: quasistatic drive field E0 between the plates; requires a < d
 * (aperture coupling is not modeled) and warns when a is not small against
 * the wavelength. Dot mode: half-wavelength gap, lambda is derived as 2d.
 */
class WaveguideGeometry {
public:
    static WaveguideGeometry hole(double a, double d, double lambda, double e0 = 1.0);
    static WaveguideGeometry dot(double a, double d, double e0 = 1.0);

    double a() const { return a_; }
    double d() const { return d_; }
    double lambda() const { return lambda_; }
    double e0() const { return e0_; }
    WaveguideMode mode() const { return mode_; }

    /// k*a = pi*a/d; meaningful for dot mode.
    double ka() const { return M_PI * a_ / d_; }

    double rim_epsilon() const { return kRimEpsilonScale * a_; }

    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    WaveguideGeometry(double a, double d, double lambda, double e0, WaveguideMode m)
        : a_(a), d_(d), lambda_(lambda), e0_(e0), mode_(m) {}

    double a_;
    double d_;
    double lambda_;
    double e0_;
    WaveguideMode mode_;
    std::vector<std::string> warnings_;
};

/// Value paired with a rim-proximity flag. Flagged values are evaluated at
/// the nearest admissible point outside the exclusion ring.
template <typename T>
struct Flagged {
    T value{};
    bool rim_flagged = false;
};

}  // namespace nanofield
