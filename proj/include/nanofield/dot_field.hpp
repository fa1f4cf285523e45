#pragma once

#include <array>
#include <vector>

#include "nanofield/geometry.hpp"

namespace nanofield {

/// Scattering kernels of one aperture, evaluated at cylindrical radius r
/// and axial distance y_local >= 0 from the aperture plane. R_star is in
/// units of a^2; A, B, C, R_plus, R_minus are dimensionless.
struct KernelValues {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double R_star = 0.0;
    double R_plus = 0.0;
    double R_minus = 0.0;
    bool rim_flagged = false;
};

KernelValues abc_kernels(double r, double y_local, double a);

/// Per-component sums of the two apertures' kernels at a point between the
/// plates (arguments |y - d/2| and |y + d/2|).
struct HattedKernels {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    bool rim_flagged = false;
};

HattedKernels hatted_kernels(double r, double y, const WaveguideGeometry& g);

enum class DotRegion { kBelow, kInterior, kAbove };

/// Normalized time-averaged squared electric field <E^2>; the unperturbed
/// interior value is 2 cos^2(pi y / d). Depends on position only through
/// (r, y).
struct IntensityValue {
    double w = 0.0;
    DotRegion region = DotRegion::kInterior;
    bool rim_proximity = false;
};

IntensityValue dot_intensity(const Point3& p, const WaveguideGeometry& g);

/// Which aperture a single-aperture evaluation keeps.
enum class Aperture { kBottom, kTop };

/// Same piecewise structure as dot_intensity with only one aperture's
/// scattered field retained; the baseline for the pair/single comparison.
IntensityValue single_aperture_dot_intensity(const Point3& p, const WaveguideGeometry& g,
                                             Aperture which = Aperture::kBottom);

/// Lattice of aperture pairs: centers in the (x, z) plane. Spacing below
/// four aperture radii is rejected (mutual coupling is not modeled).
struct LatticeSpec {
    std::vector<std::array<double, 2>> centers;
    double min_spacing = 0.0;

    void validate(const WaveguideGeometry& g) const;
};

/// Scattered contributions of every pair superposed on the one shared
/// background mode. Reduces to dot_intensity for a single pair at the
/// origin.
IntensityValue lattice_intensity(const Point3& p, const WaveguideGeometry& g,
                                 const LatticeSpec& lat);

}  // namespace nanofield
