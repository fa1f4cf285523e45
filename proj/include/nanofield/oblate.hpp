#pragma once

#include <cmath>

namespace nanofield {

/**
 * Oblate-spheroidal coordinates (xi, w) of a point given in cylindrical
 * coordinates scaled by the aperture radius: rho = r/a, zeta = z/a with z
 * measured from the aperture plane. They satisfy
 *
 *     rho^2 = (1 + xi^2) (1 - w^2),   zeta^2 = xi^2 w^2,
 *
 * with xi >= 0 and w = |eta| in [0, 1]. xi is the coordinate the printed
 * potential calls mu. The rim r = a, z = 0 maps to xi = w = 0 and is the
 * only singular locus of the field expressions; q = xi^2 + w^2 vanishes
 * there and nowhere else.
 */
struct OblateCoords {
    double xi = 0.0;
    double w = 0.0;
    /// xi^2 + w^2, precomputed; equals R*/a^2 of the kernel formulas.
    double q = 0.0;
};

/// Stable solver: the larger of xi^2, w^2 comes from the quadratic root,
/// the smaller from the product identity xi*w = |zeta|, so the near-disk
/// and near-plane limits are free of cancellation.
inline OblateCoords solve_oblate(double rho, double zeta) {
    const double s = rho * rho + zeta * zeta - 1.0;
    const double q = std::hypot(s, 2.0 * zeta);
    OblateCoords c;
    c.q = q;
    if (s >= 0.0) {
        c.xi = std::sqrt(0.5 * (q + s));
        c.w = (c.xi > 0.0) ? std::abs(zeta) / c.xi : 0.0;
    } else {
        c.w = std::sqrt(0.5 * (q - s));
        c.xi = (c.w > 0.0) ? std::abs(zeta) / c.w : 0.0;
    }
    return c;
}

/// Oblate coordinate mu(r, z) for aperture radius a. Total function of
/// finite inputs; continuous, >= 0, and zero exactly on the rim.
inline double mu(double r, double z, double a) {
    const OblateCoords c = solve_oblate(r / a, z / a);
    return c.xi;
}

/// Distance from (r, z_local) to the rim circle of an aperture whose plane
/// is z_local = 0.
inline double rim_distance(double r, double z_local, double a) {
    return std::hypot(r - a, z_local);
}

}  // namespace nanofield
