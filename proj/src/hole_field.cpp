#include "nanofield/hole_field.hpp"

#include <cmath>

#include "nanofield/oblate.hpp"

// The two-aperture potential is assembled from three ingredients, all in
// units where a = 1 and E0 = 1:
//
//   * the unperturbed waveguide potential phi0(y): -y between the plates,
//     clamped to the plate values -/+ d/2 outside;
//   * the single-aperture perturbation delta(rho, zeta) below, which is the
//     canonical solution for one aperture in one conducting plane minus the
//     unperturbed part, so that superposing apertures does not double-count
//     the uniform interior field;
//   * mirror images of the perturbations in both plates. The image sum
//     telescopes on the plates, restoring the conductor boundary condition
//     to the truncation residual; each term is harmonic between the plates.
//
// Outside the waveguide only the nearest aperture's solution is used: the
// opposite aperture's leakage reaches there only through the hole, which is
// the mutual-coupling effect dropped for a < d. The exterior expression is
// exactly harmonic, exactly constant on its plate, and decays to zero.

namespace nanofield {

namespace detail {

namespace {

// arccot(x) for x >= 0, finite (pi/2) at x = 0.
inline double arccot(double x) { return std::atan2(1.0, x); }

}  // namespace

double aperture_delta(double rho, double zeta) {
    const OblateCoords c = solve_oblate(rho, zeta);
    // w * (1 - xi*arccot(xi)) / pi; value is continuous through the rim.
    return c.w * (1.0 - c.xi * arccot(c.xi)) / M_PI;
}

void aperture_delta_grad(double rho, double zeta, int side, double& d_rho, double& d_zeta) {
    const OblateCoords c = solve_oblate(rho, zeta);
    const double xi = c.xi;
    const double w = c.w;
    const double q = c.q;
    const double one_xi2 = 1.0 + xi * xi;
    const double acov = arccot(xi);
    const double sgn = (zeta > 0.0) ? 1.0 : (zeta < 0.0 ? -1.0 : static_cast<double>(side));

    d_rho = -rho * w / (M_PI * q * one_xi2);
    // Both pieces are written so the disk (xi -> 0) and axis (w -> 1)
    // limits come out without dividing by a vanishing coordinate.
    const double f = 1.0 - xi * acov;
    const double term1 = sgn * xi * (1.0 - w * w) * f;
    const double term2 = w * zeta - sgn * w * w * one_xi2 * acov;
    d_zeta = (term1 + term2) / (M_PI * q);
}

}  // namespace detail

namespace {

struct LocalFrame {
    double rho;      // r/a
    double y_over_a; // y/a
    double d_over_a; // d/a
    bool flagged;
};

// Clamp a point inside the rim exclusion ring of either aperture to the
// nearest point on the ring boundary. Works in (rho, y/a) half-plane.
LocalFrame make_frame(const Point3& p, const WaveguideGeometry& g) {
    const double a = g.a();
    LocalFrame f{p.r() / a, p.y / a, g.d() / a, false};
    const double half_d = 0.5 * f.d_over_a;
    for (const double plate : {half_d, -half_d}) {
        const double dr = f.rho - 1.0;
        const double dz = f.y_over_a - plate;
        const double dist = std::hypot(dr, dz);
        if (dist < kRimEpsilonScale) {
            f.flagged = true;
            if (dist == 0.0) {
                f.rho = 1.0 - kRimEpsilonScale;
            } else {
                const double scale = kRimEpsilonScale / dist;
                f.rho = 1.0 + dr * scale;
                f.y_over_a = plate + dz * scale;
            }
        }
    }
    return f;
}

}  // namespace

bool hole_rim_flagged(const Point3& p, const WaveguideGeometry& g) {
    const double eps = g.rim_epsilon();
    const double r = p.r();
    return rim_distance(r, p.y - 0.5 * g.d(), g.a()) < eps ||
           rim_distance(r, p.y + 0.5 * g.d(), g.a()) < eps;
}

double hole_potential(const Point3& p, const WaveguideGeometry& g) {
    const LocalFrame f = make_frame(p, g);
    const double half_d = 0.5 * f.d_over_a;
    const double scale = g.e0() * g.a();

    if (f.y_over_a > half_d) {
        return scale * (-half_d + detail::aperture_delta(f.rho, f.y_over_a - half_d));
    }
    if (f.y_over_a < -half_d) {
        return scale * (half_d - detail::aperture_delta(f.rho, f.y_over_a + half_d));
    }
    double phi = -f.y_over_a;
    for (int k = 0; k < kHoleImagePairs; ++k) {
        const double c = (0.5 + k) * f.d_over_a;
        phi += detail::aperture_delta(f.rho, f.y_over_a - c) -
               detail::aperture_delta(f.rho, f.y_over_a + c);
    }
    return scale * phi;
}

Flagged<Vec3> hole_field(const Point3& p, const WaveguideGeometry& g) {
    const LocalFrame f = make_frame(p, g);
    const double half_d = 0.5 * f.d_over_a;

    double dphi_drho = 0.0;
    double dphi_dy = 0.0;
    double dr = 0.0, dz = 0.0;

    if (f.y_over_a > half_d) {
        detail::aperture_delta_grad(f.rho, f.y_over_a - half_d, +1, dr, dz);
        dphi_drho = dr;
        dphi_dy = dz;
    } else if (f.y_over_a < -half_d) {
        detail::aperture_delta_grad(f.rho, f.y_over_a + half_d, -1, dr, dz);
        dphi_drho = -dr;
        dphi_dy = -dz;
    } else {
        dphi_dy = -1.0;
        for (int k = 0; k < kHoleImagePairs; ++k) {
            const double c = (0.5 + k) * f.d_over_a;
            // At the aperture planes the k = 0 arguments hit zero; take the
            // interior-side limit there.
            detail::aperture_delta_grad(f.rho, f.y_over_a - c, -1, dr, dz);
            dphi_drho += dr;
            dphi_dy += dz;
            detail::aperture_delta_grad(f.rho, f.y_over_a + c, +1, dr, dz);
            dphi_drho -= dr;
            dphi_dy -= dz;
        }
    }

    // E = -grad(phi); the rho-derivative maps back to (x, z) through r.
    const double e0 = g.e0();
    Vec3 e{0.0, -e0 * dphi_dy, 0.0};
    const double r = p.r();
    if (r > 0.0) {
        const double er = -e0 * dphi_drho;
        e.x = er * p.x / r;
        e.z = er * p.z / r;
    }
    return {e, f.flagged};
}

}  // namespace nanofield
