#include "nanofield/dot_field.hpp"

#include <cmath>
#include <stdexcept>

#include "nanofield/oblate.hpp"

// Kernels A, B, C in oblate coordinates (xi = R+, w = R-, q = xi^2 + w^2):
//
//   A = w [ 2/q + 2 + xi^2/(1+xi^2) - 3 xi arctan(1/xi) ]
//   B = 2 w [ 1/(1+xi^2) - 1/q ]
//   C = 2 (r/a) xi / ( q (1+xi^2) )
//
// These are the printed kernels with the 1/r^2 pieces combined; the
// combination is exact, so the axis r = 0 needs no limit handling and the
// only singular locus is the rim q = 0. The unit tests check the oblate
// forms against a direct transcription of the printed expressions.

namespace nanofield {

namespace {

struct KernelCore {
    double A, B, C;
};

inline KernelCore kernels_oblate(double rho, double zeta_abs) {
    const OblateCoords c = solve_oblate(rho, zeta_abs);
    const double xi = c.xi;
    const double w = c.w;
    const double q = c.q;
    const double one_xi2 = 1.0 + xi * xi;
    const double atan_inv = std::atan2(1.0, xi);
    KernelCore k;
    k.A = w * (2.0 / q + 2.0 + xi * xi / one_xi2 - 3.0 * xi * atan_inv);
    k.B = 2.0 * w * (1.0 / one_xi2 - 1.0 / q);
    k.C = 2.0 * rho * xi / (q * one_xi2);
    return k;
}

// Clamp (rho, zeta) out of the rim exclusion ring; returns true when moved.
inline bool clamp_rim(double& rho, double& zeta) {
    const double dr = rho - 1.0;
    const double dist = std::hypot(dr, zeta);
    if (dist >= kRimEpsilonScale) return false;
    if (dist == 0.0) {
        rho = 1.0 - kRimEpsilonScale;
    } else {
        const double scale = kRimEpsilonScale / dist;
        rho = 1.0 + dr * scale;
        zeta *= scale;
    }
    return true;
}

struct ScatteredSum {
    double A = 0.0;
    double AB = 0.0;  // A + B accumulated
    double C = 0.0;
    bool flagged = false;

    void add(double rho, double zeta_abs) {
        double rr = rho;
        double zz = zeta_abs;
        flagged = clamp_rim(rr, zz) || flagged;
        const KernelCore k = kernels_oblate(rr, zz);
        A += k.A;
        AB += k.A + k.B;
        C += k.C;
    }
};

inline DotRegion region_of(double y, double half_d) {
    if (y > half_d) return DotRegion::kAbove;
    if (y < -half_d) return DotRegion::kBelow;
    return DotRegion::kInterior;
}

// <E^2> assembled from the accumulated scattered kernels. Interior points
// carry the standing-wave amplitude in both transverse components; outside
// the plates only the scattered field survives.
inline IntensityValue assemble(const ScatteredSum& s, DotRegion region, double cos_y, double t) {
    IntensityValue out;
    out.region = region;
    out.rim_proximity = s.flagged;
    if (region == DotRegion::kInterior) {
        const double e1 = cos_y + t * s.A;
        const double e2 = cos_y + t * s.AB;
        const double e3 = t * s.C;
        out.w = e1 * e1 + e2 * e2 + e3 * e3;
    } else {
        const double e1 = t * s.A;
        const double e2 = t * s.AB;
        const double e3 = t * s.C;
        out.w = e1 * e1 + e2 * e2 + e3 * e3;
    }
    return out;
}

void require_dot(const WaveguideGeometry& g) {
    if (g.mode() != WaveguideMode::kDot) {
        throw std::invalid_argument("dot-mode geometry required");
    }
}

}  // namespace

KernelValues abc_kernels(double r, double y_local, double a) {
    if (y_local < 0.0) {
        throw std::invalid_argument("abc_kernels: y_local must be >= 0");
    }
    double rho = r / a;
    double zeta = y_local / a;
    KernelValues out;
    out.rim_flagged = clamp_rim(rho, zeta);
    const OblateCoords c = solve_oblate(rho, zeta);
    const KernelCore k = kernels_oblate(rho, zeta);
    out.A = k.A;
    out.B = k.B;
    out.C = k.C;
    out.R_star = c.q;
    out.R_plus = c.xi;
    out.R_minus = c.w;
    return out;
}

HattedKernels hatted_kernels(double r, double y, const WaveguideGeometry& g) {
    require_dot(g);
    const double half_d = 0.5 * g.d();
    const KernelValues top = abc_kernels(r, std::abs(y - half_d), g.a());
    const KernelValues bot = abc_kernels(r, std::abs(y + half_d), g.a());
    return {top.A + bot.A, top.B + bot.B, top.C + bot.C, top.rim_flagged || bot.rim_flagged};
}

IntensityValue dot_intensity(const Point3& p, const WaveguideGeometry& g) {
    require_dot(g);
    const double a = g.a();
    const double half_d = 0.5 * g.d() / a;
    const double rho = p.r() / a;
    const double y = p.y / a;
    const double t = g.ka() / (3.0 * M_PI);
    const DotRegion region = region_of(y, half_d);

    ScatteredSum s;
    if (region == DotRegion::kInterior) {
        s.add(rho, std::abs(y - half_d));
        s.add(rho, std::abs(y + half_d));
        return assemble(s, region, std::cos(M_PI * p.y / g.d()), t);
    }
    const double near_plate = (region == DotRegion::kAbove) ? half_d : -half_d;
    s.add(rho, std::abs(y - near_plate));
    return assemble(s, region, 0.0, t);
}

IntensityValue single_aperture_dot_intensity(const Point3& p, const WaveguideGeometry& g,
                                             Aperture which) {
    require_dot(g);
    const double a = g.a();
    const double half_d = 0.5 * g.d() / a;
    const double rho = p.r() / a;
    const double y = p.y / a;
    const double t = g.ka() / (3.0 * M_PI);
    const DotRegion region = region_of(y, half_d);
    const double plate = (which == Aperture::kBottom) ? -half_d : half_d;

    ScatteredSum s;
    s.add(rho, std::abs(y - plate));
    const double cos_y = (region == DotRegion::kInterior) ? std::cos(M_PI * p.y / g.d()) : 0.0;
    return assemble(s, region, cos_y, t);
}

void LatticeSpec::validate(const WaveguideGeometry& g) const {
    if (centers.empty()) {
        throw std::invalid_argument("lattice: at least one aperture-pair center required");
    }
    const double floor = std::max(min_spacing, 4.0 * g.a());
    for (size_t i = 0; i < centers.size(); ++i) {
        for (size_t j = i + 1; j < centers.size(); ++j) {
            const double dx = centers[i][0] - centers[j][0];
            const double dz = centers[i][1] - centers[j][1];
            if (std::hypot(dx, dz) < floor) {
                throw std::invalid_argument(
                    "lattice: pair spacing below 4a (or the declared minimum); "
                    "mutual coupling is not modeled");
            }
        }
    }
}

IntensityValue lattice_intensity(const Point3& p, const WaveguideGeometry& g,
                                 const LatticeSpec& lat) {
    require_dot(g);
    lat.validate(g);
    const double a = g.a();
    const double half_d = 0.5 * g.d() / a;
    const double y = p.y / a;
    const double t = g.ka() / (3.0 * M_PI);
    const DotRegion region = region_of(y, half_d);

    ScatteredSum s;
    for (const auto& c : lat.centers) {
        const double rho = std::hypot(p.x - c[0], p.z - c[1]) / a;
        if (region == DotRegion::kInterior) {
            s.add(rho, std::abs(y - half_d));
            s.add(rho, std::abs(y + half_d));
        } else {
            const double near_plate = (region == DotRegion::kAbove) ? half_d : -half_d;
            s.add(rho, std::abs(y - near_plate));
        }
    }
    const double cos_y = (region == DotRegion::kInterior) ? std::cos(M_PI * p.y / g.d()) : 0.0;
    return assemble(s, region, cos_y, t);
}

}  // namespace nanofield
