#pragma once

#include "nanofield/geometry.hpp"

namespace nanofield {

/// Electrostatic potential of the photon hole. Antisymmetric in y with
/// phi(r, 0) = 0; tends to -E0*y deep between the plates and to the plate
/// potentials -/+ E0*d/2 outside them. Total function: points inside the
/// rim exclusion ring are evaluated at the clamped location.
double hole_potential(const Point3& p, const WaveguideGeometry& g);

/// E = -grad(phi), evaluated from the closed-form gradient. Points within
/// the rim exclusion ring return the clamped value with the flag set.
Flagged<Vec3> hole_field(const Point3& p, const WaveguideGeometry& g);

/// True when p lies inside the rim exclusion ring of either aperture.
bool hole_rim_flagged(const Point3& p, const WaveguideGeometry& g);

namespace detail {

/// Single-aperture perturbation delta(rho, zeta) in units of E0*a: the
/// deviation of the canonical one-aperture solution from the unperturbed
/// piecewise-uniform potential. Even in zeta, zero on the conductor plane,
/// decays like a dipole. Inputs are in units of the aperture radius.
double aperture_delta(double rho, double zeta);

/// Closed-form gradient (d/drho, d/dzeta) of aperture_delta. The zeta
/// derivative jumps across the disk zeta = 0, rho < 1; `side` selects the
/// limit taken when zeta == 0 (+1 for zeta -> 0+, -1 for zeta -> 0-).
void aperture_delta_grad(double rho, double zeta, int side, double& d_rho, double& d_zeta);

}  // namespace detail

}  // namespace nanofield
