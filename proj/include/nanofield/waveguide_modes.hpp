#pragma once

#include <array>
#include <complex>

#include "nanofield/geometry.hpp"

namespace nanofield {

/// Complex field amplitudes at a point, in units of E0; the harmonic time
/// factor is dropped.
struct FieldSample {
    std::array<std::complex<double>, 3> E{};
    std::array<std::complex<double>, 3> H{};
};

/// Unperturbed TEM traveling wave of the hole-mode waveguide: E along y,
/// propagation along z. Throws outside the gap.
FieldSample unperturbed_wave(const Point3& p, const WaveguideGeometry& g);

enum class Polarization { kLinear, kCircular };

/// Standing-wave mode of the half-wavelength (dot) waveguide, with nodes on
/// both plates. Throws outside the gap.
FieldSample te01_mode(const Point3& p, const WaveguideGeometry& g,
                      Polarization pol = Polarization::kLinear);

/// Time-averaged squared real electric field of a sample, |E|^2 / 2.
double time_averaged_e2(const FieldSample& s);

}  // namespace nanofield
