#include "nanofield/waveguide_modes.hpp"

#include <cmath>
#include <stdexcept>

namespace nanofield {

namespace {

void require_in_gap(const Point3& p, const WaveguideGeometry& g) {
    if (std::abs(p.y) > 0.5 * g.d()) {
        throw std::domain_error("mode evaluation outside the waveguide gap");
    }
}

}  // namespace

FieldSample unperturbed_wave(const Point3& p, const WaveguideGeometry& g) {
    if (g.mode() != WaveguideMode::kHole) {
        throw std::invalid_argument("unperturbed_wave: hole-mode geometry required");
    }
    require_in_gap(p, g);
    const double k = 2.0 * M_PI / g.lambda();
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, k * p.z));
    FieldSample s;
    s.E[1] = g.e0() * phase;
    s.H[0] = -g.e0() * phase;
    return s;
}

FieldSample te01_mode(const Point3& p, const WaveguideGeometry& g, Polarization pol) {
    if (g.mode() != WaveguideMode::kDot) {
        throw std::invalid_argument("te01_mode: dot-mode geometry required");
    }
    require_in_gap(p, g);
    const double arg = M_PI * p.y / g.d();
    const double c = std::cos(arg);
    const double sn = std::sin(arg);
    const std::complex<double> i(0.0, 1.0);
    FieldSample s;
    if (pol == Polarization::kLinear) {
        s.E[0] = -2.0 * i * c * g.e0();
        s.H[2] = 2.0 * sn * g.e0();
    } else {
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        // E = -(1/sqrt2)(1,0,i) * 2i cos, H = -(1/sqrt2)(i,0,-1) * 2 sin.
        const std::complex<double> ce = -inv_sqrt2 * 2.0 * i * c * g.e0();
        s.E[0] = ce;
        s.E[2] = ce * i;
        const std::complex<double> ch = -inv_sqrt2 * 2.0 * sn * g.e0();
        s.H[0] = ch * i;
        s.H[2] = -ch;
    }
    return s;
}

double time_averaged_e2(const FieldSample& s) {
    double sum = 0.0;
    for (const auto& e : s.E) sum += std::norm(e);
    return 0.5 * sum;
}

}  // namespace nanofield
