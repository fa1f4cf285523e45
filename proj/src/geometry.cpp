#include "nanofield/geometry.hpp"

#include <stdexcept>

namespace nanofield {

namespace {

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be positive and finite");
    }
}

}  // namespace

WaveguideGeometry WaveguideGeometry::hole(double a, double d, double lambda, double e0) {
    check_positive(a, "aperture radius a");
    check_positive(d, "plate gap d");
    check_positive(lambda, "wavelength lambda");
    check_positive(e0, "amplitude E0");
    if (a >= d) {
        throw std::invalid_argument(
            "hole mode requires a < d; aperture coupling across the gap is not modeled");
    }
    WaveguideGeometry g(a, d, lambda, e0, WaveguideMode::kHole);
    if (a > 0.2 * lambda) {
        g.warnings_.push_back(
            "a > 0.2*lambda: quasistatic approximation is marginal for this aperture");
    }
    return g;
}

WaveguideGeometry WaveguideGeometry::dot(double a, double d, double e0) {
    check_positive(a, "aperture radius a");
    check_positive(d, "plate gap d");
    check_positive(e0, "amplitude E0");
    if (a >= d) {
        throw std::invalid_argument("dot mode requires a < d");
    }
    // Half-wavelength gap: the wavelength is not a free parameter.
    return WaveguideGeometry(a, d, 2.0 * d, e0, WaveguideMode::kDot);
}

}  // namespace nanofield
