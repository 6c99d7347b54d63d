#include "aslsim/stamps.hpp"

#include <cmath>
#include <string>

#include "aslsim/errors.hpp"

namespace aslsim {

void MaterialParams::validate() const {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw ParameterError("material: rho must be > 0, got " + std::to_string(rho));
    if (!(lambda_sf > 0.0) || !std::isfinite(lambda_sf))
        throw ParameterError("material: lambda_sf must be > 0, got " +
                             std::to_string(lambda_sf));
    if (!(p >= 0.0 && p < 1.0))
        throw ParameterError("material: p must be in [0,1), got " + std::to_string(p));
    if (!(beta >= 0.0 && beta < 1.0))
        throw ParameterError("material: beta must be in [0,1), got " +
                             std::to_string(beta));
}

void Geometry::validate() const {
    if (!(length > 0.0) || !(width > 0.0) || !(thickness > 0.0))
        throw ParameterError("geometry: all dimensions must be > 0");
    if (!std::isfinite(length) || !std::isfinite(width) || !std::isfinite(thickness))
        throw ParameterError("geometry: non-finite dimension");
}

namespace {

// x / sinh(x), stable for small x
double x_cosech(double x) {
    if (x < 1e-8) return 1.0 - x * x / 6.0;
    return x / std::sinh(x);
}

}  // namespace

TwoPortStamp fm_stamp(const MaterialParams& mat, const Geometry& geo, double msign) {
    mat.validate();
    geo.validate();
    if (msign != 1.0 && msign != -1.0)
        throw ParameterError("fm_stamp: msign must be +1 or -1");

    const double pref = geo.cross_section() / (mat.rho * geo.length);
    const double x = geo.length / mat.lambda_sf;
    const double depol = 1.0 - mat.p * mat.p;

    TwoPortStamp s;
    s.series(0, 0) = pref;
    s.series(0, 1) = pref * msign * mat.beta;
    s.series(1, 0) = s.series(0, 1);
    s.series(1, 1) = pref * (mat.beta * mat.beta + depol * x_cosech(x));
    s.shunt(1, 1) = pref * depol * x * std::tanh(0.5 * x);

    if (!s.series.allFinite() || !s.shunt.allFinite())
        throw ParameterError("fm_stamp: non-finite conductance entry");
    return s;
}

TwoPortStamp nm_stamp(const MaterialParams& mat, const Geometry& geo) {
    mat.validate();
    geo.validate();

    const double pref = geo.cross_section() / (mat.rho * geo.length);
    const double x = geo.length / mat.lambda_sf;

    TwoPortStamp s;
    s.series(0, 0) = pref;
    s.series(1, 1) = pref * x_cosech(x);
    s.shunt(1, 1) = pref * x * std::tanh(0.5 * x);

    if (!s.series.allFinite() || !s.shunt.allFinite())
        throw ParameterError("nm_stamp: non-finite conductance entry");
    return s;
}

}  // namespace aslsim
