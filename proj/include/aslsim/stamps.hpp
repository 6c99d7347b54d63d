#pragma once

#include <Eigen/Dense>

namespace aslsim {

using Mat2 = Eigen::Matrix2d;

/// Transport parameters of one material. p and beta are meaningful for
/// ferromagnets only and stay zero for channel material.
struct MaterialParams {
    double rho = 0.0;        // resistivity, Ohm nm
    double lambda_sf = 0.0;  // spin-flip length, nm
    double p = 0.0;          // spin polarization
    double beta = 0.0;       // series-coupling polarization

    void validate() const;
};

/// Element transport geometry. Current flows along `length`; the conducting
/// cross-section is width x thickness. footprint() is the plan-view area.
struct Geometry {
    double length = 0.0;     // nm
    double width = 0.0;      // nm
    double thickness = 0.0;  // nm

    double cross_section() const { return width * thickness; }   // nm^2
    double footprint() const { return length * width; }          // nm^2
    double volume() const { return length * width * thickness; } // nm^3
    void validate() const;
};

/// 2x2 conductance blocks of the pi-model, rows/cols ordered [charge, spin].
/// `shunt` is one leg; assembly places a leg at each element end.
struct TwoPortStamp {
    Mat2 series = Mat2::Zero();
    Mat2 shunt = Mat2::Zero();
};

/// Ferromagnet stamp. msign (+1/-1) flips the charge-spin coupling sign,
/// modelling a reversed magnetization.
TwoPortStamp fm_stamp(const MaterialParams& mat, const Geometry& geo,
                      double msign = 1.0);

/// Non-magnetic channel stamp.
TwoPortStamp nm_stamp(const MaterialParams& mat, const Geometry& geo);

}  // namespace aslsim
