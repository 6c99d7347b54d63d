#include <doctest.h>

#include <cmath>

#include "aslsim/errors.hpp"
#include "aslsim/stamps.hpp"

using namespace aslsim;

namespace {
const MaterialParams kFm{170.0, 5.0, 0.8, 0.8};
const MaterialParams kCh{7.0, 500.0, 0.0, 0.0};
}  // namespace

TEST_CASE("fm stamp reproduces the reference entries for the default magnet") {
    // lateral 30 x 10 x 3 nm magnet, independently evaluated at high precision
    const TwoPortStamp s = fm_stamp(kFm, {30.0, 10.0, 3.0});
    CHECK(s.series(0, 0) == doctest::Approx(0.0058823529411764705).epsilon(1e-14));
    CHECK(s.series(0, 1) == doctest::Approx(0.0047058823529411764).epsilon(1e-14));
    CHECK(s.series(1, 0) == doctest::Approx(0.0047058823529411764).epsilon(1e-14));
    CHECK(s.series(1, 1) == doctest::Approx(0.0038276957364536200).epsilon(1e-13));
    CHECK(s.shunt(0, 0) == 0.0);
    CHECK(s.shunt(0, 1) == 0.0);
    CHECK(s.shunt(1, 0) == 0.0);
    CHECK(s.shunt(1, 1) == doctest::Approx(0.012643048635078457).epsilon(1e-13));
}

TEST_CASE("nm stamp reproduces the reference entries for a 100 nm channel") {
    const TwoPortStamp s = nm_stamp(kCh, {100.0, 10.0, 10.0});
    CHECK(s.series(0, 0) == doctest::Approx(0.14285714285714285).epsilon(1e-14));
    CHECK(s.series(0, 1) == 0.0);
    CHECK(s.series(1, 1) == doctest::Approx(0.14190918768041476).epsilon(1e-13));
    CHECK(s.shunt(1, 1) == doctest::Approx(0.0028476569892844518).epsilon(1e-13));
}

TEST_CASE("nm stamp special values at L equal to the spin-flip length") {
    MaterialParams m = kCh;
    m.lambda_sf = 100.0;
    const TwoPortStamp s = nm_stamp(m, {100.0, 10.0, 10.0});
    const double pref = 100.0 / (7.0 * 100.0);
    CHECK(s.series(1, 1) ==
          doctest::Approx(pref * 0.85091812823932155).epsilon(1e-13));
    CHECK(s.shunt(1, 1) == doctest::Approx(pref * 0.46211715726000976).epsilon(1e-13));
}

TEST_CASE("short-element limits") {
    // L -> 0: series spin entry -> beta^2 + (1 - p^2), shunt -> 0
    const Geometry tiny{1e-6, 10.0, 3.0};
    const TwoPortStamp s = fm_stamp(kFm, tiny);
    const double pref = 30.0 / (170.0 * 1e-6);
    CHECK(s.series(1, 1) / pref ==
          doctest::Approx(0.8 * 0.8 + (1.0 - 0.64)).epsilon(1e-9));
    CHECK(s.shunt(1, 1) / pref == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("long-channel asymptotics") {
    // L >> lambda: series spin entry dies, shunt approaches (A/rho L) (L/lambda)
    MaterialParams m = kCh;
    m.lambda_sf = 10.0;
    const TwoPortStamp s = nm_stamp(m, {400.0, 10.0, 10.0});
    const double pref = 100.0 / (7.0 * 400.0);
    CHECK(s.series(1, 1) / pref < 1e-14);
    CHECK(s.shunt(1, 1) / pref == doctest::Approx(40.0).epsilon(1e-10));
}

TEST_CASE("unpolarized fm stamp equals the nm stamp") {
    MaterialParams m = kFm;
    m.p = 0.0;
    m.beta = 0.0;
    const Geometry g{60.0, 10.0, 3.0};
    MaterialParams ch = kCh;
    ch.rho = m.rho;
    ch.lambda_sf = m.lambda_sf;
    const TwoPortStamp a = fm_stamp(m, g);
    const TwoPortStamp b = nm_stamp(ch, g);
    CHECK((a.series - b.series).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.shunt - b.shunt).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("magnetization sign flips only the off-diagonal coupling") {
    const Geometry g{30.0, 10.0, 3.0};
    const TwoPortStamp up = fm_stamp(kFm, g, +1.0);
    const TwoPortStamp dn = fm_stamp(kFm, g, -1.0);
    CHECK(up.series(0, 1) == -dn.series(0, 1));
    CHECK(up.series(0, 0) == dn.series(0, 0));
    CHECK(up.series(1, 1) == dn.series(1, 1));
    CHECK(up.shunt(1, 1) == dn.shunt(1, 1));
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(fm_stamp({170.0, 0.0, 0.8, 0.8}, {30, 10, 3}), ParameterError);
    CHECK_THROWS_AS(fm_stamp({-1.0, 5.0, 0.8, 0.8}, {30, 10, 3}), ParameterError);
    CHECK_THROWS_AS(fm_stamp({170.0, 5.0, 1.0, 0.8}, {30, 10, 3}), ParameterError);
    CHECK_THROWS_AS(fm_stamp(kFm, {0.0, 10, 3}), ParameterError);
    CHECK_THROWS_AS(fm_stamp(kFm, {30, 10, 3}, 0.5), ParameterError);
    CHECK_THROWS_AS(nm_stamp({7.0, -2.0, 0, 0}, {100, 10, 10}), ParameterError);
}
