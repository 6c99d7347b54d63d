#pragma once

#include <map>
#include <optional>
#include <string>

#include "aslsim/stamps.hpp"

namespace aslsim {

/// Technology parameter set (resistivities, geometry, supply).
struct TechParams {
    MaterialParams fm;     // ferromagnet transport parameters
    MaterialParams ch;     // channel transport parameters
    Geometry magnet_plan;  // plan-view magnet: length x width x thickness
    double channel_width = 0.0;
    double channel_thickness = 0.0;
    double vdd = 0.0;                   // V
    double ms_emu_cc = 0.0;             // saturation magnetization

    static TechParams table_defaults();

    /// Magnet as a circuit element: transport is vertical through the film,
    /// so the element length is the film thickness and the cross-section is
    /// the plan footprint. q scales the plan width (injector upsizing).
    Geometry magnet_element(double q = 1.0) const;
    Geometry channel_element(double length_nm, double q = 1.0) const;

    double magnet_moments() const;      // N_s of a 1x magnet
    void validate() const;
};

/// Star-gate channel lengths (nm). Every driven branch carries its own
/// ground strap of length `tap`; `trunk` sits between the input junction
/// and the output magnet (conventional gates only in the shipped set).
struct StarLayout {
    double arm = 0.0;
    double init_arm = 0.0;  // STEM only
    double tap = 0.0;
    double trunk = 0.0;
};

struct GateLayoutPair {
    StarLayout conv;
    StarLayout stem;
};

/// Five-magnet STEM adder channel tree (see gates/adder build for topology).
struct StemAdderLayout {
    double arm_a = 0.0;       // input a contact -> spur junction
    double arm_bc = 0.0;      // inputs b, c_in -> merge point
    double trunk_mid = 0.0;   // merge point -> a's trunk junction
    double trunk_out = 0.0;   // a's trunk junction -> sum magnet
    double spur_offset = 0.0; // spur junction -> a's trunk junction
    double spur = 0.0;        // spur junction -> carry magnet contact
    double tap_a = 0.0;
    double tap_bc = 0.0;
    double tap_carry = 0.0;
};

struct ConvAdderLayout {
    double arm_in = 0.0;      // a, b, c_in -> carry junction
    double carry_spur = 0.0;  // carry junction -> carry magnet contact
    double trunk = 0.0;       // carry junction -> sum magnet
    double tap_in = 0.0;
    double tap_carry = 0.0;
};

/// Calibrated channel lengths shipped with the library. The reference
/// single-driver layout anchors the delay-model constant f (104 ps / 0.2 pJ).
struct LayoutLibrary {
    StarLayout reference;              // INV/BUF and f-anchor layout
    std::map<std::string, GateLayoutPair> gates;  // keys AND2..AND4, MAJ3, MAJ5
    StemAdderLayout adder_stem;
    ConvAdderLayout adder_conv;

    static LayoutLibrary calibrated_defaults();
    const GateLayoutPair& gate(const std::string& key) const;
};

/// Loads a layout file (same key=value schema family as netlists); missing
/// entries fall back to the calibrated defaults.
LayoutLibrary load_layout_file(const std::string& path);

}  // namespace aslsim
