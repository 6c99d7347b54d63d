#pragma once

// Physical constants and simulation defaults. All unit conversions live here:
// geometry in nm, resistivity in Ohm*nm, conductance in 1/Ohm, volts, amperes,
// seconds. Magnetization is entered in emu/cc and converted once.

namespace aslsim::constants {

inline constexpr double electron_charge = 1.6e-19;        // C
inline constexpr double bohr_magneton = 9.274e-24;        // J/T
inline constexpr double boltzmann = 1.380649e-23;         // J/K
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double gyromagnetic = 1.76e11;           // rad/(s T)

inline constexpr double emu_cc_to_A_m = 1e3;              // emu/cc -> A/m
inline constexpr double nm3_to_m3 = 1e-27;
inline constexpr double ps = 1e-12;                       // s

}  // namespace aslsim::constants

namespace aslsim::defaults {

// technology parameters (simulation defaults; override via config)
inline constexpr double fm_resistivity = 170.0;        // Ohm nm
inline constexpr double nm_resistivity = 7.0;          // Ohm nm
inline constexpr double fm_spin_flip_length = 5.0;     // nm
inline constexpr double nm_spin_flip_length = 500.0;   // nm
inline constexpr double spin_polarization = 0.8;
inline constexpr double series_polarization = 0.8;     // beta, defaults to p
inline constexpr double magnet_length = 30.0;          // nm (plan)
inline constexpr double magnet_width = 10.0;           // nm (plan)
inline constexpr double magnet_thickness = 3.0;        // nm (film)
inline constexpr double channel_width = 10.0;          // nm
inline constexpr double channel_thickness = 10.0;      // nm
inline constexpr double saturation_magnetization = 780.0;  // emu/cc
inline constexpr double supply_voltage = 0.1;          // V

// delay-model anchor: f is fixed so the reference single-driver layout
// (see layouts.hpp) switches the unit output magnet in 104 ps.
inline constexpr double anchor_t_init = 104e-12;       // s
inline constexpr double anchor_e_init = 0.2e-12;       // J

}  // namespace aslsim::defaults
