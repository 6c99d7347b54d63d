#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "aslsim/llgs_kernel.hpp"
#include "aslsim/stamps.hpp"

namespace aslsim {

/// Macrospin model parameters. The easy axis is +z (PMA); the spin torque
/// polarization points along -z, switching the magnet from up to down.
struct MacrospinParams {
    double alpha = 0.01;                  // Gilbert damping
    double gamma = 1.76e11;               // rad/(s T)
    double ms_emu_cc = 780.0;
    Geometry magnet_plan{30.0, 10.0, 3.0};
    double hk_am = 3.7565e5;              // easy-axis anisotropy field, A/m
    double temperature = 300.0;           // K
    double dt = 1e-12;                    // s
    double horizon = 6e-9;                // s
    double switch_threshold = 0.9;        // switched at m_z <= -threshold
    double torque_scale = 1.285;          // torque prefactor calibration
    double initial_angle = -1.0;          // rad; < 0 samples the thermal cone
    // spin polarization direction; the collinear model supports the easy
    // axis only, and +z mirrors the -z dynamics exactly
    std::array<double, 3> polarization{0.0, 0.0, -1.0};

    void validate() const;
    double msv() const;                   // M_s V in A m^2 (SI)
    double anisotropy_tesla() const;      // mu0 H_k
    double thermal_sigma() const;         // T per field component
    double barrier_kt() const;            // E_b / k_B T (0 at T = 0)
    double torque_tesla(double i_s) const;
};

struct SwitchingTrial {
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    bool switched = false;
    double switch_time = 0.0;  // s, first threshold crossing
    double theta0 = 0.0;       // initial polar angle actually used
};

/// Single-trial integration (deterministic given seed/trial).
SwitchingTrial integrate_llgs(double i_s, const MacrospinParams& params,
                              std::uint64_t seed, std::uint64_t trial = 0);

/// Step-by-step reference integration capturing |m| drift and decimated
/// trajectory samples; used for validation.
struct TrajectoryProbe {
    SwitchingTrial trial;
    double max_norm_error = 0.0;           // after renormalization
    std::vector<std::array<double, 4>> samples;  // t, mx, my, mz
};
TrajectoryProbe integrate_llgs_trajectory(double i_s, const MacrospinParams& params,
                                          std::uint64_t seed, std::uint64_t trial = 0,
                                          int stride = 0);

/// Sorted switching-time sample with percentile/CDF accessors.
class DelayDistribution {
public:
    DelayDistribution(std::vector<double> switch_times, int total_trials,
                      std::uint64_t seed);

    int total_trials() const { return total_; }
    int switched_trials() const { return static_cast<int>(times_.size()); }
    int unswitched_trials() const { return total_ - switched_trials(); }
    bool all_switched() const { return unswitched_trials() == 0; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<double>& times() const { return times_; }

    /// P(switch time <= t), counting unswitched trials as never switching.
    double cdf(double t) const;
    /// Linear-interpolated percentile of the switched sample; throws when
    /// the requested quantile falls into the unswitched mass.
    double percentile(double pct) const;
    double relative_spread() const;  // (p99 - p50) / p50

private:
    std::vector<double> times_;
    int total_ = 0;
    std::uint64_t seed_ = 0;
};

/// N independent trials with per-trial counter streams; deterministic and
/// thread-parallel (results do not depend on scheduling).
DelayDistribution monte_carlo(double i_s, const MacrospinParams& params, int trials,
                              std::uint64_t base_seed, int threads = 0);

/// STEM window sizing from two switching-time distributions at confidence
/// pct (default operating point: 99). Throws ScheduleError when infeasible.
struct StochasticWindow {
    double t_min = 0.0;
    double t_max = 0.0;
};
StochasticWindow window_from_distribution(const DelayDistribution& must_switch,
                                          const DelayDistribution& must_not_switch,
                                          double confidence_pct);

}  // namespace aslsim
