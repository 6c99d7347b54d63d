#include "aslsim/llgs.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

#include "aslsim/constants.hpp"
#include "aslsim/errors.hpp"
#include "aslsim/rng.hpp"

namespace aslsim {

namespace {
constexpr double kMu0 = 1.25663706212e-6;  // T m / A
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

void MacrospinParams::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ParameterError("llgs: alpha must be in (0,1)");
    if (!(gamma > 0.0)) throw ParameterError("llgs: gamma must be > 0");
    if (!(dt > 0.0)) throw ParameterError("llgs: dt must be > 0");
    if (!(horizon > dt)) throw ParameterError("llgs: horizon must exceed dt");
    if (!(ms_emu_cc > 0.0)) throw ParameterError("llgs: Ms must be > 0");
    if (!(hk_am >= 0.0)) throw ParameterError("llgs: Hk must be >= 0");
    if (!(temperature >= 0.0)) throw ParameterError("llgs: temperature must be >= 0");
    if (!(switch_threshold > 0.0 && switch_threshold < 1.0))
        throw ParameterError("llgs: switch threshold must be in (0,1)");
    if (!(torque_scale > 0.0)) throw ParameterError("llgs: torque scale must be > 0");
    const double pnorm = std::sqrt(polarization[0] * polarization[0] +
                                   polarization[1] * polarization[1] +
                                   polarization[2] * polarization[2]);
    if (std::abs(pnorm - 1.0) > 1e-12)
        throw ParameterError("llgs: polarization must be a unit vector");
    if (polarization[0] != 0.0 || polarization[1] != 0.0)
        throw ParameterError("llgs: collinear model supports easy-axis polarization only");
    magnet_plan.validate();
}

double MacrospinParams::msv() const {
    return ms_emu_cc * constants::emu_cc_to_A_m * magnet_plan.volume() *
           constants::nm3_to_m3;
}

double MacrospinParams::anisotropy_tesla() const { return kMu0 * hk_am; }

double MacrospinParams::thermal_sigma() const {
    if (temperature <= 0.0) return 0.0;
    return std::sqrt(2.0 * alpha * constants::boltzmann * temperature /
                     (gamma * msv() * dt));
}

double MacrospinParams::barrier_kt() const {
    if (temperature <= 0.0) return 0.0;
    return msv() * anisotropy_tesla() /
           (2.0 * constants::boltzmann * temperature);
}

double MacrospinParams::torque_tesla(double i_s) const {
    return constants::hbar * torque_scale * i_s /
           (2.0 * constants::electron_charge * msv());
}

namespace {

KernelParams kernel_params(double i_s, const MacrospinParams& mp, std::uint64_t seed) {
    if (!(i_s > 0.0))
        throw NoSwitchingDrive("llgs: switching current must be positive");
    mp.validate();
    KernelParams kp;
    kp.alpha = mp.alpha;
    kp.gamma = mp.gamma;
    kp.bk = mp.anisotropy_tesla();
    kp.aj = mp.torque_tesla(i_s);
    kp.sigma = mp.thermal_sigma();
    kp.dt = mp.dt;
    kp.threshold = mp.switch_threshold;
    kp.seed = seed;
    kp.max_steps = static_cast<std::int32_t>(mp.horizon / mp.dt);
    return kp;
}

// Thermal-cone draw: p(theta) ~ theta exp(-Delta theta^2) for small angles,
// so theta = sqrt(-ln u / Delta). At T = 0 the cone collapses onto the axis.
double draw_theta0(const MacrospinParams& mp, std::uint64_t seed,
                   std::uint64_t trial) {
    if (mp.initial_angle >= 0.0) return mp.initial_angle;
    const double delta = mp.barrier_kt();
    if (delta <= 0.0) return 0.0;
    const TrialStream stream(seed, trial);
    const double u = stream.init_pair()[0];
    return std::sqrt(-std::log(u) / delta);
}

double draw_phi0(std::uint64_t seed, std::uint64_t trial) {
    const TrialStream stream(seed, trial);
    return kTwoPi * stream.init_pair()[1];
}

}  // namespace

SwitchingTrial integrate_llgs(double i_s, const MacrospinParams& params,
                              std::uint64_t seed, std::uint64_t trial) {
    const KernelParams kp = kernel_params(i_s, params, seed);
    const double theta0 = draw_theta0(params, seed, trial);
    const double phi0 = draw_phi0(seed, trial);
    std::int32_t step = -1;
    active_llgs_kernel()(kp, trial, 1, &theta0, &phi0, &step);
    SwitchingTrial t;
    t.seed = seed;
    t.trial = trial;
    t.theta0 = theta0;
    t.switched = step >= 0;
    t.switch_time = step >= 0 ? step * params.dt : 0.0;
    return t;
}

TrajectoryProbe integrate_llgs_trajectory(double i_s, const MacrospinParams& params,
                                          std::uint64_t seed, std::uint64_t trial,
                                          int stride) {
    const KernelParams p = kernel_params(i_s, params, seed);
    const double theta0 = draw_theta0(params, seed, trial);
    const double phi0 = draw_phi0(seed, trial);
    const TrialStream stream(seed, trial);
    const double pref = -p.gamma / (1.0 + p.alpha * p.alpha);

    TrajectoryProbe probe;
    probe.trial.seed = seed;
    probe.trial.trial = trial;
    probe.trial.theta0 = theta0;

    const double st = std::sin(theta0);
    double mx = st * std::cos(phi0);
    double my = st * std::sin(phi0);
    double mz = std::cos(theta0);

    for (std::int32_t step = 0; step < p.max_steps; ++step) {
        double bthx = 0.0, bthy = 0.0, bthz = 0.0;
        if (p.sigma != 0.0) {
            const auto g = stream.gauss3(static_cast<std::uint64_t>(step));
            bthx = p.sigma * g[0];
            bthy = p.sigma * g[1];
            bthz = p.sigma * g[2];
        }
        auto rhs = [&](double x, double y, double z, double& dx, double& dy,
                       double& dz) {
            const double bx = bthx;
            const double by = bthy;
            const double bz = bthz + p.bk * z;
            const double cx = y * bz - z * by;
            const double cy = z * bx - x * bz;
            const double cz = x * by - y * bx;
            const double dxx = y * cz - z * cy;
            const double dyy = z * cx - x * cz;
            const double dzz = x * cy - y * cx;
            const double sx = 0.0 - y;
            const double sy = x;
            const double ex = 0.0 - z * sy;
            const double ey = z * sx;
            const double ez = x * sy - y * sx;
            dx = pref * (cx + p.alpha * dxx + p.aj * ex - p.alpha * p.aj * sx);
            dy = pref * (cy + p.alpha * dyy + p.aj * ey - p.alpha * p.aj * sy);
            dz = pref * (cz + p.alpha * dzz + p.aj * ez);
        };
        double k1x, k1y, k1z, k2x, k2y, k2z;
        rhs(mx, my, mz, k1x, k1y, k1z);
        rhs(mx + p.dt * k1x, my + p.dt * k1y, mz + p.dt * k1z, k2x, k2y, k2z);
        const double half_dt = 0.5 * p.dt;
        mx = mx + half_dt * (k1x + k2x);
        my = my + half_dt * (k1y + k2y);
        mz = mz + half_dt * (k1z + k2z);
        const double nrm = std::sqrt(mx * mx + my * my + mz * mz);
        mx = mx / nrm;
        my = my / nrm;
        mz = mz / nrm;
        probe.max_norm_error = std::max(
            probe.max_norm_error,
            std::abs(std::sqrt(mx * mx + my * my + mz * mz) - 1.0));
        if (!std::isfinite(mx + my + mz))
            throw IntegrationError("trajectory probe: non-finite state at step " +
                                   std::to_string(step));
        if (stride > 0 && (step + 1) % stride == 0)
            probe.samples.push_back({(step + 1) * p.dt, mx, my, mz});
        if (mz <= -p.threshold) {
            probe.trial.switched = true;
            probe.trial.switch_time = (step + 1) * p.dt;
            break;
        }
    }
    return probe;
}

DelayDistribution::DelayDistribution(std::vector<double> switch_times,
                                     int total_trials, std::uint64_t seed)
    : times_(std::move(switch_times)), total_(total_trials), seed_(seed) {
    std::sort(times_.begin(), times_.end());
    if (total_ < static_cast<int>(times_.size()))
        throw ParameterError("distribution: more switch times than trials");
}

double DelayDistribution::cdf(double t) const {
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    return total_ == 0 ? 0.0
                       : static_cast<double>(it - times_.begin()) / total_;
}

double DelayDistribution::percentile(double pct) const {
    if (times_.empty()) throw ParameterError("distribution: no switched trials");
    if (!(pct >= 0.0 && pct <= 100.0))
        throw ParameterError("distribution: percentile out of range");
    if (pct / 100.0 > static_cast<double>(times_.size()) / total_)
        throw ParameterError(
            "distribution: requested percentile falls into the unswitched mass");
    if (times_.size() == 1) return times_.front();
    const double pos = pct / 100.0 * (static_cast<double>(total_) - 1.0);
    const auto lo = static_cast<size_t>(std::min(
        static_cast<double>(times_.size() - 1), std::floor(pos)));
    const auto hi = std::min(times_.size() - 1, lo + 1);
    const double frac = pos - static_cast<double>(lo);
    return times_[lo] + (times_[hi] - times_[lo]) * frac;
}

double DelayDistribution::relative_spread() const {
    const double p50 = percentile(50.0);
    return (percentile(99.0) - p50) / p50;
}

DelayDistribution monte_carlo(double i_s, const MacrospinParams& params, int trials,
                              std::uint64_t base_seed, int threads) {
    if (trials < 1) throw ParameterError("monte_carlo: need at least one trial");
    const KernelParams kp = kernel_params(i_s, params, base_seed);

    std::vector<double> theta0(trials), phi0(trials);
    for (int t = 0; t < trials; ++t) {
        theta0[t] = draw_theta0(params, base_seed, static_cast<std::uint64_t>(t));
        phi0[t] = draw_phi0(base_seed, static_cast<std::uint64_t>(t));
    }
    std::vector<std::int32_t> steps(trials, -1);

    const LlgsBatchFn kernel = active_llgs_kernel();
    int nthreads = threads > 0 ? threads
                               : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min(nthreads, trials));
    if (nthreads == 1) {
        kernel(kp, 0, trials, theta0.data(), phi0.data(), steps.data());
    } else {
        // static partition into kernel-width multiples; per-trial streams make
        // the result independent of the split
        const int chunk = ((trials + nthreads - 1) / nthreads + 3) / 4 * 4;
        std::vector<std::thread> pool;
        std::exception_ptr error;
        std::mutex error_mu;
        for (int k = 0; k < nthreads; ++k) {
            const int begin = k * chunk;
            if (begin >= trials) break;
            const int count = std::min(chunk, trials - begin);
            pool.emplace_back([&, begin, count] {
                try {
                    kernel(kp, static_cast<std::uint64_t>(begin), count,
                           theta0.data() + begin, phi0.data() + begin,
                           steps.data() + begin);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }

    std::vector<double> times;
    times.reserve(trials);
    for (int t = 0; t < trials; ++t)
        if (steps[t] >= 0) times.push_back(steps[t] * params.dt);
    return DelayDistribution(std::move(times), trials, base_seed);
}

StochasticWindow window_from_distribution(const DelayDistribution& must_switch,
                                          const DelayDistribution& must_not_switch,
                                          double confidence_pct) {
    if (must_switch.switched_trials() == 0 || must_not_switch.switched_trials() == 0)
        throw ParameterError("window_from_distribution: empty distribution");
    StochasticWindow w;
    w.t_min = must_switch.percentile(confidence_pct);
    w.t_max = must_not_switch.percentile(100.0 - confidence_pct);
    if (!(w.t_min < w.t_max))
        throw ScheduleError(
            "stochastically infeasible window: must-switch p" +
            std::to_string(confidence_pct) + " = " + std::to_string(w.t_min) +
            " s is not below must-not-switch p" +
            std::to_string(100.0 - confidence_pct) + " = " + std::to_string(w.t_max) +
            " s");
    return w;
}

}  // namespace aslsim
