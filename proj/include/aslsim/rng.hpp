#pragma once

#include <array>
#include <cstdint>

namespace aslsim {

/// Philox4x64-10 counter-based block generator. Stateless: every 256-bit
/// output block is addressed by (counter, key), so per-trial streams are
/// independent without shared state and order of evaluation never matters.
struct Philox4x64 {
    static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> ctr,
                                              std::array<std::uint64_t, 2> key);
};

/// uniform double in (0, 1), 52-bit resolution, never exactly 0 or 1
double u64_to_unit_double(std::uint64_t x);

/// One trial's random stream, addressed by (step, slot).
class TrialStream {
public:
    TrialStream(std::uint64_t seed, std::uint64_t trial) : seed_(seed), trial_(trial) {}

    std::array<std::uint64_t, 4> raw(std::uint64_t step, std::uint64_t slot) const {
        return Philox4x64::block({step, slot, 0, 0}, {seed_, trial_});
    }

    /// Three standard normals for the thermal field of one step
    /// (two Box-Muller pairs, fourth value discarded).
    std::array<double, 3> gauss3(std::uint64_t step) const;

    /// (u_theta, u_phi) used to draw the initial magnetization.
    std::array<double, 2> init_pair() const;

private:
    std::uint64_t seed_;
    std::uint64_t trial_;
};

}  // namespace aslsim
