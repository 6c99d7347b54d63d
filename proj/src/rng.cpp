#include "aslsim/rng.hpp"

#include <cmath>

namespace aslsim {

namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
}

}  // namespace

std::array<std::uint64_t, 4> Philox4x64::block(std::array<std::uint64_t, 4> ctr,
                                               std::array<std::uint64_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        std::uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

double u64_to_unit_double(std::uint64_t x) {
    return (static_cast<double>(x >> 12) + 0.5) * 0x1.0p-52;
}

std::array<double, 3> TrialStream::gauss3(std::uint64_t step) const {
    const auto w = raw(step, 0);
    const double u1 = u64_to_unit_double(w[0]);
    const double u2 = u64_to_unit_double(w[1]);
    const double u3 = u64_to_unit_double(w[2]);
    const double u4 = u64_to_unit_double(w[3]);
    const double r1 = std::sqrt(-2.0 * std::log(u1));
    const double r2 = std::sqrt(-2.0 * std::log(u3));
    constexpr double two_pi = 6.283185307179586476925286766559;
    return {r1 * std::cos(two_pi * u2), r1 * std::sin(two_pi * u2),
            r2 * std::cos(two_pi * u4)};
}

std::array<double, 2> TrialStream::init_pair() const {
    const auto w = raw(~0ULL, ~0ULL);
    return {u64_to_unit_double(w[0]), u64_to_unit_double(w[1])};
}

}  // namespace aslsim
