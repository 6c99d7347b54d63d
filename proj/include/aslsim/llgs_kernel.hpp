#pragma once

#include <cstdint>
#include <string>

namespace aslsim {

/// Scaled step inputs for the inner integration loop. Fields are plain
/// doubles so the scalar and SIMD variants consume identical data.
struct KernelParams {
    double alpha = 0.0;       // Gilbert damping
    double gamma = 0.0;       // rad/(s T)
    double bk = 0.0;          // anisotropy field along +z, T
    double aj = 0.0;          // Slonczewski torque field toward -z, T
    double sigma = 0.0;       // thermal field std-dev per component, T
    double dt = 0.0;          // s
    double threshold = 0.9;   // switched when m_z <= -threshold
    std::uint64_t seed = 0;
    std::int32_t max_steps = 0;
};

/// Integrates `count` independent trials with global indices
/// trial0 .. trial0+count-1, starting from (theta0[i], phi0[i]).
/// switch_step[i] receives the first step whose renormalized state crosses
/// the threshold, or -1 when the horizon is exhausted.
using LlgsBatchFn = void (*)(const KernelParams& p, std::uint64_t trial0, int count,
                             const double* theta0, const double* phi0,
                             std::int32_t* switch_step);

void llgs_batch_reference(const KernelParams& p, std::uint64_t trial0, int count,
                          const double* theta0, const double* phi0,
                          std::int32_t* switch_step);

#if defined(__x86_64__)
void llgs_batch_avx2(const KernelParams& p, std::uint64_t trial0, int count,
                     const double* theta0, const double* phi0,
                     std::int32_t* switch_step);
#endif

bool avx2_supported();

/// Active kernel selection. "auto" (default) picks AVX2 when the CPU has it;
/// "reference" and "avx2" force a variant (tests use this for equivalence).
void select_llgs_kernel(const std::string& name);
LlgsBatchFn active_llgs_kernel();
std::string active_llgs_kernel_name();

}  // namespace aslsim
