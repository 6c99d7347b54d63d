#include <cmath>

#include "aslsim/errors.hpp"
#include "aslsim/llgs_kernel.hpp"
#include "aslsim/rng.hpp"

namespace aslsim {

// Scalar reference kernel. The SIMD variant must follow the exact same
// per-trial operation sequence: every expression below maps to one
// correctly-rounded IEEE operation (the build disables FP contraction),
// so lane-wise results are reproducible bit for bit.
void llgs_batch_reference(const KernelParams& p, std::uint64_t trial0, int count,
                          const double* theta0, const double* phi0,
                          std::int32_t* switch_step) {
    const double pref = -p.gamma / (1.0 + p.alpha * p.alpha);

    for (int i = 0; i < count; ++i) {
        const TrialStream stream(p.seed, trial0 + static_cast<std::uint64_t>(i));
        const double st = std::sin(theta0[i]);
        double mx = st * std::cos(phi0[i]);
        double my = st * std::sin(phi0[i]);
        double mz = std::cos(theta0[i]);
        switch_step[i] = -1;

        for (std::int32_t step = 0; step < p.max_steps; ++step) {
            double bthx = 0.0, bthy = 0.0, bthz = 0.0;
            if (p.sigma != 0.0) {
                const auto g = stream.gauss3(static_cast<std::uint64_t>(step));
                bthx = p.sigma * g[0];
                bthy = p.sigma * g[1];
                bthz = p.sigma * g[2];
            }

            // dm = pref * (m x B + a m x (m x B) + aj m x (m x p) - a aj m x p)
            // with B = B_th + bk m_z z and p = -z
            auto rhs = [&](double x, double y, double z, double& dx, double& dy,
                           double& dz) {
                const double bx = bthx;
                const double by = bthy;
                const double bz = bthz + p.bk * z;
                // c = m x B
                const double cx = y * bz - z * by;
                const double cy = z * bx - x * bz;
                const double cz = x * by - y * bx;
                // d = m x (m x B)
                const double dxx = y * cz - z * cy;
                const double dyy = z * cx - x * cz;
                const double dzz = x * cy - y * cx;
                // s = m x p and e = m x (m x p), p = (0,0,-1)
                const double sx = 0.0 - y;
                const double sy = x;
                const double ex = 0.0 - z * sy;
                const double ey = z * sx;
                const double ez = x * sy - y * sx;
                dx = pref * (cx + p.alpha * dxx + p.aj * ex - p.alpha * p.aj * sx);
                dy = pref * (cy + p.alpha * dyy + p.aj * ey - p.alpha * p.aj * sy);
                dz = pref * (cz + p.alpha * dzz + p.aj * ez);
            };

            double k1x, k1y, k1z;
            rhs(mx, my, mz, k1x, k1y, k1z);
            const double px1 = mx + p.dt * k1x;
            const double py1 = my + p.dt * k1y;
            const double pz1 = mz + p.dt * k1z;
            double k2x, k2y, k2z;
            rhs(px1, py1, pz1, k2x, k2y, k2z);
            const double half_dt = 0.5 * p.dt;
            mx = mx + half_dt * (k1x + k2x);
            my = my + half_dt * (k1y + k2y);
            mz = mz + half_dt * (k1z + k2z);
            const double nrm = std::sqrt(mx * mx + my * my + mz * mz);
            mx = mx / nrm;
            my = my / nrm;
            mz = mz / nrm;

            if (!(nrm > 0.0) || !std::isfinite(mx + my + mz))
                throw IntegrationError("LLGS state became non-finite at step " +
                                       std::to_string(step));
            if (mz <= -p.threshold) {
                switch_step[i] = step + 1;
                break;
            }
        }
    }
}

}  // namespace aslsim

namespace aslsim {

bool avx2_supported() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {
LlgsBatchFn g_kernel = nullptr;
std::string g_kernel_name = "auto";

LlgsBatchFn resolve(const std::string& name) {
#if defined(__x86_64__)
    if (name == "avx2") {
        if (!avx2_supported())
            throw ParameterError("llgs kernel: avx2 requested but not supported");
        return llgs_batch_avx2;
    }
    if (name == "auto")
        return avx2_supported() ? llgs_batch_avx2 : llgs_batch_reference;
#else
    if (name == "avx2")
        throw ParameterError("llgs kernel: avx2 requested on non-x86 build");
    if (name == "auto") return llgs_batch_reference;
#endif
    if (name == "reference") return llgs_batch_reference;
    throw ParameterError("llgs kernel: unknown variant '" + name + "'");
}
}  // namespace

void select_llgs_kernel(const std::string& name) {
    g_kernel = resolve(name);
    g_kernel_name = name;
}

LlgsBatchFn active_llgs_kernel() {
    if (g_kernel == nullptr) g_kernel = resolve("auto");
    return g_kernel;
}

std::string active_llgs_kernel_name() {
    if (g_kernel == nullptr) return "auto";
    if (g_kernel == llgs_batch_reference) return "reference";
#if defined(__x86_64__)
    if (g_kernel == llgs_batch_avx2) return "avx2";
#endif
    return g_kernel_name;
}

}  // namespace aslsim
