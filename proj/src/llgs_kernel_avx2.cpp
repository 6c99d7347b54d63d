#include "aslsim/errors.hpp"
#include "aslsim/llgs_kernel.hpp"
#include "aslsim/rng.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

#include <cmath>
#include <string>

namespace aslsim {

namespace {

// Four trials per batch, one per lane. Every arithmetic step matches the
// reference kernel's expression tree one IEEE operation at a time (no FMA),
// so a lane reproduces the scalar trajectory exactly.
struct Lanes {
    __m256d x, y, z;
};

inline __m256d neg(__m256d v) { return _mm256_sub_pd(_mm256_setzero_pd(), v); }

}  // namespace

void llgs_batch_avx2(const KernelParams& p, std::uint64_t trial0, int count,
                     const double* theta0, const double* phi0,
                     std::int32_t* switch_step) {
    const int groups = count / 4;
    const int rem = count % 4;

    const __m256d valpha = _mm256_set1_pd(p.alpha);
    const __m256d vaj = _mm256_set1_pd(p.aj);
    const __m256d valphaj = _mm256_set1_pd(p.alpha * p.aj);
    const __m256d vbk = _mm256_set1_pd(p.bk);
    const __m256d vpref = _mm256_set1_pd(-p.gamma / (1.0 + p.alpha * p.alpha));
    const __m256d vdt = _mm256_set1_pd(p.dt);
    const __m256d vhalf_dt = _mm256_set1_pd(0.5 * p.dt);
    const __m256d vneg_thr = _mm256_set1_pd(-p.threshold);

    for (int g = 0; g < groups; ++g) {
        const int base = 4 * g;
        TrialStream streams[4] = {
            {p.seed, trial0 + static_cast<std::uint64_t>(base)},
            {p.seed, trial0 + static_cast<std::uint64_t>(base + 1)},
            {p.seed, trial0 + static_cast<std::uint64_t>(base + 2)},
            {p.seed, trial0 + static_cast<std::uint64_t>(base + 3)}};

        alignas(32) double ix[4], iy[4], iz[4];
        for (int l = 0; l < 4; ++l) {
            const double st = std::sin(theta0[base + l]);
            ix[l] = st * std::cos(phi0[base + l]);
            iy[l] = st * std::sin(phi0[base + l]);
            iz[l] = std::cos(theta0[base + l]);
            switch_step[base + l] = -1;
        }
        Lanes m{_mm256_load_pd(ix), _mm256_load_pd(iy), _mm256_load_pd(iz)};
        int done_mask = 0;

        auto rhs = [&](const Lanes& s, const Lanes& bth, Lanes& d) {
            const __m256d bx = bth.x;
            const __m256d by = bth.y;
            const __m256d bz = _mm256_add_pd(bth.z, _mm256_mul_pd(vbk, s.z));
            const __m256d cx =
                _mm256_sub_pd(_mm256_mul_pd(s.y, bz), _mm256_mul_pd(s.z, by));
            const __m256d cy =
                _mm256_sub_pd(_mm256_mul_pd(s.z, bx), _mm256_mul_pd(s.x, bz));
            const __m256d cz =
                _mm256_sub_pd(_mm256_mul_pd(s.x, by), _mm256_mul_pd(s.y, bx));
            const __m256d dxx =
                _mm256_sub_pd(_mm256_mul_pd(s.y, cz), _mm256_mul_pd(s.z, cy));
            const __m256d dyy =
                _mm256_sub_pd(_mm256_mul_pd(s.z, cx), _mm256_mul_pd(s.x, cz));
            const __m256d dzz =
                _mm256_sub_pd(_mm256_mul_pd(s.x, cy), _mm256_mul_pd(s.y, cx));
            const __m256d sx = neg(s.y);
            const __m256d sy = s.x;
            const __m256d ex = neg(_mm256_mul_pd(s.z, sy));
            const __m256d ey = _mm256_mul_pd(s.z, sx);
            const __m256d ez =
                _mm256_sub_pd(_mm256_mul_pd(s.x, sy), _mm256_mul_pd(s.y, sx));
            d.x = _mm256_mul_pd(
                vpref, _mm256_sub_pd(
                           _mm256_add_pd(_mm256_add_pd(cx, _mm256_mul_pd(valpha, dxx)),
                                         _mm256_mul_pd(vaj, ex)),
                           _mm256_mul_pd(valphaj, sx)));
            d.y = _mm256_mul_pd(
                vpref, _mm256_sub_pd(
                           _mm256_add_pd(_mm256_add_pd(cy, _mm256_mul_pd(valpha, dyy)),
                                         _mm256_mul_pd(vaj, ey)),
                           _mm256_mul_pd(valphaj, sy)));
            d.z = _mm256_mul_pd(
                vpref, _mm256_add_pd(_mm256_add_pd(cz, _mm256_mul_pd(valpha, dzz)),
                                     _mm256_mul_pd(vaj, ez)));
        };

        for (std::int32_t step = 0; step < p.max_steps && done_mask != 0xF; ++step) {
            Lanes bth{_mm256_setzero_pd(), _mm256_setzero_pd(), _mm256_setzero_pd()};
            if (p.sigma != 0.0) {
                alignas(32) double gx[4], gy[4], gz[4];
                for (int l = 0; l < 4; ++l) {
                    const auto n = streams[l].gauss3(static_cast<std::uint64_t>(step));
                    gx[l] = p.sigma * n[0];
                    gy[l] = p.sigma * n[1];
                    gz[l] = p.sigma * n[2];
                }
                bth = {_mm256_load_pd(gx), _mm256_load_pd(gy), _mm256_load_pd(gz)};
            }

            Lanes k1, k2, pred;
            rhs(m, bth, k1);
            pred.x = _mm256_add_pd(m.x, _mm256_mul_pd(vdt, k1.x));
            pred.y = _mm256_add_pd(m.y, _mm256_mul_pd(vdt, k1.y));
            pred.z = _mm256_add_pd(m.z, _mm256_mul_pd(vdt, k1.z));
            rhs(pred, bth, k2);
            m.x = _mm256_add_pd(m.x, _mm256_mul_pd(vhalf_dt, _mm256_add_pd(k1.x, k2.x)));
            m.y = _mm256_add_pd(m.y, _mm256_mul_pd(vhalf_dt, _mm256_add_pd(k1.y, k2.y)));
            m.z = _mm256_add_pd(m.z, _mm256_mul_pd(vhalf_dt, _mm256_add_pd(k1.z, k2.z)));
            const __m256d nrm = _mm256_sqrt_pd(_mm256_add_pd(
                _mm256_add_pd(_mm256_mul_pd(m.x, m.x), _mm256_mul_pd(m.y, m.y)),
                _mm256_mul_pd(m.z, m.z)));
            m.x = _mm256_div_pd(m.x, nrm);
            m.y = _mm256_div_pd(m.y, nrm);
            m.z = _mm256_div_pd(m.z, nrm);

            const int nan_mask =
                _mm256_movemask_pd(_mm256_cmp_pd(m.z, m.z, _CMP_UNORD_Q));
            if (nan_mask & ~done_mask)
                throw IntegrationError("LLGS state became non-finite at step " +
                                       std::to_string(step));
            const int crossed =
                _mm256_movemask_pd(_mm256_cmp_pd(m.z, vneg_thr, _CMP_LE_OQ));
            int newly = crossed & ~done_mask;
            while (newly) {
                const int lane = __builtin_ctz(newly);
                switch_step[base + lane] = step + 1;
                newly &= newly - 1;
            }
            done_mask |= crossed;
        }
    }

    if (rem > 0)
        llgs_batch_reference(p, trial0 + static_cast<std::uint64_t>(4 * groups), rem,
                             theta0 + 4 * groups, phi0 + 4 * groups,
                             switch_step + 4 * groups);
}

}  // namespace aslsim

#endif  // __x86_64__
