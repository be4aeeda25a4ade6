#include <immintrin.h>

#include <cmath>
#include <limits>

#include "stiran/simd/kernels.hpp"

namespace stiran::simd {

namespace {

// (ref/d)^alpha for even integer alpha up to 16 by repeated squaring-free
// multiplication; anything else goes to the scalar kernel.
int even_power(double alpha) {
    if (alpha == std::floor(alpha) && alpha >= 2.0 && alpha <= 16.0 && static_cast<int>(alpha) % 2 == 0) {
        return static_cast<int>(alpha) / 2;
    }
    return 0;
}

double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double path_loss_sum_avx2(const double* d, const double* w, std::size_t n, double alpha, double ref) {
    const int half = even_power(alpha);
    if (half == 0) {
        return scalar::path_loss_sum(d, w, n, alpha, ref);
    }
    const __m256d vref = _mm256_set1_pd(ref);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d q0 = _mm256_div_pd(vref, _mm256_loadu_pd(d + i));
        const __m256d q1 = _mm256_div_pd(vref, _mm256_loadu_pd(d + i + 4));
        const __m256d s0 = _mm256_mul_pd(q0, q0);
        const __m256d s1 = _mm256_mul_pd(q1, q1);
        __m256d p0 = s0;
        __m256d p1 = s1;
        for (int k = 1; k < half; ++k) {
            p0 = _mm256_mul_pd(p0, s0);
            p1 = _mm256_mul_pd(p1, s1);
        }
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), p0, acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i + 4), p1, acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        const double q = ref / d[i];
        const double s = q * q;
        double p = s;
        for (int k = 1; k < half; ++k) p *= s;
        acc += w[i] * p;
    }
    return acc;
}

std::size_t argmin_avx2(const double* x, std::size_t n) {
    if (n < 8) {
        return scalar::argmin(x, n);
    }
    __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    __m256d best_idx = _mm256_setzero_pd();
    __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
    const __m256d step = _mm256_set1_pd(4.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        const __m256d lt = _mm256_cmp_pd(v, best, _CMP_LT_OQ);
        best = _mm256_blendv_pd(best, v, lt);
        best_idx = _mm256_blendv_pd(best_idx, idx, lt);
        idx = _mm256_add_pd(idx, step);
    }
    alignas(32) double vals[4];
    alignas(32) double ids[4];
    _mm256_store_pd(vals, best);
    _mm256_store_pd(ids, best_idx);
    std::size_t out = static_cast<std::size_t>(ids[0]);
    double v = vals[0];
    for (int k = 1; k < 4; ++k) {
        const auto id = static_cast<std::size_t>(ids[k]);
        if (vals[k] < v || (vals[k] == v && id < out)) {
            v = vals[k];
            out = id;
        }
    }
    for (; i < n; ++i) {
        if (x[i] < v) {
            v = x[i];
            out = i;
        }
    }
    return out;
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable table{"avx2", &path_loss_sum_avx2, &argmin_avx2};
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) {
        return nullptr;
    }
    return &table;
}

}  // namespace stiran::simd
