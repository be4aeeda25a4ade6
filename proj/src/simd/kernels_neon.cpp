#include <arm_neon.h>

#include <cmath>

#include "stiran/simd/kernels.hpp"

namespace stiran::simd {

namespace {

int even_power(double alpha) {
    if (alpha == std::floor(alpha) && alpha >= 2.0 && alpha <= 16.0 && static_cast<int>(alpha) % 2 == 0) {
        return static_cast<int>(alpha) / 2;
    }
    return 0;
}

double path_loss_sum_neon(const double* d, const double* w, std::size_t n, double alpha, double ref) {
    const int half = even_power(alpha);
    if (half == 0) {
        return scalar::path_loss_sum(d, w, n, alpha, ref);
    }
    const float64x2_t vref = vdupq_n_f64(ref);
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t q = vdivq_f64(vref, vld1q_f64(d + i));
        const float64x2_t s = vmulq_f64(q, q);
        float64x2_t p = s;
        for (int k = 1; k < half; ++k) p = vmulq_f64(p, s);
        acc = vfmaq_f64(acc, vld1q_f64(w + i), p);
    }
    double out = vaddvq_f64(acc);
    for (; i < n; ++i) {
        const double q = ref / d[i];
        const double s = q * q;
        double p = s;
        for (int k = 1; k < half; ++k) p *= s;
        out += w[i] * p;
    }
    return out;
}

}  // namespace

const KernelTable* neon_kernels() {
    static const KernelTable table{"neon", &path_loss_sum_neon, &scalar::argmin};
    return &table;
}

}  // namespace stiran::simd
