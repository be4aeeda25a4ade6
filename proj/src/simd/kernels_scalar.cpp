#include <cmath>

#include "stiran/simd/kernels.hpp"

namespace stiran::simd::scalar {

double path_loss_sum(const double* d, const double* w, std::size_t n, double alpha, double ref) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += w[i] * std::pow(d[i] / ref, -alpha);
    }
    return acc;
}

std::size_t argmin(const double* x, std::size_t n) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (x[i] < x[best]) best = i;
    }
    return best;
}

}  // namespace stiran::simd::scalar
