#pragma once

// Inner loops of the simulator. The scalar versions are the reference; the
// vector versions must agree with them to rounding (sums may be reassociated).

#include <cstddef>
#include <string_view>

namespace stiran::simd {

/// sum_i w[i] * (d[i] / ref)^-alpha.
using PathLossSumFn = double (*)(const double* d, const double* w, std::size_t n, double alpha, double ref);
/// Index of the smallest element (first one on ties); n must be > 0.
using ArgminFn = std::size_t (*)(const double* x, std::size_t n);

struct KernelTable {
    std::string_view name;
    PathLossSumFn path_loss_sum;
    ArgminFn argmin;
};

const KernelTable& scalar_kernels();
/// nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best table for this CPU. STIRAN_SIMD=scalar in the environment forces the
/// scalar table.
const KernelTable& active_kernels();

namespace scalar {
double path_loss_sum(const double* d, const double* w, std::size_t n, double alpha, double ref);
std::size_t argmin(const double* x, std::size_t n);
}  // namespace scalar

}  // namespace stiran::simd
