#include "doctest.h"

#include <cmath>
#include <random>

#include "stiran/simd/kernels.hpp"

using namespace stiran::simd;

namespace {
std::vector<double> random_vec(std::size_t n, double lo, double hi, unsigned seed) {
    std::mt19937_64 g(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = u(g);
    return v;
}

void check_table(const KernelTable& k) {
    const auto& ref = scalar_kernels();
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 64u, 257u, 1000u}) {
        auto d = random_vec(n, 0.1, 80.0, 1 + n);
        auto w = random_vec(n, 0.0, 5.0, 2 + n);
        for (double alpha : {2.0, 3.0, 3.7, 4.0, 6.0}) {
            const double a = ref.path_loss_sum(d.data(), w.data(), n, alpha, 1e-3);
            const double b = k.path_loss_sum(d.data(), w.data(), n, alpha, 1e-3);
            CHECK(b == doctest::Approx(a).epsilon(1e-12));
        }
        if (n) {
            CHECK(k.argmin(d.data(), n) == ref.argmin(d.data(), n));
            // ties resolve to the first index
            std::vector<double> t(n, 2.0);
            t[n / 2] = 1.0;
            if (n > 2) t[n - 1] = 1.0;
            CHECK(k.argmin(t.data(), n) == ref.argmin(t.data(), n));
            CHECK(k.argmin(t.data(), n) == n / 2);
        }
    }
}
}  // namespace

TEST_CASE("scalar reference") {
    const auto& k = scalar_kernels();
    double d[] = {1.0, 2.0};
    double w[] = {1.0, 1.0};
    CHECK(k.path_loss_sum(d, w, 2, 2.0, 1.0) == doctest::Approx(1.25));
    double x[] = {3.0, 1.0, 1.0, 5.0};
    CHECK(k.argmin(x, 4) == 1);
}

TEST_CASE("AVX2 kernels match the scalar reference") {
    const KernelTable* k = avx2_kernels();
    if (!k) {
        MESSAGE("AVX2 kernels unavailable on this machine");
        return;
    }
    check_table(*k);
}

TEST_CASE("NEON kernels match the scalar reference") {
    const KernelTable* k = neon_kernels();
    if (!k) {
        MESSAGE("NEON kernels unavailable on this machine");
        return;
    }
    check_table(*k);
}

TEST_CASE("active table") {
    const auto& k = active_kernels();
    CHECK_FALSE(k.name.empty());
    check_table(k);
}
