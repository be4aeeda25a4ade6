#include <cstdlib>
#include <string_view>

#include "stiran/simd/kernels.hpp"

namespace stiran::simd {

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", &scalar::path_loss_sum, &scalar::argmin};
    return table;
}

#if !defined(STIRAN_HAVE_AVX2)
const KernelTable* avx2_kernels() { return nullptr; }
#endif

#if !defined(STIRAN_HAVE_NEON)
const KernelTable* neon_kernels() { return nullptr; }
#endif

const KernelTable& active_kernels() {
    static const KernelTable& chosen = [] () -> const KernelTable& {
        const char* env = std::getenv("STIRAN_SIMD");
        if (env != nullptr && std::string_view(env) == "scalar") {
            return scalar_kernels();
        }
        if (const KernelTable* t = avx2_kernels()) return *t;
        if (const KernelTable* t = neon_kernels()) return *t;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace stiran::simd
