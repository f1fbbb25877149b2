#include <cstdlib>
#include <string>

#include "lanewatch/kernels.hpp"

namespace lanewatch::kernels {

bool avx2_available() {
#if defined(LANEWATCH_HAVE_AVX2) && (defined(__x86_64__) || defined(_M_X64))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable& active_kernels() {
    static const KernelTable& table = []() -> const KernelTable& {
        const char* env = std::getenv("LANEWATCH_KERNEL");
        const std::string choice = env ? env : "";
        if (choice == "scalar") return scalar_kernels;
#if defined(LANEWATCH_HAVE_AVX2) && (defined(__x86_64__) || defined(_M_X64))
        if (avx2_available() || choice == "avx2") return avx2_kernels;
#endif
        return scalar_kernels;
    }();
    return table;
}

}  // namespace lanewatch::kernels
