#include "qwalk/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace qwalk::kernels {
namespace {

const KernelSet* pick() {
    const char* env = std::getenv("QWALK_SIMD");
    const std::string_view want = env ? env : "auto";
    if (want == "scalar") return &scalar_kernels();
    if (want == "avx2") {
        if (const KernelSet* k = avx2_kernels()) return k;
        return &scalar_kernels();
    }
    if (want == "neon") {
        if (const KernelSet* k = neon_kernels()) return k;
        return &scalar_kernels();
    }
    // auto (and unrecognized values): best available
    if (const KernelSet* k = avx2_kernels()) return k;
    if (const KernelSet* k = neon_kernels()) return k;
    return &scalar_kernels();
}

}  // namespace

const KernelSet& active_kernels() {
    static const KernelSet* chosen = pick();
    return *chosen;
}

}  // namespace qwalk::kernels
