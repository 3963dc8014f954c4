#include "cslnc/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace cslnc::simd {
namespace {

const KernelTable* pick_default() noexcept {
    if (const char* env = std::getenv("CSLNC_SIMD"); env && std::string_view(env) == "scalar")
        return &scalar_kernels();
    if (const auto* t = avx2_kernels()) return t;
    if (const auto* t = neon_kernels()) return t;
    return &scalar_kernels();
}

std::atomic<const KernelTable*>& slot() noexcept {
    static std::atomic<const KernelTable*> s{pick_default()};
    return s;
}

}  // namespace

const KernelTable& active() noexcept { return *slot().load(std::memory_order_relaxed); }

bool select(Isa isa) noexcept {
    const KernelTable* t = nullptr;
    switch (isa) {
        case Isa::scalar: t = &scalar_kernels(); break;
        case Isa::avx2: t = avx2_kernels(); break;
        case Isa::neon: t = neon_kernels(); break;
    }
    if (!t) return false;
    slot().store(t, std::memory_order_relaxed);
    return true;
}

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

}  // namespace cslnc::simd
