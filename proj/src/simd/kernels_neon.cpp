#include "cslnc/simd/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#include <bit>
#endif

namespace cslnc::simd {

#if defined(__aarch64__) && defined(__ARM_NEON)
namespace {

void xor_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < n; ++i) dst[i] ^= src[i];
}

void xor_to_neon(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

std::size_t popcount_neon(const std::uint64_t* w, std::size_t n) {
    std::size_t s = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint8x16_t c = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(w + i)));
        s += vaddvq_u8(c);
    }
    for (; i < n; ++i) s += static_cast<std::size_t>(std::popcount(w[i]));
    return s;
}

bool any_neon(const std::uint64_t* w, std::size_t n) {
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + 2 <= n; i += 2) acc = vorrq_u64(acc, vld1q_u64(w + i));
    if (vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1)) return true;
    for (; i < n; ++i)
        if (w[i]) return true;
    return false;
}

constexpr KernelTable kNeon{Isa::neon, xor_into_neon, xor_to_neon, popcount_neon, any_neon};

}  // namespace

const KernelTable* neon_kernels() noexcept { return &kNeon; }
#else
const KernelTable* neon_kernels() noexcept { return nullptr; }
#endif

}  // namespace cslnc::simd
