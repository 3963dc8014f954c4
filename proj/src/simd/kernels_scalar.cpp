#include "cslnc/simd/kernels.hpp"

#include <bit>

namespace cslnc::simd {
namespace {

void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void xor_to_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

std::size_t popcount_scalar(const std::uint64_t* w, std::size_t n) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<std::size_t>(std::popcount(w[i]));
    return s;
}

bool any_scalar(const std::uint64_t* w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (w[i]) return true;
    return false;
}

constexpr KernelTable kScalar{Isa::scalar, xor_into_scalar, xor_to_scalar, popcount_scalar, any_scalar};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace cslnc::simd
