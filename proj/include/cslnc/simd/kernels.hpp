#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Word-level GF(2) row kernels. Every routine has a portable scalar reference
// and, where the CPU supports it, a vectorized variant picked once at startup.
// All variants must be bit-identical; tests/test_simd.cpp checks this.

namespace cslnc::simd {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
    Isa isa;
    // dst[i] ^= src[i]
    void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    // dst[i] = a[i] ^ b[i]
    void (*xor_to)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    // number of set bits in w[0..n)
    std::size_t (*popcount)(const std::uint64_t* w, std::size_t n);
    // true if any word is nonzero
    bool (*any)(const std::uint64_t* w, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;
// Variant tables return nullptr when not compiled in or not supported by the CPU.
const KernelTable* avx2_kernels() noexcept;
const KernelTable* neon_kernels() noexcept;

// The table in use. Chosen on first call: best supported ISA, unless the
// environment variable CSLNC_SIMD is set to "scalar".
const KernelTable& active() noexcept;

// Overrides the active table (tests and benchmarks). Returns false if the
// requested ISA is unavailable; the active table is then left unchanged.
bool select(Isa isa) noexcept;

std::string_view isa_name(Isa isa) noexcept;

inline void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    active().xor_into(dst, src, n);
}
inline void xor_to(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    active().xor_to(dst, a, b, n);
}
inline std::size_t popcount(const std::uint64_t* w, std::size_t n) { return active().popcount(w, n); }
inline bool any(const std::uint64_t* w, std::size_t n) { return active().any(w, n); }

}  // namespace cslnc::simd
