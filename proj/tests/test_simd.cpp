#include <random>
#include <vector>

#include "cslnc/bit_matrix.hpp"
#include "cslnc/simd/kernels.hpp"
#include "doctest.h"

using namespace cslnc;

namespace {
BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1);
    return m;
}
}  // namespace

TEST_CASE("simd kernels agree with scalar reference") {
    const auto& ref = simd::scalar_kernels();
    std::vector<const simd::KernelTable*> tables{&ref};
    if (auto* t = simd::avx2_kernels()) tables.push_back(t);
    if (auto* t = simd::neon_kernels()) tables.push_back(t);
    MESSAGE("active isa: " << simd::isa_name(simd::active().isa));
    std::mt19937_64 rng(7);
    for (auto* t : tables) {
        for (std::size_t n : {0, 1, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 100}) {
            std::vector<std::uint64_t> a(n), b(n), a2, out1(n), out2(n);
            for (auto& w : a) w = rng();
            for (auto& w : b) w = rng();
            a2 = a;
            ref.xor_into(a.data(), b.data(), n);
            t->xor_into(a2.data(), b.data(), n);
            CHECK(a == a2);
            ref.xor_to(out1.data(), a.data(), b.data(), n);
            t->xor_to(out2.data(), a.data(), b.data(), n);
            CHECK(out1 == out2);
            CHECK(ref.popcount(a.data(), n) == t->popcount(a.data(), n));
            std::vector<std::uint64_t> z(n, 0);
            CHECK_FALSE(t->any(z.data(), n));
            if (n) {
                z[n - 1] = 1;
                CHECK(t->any(z.data(), n));
            }
        }
    }
}

TEST_CASE("rank is the same under every kernel table") {
    std::mt19937_64 rng(8);
    std::vector<BitMatrix> ms;
    for (int i = 0; i < 20; ++i) ms.push_back(random_matrix(rng, 100 + rng() % 200, 100 + rng() % 300));
    std::vector<std::size_t> base;
    const auto isa = simd::active().isa;
    simd::select(simd::Isa::scalar);
    for (auto& m : ms) base.push_back(rank(m));
    for (auto which : {simd::Isa::avx2, simd::Isa::neon}) {
        if (!simd::select(which)) continue;
        for (std::size_t i = 0; i < ms.size(); ++i) CHECK(rank(ms[i]) == base[i]);
    }
    simd::select(isa);
}
