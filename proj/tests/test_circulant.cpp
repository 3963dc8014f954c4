#include <map>

#include "cslnc/circulant.hpp"
#include "cslnc/errors.hpp"
#include "cslnc/field.hpp"
#include "doctest.h"

using namespace cslnc;

namespace {
Circulant from(const char* s) { return Circulant(BitVector::from_string(s)); }

BitVector random_bits(Rng& rng, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, coin(rng));
    return v;
}
}  // namespace

TEST_CASE("shift powers") {
    CHECK(Circulant::shift_power(5, 0).to_dense().is_identity());
    // [m1..m5] C^2 = [m4 m5 m1 m2 m3]
    const auto m = BitVector::from_string("10110");
    CHECK(Circulant::shift_power(5, 2).apply(m).to_string() == "10101");
    CHECK(Circulant::shift_power(5, 7) == Circulant::shift_power(5, 2));
    CHECK_THROWS_AS(Circulant::shift_power(0, 1), DimensionError);
}

TEST_CASE("circulant ring") {
    const auto a = from("11010");
    CHECK((a + a).is_zero());
    CHECK(Circulant::shift_power(5, 1) * Circulant::shift_power(5, 4) == Circulant::identity(5));
    const auto ip = from("11000");
    CHECK(ip * ip == from("10100"));
    CHECK(a * ip == ip * a);
    CHECK_THROWS_AS(a + Circulant::zero(6), DimensionError);
}

TEST_CASE("dense products match, exhaustive to L = 6") {
    for (std::size_t L = 1; L <= 6; ++L)
        for (unsigned x = 0; x < (1u << L); ++x)
            for (unsigned y = 0; y < (1u << L); ++y) {
                BitVector a(L), b(L);
                for (std::size_t i = 0; i < L; ++i) {
                    a.set(i, (x >> i) & 1);
                    b.set(i, (y >> i) & 1);
                }
                const Circulant ca(a), cb(b);
                REQUIRE((ca * cb).to_dense() == mul(ca.to_dense(), cb.to_dense()));
            }
    Rng rng(9);
    for (int t = 0; t < 200; ++t) {
        const std::size_t L = 7 + uniform_below(rng, 58);
        const Circulant a(random_bits(rng, L)), b(random_bits(rng, L));
        CHECK((a * b).to_dense() == mul(a.to_dense(), b.to_dense()));
        CHECK(Circulant::from_dense(a.to_dense()) == a);
    }
}

TEST_CASE("apply and xor charges") {
    OpCounter ops;
    const auto v = BitVector::from_string("10000");
    CHECK(Circulant::identity(5).apply(v, &ops) == v);
    CHECK(ops.xors == 0);
    CHECK(Circulant::zero(5).apply(v, &ops).is_zero());
    CHECK(ops.xors == 0);
    CHECK(from("11000").apply(v, &ops).to_string() == "11000");
    CHECK(ops.xors == 5);
    const auto u = BitVector::from_string("10000");
    CHECK(from("10001").apply(u).to_string() == "10001");
    Rng rng(10);
    for (int t = 0; t < 300; ++t) {
        const std::size_t L = 1 + uniform_below(rng, 150);
        const Circulant c(random_bits(rng, L));
        const BitVector w = random_bits(rng, L);
        OpCounter k;
        CHECK(c.apply(w, &k) == c.to_dense().left_mul(w));
        CHECK(k.xors == (c.degree() ? L * (c.degree() - 1) : 0));
    }
    CHECK_THROWS_AS(from("11000").apply(BitVector(4)), DimensionError);
}

TEST_CASE("circulant rank") {
    CHECK(circ_rank(Circulant::identity(5)) == 5);
    CHECK(circ_rank(from("11000")) == 4);
    CHECK(circ_rank(from("11111")) == 1);
    CHECK(circ_rank(Circulant::zero(5)) == 0);
    for (std::size_t L = 1; L <= 10; ++L)
        for (unsigned x = 0; x < (1u << L); ++x) {
            BitVector a(L);
            for (std::size_t i = 0; i < L; ++i) a.set(i, (x >> i) & 1);
            const Circulant c(a);
            REQUIRE(circ_rank(c) == rank(c.to_dense()));
        }
}

TEST_CASE("substitute") {
    CHECK(Circulant::substitute(WeightBoundedPoly::monomial(5, 1)) == Circulant::shift_power(5, 1));
    CHECK(Circulant::substitute(WeightBoundedPoly::zero(5)).is_zero());
    CHECK(Circulant::substitute(WeightBoundedPoly::monomial(5, 2)) == Circulant::shift_power(5, 2));
}

TEST_CASE("random degree-1 sampler") {
    Rng rng(12), again(12);
    std::map<std::string, int> freq;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const auto c = Circulant::random_degree1(8, rng);
        CHECK(c.degree() <= 1);
        CHECK(c == Circulant::random_degree1(8, again));
        ++freq[c.coeffs().to_string()];
    }
    CHECK(freq.size() == 9);
    // chi-square with 8 degrees of freedom; 3 sigma above its mean of 8 is 20
    double chi = 0;
    const double expect = n / 9.0;
    for (const auto& [k, v] : freq) chi += (v - expect) * (v - expect) / expect;
    CHECK(chi < 20.0);
}

TEST_CASE("odd weight and the sum of two invertible circulants") {
    Rng rng(13);
    for (std::size_t L = 4; L <= 16; ++L) {
        int pairs = 0;
        while (pairs < 2000) {
            const Circulant a(random_bits(rng, L)), b(random_bits(rng, L));
            if (circ_rank(a) != L || circ_rank(b) != L) continue;
            CHECK(a.degree() % 2 == 1);
            CHECK(circ_rank(a + b) < L);
            ++pairs;
        }
    }
}

TEST_CASE("dense shift powers agree with the diagonalised form") {
    for (std::size_t L : {5, 11}) {
        FieldCtx F(L);
        for (std::size_t i = 0; i < L; ++i) {
            auto m = vandermonde_conjugate(F, BitVector::unit(L, i));
            REQUIRE(m.has_value());
            CHECK(*m == Circulant::shift_power(L, i).to_dense());
        }
    }
}
