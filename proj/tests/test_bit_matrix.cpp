#include <random>
#include <vector>

#include "cslnc/bit_matrix.hpp"
#include "cslnc/errors.hpp"
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

// textbook triple loop
BitMatrix naive_mul(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            bool s = false;
            for (std::size_t k = 0; k < a.cols(); ++k) s ^= a.get(i, k) && b.get(k, j);
            out.set(i, j, s);
        }
    return out;
}

}  // namespace

TEST_CASE("mul small cases") {
    auto m = BitMatrix::from_strings({"101", "011", "110"});
    CHECK(mul(BitMatrix::identity(3), m) == m);
    CHECK(mul(m, BitMatrix::zero(3, 4)) == BitMatrix::zero(3, 4));
    auto a = BitMatrix::from_rows({{1, 1}, {0, 1}});
    auto b = BitMatrix::from_rows({{1, 0}, {1, 1}});
    CHECK(mul(a, b) == BitMatrix::from_rows({{0, 1}, {1, 1}}));
    CHECK_THROWS_AS(mul(a, BitMatrix(3, 3)), DimensionError);
}

TEST_CASE("add") {
    std::mt19937_64 rng(1);
    auto m = random_matrix(rng, 5, 70);
    CHECK(add(m, m).is_zero());
    CHECK(add(m, BitMatrix::zero(5, 70)) == m);
    CHECK(add(BitMatrix::identity(2), BitMatrix::from_rows({{0, 1}, {1, 0}})) ==
          BitMatrix::from_rows({{1, 1}, {1, 1}}));
    CHECK_THROWS_AS(add(m, BitMatrix(5, 69)), DimensionError);
}

TEST_CASE("rank") {
    CHECK(rank(BitMatrix::identity(5)) == 5);
    CHECK(rank(BitMatrix::zero(4, 4)) == 0);
    // circulant 1+x at L=5
    BitMatrix c(5, 5);
    for (int i = 0; i < 5; ++i) {
        c.set(i, i);
        c.set(i, (i + 1) % 5);
    }
    CHECK(rank(c) == 4);
}

TEST_CASE("invert") {
    CHECK(*invert(BitMatrix::identity(7)) == BitMatrix::identity(7));
    auto a = BitMatrix::from_rows({{1, 1}, {0, 1}});
    CHECK(*invert(a) == a);
    CHECK_FALSE(invert(BitMatrix::from_rows({{1, 1}, {1, 1}})).has_value());
    CHECK_THROWS_AS(invert(BitMatrix(2, 3)), DimensionError);
}

TEST_CASE("solve_right") {
    std::mt19937_64 rng(2);
    auto t = random_matrix(rng, 6, 9);
    CHECK(*solve_right(BitMatrix::identity(6), t) == t);
    CHECK_FALSE(solve_right(BitMatrix::zero(6, 6), t).has_value());
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_matrix(rng, 10, 7);
        auto x = random_matrix(rng, 7, 3);
        auto tt = mul(a, x);
        auto sol = solve_right(a, tt);
        REQUIRE(sol.has_value());
        CHECK(mul(a, *sol) == tt);
        auto noise = random_matrix(rng, 10, 3);
        auto s2 = solve_right(a, noise);
        if (s2) CHECK(mul(a, *s2) == noise);
    }
}

TEST_CASE("kron") {
    CHECK(kron(BitMatrix::identity(2), BitMatrix::identity(3)) == BitMatrix::identity(6));
    CHECK(kron(BitMatrix::from_rows({{1, 1}}), BitMatrix::from_rows({{1}, {1}})) ==
          BitMatrix::from_rows({{1, 1}, {1, 1}}));
    // u_e (x) I_j: single identity block at position e
    auto u = BitMatrix::from_rows({{0}, {1}, {0}});
    auto U = kron(u, BitMatrix::identity(4));
    CHECK(U.rows() == 12);
    CHECK(U.block(4, 0, 4, 4).is_identity());
    CHECK(U.block(0, 0, 4, 4).is_zero());
    CHECK(U.block(8, 0, 4, 4).is_zero());
}

TEST_CASE("algebraic properties on random matrices") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 80, k = 1 + rng() % 80, m = 1 + rng() % 80, p = 1 + rng() % 20;
        auto A = random_matrix(rng, n, k), B = random_matrix(rng, k, m), B2 = random_matrix(rng, k, m),
             C = random_matrix(rng, m, p);
        CHECK(mul(A, B) == naive_mul(A, B));
        CHECK(mul(mul(A, B), C) == mul(A, mul(B, C)));
        CHECK(mul(A, B + B2) == mul(A, B) + mul(A, B2));
        CHECK(rank(A) == rank(A.transpose()));
    }
}

TEST_CASE("invert random invertible matrices") {
    std::mt19937_64 rng(4);
    int done = 0;
    while (done < 1000) {
        std::size_t n = 1 + rng() % 64;
        auto a = random_matrix(rng, n, n);
        auto inv = invert(a);
        if (!inv) {
            CHECK(rank(a) < n);
            continue;
        }
        CHECK(mul(a, *inv).is_identity());
        ++done;
    }
}

TEST_CASE("bit vector rotation is right circular shift") {
    auto v = BitVector::from_string("11010");
    CHECK(v.rotated(2).to_string() == "10110");
    CHECK(v.rotated(0) == v);
    CHECK(v.rotated(5) == v);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 200, j = rng() % 400;
        BitVector w(n);
        for (std::size_t i = 0; i < n; ++i) w.set(i, rng() & 1);
        auto r = w.rotated(j);
        for (std::size_t i = 0; i < n; ++i) CHECK(r.get((i + j) % n) == w.get(i));
        BitVector acc(n);
        acc.xor_rotated(w, j);
        CHECK(acc == r);
    }
}

TEST_CASE("bit vector slices and concat") {
    std::mt19937_64 rng(6);
    BitVector v(150);
    for (std::size_t i = 0; i < 150; ++i) v.set(i, rng() & 1);
    std::vector<BitVector> parts{v.slice(0, 37), v.slice(37, 64), v.slice(101, 49)};
    CHECK(BitVector::concat(parts) == v);
    BitVector w(150);
    w.assign_slice(37, parts[1]);
    CHECK(w.slice(37, 64) == parts[1]);
    CHECK(w.weight() == parts[1].weight());
    CHECK(v.complemented().weight() == 150 - v.weight());
}
