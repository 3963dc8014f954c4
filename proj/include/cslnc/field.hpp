#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cslnc/bit_matrix.hpp"
#include "cslnc/poly2.hpp"

namespace cslnc {

/// True iff L is prime and 2 has multiplicative order L-1 modulo L.
bool is_prime_with_primitive_root_2(std::uint64_t L);
/// All admissible block lengths L <= max_L, ascending.
std::vector<std::size_t> admissible_lengths(std::size_t max_L);

/// Element of GF(2^{L-1}) in the basis 1, a, ..., a^{L-2}; bit j of rep is the
/// coefficient of a^j. Arithmetic lives on FieldCtx.
struct FieldElement {
    BitVector rep;

    bool is_zero() const noexcept { return rep.is_zero(); }
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Length-L binary coefficient vector c_0..c_{L-1} with at most (L-1)/2 ones,
/// read as the polynomial sum c_j x^j.
class WeightBoundedPoly {
public:
    WeightBoundedPoly() = default;
    /// Throws DomainError when the weight exceeds (size-1)/2.
    explicit WeightBoundedPoly(BitVector coeffs);
    /// Single term x^j, j < L.
    static WeightBoundedPoly monomial(std::size_t L, std::size_t j);
    static WeightBoundedPoly zero(std::size_t L) { return WeightBoundedPoly(BitVector(L)); }

    const BitVector& coeffs() const noexcept { return coeffs_; }
    std::size_t length() const noexcept { return coeffs_.size(); }
    std::size_t weight() const noexcept { return coeffs_.weight(); }
    bool is_zero() const noexcept { return coeffs_.is_zero(); }
    /// "x^4+x^2", "1", "0".
    std::string to_string() const;

    friend bool operator==(const WeightBoundedPoly&, const WeightBoundedPoly&) = default;

private:
    BitVector coeffs_;
};

/// GF(2^{L-1}) built on the all-ones modulus f(x) = x^{L-1} + ... + x + 1, which is
/// irreducible exactly when L is admissible. The class of x is a primitive L-th
/// root of unity, written alpha throughout.
class FieldCtx {
public:
    /// Throws DomainError when L is not a prime with primitive root 2.
    explicit FieldCtx(std::size_t L);

    std::size_t block_length() const noexcept { return L_; }
    std::size_t degree() const noexcept { return L_ - 1; }
    const Poly2& modulus() const noexcept { return modulus_; }

    FieldElement zero() const { return {BitVector(L_ - 1)}; }
    FieldElement one() const;
    FieldElement alpha() const;
    /// alpha^k for any k >= 0 (reduced mod L).
    FieldElement alpha_pow(std::size_t k) const;
    /// Reduces an arbitrary length-L vector sum c_j alpha^j into the basis.
    FieldElement from_cyclic(const BitVector& coeffs) const;
    FieldElement from_poly(const Poly2& p) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement square(const FieldElement& a) const;
    /// Throws DomainError for zero.
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, std::uint64_t k) const;

    /// The unique weight-bounded polynomial g with g(alpha) = a: take the basis
    /// coefficients with c_{L-1} = 0 and complement all L of them when the weight
    /// exceeds (L-1)/2 (using 1 + alpha + ... + alpha^{L-1} = 0).
    WeightBoundedPoly canonical_weight_rep(const FieldElement& a) const;
    /// sum c_j (alpha^power)^j.
    FieldElement eval(const BitVector& coeffs, std::size_t power = 1) const;
    FieldElement eval_weighted(const WeightBoundedPoly& p, std::size_t power = 1) const {
        return eval(p.coeffs(), power);
    }

    std::string to_string(const FieldElement& a) const;

private:
    std::size_t L_;
    Poly2 modulus_;
};

/// Small dense matrix over GF(2^{L-1}); row-major.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols);
    static FieldMatrix identity(const FieldCtx& ctx, std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FieldElement& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> cells_;
};

FieldMatrix field_mul(const FieldCtx& ctx, const FieldMatrix& a, const FieldMatrix& b);
std::size_t field_rank(const FieldCtx& ctx, const FieldMatrix& a);
/// Same contract as the GF(2) solve_right: first-nonzero-column pivots, free
/// variables zero, nullopt when inconsistent.
std::optional<FieldMatrix> field_solve_right(const FieldCtx& ctx, const FieldMatrix& a, const FieldMatrix& target);
std::optional<FieldMatrix> field_invert(const FieldCtx& ctx, const FieldMatrix& a);

/// V * (sum_j c_j Lambda^j) * V^{-1} with V the Vandermonde matrix on
/// 1, alpha, ..., alpha^{L-1}, V^{-1} the closed-form inverse on the negative
/// powers and Lambda = diag(1, alpha, ..., alpha^{L-1}). Returns the result when
/// every entry lies in GF(2), nullopt otherwise.
std::optional<BitMatrix> vandermonde_conjugate(const FieldCtx& ctx, const BitVector& coeffs);

/// Checks V * V^{-1} = I and V * Lambda^i * V^{-1} = C_L^i for every 0 <= i < L.
bool verify_diagonalization(const FieldCtx& ctx);

}  // namespace cslnc
