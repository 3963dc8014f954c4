#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cslnc/bit_matrix.hpp"

namespace cslnc {

/// Polynomial over GF(2). Bit j of the packed words is the coefficient of x^j;
/// the representation is kept trimmed, so the zero polynomial has no words.
class Poly2 {
public:
    Poly2() = default;
    static Poly2 monomial(std::size_t degree);
    /// Coefficients listed from x^0 upward.
    static Poly2 from_coeffs(std::initializer_list<int> coeffs);
    static Poly2 from_bits(const BitVector& coeffs);
    /// x^n + 1
    static Poly2 x_pow_plus_one(std::size_t n);
    /// x^{n-1} + ... + x + 1
    static Poly2 all_ones(std::size_t n);

    bool is_zero() const noexcept { return words_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept;
    bool coeff(std::size_t j) const noexcept {
        return (j >> 6) < words_.size() && ((words_[j >> 6] >> (j & 63)) & 1u);
    }
    void set_coeff(std::size_t j, bool v);
    std::size_t weight() const noexcept;

    /// Coefficients 0..len-1 as a bit vector (higher terms must be zero).
    BitVector to_bits(std::size_t len) const;

    Poly2& operator+=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend bool operator==(const Poly2& a, const Poly2& b) noexcept { return a.words_ == b.words_; }

    /// Quotient and remainder; throws DimensionError when dividing by zero.
    static std::pair<Poly2, Poly2> divmod(const Poly2& a, const Poly2& b);
    friend Poly2 operator%(const Poly2& a, const Poly2& b) { return divmod(a, b).second; }

    /// "x^4+x+1" style; "0" for zero.
    std::string to_string() const;

private:
    void trim() noexcept;
    // *this ^= other * x^shift
    void xor_shifted(const Poly2& other, std::size_t shift);

    std::vector<std::uint64_t> words_;
};

/// Monic gcd over GF(2)[x]. Throws DimensionError when both inputs are zero.
Poly2 poly_gcd(Poly2 a, Poly2 b);

/// Returns (g, s) with g = gcd(a, m) and s*a = g (mod m).
std::pair<Poly2, Poly2> poly_ext_gcd(const Poly2& a, const Poly2& m);

}  // namespace cslnc
