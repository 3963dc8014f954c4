#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "cslnc/bit_matrix.hpp"
#include "cslnc/field.hpp"
#include "cslnc/rng.hpp"

namespace cslnc {

/// XOR tally. Circular shifts are free; only bit additions are charged.
struct OpCounter {
    std::uint64_t xors = 0;
    void add(std::uint64_t n) noexcept { xors += n; }
};

/// sum_j a_j C_L^j, stored as its coefficient vector a_0..a_{L-1}. C_L is the
/// right cyclic shift, so v * C_L^j moves bit i of v to position (i + j) mod L.
class Circulant {
public:
    Circulant() = default;
    explicit Circulant(BitVector coeffs);

    static Circulant zero(std::size_t L);
    static Circulant identity(std::size_t L) { return shift_power(L, 0); }
    /// C_L^{j mod L}. Throws DimensionError for L = 0.
    static Circulant shift_power(std::size_t L, std::size_t j);
    /// g(C_L): literal coefficient substitution.
    static Circulant substitute(const WeightBoundedPoly& g) { return Circulant(g.coeffs()); }
    /// Uniform over {0, I, C, ..., C^{L-1}}.
    static Circulant random_degree1(std::size_t L, Rng& rng);
    /// Returns the circulant whose dense form is m, or nullopt when m is not circulant.
    static std::optional<Circulant> from_dense(const BitMatrix& m);

    std::size_t size() const noexcept { return coeffs_.size(); }
    const BitVector& coeffs() const noexcept { return coeffs_; }
    /// Number of shifted copies: the Hamming weight of the coefficients.
    std::size_t degree() const noexcept { return coeffs_.weight(); }
    bool is_zero() const noexcept { return coeffs_.is_zero(); }

    /// v * dense(c). Charges L*(degree-1) XORs to counter when degree >= 1.
    BitVector apply(const BitVector& v, OpCounter* counter = nullptr) const;
    /// acc ^= v * dense(c). Charges L*degree; this is the accumulate form used
    /// when the caller already holds a partial sum.
    void apply_accumulate(BitVector& acc, const BitVector& v, OpCounter* counter = nullptr) const;

    /// Row i is the coefficient vector rotated right by i.
    BitMatrix to_dense() const;
    /// "1+x^3" style.
    std::string to_string() const;

    Circulant& operator+=(const Circulant& o);
    friend Circulant operator+(Circulant a, const Circulant& b) { return a += b; }
    /// Cyclic convolution mod x^L + 1.
    friend Circulant operator*(const Circulant& a, const Circulant& b);
    friend bool operator==(const Circulant&, const Circulant&) = default;

private:
    BitVector coeffs_;
};

inline Circulant circ_add(const Circulant& a, const Circulant& b) { return a + b; }
inline Circulant circ_mul(const Circulant& a, const Circulant& b) { return a * b; }

/// L - deg gcd(x^L + 1, a(x)); the zero circulant has rank 0.
std::size_t circ_rank(const Circulant& c);

}  // namespace cslnc
