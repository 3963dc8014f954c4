#include "cslnc/circulant.hpp"

#include "cslnc/errors.hpp"
#include "cslnc/poly2.hpp"

namespace cslnc {

Circulant::Circulant(BitVector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DimensionError("circulant of size 0");
}

Circulant Circulant::zero(std::size_t L) {
    if (L == 0) throw DimensionError("circulant of size 0");
    return Circulant(BitVector(L));
}

Circulant Circulant::shift_power(std::size_t L, std::size_t j) {
    if (L == 0) throw DimensionError("circulant of size 0");
    return Circulant(BitVector::unit(L, j % L));
}

Circulant Circulant::random_degree1(std::size_t L, Rng& rng) {
    const std::uint64_t k = uniform_below(rng, L + 1);
    return k == L ? zero(L) : shift_power(L, k);
}

std::optional<Circulant> Circulant::from_dense(const BitMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
    const BitVector first = m.row(0);
    for (std::size_t i = 1; i < m.rows(); ++i)
        if (m.row(i) != first.rotated(i)) return std::nullopt;
    return Circulant(first);
}

BitVector Circulant::apply(const BitVector& v, OpCounter* counter) const {
    if (v.size() != size()) throw DimensionError("circulant apply: length mismatch");
    BitVector out(size());
    std::size_t terms = 0;
    for (std::size_t j = 0; j < size(); ++j)
        if (coeffs_.get(j)) {
            out.xor_rotated(v, j);
            ++terms;
        }
    if (counter && terms > 1) counter->add(size() * (terms - 1));
    return out;
}

void Circulant::apply_accumulate(BitVector& acc, const BitVector& v, OpCounter* counter) const {
    if (v.size() != size() || acc.size() != size()) throw DimensionError("circulant apply: length mismatch");
    std::size_t terms = 0;
    for (std::size_t j = 0; j < size(); ++j)
        if (coeffs_.get(j)) {
            acc.xor_rotated(v, j);
            ++terms;
        }
    if (counter) counter->add(size() * terms);
}

BitMatrix Circulant::to_dense() const {
    BitMatrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i) m.set_row(i, coeffs_.rotated(i));
    return m;
}

std::string Circulant::to_string() const { return Poly2::from_bits(coeffs_).to_string(); }

Circulant& Circulant::operator+=(const Circulant& o) {
    if (o.size() != size()) throw DimensionError("circulant add: size mismatch");
    coeffs_ ^= o.coeffs_;
    return *this;
}

Circulant operator*(const Circulant& a, const Circulant& b) {
    if (a.size() != b.size()) throw DimensionError("circulant mul: size mismatch");
    BitVector acc(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.coeffs_.get(i)) acc.xor_rotated(b.coeffs_, i);
    return Circulant(std::move(acc));
}

std::size_t circ_rank(const Circulant& c) {
    if (c.is_zero()) return 0;
    const std::size_t L = c.size();
    const Poly2 g = poly_gcd(Poly2::x_pow_plus_one(L), Poly2::from_bits(c.coeffs()));
    return L - static_cast<std::size_t>(g.degree());
}

}  // namespace cslnc
