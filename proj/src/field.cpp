#include "cslnc/field.hpp"

#include <utility>

#include "cslnc/errors.hpp"

namespace cslnc {

bool is_prime_with_primitive_root_2(std::uint64_t L) {
    if (L < 3) return false;
    for (std::uint64_t d = 2; d * d <= L; ++d)
        if (L % d == 0) return false;
    // order of 2 mod L must be exactly L-1
    std::uint64_t x = 1;
    for (std::uint64_t k = 1; k < L - 1; ++k) {
        x = (x * 2) % L;
        if (x == 1) return false;
    }
    return true;
}

std::vector<std::size_t> admissible_lengths(std::size_t max_L) {
    std::vector<std::size_t> out;
    for (std::size_t L = 3; L <= max_L; ++L)
        if (is_prime_with_primitive_root_2(L)) out.push_back(L);
    return out;
}

// ------------------------------------------------------------ WeightBoundedPoly

WeightBoundedPoly::WeightBoundedPoly(BitVector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty() || coeffs_.weight() > (coeffs_.size() - 1) / 2)
        throw DomainError("weight-bounded polynomial has weight " + std::to_string(coeffs_.weight()) +
                          " > (L-1)/2 for L = " + std::to_string(coeffs_.size()));
}

WeightBoundedPoly WeightBoundedPoly::monomial(std::size_t L, std::size_t j) {
    if (j >= L) throw DimensionError("monomial exponent out of range");
    return WeightBoundedPoly(BitVector::unit(L, j));
}

std::string WeightBoundedPoly::to_string() const { return Poly2::from_bits(coeffs_).to_string(); }

// ---------------------------------------------------------------- FieldCtx

FieldCtx::FieldCtx(std::size_t L) : L_(L) {
    if (!is_prime_with_primitive_root_2(L))
        throw DomainError("L = " + std::to_string(L) + " is not a prime with primitive root 2");
    modulus_ = Poly2::all_ones(L);
}

FieldElement FieldCtx::one() const { return {BitVector::unit(L_ - 1, 0)}; }

FieldElement FieldCtx::alpha() const { return alpha_pow(1); }

FieldElement FieldCtx::alpha_pow(std::size_t k) const { return from_cyclic(BitVector::unit(L_, k % L_)); }

FieldElement FieldCtx::from_cyclic(const BitVector& coeffs) const {
    if (coeffs.size() != L_) throw DimensionError("cyclic vector must have length L");
    // alpha^{L-1} = 1 + alpha + ... + alpha^{L-2}
    BitVector v = coeffs.get(L_ - 1) ? coeffs.complemented() : coeffs;
    return {v.slice(0, L_ - 1)};
}

FieldElement FieldCtx::from_poly(const Poly2& p) const { return {(p % modulus_).to_bits(L_ - 1)}; }

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const { return {a.rep ^ b.rep}; }

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
    if (a.rep.size() != L_ - 1 || b.rep.size() != L_ - 1) throw DimensionError("field element has wrong length");
    // multiply in GF(2)[x]/(x^L+1) then fold; f divides x^L+1
    BitVector bl(L_);
    bl.assign_slice(0, b.rep);
    BitVector acc(L_);
    for (std::size_t i = 0; i + 1 < L_; ++i)
        if (a.rep.get(i)) acc.xor_rotated(bl, i);
    return from_cyclic(acc);
}

FieldElement FieldCtx::square(const FieldElement& a) const {
    // Frobenius: bit i goes to 2i mod L
    BitVector acc(L_);
    for (std::size_t i = 0; i + 1 < L_; ++i)
        if (a.rep.get(i)) acc.flip((2 * i) % L_);
    return from_cyclic(acc);
}

FieldElement FieldCtx::inv(const FieldElement& a) const {
    if (a.is_zero()) throw DomainError("inverse of zero");
    // a^{-1} = a^{2^m - 2} = prod_{k=1}^{m-1} a^{2^k}
    const std::size_t m = L_ - 1;
    FieldElement sq = square(a);
    FieldElement out = sq;
    for (std::size_t k = 2; k < m; ++k) {
        sq = square(sq);
        out = mul(out, sq);
    }
    return out;
}

FieldElement FieldCtx::pow(const FieldElement& a, std::uint64_t k) const {
    FieldElement result = one(), base = a;
    while (k) {
        if (k & 1) result = mul(result, base);
        base = square(base);
        k >>= 1;
    }
    return result;
}

WeightBoundedPoly FieldCtx::canonical_weight_rep(const FieldElement& a) const {
    BitVector c(L_);
    c.assign_slice(0, a.rep);
    if (c.weight() > (L_ - 1) / 2) c = c.complemented();
    return WeightBoundedPoly(std::move(c));
}

FieldElement FieldCtx::eval(const BitVector& coeffs, std::size_t power) const {
    if (coeffs.size() != L_) throw DimensionError("coefficient vector must have length L");
    BitVector acc(L_);
    for (std::size_t j = 0; j < L_; ++j)
        if (coeffs.get(j)) acc.flip((power % L_) * j % L_);
    return from_cyclic(acc);
}

std::string FieldCtx::to_string(const FieldElement& a) const {
    return Poly2::from_bits(a.rep).to_string();
}

// ---------------------------------------------------------------- FieldMatrix

FieldMatrix::FieldMatrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, ctx.zero()) {}

FieldMatrix FieldMatrix::identity(const FieldCtx& ctx, std::size_t n) {
    FieldMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ctx.one();
    return m;
}

FieldMatrix field_mul(const FieldCtx& ctx, const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("field_mul: inner dimensions differ");
    FieldMatrix out(ctx, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero()) out.at(i, j).rep ^= ctx.mul(a.at(i, k), b.at(k, j)).rep;
        }
    return out;
}

namespace {

// Row-reduces [a | t] in place to reduced echelon form; returns pivot columns of a.
std::vector<std::size_t> field_rref(const FieldCtx& ctx, FieldMatrix& a, FieldMatrix* t) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a.at(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
        if (t)
            for (std::size_t j = 0; j < t->cols(); ++j) std::swap(t->at(p, j), t->at(r, j));
        const FieldElement s = ctx.inv(a.at(r, c));
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = ctx.mul(a.at(r, j), s);
        if (t)
            for (std::size_t j = 0; j < t->cols(); ++j) t->at(r, j) = ctx.mul(t->at(r, j), s);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            const FieldElement f = a.at(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j).rep ^= ctx.mul(f, a.at(r, j)).rep;
            if (t)
                for (std::size_t j = 0; j < t->cols(); ++j) t->at(i, j).rep ^= ctx.mul(f, t->at(r, j)).rep;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t field_rank(const FieldCtx& ctx, const FieldMatrix& a) {
    FieldMatrix w = a;
    return field_rref(ctx, w, nullptr).size();
}

std::optional<FieldMatrix> field_solve_right(const FieldCtx& ctx, const FieldMatrix& a, const FieldMatrix& target) {
    if (a.rows() != target.rows()) throw DimensionError("field_solve_right: row counts differ");
    FieldMatrix w = a, t = target;
    const auto pivots = field_rref(ctx, w, &t);
    for (std::size_t i = pivots.size(); i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j)
            if (!t.at(i, j).is_zero()) return std::nullopt;
    FieldMatrix x(ctx, a.cols(), target.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t j = 0; j < t.cols(); ++j) x.at(pivots[k], j) = t.at(k, j);
    return x;
}

std::optional<FieldMatrix> field_invert(const FieldCtx& ctx, const FieldMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("field_invert: matrix not square");
    if (field_rank(ctx, a) != a.rows()) return std::nullopt;
    return field_solve_right(ctx, a, FieldMatrix::identity(ctx, a.rows()));
}

// ------------------------------------------------------- diagonalisation check

namespace {

FieldMatrix vandermonde(const FieldCtx& ctx, bool negative) {
    const std::size_t L = ctx.block_length();
    FieldMatrix v(ctx, L, L);
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j < L; ++j) {
            std::size_t e = (i * j) % L;
            if (negative) e = (L - e) % L;
            v.at(i, j) = ctx.alpha_pow(e);
        }
    return v;
}

FieldMatrix conjugate_diag(const FieldCtx& ctx, const BitVector& coeffs, const FieldMatrix& v,
                           const FieldMatrix& vinv) {
    const std::size_t L = ctx.block_length();
    // sum_j c_j Lambda^j is diagonal with entry k equal to g(alpha^k)
    FieldMatrix d(ctx, L, L);
    for (std::size_t k = 0; k < L; ++k) d.at(k, k) = ctx.eval(coeffs, k);
    return field_mul(ctx, field_mul(ctx, v, d), vinv);
}

std::optional<BitMatrix> to_binary(const FieldCtx& ctx, const FieldMatrix& m) {
    BitMatrix out(m.rows(), m.cols());
    const FieldElement one = ctx.one();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) == one)
                out.set(i, j);
            else if (!m.at(i, j).is_zero())
                return std::nullopt;
        }
    return out;
}

}  // namespace

std::optional<BitMatrix> vandermonde_conjugate(const FieldCtx& ctx, const BitVector& coeffs) {
    const FieldMatrix v = vandermonde(ctx, false), vinv = vandermonde(ctx, true);
    return to_binary(ctx, conjugate_diag(ctx, coeffs, v, vinv));
}

bool verify_diagonalization(const FieldCtx& ctx) {
    const std::size_t L = ctx.block_length();
    const FieldMatrix v = vandermonde(ctx, false), vinv = vandermonde(ctx, true);
    if (field_mul(ctx, v, vinv) != FieldMatrix::identity(ctx, L)) return false;
    for (std::size_t i = 0; i < L; ++i) {
        auto b = to_binary(ctx, conjugate_diag(ctx, BitVector::unit(L, i), v, vinv));
        if (!b) return false;
        // C_L^i: row r has its one at column (r+i) mod L
        BitMatrix c(L, L);
        for (std::size_t r = 0; r < L; ++r) c.set(r, (r + i) % L);
        if (*b != c) return false;
    }
    return true;
}

}  // namespace cslnc
