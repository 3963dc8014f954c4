#include "cslnc/poly2.hpp"

#include <algorithm>
#include <bit>

#include "cslnc/errors.hpp"

namespace cslnc {

Poly2 Poly2::monomial(std::size_t degree) {
    Poly2 p;
    p.set_coeff(degree, true);
    return p;
}

Poly2 Poly2::from_coeffs(std::initializer_list<int> coeffs) {
    Poly2 p;
    std::size_t j = 0;
    for (int c : coeffs) {
        if (c) p.set_coeff(j, true);
        ++j;
    }
    return p;
}

Poly2 Poly2::from_bits(const BitVector& coeffs) {
    Poly2 p;
    auto w = coeffs.words();
    p.words_.assign(w.begin(), w.end());
    p.trim();
    return p;
}

Poly2 Poly2::x_pow_plus_one(std::size_t n) {
    Poly2 p = monomial(n);
    p += monomial(0);
    return p;
}

Poly2 Poly2::all_ones(std::size_t n) { return from_bits(BitVector::ones(n)); }

long Poly2::degree() const noexcept {
    if (words_.empty()) return -1;
    return static_cast<long>((words_.size() - 1) * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_.back())));
}

void Poly2::set_coeff(std::size_t j, bool v) {
    const std::size_t w = j >> 6;
    if (v) {
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (j & 63);
    } else if (w < words_.size()) {
        words_[w] &= ~(std::uint64_t{1} << (j & 63));
        trim();
    }
}

std::size_t Poly2::weight() const noexcept {
    std::size_t s = 0;
    for (auto w : words_) s += static_cast<std::size_t>(std::popcount(w));
    return s;
}

BitVector Poly2::to_bits(std::size_t len) const {
    if (degree() >= static_cast<long>(len)) throw DimensionError("Poly2::to_bits: degree exceeds length");
    BitVector v(len);
    std::copy(words_.begin(), words_.end(), v.words().begin());
    return v;
}

void Poly2::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly2& Poly2::operator+=(const Poly2& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    trim();
    return *this;
}

void Poly2::xor_shifted(const Poly2& other, std::size_t shift) {
    if (other.is_zero()) return;
    const std::size_t ws = shift >> 6;
    const unsigned bs = shift & 63;
    const std::size_t need = other.words_.size() + ws + 1;
    if (words_.size() < need) words_.resize(need, 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
        words_[i + ws] ^= other.words_[i] << bs;
        if (bs) words_[i + ws + 1] ^= other.words_[i] >> (64 - bs);
    }
    trim();
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
        std::uint64_t bits = a.words_[k];
        while (bits) {
            out.xor_shifted(b, k * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::pair<Poly2, Poly2> Poly2::divmod(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw DimensionError("Poly2 division by zero");
    Poly2 q;
    Poly2 r = a;
    const long db = b.degree();
    while (r.degree() >= db) {
        const auto shift = static_cast<std::size_t>(r.degree() - db);
        q.set_coeff(shift, true);
        r.xor_shifted(b, shift);
    }
    return {q, r};
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (long j = degree(); j >= 0; --j) {
        if (!coeff(static_cast<std::size_t>(j))) continue;
        if (!s.empty()) s += "+";
        if (j == 0)
            s += "1";
        else if (j == 1)
            s += "x";
        else
            s += "x^" + std::to_string(j);
    }
    return s;
}

Poly2 poly_gcd(Poly2 a, Poly2 b) {
    if (a.is_zero() && b.is_zero()) throw DimensionError("poly_gcd: both arguments are zero");
    while (!b.is_zero()) {
        Poly2 r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::pair<Poly2, Poly2> poly_ext_gcd(const Poly2& a, const Poly2& m) {
    // Invariant: s0*a = r0, s1*a = r1 (mod m).
    Poly2 r0 = m, r1 = a % m;
    Poly2 s0, s1 = Poly2::monomial(0);
    if (r1.is_zero()) return {r0, Poly2{}};
    while (!r1.is_zero()) {
        auto [q, r] = Poly2::divmod(r0, r1);
        Poly2 s = s0 + q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    return {r0, s0 % m};
}

}  // namespace cslnc
