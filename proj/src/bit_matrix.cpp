#include "cslnc/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "cslnc/errors.hpp"
#include "cslnc/simd/kernels.hpp"

namespace cslnc {

namespace detail {

namespace {
inline std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

// Reads 64 bits starting at bit position pos; bits past the end of the array read as zero.
inline std::uint64_t read64(const std::uint64_t* src, std::size_t nwords, std::size_t pos) {
    const std::size_t w = pos >> 6;
    const unsigned s = pos & 63;
    std::uint64_t lo = w < nwords ? src[w] : 0;
    if (s == 0) return lo;
    std::uint64_t hi = (w + 1) < nwords ? src[w + 1] : 0;
    return (lo >> s) | (hi << (64 - s));
}
}  // namespace

void copy_bits(std::uint64_t* dst, std::size_t dst_off, const std::uint64_t* src, std::size_t src_off,
               std::size_t len) {
    const std::size_t src_words = word_count(src_off + len);
    while (len > 0) {
        const std::size_t dw = dst_off >> 6;
        const unsigned ds = dst_off & 63;
        const std::size_t take = std::min<std::size_t>(len, 64 - ds);
        const std::uint64_t chunk = read64(src, src_words, src_off) & low_mask(take);
        const std::uint64_t mask = low_mask(take) << ds;
        dst[dw] = (dst[dw] & ~mask) | (chunk << ds);
        dst_off += take;
        src_off += take;
        len -= take;
    }
}

}  // namespace detail

// ---------------------------------------------------------------- BitVector

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw ParseError(0, "bit string contains '" + std::string(1, bits[i]) + "'");
    }
    return v;
}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

BitVector BitVector::ones(std::size_t len) {
    BitVector v(len);
    std::fill(v.words_.begin(), v.words_.end(), ~std::uint64_t{0});
    v.clear_tail();
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t index) {
    BitVector v(len);
    v.set(index);
    return v;
}

void BitVector::clear_tail() noexcept {
    if (len_ & 63) words_.back() &= (std::uint64_t{1} << (len_ & 63)) - 1;
}

std::size_t BitVector::weight() const noexcept { return simd::popcount(words_.data(), words_.size()); }

bool BitVector::is_zero() const noexcept { return !simd::any(words_.data(), words_.size()); }

std::size_t BitVector::highest_set() const noexcept {
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w]) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    return npos;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.len_ != len_) throw DimensionError("BitVector xor: length mismatch");
    simd::xor_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

BitVector BitVector::rotated(std::size_t j) const {
    BitVector out(len_);
    out.xor_rotated(*this, j);
    return out;
}

void BitVector::xor_rotated(const BitVector& src, std::size_t j) {
    if (src.len_ != len_) throw DimensionError("BitVector rotate: length mismatch");
    if (len_ == 0) return;
    j %= len_;
    if (j == 0) {
        simd::xor_into(words_.data(), src.words_.data(), words_.size());
        return;
    }
    // Bits [0, n-j) of src land at [j, n); bits [n-j, n) land at [0, j).
    BitVector tmp(len_);
    detail::copy_bits(tmp.words_.data(), j, src.words_.data(), 0, len_ - j);
    detail::copy_bits(tmp.words_.data(), 0, src.words_.data(), len_ - j, j);
    simd::xor_into(words_.data(), tmp.words_.data(), words_.size());
}

BitVector BitVector::complemented() const {
    BitVector out = *this;
    for (auto& w : out.words_) w = ~w;
    out.clear_tail();
    return out;
}

BitVector BitVector::slice(std::size_t offset, std::size_t len) const {
    if (offset + len > len_) throw DimensionError("BitVector slice out of range");
    BitVector out(len);
    detail::copy_bits(out.words_.data(), 0, words_.data(), offset, len);
    return out;
}

void BitVector::assign_slice(std::size_t offset, const BitVector& bits) {
    if (offset + bits.len_ > len_) throw DimensionError("BitVector assign_slice out of range");
    detail::copy_bits(words_.data(), offset, bits.words_.data(), 0, bits.len_);
}

BitVector BitVector::concat(std::span<const BitVector> parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    BitVector out(total);
    std::size_t off = 0;
    for (const auto& p : parts) {
        out.assign_slice(off, p);
        off += p.size();
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<std::string> tmp(rows.begin(), rows.end());
    return from_strings(std::span<const std::string>(tmp));
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("BitMatrix rows of unequal length");
        m.set_row(r, BitVector::from_string(rows[r]));
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    BitMatrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols) throw DimensionError("BitMatrix rows of unequal length");
        std::size_t c = 0;
        for (int b : row) m.set(r, c++, b != 0);
        ++r;
    }
    return m;
}

BitMatrix BitMatrix::from_row_vectors(std::span<const BitVector> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(data_.data() + r * stride_, stride_, v.words().data());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw DimensionError("BitMatrix set_row: length mismatch");
    std::copy_n(v.words().data(), stride_, data_.data() + r * stride_);
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) noexcept {
    simd::xor_into(data_.data() + dst * stride_, data_.data() + src * stride_, stride_);
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool BitMatrix::is_zero() const noexcept { return !simd::any(data_.data(), data_.size()); }

bool BitMatrix::is_identity() const noexcept { return rows_ == cols_ && *this == identity(rows_); }

std::size_t BitMatrix::weight() const noexcept { return simd::popcount(data_.data(), data_.size()); }

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto w = row_words(r);
        for (std::size_t k = 0; k < stride_; ++k) {
            std::uint64_t bits = w[k];
            while (bits) {
                const std::size_t c = k * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                t.set(c, r);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) throw DimensionError("BitMatrix block out of range");
    BitMatrix b(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r)
        detail::copy_bits(b.data_.data() + r * b.stride_, 0, data_.data() + (r0 + r) * stride_, c0, ncols);
    return b;
}

void BitMatrix::set_block(std::size_t r0, std::size_t c0, const BitMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("BitMatrix set_block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
        detail::copy_bits(data_.data() + (r0 + r) * stride_, c0, b.data_.data() + r * b.stride_, 0, b.cols_);
}

void BitMatrix::xor_block(std::size_t r0, std::size_t c0, const BitMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("BitMatrix xor_block out of range");
    if (c0 == 0 && b.cols_ == cols_) {
        for (std::size_t r = 0; r < b.rows_; ++r)
            simd::xor_into(data_.data() + (r0 + r) * stride_, b.data_.data() + r * b.stride_, stride_);
        return;
    }
    std::vector<std::uint64_t> tmp(stride_);
    for (std::size_t r = 0; r < b.rows_; ++r) {
        std::fill(tmp.begin(), tmp.end(), 0);
        detail::copy_bits(tmp.data(), c0, b.data_.data() + r * b.stride_, 0, b.cols_);
        simd::xor_into(data_.data() + (r0 + r) * stride_, tmp.data(), stride_);
    }
}

BitMatrix BitMatrix::hcat(std::span<const BitMatrix> parts) {
    if (parts.empty()) return {};
    const std::size_t rows = parts.front().rows_;
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows_ != rows) throw DimensionError("hcat: row count mismatch");
        cols += p.cols_;
    }
    BitMatrix out(rows, cols);
    std::size_t c0 = 0;
    for (const auto& p : parts) {
        out.set_block(0, c0, p);
        c0 += p.cols_;
    }
    return out;
}

BitMatrix BitMatrix::vcat(std::span<const BitMatrix> parts) {
    if (parts.empty()) return {};
    const std::size_t cols = parts.front().cols_;
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols_ != cols) throw DimensionError("vcat: column count mismatch");
        rows += p.rows_;
    }
    BitMatrix out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& p : parts) {
        std::copy(p.data_.begin(), p.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(r0 * out.stride_));
        r0 += p.rows_;
    }
    return out;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("BitMatrix add: shape mismatch");
    simd::xor_into(data_.data(), other.data_.data(), data_.size());
    return *this;
}

BitVector BitMatrix::left_mul(const BitVector& v) const {
    if (v.size() != rows_) throw DimensionError("BitMatrix left_mul: length mismatch");
    BitVector out(cols_);
    auto dst = out.words();
    const auto w = v.words();
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::uint64_t bits = w[k];
        while (bits) {
            const std::size_t r = k * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            simd::xor_into(dst.data(), data_.data() + r * stride_, stride_);
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitMatrix::to_string() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

// ---------------------------------------------------------------- free functions

BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mul: a.cols != b.rows");
    BitMatrix out(a.rows(), b.cols());
    const std::size_t stride = b.stride();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t* dst = out.row_words(i).data();
        const auto aw = a.row_words(i);
        for (std::size_t k = 0; k < aw.size(); ++k) {
            std::uint64_t bits = aw[k];
            while (bits) {
                const std::size_t r = k * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                simd::xor_into(dst, b.row_words(r).data(), stride);
                bits &= bits - 1;
            }
        }
    }
    return out;
}

BitMatrix add(const BitMatrix& a, const BitMatrix& b) { return a + b; }

std::size_t rank(const BitMatrix& a) {
    BitMatrix m = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        // Columns left of c are already zero below the pivot; start at c's word.
        const std::size_t w0 = c >> 6;
        const std::size_t n = m.stride() - w0;
        const std::uint64_t* pivot = m.row_words(r).data() + w0;
        for (std::size_t i = r + 1; i < m.rows(); ++i)
            if (m.get(i, c)) simd::xor_into(m.row_words(i).data() + w0, pivot, n);
        ++r;
    }
    return r;
}

std::optional<BitMatrix> solve_right(const BitMatrix& a, const BitMatrix& target) {
    if (a.rows() != target.rows()) throw DimensionError("solve_right: a.rows != target.rows");
    BitMatrix m = a;
    BitMatrix t = target;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        t.swap_rows(r, p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && m.get(i, c)) {
                m.xor_row(i, r);
                t.xor_row(i, r);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < t.rows(); ++i)
        if (simd::any(t.row_words(i).data(), t.stride())) return std::nullopt;
    BitMatrix x(a.cols(), target.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x.set_row(pivots[i], t.row(i));
    return x;
}

std::optional<BitMatrix> invert(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("invert: matrix is not square");
    if (rank(a) < a.rows()) return std::nullopt;
    return solve_right(a, BitMatrix::identity(a.rows()));
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) out.set_block(i * b.rows(), j * b.cols(), b);
    return out;
}

}  // namespace cslnc
