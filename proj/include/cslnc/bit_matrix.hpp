#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cslnc {

namespace detail {
inline constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }
// Copies len bits from src starting at bit src_off into dst starting at bit dst_off.
// Bits of dst outside the target range are preserved.
void copy_bits(std::uint64_t* dst, std::size_t dst_off, const std::uint64_t* src, std::size_t src_off,
               std::size_t len);
}  // namespace detail

/// Packed binary row vector. Bits beyond size() in the last word are always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_(detail::word_count(len), 0) {}

    /// Parses a string of '0'/'1' characters; index 0 is the first character.
    static BitVector from_string(std::string_view bits);
    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector ones(std::size_t len);
    static BitVector unit(std::size_t len, std::size_t index);

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true) noexcept {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;
    /// Index of the highest set bit, or npos when zero.
    std::size_t highest_set() const noexcept;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector& a, const BitVector& b) noexcept {
        return a.len_ == b.len_ && a.words_ == b.words_;
    }

    /// Cyclic shift to the right by j positions: bit i moves to (i + j) mod size().
    /// This is the row-vector product v * C^j with C the cyclic permutation matrix.
    BitVector rotated(std::size_t j) const;
    /// XORs rotated(j) into *this without a temporary.
    void xor_rotated(const BitVector& src, std::size_t j);

    /// All bits complemented within size().
    BitVector complemented() const;

    BitVector slice(std::size_t offset, std::size_t len) const;
    void assign_slice(std::size_t offset, const BitVector& bits);
    static BitVector concat(std::span<const BitVector> parts);

    std::string to_string() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

private:
    void clear_tail() noexcept;

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over GF(2), row-major, each row padded to whole 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(detail::word_count(cols)), data_(rows * stride_, 0) {}

    static BitMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static BitMatrix identity(std::size_t n);
    /// Rows given as '0'/'1' strings of equal length.
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BitMatrix from_strings(std::span<const std::string> rows);
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static BitMatrix from_row_vectors(std::span<const BitVector> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t stride() const noexcept { return stride_; }

    bool get(std::size_t r, std::size_t c) const noexcept {
        return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value = true) noexcept {
        const std::uint64_t m = std::uint64_t{1} << (c & 63);
        auto& w = data_[r * stride_ + (c >> 6)];
        if (value)
            w |= m;
        else
            w &= ~m;
    }
    void flip(std::size_t r, std::size_t c) noexcept {
        data_[r * stride_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const noexcept {
        return {data_.data() + r * stride_, stride_};
    }
    std::span<std::uint64_t> row_words(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    void xor_row(std::size_t dst, std::size_t src) noexcept;
    void swap_rows(std::size_t a, std::size_t b) noexcept;

    bool is_zero() const noexcept;
    bool is_identity() const noexcept;
    std::size_t weight() const noexcept;

    BitMatrix transpose() const;
    BitMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t r0, std::size_t c0, const BitMatrix& b);
    /// XORs b into the block whose top-left corner is (r0, c0).
    void xor_block(std::size_t r0, std::size_t c0, const BitMatrix& b);

    static BitMatrix hcat(std::span<const BitMatrix> parts);
    static BitMatrix vcat(std::span<const BitMatrix> parts);

    BitMatrix& operator+=(const BitMatrix& other);
    friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }
    friend bool operator==(const BitMatrix& a, const BitMatrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Row-vector product v * M.
    BitVector left_mul(const BitVector& v) const;

    /// One line per row, '0'/'1' characters.
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

BitMatrix mul(const BitMatrix& a, const BitMatrix& b);
BitMatrix add(const BitMatrix& a, const BitMatrix& b);
std::size_t rank(const BitMatrix& a);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<BitMatrix> invert(const BitMatrix& a);
/// Some X with a * X = target, or nullopt when target is outside the column
/// space of a. Pivots are taken at the first nonzero column of each row in
/// elimination order and all free variables are zero, so the answer is
/// reproducible.
std::optional<BitMatrix> solve_right(const BitMatrix& a, const BitMatrix& target);
BitMatrix kron(const BitMatrix& a, const BitMatrix& b);

inline BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) { return mul(a, b); }

}  // namespace cslnc
