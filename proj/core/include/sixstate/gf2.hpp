#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sixstate {

/// Bit vector packed little-endian into 64-bit words (bit i lives in word
/// i/64 at position i%64). XOR, inner products and weights run word-parallel.
class bit_vec {
  public:
    bit_vec() = default;
    explicit bit_vec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static bit_vec from_string(std::string_view s);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bit_vec& operator^=(const bit_vec& o);
    friend bit_vec operator^(bit_vec a, const bit_vec& b) {
        a ^= b;
        return a;
    }

    /// GF(2) inner product: parity of the AND of the two vectors.
    bool dot(const bit_vec& o) const;

    /// Hamming weight.
    std::size_t weight() const;

    bool is_zero() const;

    bool operator==(const bit_vec& o) const = default;

    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix; each row is a bit_vec of length cols. A matrix may
/// have zero rows (e.g. a parity-check with no constraints) but never zero
/// columns.
class binary_matrix {
  public:
    binary_matrix(std::size_t rows, std::size_t cols);
    static binary_matrix from_rows(std::vector<bit_vec> rows);
    static binary_matrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    const bit_vec& row(std::size_t r) const { return rows_[r]; }
    bit_vec& row(std::size_t r) { return rows_[r]; }

    /// Matrix-vector product over GF(2); v.size() must equal cols().
    bit_vec multiply(const bit_vec& v) const;

    binary_matrix transposed() const;

    bool operator==(const binary_matrix& o) const = default;

  private:
    std::size_t cols_ = 1;
    std::vector<bit_vec> rows_;
};

/// Reduced row echelon form with zero rows dropped. pivots[i] is the column
/// of the leading 1 of row i; pivots are strictly increasing.
struct echelon_form {
    binary_matrix matrix;
    std::vector<std::size_t> pivots;
};

echelon_form row_reduce(const binary_matrix& m);

std::size_t gf2_rank(const binary_matrix& m);

/// Basis (as rows) of {x : m·x = 0}. Row count is cols − rank.
binary_matrix null_space(const binary_matrix& m);

}  // namespace sixstate
