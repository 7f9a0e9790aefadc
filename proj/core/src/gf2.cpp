#include "sixstate/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace sixstate {

bit_vec bit_vec::from_string(std::string_view s) {
    bit_vec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            v.set(i, true);
        } else if (s[i] != '0') {
            throw std::invalid_argument("bit_vec::from_string: expected only '0'/'1', got '" + std::string(1, s[i]) + "'");
        }
    }
    return v;
}

bit_vec& bit_vec::operator^=(const bit_vec& o) {
    if (size_ != o.size_) throw std::invalid_argument("bit_vec: xor of mismatched lengths");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
}

bool bit_vec::dot(const bit_vec& o) const {
    if (size_ != o.size_) throw std::invalid_argument("bit_vec: dot of mismatched lengths");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
}

std::size_t bit_vec::weight() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool bit_vec::is_zero() const {
    for (std::uint64_t w : words_) {
        if (w != 0) return false;
    }
    return true;
}

std::string bit_vec::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

binary_matrix::binary_matrix(std::size_t rows, std::size_t cols) : cols_(cols) {
    if (cols == 0) throw std::invalid_argument("binary_matrix: need at least one column");
    rows_.assign(rows, bit_vec(cols));
}

binary_matrix binary_matrix::from_rows(std::vector<bit_vec> rows) {
    if (rows.empty()) throw std::invalid_argument("binary_matrix::from_rows: use binary_matrix(0, cols) for an empty matrix");
    binary_matrix m(0, rows[0].size());
    for (const bit_vec& r : rows) {
        if (r.size() != m.cols_) throw std::invalid_argument("binary_matrix::from_rows: ragged rows");
    }
    m.rows_ = std::move(rows);
    return m;
}

binary_matrix binary_matrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<bit_vec> parsed;
    parsed.reserve(rows.size());
    for (const std::string& r : rows) parsed.push_back(bit_vec::from_string(r));
    return from_rows(std::move(parsed));
}

bit_vec binary_matrix::multiply(const bit_vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("binary_matrix::multiply: vector length != cols");
    bit_vec out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) out.set(r, rows_[r].dot(v));
    return out;
}

binary_matrix binary_matrix::transposed() const {
    // A matrix with zero columns is unrepresentable, so a zero-row matrix has
    // no transpose here.
    if (rows_.empty()) throw std::invalid_argument("binary_matrix::transposed: matrix has zero rows");
    binary_matrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, get(r, c));
    }
    return t;
}

echelon_form row_reduce(const binary_matrix& m) {
    std::vector<bit_vec> work;
    work.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) work.push_back(m.row(r));

    std::vector<bit_vec> reduced;
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < m.cols() && next_row < work.size(); ++col) {
        std::size_t pivot_row = next_row;
        while (pivot_row < work.size() && !work[pivot_row].get(col)) ++pivot_row;
        if (pivot_row == work.size()) continue;
        std::swap(work[next_row], work[pivot_row]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r != next_row && work[r].get(col)) work[r] ^= work[next_row];
        }
        pivots.push_back(col);
        ++next_row;
    }
    work.resize(next_row);

    echelon_form out{binary_matrix(0, m.cols()), std::move(pivots)};
    if (!work.empty()) out.matrix = binary_matrix::from_rows(std::move(work));
    return out;
}

std::size_t gf2_rank(const binary_matrix& m) { return row_reduce(m).pivots.size(); }

binary_matrix null_space(const binary_matrix& m) {
    const echelon_form ech = row_reduce(m);
    const std::size_t n = m.cols();

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : ech.pivots) is_pivot[p] = true;

    std::vector<bit_vec> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        bit_vec x(n);
        x.set(free_col, true);
        // Back-substitute: pivot variable i must cancel row i's free-column entry.
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
            if (ech.matrix.get(i, free_col)) x.set(ech.pivots[i], true);
        }
        basis.push_back(std::move(x));
    }
    if (basis.empty()) return binary_matrix(0, n);
    return binary_matrix::from_rows(std::move(basis));
}

}  // namespace sixstate
