#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace klspecht {

/// Dense row-major matrix over the rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);
    /// Integer literal rows, all of equal length.
    static ExactMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpq_class& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const mpq_class& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    ExactMatrix transpose() const;
    bool is_identity() const;
    bool is_integral() const;
    bool is_upper_triangular() const;

    /// Rows on separate lines, entries as "a" or "p/q" right-aligned.
    std::string str() const;
    /// Entries as exact strings, row-major.
    std::vector<std::vector<std::string>> entry_strings() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpq_class> data_;
};

/// Matrix with 1 in row target[c] of column c.
ExactMatrix permutation_matrix(const std::vector<int>& target);

}  // namespace klspecht
