#include "klspecht/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace klspecht {

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative dimension");
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ExactMatrix: ragged rows");
        for (int k = 0; k < c; ++k) m(i, k) = rows[i][k];
    }
    return m;
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) t(k, i) = (*this)(i, k);
    }
    return t;
}

bool ExactMatrix::is_identity() const { return *this == identity(rows_) && is_square(); }

bool ExactMatrix::is_integral() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const mpq_class& x) { return x.get_den() == 1; });
}

bool ExactMatrix::is_upper_triangular() const {
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < std::min(i, cols_); ++k) {
            if (sgn((*this)(i, k)) != 0) return false;
        }
    }
    return true;
}

std::vector<std::vector<std::string>> ExactMatrix::entry_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) out[i].push_back((*this)(i, k).get_str());
    }
    return out;
}

std::string ExactMatrix::str() const {
    auto cells = entry_strings();
    std::size_t width = 1;
    for (const auto& row : cells) {
        for (const auto& s : row) width = std::max(width, s.size());
    }
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) out += ' ';
            out += std::string(width - row[k].size(), ' ') + row[k];
        }
        out += '\n';
    }
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix: dimension mismatch");
    ExactMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int s = 0; s < a.cols_; ++s) {
            const mpq_class& x = a(i, s);
            if (sgn(x) == 0) continue;
            for (int k = 0; k < b.cols_; ++k) {
                const mpq_class& y = b(s, k);
                if (sgn(y) != 0) out(i, k) += x * y;
            }
        }
    }
    return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix permutation_matrix(const std::vector<int>& target) {
    const int n = static_cast<int>(target.size());
    ExactMatrix m(n, n);
    for (int c = 0; c < n; ++c) m(target[c], c) = 1;
    return m;
}

}  // namespace klspecht
