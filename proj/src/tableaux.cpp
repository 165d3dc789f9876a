#include "klspecht/tableaux.hpp"

#include <algorithm>
#include <numeric>

#include "text.hpp"

namespace klspecht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) throw ParseError("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1]) {
            throw ParseError("partition parts must be weakly decreasing");
        }
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    text = detail::trim(text);
    if (text.empty()) throw ParseError("empty partition");
    return Partition(detail::parse_int_list(text, "partition"));
}

bool Partition::is_rectangle() const {
    return !parts_.empty() && parts_.front() == parts_.back();
}

std::string Partition::str() const { return detail::join(parts_, ","); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    if (n >= 1) partitions_rec(n, n, prefix, out);
    return out;
}

std::vector<Box> removable_boxes(const Partition& shape) {
    if (shape.empty()) throw ParseError("empty partition has no removable boxes");
    std::vector<Box> boxes;
    const auto& parts = shape.parts();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k + 1 == parts.size() || parts[k + 1] < parts[k]) {
            boxes.push_back({static_cast<int>(k) + 1, parts[k]});
        }
    }
    return boxes;
}

Partition remove_box(const Partition& shape, int label) {
    auto boxes = removable_boxes(shape);
    if (label < 1 || label > static_cast<int>(boxes.size())) {
        throw std::out_of_range("removable box label out of range");
    }
    auto parts = shape.parts();
    if (--parts[boxes[label - 1].row - 1] == 0) parts.pop_back();
    return Partition(std::move(parts));
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    for (const auto& row : rows_) {
        if (row.empty()) throw ParseError("tableau rows must be nonempty");
        parts.push_back(static_cast<int>(row.size()));
    }
    shape_ = Partition(parts);  // throws on a non-partition shape
    const int n = shape_.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            int v = rows_[r][c];
            if (v < 1 || v > n || seen[v]) {
                throw ParseError("tableau entries must be exactly 1.." + std::to_string(n));
            }
            seen[v] = true;
            if (c > 0 && rows_[r][c - 1] >= v) throw ParseError("tableau rows must increase");
            if (r > 0 && rows_[r - 1][c] >= v) throw ParseError("tableau columns must increase");
        }
    }
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows, Unchecked)
    : rows_(std::move(rows)) {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    shape_ = Partition(std::move(parts));
}

StandardTableau make_tableau_unchecked(std::vector<std::vector<int>> rows) {
    return StandardTableau(std::move(rows), StandardTableau::Unchecked{});
}

StandardTableau StandardTableau::parse(std::string_view text) {
    text = detail::trim(text);
    if (text.empty()) throw ParseError("empty tableau");
    std::vector<std::vector<int>> rows;
    for (auto row : detail::split(text, '/')) rows.push_back(detail::parse_int_list(row, "tableau"));
    return StandardTableau(std::move(rows));
}

Box StandardTableau::find(int value) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (rows_[r][c] == value) return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
        }
    }
    throw std::out_of_range("value not in tableau");
}

std::string StandardTableau::str() const {
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r > 0) out += '/';
        out += detail::join(rows_[r], ",");
    }
    return out;
}

namespace {

// Label of the removable box at the end of `row`.
int label_of_row(const Partition& shape, int row) {
    const auto& parts = shape.parts();
    int label = 0;
    for (int k = 0; k < row; ++k) {
        if (k + 1 == static_cast<int>(parts.size()) || parts[k + 1] < parts[k]) ++label;
    }
    return label;
}

int row_of_largest(const StandardTableau& t) {
    const int n = t.size();
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (t.rows()[r].back() == n) return static_cast<int>(r) + 1;
    }
    throw std::logic_error("largest entry is not at a row end");
}

}  // namespace

int index(const StandardTableau& t) {
    if (t.size() == 0) throw std::invalid_argument("index of the empty tableau");
    return label_of_row(t.shape(), row_of_largest(t));
}

std::vector<int> index_sequence(const StandardTableau& t, int stop) {
    std::vector<int> seq;
    auto rows = t.rows();
    std::vector<int> parts = t.shape().parts();
    for (int m = t.size(); m > stop; --m) {
        int row = 0;
        while (rows[row].back() != m) ++row;
        Partition shape(parts);
        seq.push_back(label_of_row(shape, row + 1));
        rows[row].pop_back();
        if (--parts[row] == 0) {
            rows.pop_back();
            parts.pop_back();
        }
    }
    return seq;
}

std::strong_ordering total_index_cmp(const StandardTableau& t, const StandardTableau& r) {
    if (t.shape() != r.shape()) throw std::invalid_argument("total_index_cmp: shape mismatch");
    return index_sequence(t) <=> index_sequence(r);
}

bool has_descent(const StandardTableau& t, int j) {
    return t.find(j + 1).row > t.find(j).row;
}

std::vector<int> descent_set(const StandardTableau& t) {
    const int n = t.size();
    std::vector<int> row_of(n + 1);
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        for (int v : t.rows()[r]) row_of[v] = static_cast<int>(r);
    }
    std::vector<int> out;
    for (int j = 1; j < n; ++j) {
        if (row_of[j + 1] > row_of[j]) out.push_back(j);
    }
    return out;
}

std::pair<StandardTableau, int> delete_largest(const StandardTableau& t) {
    int i = index(t);
    int row = row_of_largest(t);
    auto rows = t.rows();
    rows[row - 1].pop_back();
    if (rows[row - 1].empty()) rows.pop_back();
    return {make_tableau_unchecked(std::move(rows)), i};
}

StandardTableau add_box(const StandardTableau& t, int row) {
    auto rows = t.rows();
    const int n = t.size();
    if (row < 1 || row > static_cast<int>(rows.size()) + 1) throw ParseError("add_box: row out of range");
    if (row == static_cast<int>(rows.size()) + 1) {
        rows.push_back({n + 1});
    } else {
        if (row > 1 && rows[row - 2].size() <= rows[row - 1].size()) {
            throw ParseError("add_box: not an addable box");
        }
        rows[row - 1].push_back(n + 1);
    }
    return make_tableau_unchecked(std::move(rows));
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    if (shape.empty()) return {make_tableau_unchecked({})};
    std::vector<StandardTableau> out;
    auto boxes = removable_boxes(shape);
    for (int label = 1; label <= static_cast<int>(boxes.size()); ++label) {
        Partition smaller = remove_box(shape, label);
        for (const auto& t : enumerate_syt(smaller)) out.push_back(add_box(t, boxes[label - 1].row));
    }
    return out;
}

long long count_syt(const Partition& shape) {
    const auto& parts = shape.parts();
    std::vector<int> column_heights(parts.empty() ? 0 : parts.front(), 0);
    for (int p : parts) {
        for (int c = 0; c < p; ++c) ++column_heights[c];
    }
    // n! / prod(hooks); cancel each hook against the factors of n! first.
    std::vector<long long> factors;
    for (int k = 1; k <= shape.size(); ++k) factors.push_back(k);
    for (std::size_t r = 0; r < parts.size(); ++r) {
        for (int c = 0; c < parts[r]; ++c) {
            long long rem = (parts[r] - c - 1) + (column_heights[c] - static_cast<int>(r) - 1) + 1;
            for (auto& x : factors) {
                if (rem == 1) break;
                long long g = std::gcd(x, rem);
                x /= g;
                rem /= g;
            }
        }
    }
    long long result = 1;
    for (auto x : factors) result *= x;
    return result;
}

}  // namespace klspecht
