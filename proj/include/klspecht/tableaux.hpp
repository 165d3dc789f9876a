#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "klspecht/errors.hpp"

namespace klspecht {

/// Weakly decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int row_length(int row) const { return parts_[row - 1]; }
    bool empty() const { return parts_.empty(); }
    bool is_rectangle() const;

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n, largest first in reverse lexicographic order. Empty for
/// n < 1: every consumer works with S_n for n >= 1.
std::vector<Partition> partitions_of(int n);

/// 1-based position inside a Young diagram.
struct Box {
    int row = 0;
    int col = 0;

    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

/// Removable boxes labelled 1..r from the top row downward (label = position + 1).
std::vector<Box> removable_boxes(const Partition& shape);

/// The partition left after deleting removable box `label` (1-based).
Partition remove_box(const Partition& shape, int label);

/// A standard Young tableau. Rows are stored top to bottom, entries left to
/// right; entries are exactly 1..n and increase along rows and columns.
class StandardTableau {
public:
    StandardTableau() = default;
    /// Validates standardness; throws ParseError otherwise.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    /// Parses "1,4,5/2/3".
    static StandardTableau parse(std::string_view text);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }

    int at(Box b) const { return rows_[b.row - 1][b.col - 1]; }
    /// Position of entry `value` (1..n).
    Box find(int value) const;

    std::string str() const;

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.rows_ == b.rows_;
    }
    friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    struct Unchecked {};
    StandardTableau(std::vector<std::vector<int>> rows, Unchecked);
    friend StandardTableau make_tableau_unchecked(std::vector<std::vector<int>> rows);

    std::vector<std::vector<int>> rows_;
    Partition shape_;
};

/// Builds a tableau from rows that the caller guarantees to be standard.
StandardTableau make_tableau_unchecked(std::vector<std::vector<int>> rows);

/// Label of the removable box holding the largest entry.
int index(const StandardTableau& t);

/// The total index ordering: compare indices, and on a tie delete the largest
/// box from both tableaux and compare again.
std::strong_ordering total_index_cmp(const StandardTableau& t, const StandardTableau& r);

/// Indices of the recursive index comparison, outermost first: entry n, then
/// entry n-1 after deleting n, ... down to (but excluding) `stop` boxes left.
std::vector<int> index_sequence(const StandardTableau& t, int stop = 0);

/// j with j+1 strictly below j, ascending.
std::vector<int> descent_set(const StandardTableau& t);
bool has_descent(const StandardTableau& t, int j);

/// Removes entry n; returns the smaller tableau and index(t).
std::pair<StandardTableau, int> delete_largest(const StandardTableau& t);

/// Appends n+1 at the end of `row` (1-based; rows()+1 opens a new row).
/// Throws ParseError if the result is not a partition shape.
StandardTableau add_box(const StandardTableau& t, int row);

/// Every standard tableau of the shape, in total index order.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

/// Hook-length formula.
long long count_syt(const Partition& shape);

}  // namespace klspecht

template <>
struct std::hash<klspecht::StandardTableau> {
    std::size_t operator()(const klspecht::StandardTableau& t) const noexcept {
        std::size_t h = 0;
        for (const auto& row : t.rows()) {
            for (int v : row) h = h * 131 + static_cast<std::size_t>(v);
            h = h * 131 + 7;
        }
        return h;
    }
};
