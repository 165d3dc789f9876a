#include "klspecht/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace klspecht {

using Grid = std::vector<std::vector<int>>;

RSKPair rsk(const Permutation& w) {
    Grid p, q;
    for (int i = 1; i <= w.size(); ++i) {
        int x = w(i);
        std::size_t row = 0;
        for (;; ++row) {
            if (row == p.size()) {
                p.push_back({x});
                q.push_back({i});
                break;
            }
            auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
            if (it == p[row].end()) {
                p[row].push_back(x);
                q[row].push_back(i);
                break;
            }
            std::swap(x, *it);
        }
    }
    return {make_tableau_unchecked(std::move(p)), make_tableau_unchecked(std::move(q))};
}

Permutation inverse_rsk(const StandardTableau& insertion, const StandardTableau& recording) {
    if (insertion.shape() != recording.shape()) {
        throw std::invalid_argument("inverse_rsk: shape mismatch");
    }
    const int n = insertion.size();
    Grid p = insertion.rows();
    StandardTableau q = recording;
    std::vector<int> word(n);
    for (int i = n; i >= 1; --i) {
        Box b = q.find(i);
        int row = b.row - 1;
        int x = p[row].back();
        p[row].pop_back();
        for (int r = row - 1; r >= 0; --r) {
            // largest entry smaller than x is bumped up
            auto it = std::lower_bound(p[r].begin(), p[r].end(), x);
            --it;
            std::swap(x, *it);
        }
        if (p[row].empty()) p.pop_back();
        word[i - 1] = x;
        q = delete_largest(q).first;
    }
    return Permutation(std::move(word));
}

StandardTableau css(const Partition& shape) {
    Grid g;
    for (int len : shape.parts()) g.emplace_back(len, 0);
    int next = 1;
    for (int c = 0; c < (shape.empty() ? 0 : shape.parts().front()); ++c) {
        for (int r = 0; r < shape.rows() && c < shape.parts()[r]; ++r) g[r][c] = next++;
    }
    return make_tableau_unchecked(std::move(g));
}

StandardTableau css_i(const Partition& shape, int i) {
    auto boxes = removable_boxes(shape);
    if (i < 1 || i > static_cast<int>(boxes.size())) throw std::out_of_range("css_i: i out of range");
    const int n = shape.size();
    const int k = boxes[i - 1].row;
    Grid g;
    for (int len : shape.parts()) g.emplace_back(len, 0);
    g[k - 1].back() = n;
    for (int m = 1; m <= k - 1; ++m) g[k - m - 1].back() = n - m;
    int next = 1;
    for (int c = 0; c < shape.parts().front(); ++c) {
        for (int r = 0; r < shape.rows() && c < shape.parts()[r]; ++r) {
            if (g[r][c] == 0) g[r][c] = next++;
        }
    }
    return StandardTableau(std::move(g));
}

Permutation column_word(const StandardTableau& p) {
    std::vector<int> word;
    const auto& rows = p.rows();
    for (int c = 0; c < (rows.empty() ? 0 : static_cast<int>(rows.front().size())); ++c) {
        for (int r = static_cast<int>(rows.size()) - 1; r >= 0; --r) {
            if (c < static_cast<int>(rows[r].size())) word.push_back(rows[r][c]);
        }
    }
    return Permutation(std::move(word));
}

}  // namespace klspecht
