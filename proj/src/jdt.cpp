#include "klspecht/jdt.hpp"

#include <stdexcept>

namespace klspecht {

namespace {

using Grid = std::vector<std::vector<int>>;

bool inside(const Grid& g, int r, int c) {
    return r >= 0 && r < static_cast<int>(g.size()) && c >= 0 && c < static_cast<int>(g[r].size());
}

// Runs one inverse-promotion step on the boxes holding 1..m, leaving m where
// the hole stops. Boxes holding larger values are never entered.
void inverse_promote_prefix(Grid& g, int m) {
    int r = 0, c = 0;  // entry 1 always sits in the corner
    auto active = [&](int rr, int cc) { return inside(g, rr, cc) && g[rr][cc] <= m; };
    for (;;) {
        bool right = active(r, c + 1);
        bool below = active(r + 1, c);
        if (!right && !below) break;
        int nr = r, nc = c;
        if (right && below) {
            if (g[r][c + 1] < g[r + 1][c]) {
                nc = c + 1;
            } else {
                nr = r + 1;
            }
        } else if (right) {
            nc = c + 1;
        } else {
            nr = r + 1;
        }
        g[r][c] = g[nr][nc];
        r = nr;
        c = nc;
    }
    for (auto& row : g) {
        for (int& v : row) {
            if (v <= m) --v;
        }
    }
    g[r][c] = m;
}

}  // namespace

StandardTableau promote(const StandardTableau& t) {
    const int n = t.size();
    if (n == 0) return t;
    Grid g = t.rows();
    Box start = t.find(n);
    int r = start.row - 1, c = start.col - 1;
    while (r > 0 || c > 0) {
        bool above = r > 0;
        bool left = c > 0;
        int nr = r, nc = c;
        if (above && left) {
            if (g[r - 1][c] > g[r][c - 1]) {
                nr = r - 1;
            } else {
                nc = c - 1;
            }
        } else if (above) {
            nr = r - 1;
        } else {
            nc = c - 1;
        }
        g[r][c] = g[nr][nc];
        r = nr;
        c = nc;
    }
    for (auto& row : g) {
        for (int& v : row) ++v;
    }
    g[0][0] = 1;
    return make_tableau_unchecked(std::move(g));
}

StandardTableau inverse_promote(const StandardTableau& t) {
    if (t.size() == 0) return t;
    Grid g = t.rows();
    inverse_promote_prefix(g, t.size());
    return make_tableau_unchecked(std::move(g));
}

StandardTableau partial_evacuate(const StandardTableau& t, int k) {
    if (k < 1 || k > t.size()) throw std::out_of_range("partial_evacuate: k out of range");
    Grid g = t.rows();
    for (int m = k; m >= 1; --m) inverse_promote_prefix(g, m);
    return make_tableau_unchecked(std::move(g));
}

StandardTableau evacuate(const StandardTableau& t) {
    if (t.size() == 0) return t;
    return partial_evacuate(t, t.size());
}

}  // namespace klspecht
