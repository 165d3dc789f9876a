#include "klspecht/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "text.hpp"

namespace klspecht {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[v]) {
            throw ParseError("not a permutation of 1.." + std::to_string(n));
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
    text = detail::trim(text);
    if (text.empty()) throw ParseError("empty permutation");
    if (text.find(',') == std::string_view::npos && text.size() > 1) {
        std::vector<int> word;
        for (char ch : text) {
            if (ch < '1' || ch > '9') throw ParseError("malformed permutation: '" + std::string(text) + "'");
            word.push_back(ch - '0');
        }
        return Permutation(std::move(word));
    }
    return Permutation(detail::parse_int_list(text, "permutation"));
}

int Permutation::position_of(int v) const {
    auto it = std::find(word_.begin(), word_.end(), v);
    if (it == word_.end()) throw std::out_of_range("value not in permutation");
    return static_cast<int>(it - word_.begin()) + 1;
}

std::string Permutation::str() const { return detail::join(word_, ","); }

Permutation multiply(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("multiply: size mismatch");
    std::vector<int> word(u.size());
    for (int i = 1; i <= u.size(); ++i) word[i - 1] = u(v(i));
    return Permutation(std::move(word));
}

Permutation inverse(const Permutation& w) {
    std::vector<int> word(w.size());
    for (int i = 1; i <= w.size(); ++i) word[w(i) - 1] = i;
    return Permutation(std::move(word));
}

int length(const Permutation& w) {
    int inv = 0;
    const auto& x = w.word();
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t k = i + 1; k < x.size(); ++k) inv += x[i] > x[k];
    }
    return inv;
}

Permutation left_multiply_simple(int j, const Permutation& w) {
    if (j < 1 || j >= w.size()) throw std::out_of_range("simple reflection index out of range");
    auto word = w.word();
    for (int& v : word) {
        if (v == j) {
            v = j + 1;
        } else if (v == j + 1) {
            v = j;
        }
    }
    return Permutation(std::move(word));
}

Permutation right_multiply_simple(const Permutation& w, int j) {
    if (j < 1 || j >= w.size()) throw std::out_of_range("simple reflection index out of range");
    auto word = w.word();
    std::swap(word[j - 1], word[j]);
    return Permutation(std::move(word));
}

bool is_left_descent(const Permutation& w, int j) {
    return w.position_of(j + 1) < w.position_of(j);
}

std::vector<int> left_descents(const Permutation& w) {
    const int n = w.size();
    std::vector<int> pos(n + 1);
    for (int i = 1; i <= n; ++i) pos[w(i)] = i;
    std::vector<int> out;
    for (int j = 1; j < n; ++j) {
        if (pos[j + 1] < pos[j]) out.push_back(j);
    }
    return out;
}

std::vector<int> right_descents(const Permutation& w) {
    std::vector<int> out;
    for (int j = 1; j < w.size(); ++j) {
        if (w(j) > w(j + 1)) out.push_back(j);
    }
    return out;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    const int n = v.size();
    std::vector<int> pv, pw;
    for (int k = 1; k < n; ++k) {
        pv.insert(std::upper_bound(pv.begin(), pv.end(), v(k)), v(k));
        pw.insert(std::upper_bound(pw.begin(), pw.end(), w(k)), w(k));
        for (int i = 0; i < k; ++i) {
            if (pv[i] > pw[i]) return false;
        }
    }
    return true;
}

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> word;
    Permutation rest = w;
    for (;;) {
        auto desc = left_descents(rest);
        if (desc.empty()) return word;
        word.push_back(desc.front());
        rest = left_multiply_simple(desc.front(), rest);
    }
}

Permutation from_word(int n, const std::vector<int>& word) {
    Permutation w = Permutation::identity(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = left_multiply_simple(*it, w);
    return w;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::size_t lex_rank(const Permutation& w) {
    const int n = w.size();
    std::size_t rank = 0;
    std::vector<bool> used(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        int smaller = 0;
        for (int v = 1; v < w(i); ++v) smaller += !used[v];
        used[w(i)] = true;
        rank = rank * static_cast<std::size_t>(n - i + 1) + static_cast<std::size_t>(smaller);
    }
    return rank;
}

ParabolicSubset::ParabolicSubset(std::vector<int> generators, int n)
    : gens_(std::move(generators)), n_(n) {
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.empty()) throw ParseError("generator subset must be nonempty");
    if (gens_.front() < 1 || gens_.back() > n - 1) {
        throw ParseError("generator index out of range 1.." + std::to_string(n - 1));
    }
}

ParabolicSubset ParabolicSubset::parse(std::string_view text, int n) {
    text = detail::trim(text);
    if (!text.empty() && text.front() == '{') text.remove_prefix(1);
    if (!text.empty() && text.back() == '}') text.remove_suffix(1);
    if (detail::trim(text).empty()) throw ParseError("generator subset must be nonempty");
    return ParabolicSubset(detail::parse_int_list(text, "generator subset"), n);
}

ParabolicSubset ParabolicSubset::interval(int a, int b, int n) {
    if (a < 0 || b <= a) throw ParseError("interval {a+1..b} needs 0 <= a < b");
    std::vector<int> gens(b - a);
    std::iota(gens.begin(), gens.end(), a + 1);
    return ParabolicSubset(std::move(gens), n);
}

bool ParabolicSubset::contains(int j) const {
    return std::binary_search(gens_.begin(), gens_.end(), j);
}

bool ParabolicSubset::is_connected() const {
    return gens_.back() - gens_.front() + 1 == static_cast<int>(gens_.size());
}

bool ParabolicSubset::is_subset_of(const ParabolicSubset& other) const {
    return std::includes(other.gens_.begin(), other.gens_.end(), gens_.begin(), gens_.end());
}

std::vector<ParabolicSubset> ParabolicSubset::blocks() const {
    std::vector<ParabolicSubset> out;
    std::vector<int> run;
    for (int j : gens_) {
        if (!run.empty() && j != run.back() + 1) {
            out.emplace_back(run, n_);
            run.clear();
        }
        run.push_back(j);
    }
    out.emplace_back(run, n_);
    return out;
}

std::string ParabolicSubset::str() const { return "{" + detail::join(gens_, ",") + "}"; }

Permutation reversal(int k, int n) {
    if (k < 0 || k > n) throw std::out_of_range("reversal: k out of range");
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::reverse(word.begin(), word.begin() + k);
    return Permutation(std::move(word));
}

Permutation longest_element(const ParabolicSubset& j) {
    std::vector<int> word(j.n());
    std::iota(word.begin(), word.end(), 1);
    for (const auto& block : j.blocks()) {
        // generators a..b move the letters a..b+1
        int lo = block.generators().front();
        int hi = block.generators().back() + 1;
        std::reverse(word.begin() + (lo - 1), word.begin() + hi);
    }
    return Permutation(std::move(word));
}

Permutation long_cycle(int n) {
    std::vector<int> word(n);
    for (int i = 1; i <= n; ++i) word[i - 1] = i % n + 1;
    return Permutation(std::move(word));
}

bool is_separable(const Permutation& w) {
    const auto& x = w.word();
    const int n = w.size();
    // Pattern 2413: positions a<b<c<d with x[c] < x[a] < x[d] < x[b].
    // Pattern 3142: x[b] < x[d] < x[a] < x[c].
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                for (int d = c + 1; d < n; ++d) {
                    if (x[c] < x[a] && x[a] < x[d] && x[d] < x[b]) return false;
                    if (x[b] < x[d] && x[d] < x[a] && x[a] < x[c]) return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Standardizes a subsequence of values to 1..k preserving relative order.
std::vector<int> standardize(std::vector<int> values) {
    auto sorted = values;
    std::sort(sorted.begin(), sorted.end());
    for (int& v : values) {
        v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
    }
    return values;
}

std::unique_ptr<SeparableTree> decompose(const std::vector<int>& x) {
    auto node = std::make_unique<SeparableTree>();
    const int n = static_cast<int>(x.size());
    if (n == 1) return node;
    int prefix_max = 0, prefix_min = n + 1;
    for (int k = 1; k < n; ++k) {
        prefix_max = std::max(prefix_max, x[k - 1]);
        prefix_min = std::min(prefix_min, x[k - 1]);
        bool direct = prefix_max == k;
        bool skew = prefix_min == n - k + 1;
        if (!direct && !skew) continue;
        auto left = decompose(standardize({x.begin(), x.begin() + k}));
        auto right = decompose(standardize({x.begin() + k, x.end()}));
        if (!left || !right) return nullptr;
        node->kind = direct ? SeparableTree::Kind::DirectSum : SeparableTree::Kind::SkewSum;
        node->left = std::move(left);
        node->right = std::move(right);
        return node;
    }
    return nullptr;
}

}  // namespace

Permutation SeparableTree::evaluate() const {
    if (kind == Kind::Leaf) return Permutation::identity(1);
    auto l = left->evaluate().word();
    auto r = right->evaluate().word();
    const int nl = static_cast<int>(l.size());
    const int nr = static_cast<int>(r.size());
    std::vector<int> word;
    if (kind == Kind::DirectSum) {
        word = l;
        for (int v : r) word.push_back(v + nl);
    } else {
        for (int v : l) word.push_back(v + nr);
        word.insert(word.end(), r.begin(), r.end());
    }
    return Permutation(std::move(word));
}

std::string SeparableTree::str() const {
    switch (kind) {
        case Kind::Leaf: return "1";
        case Kind::DirectSum: return "(" + left->str() + "+" + right->str() + ")";
        case Kind::SkewSum: return "(" + left->str() + "-" + right->str() + ")";
    }
    return {};
}

std::optional<SeparableTree> separable_tree(const Permutation& w) {
    if (w.size() == 0) return std::nullopt;
    auto root = decompose(w.word());
    if (!root) return std::nullopt;
    return std::move(*root);
}

Permutation chain_product(const SubsetChain& chain, int n) {
    Permutation w = Permutation::identity(n);
    for (const auto& j : chain) w = multiply(longest_element(j), w);
    return w;
}

namespace {

struct ChainSearch {
    int n;
    const Permutation& target;
    std::vector<unsigned> masks;
    std::vector<Permutation> longest;
    std::vector<unsigned> chain;

    ParabolicSubset subset_of(unsigned mask) const {
        std::vector<int> gens;
        for (int j = 1; j < n; ++j) {
            if (mask & (1u << (j - 1))) gens.push_back(j);
        }
        return ParabolicSubset(std::move(gens), n);
    }

    bool extend(unsigned top, const Permutation& product) {
        if (product == target) return true;
        for (std::size_t k = 0; k < masks.size(); ++k) {
            unsigned m = masks[k];
            if ((m & top) != top || m == top) continue;
            chain.push_back(m);
            if (extend(m, multiply(longest[k], product))) return true;
            chain.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<SubsetChain> descending_decomposition(const Permutation& w) {
    const int n = w.size();
    if (w == Permutation::identity(n)) return SubsetChain{};
    ChainSearch search{n, w, {}, {}, {}};
    for (unsigned m = 1; m < (1u << (n - 1)); ++m) {
        search.masks.push_back(m);
        search.longest.push_back(longest_element(search.subset_of(m)));
    }
    if (!search.extend(0, Permutation::identity(n))) return std::nullopt;
    SubsetChain chain;
    for (unsigned m : search.chain) chain.push_back(search.subset_of(m));
    return chain;
}

std::string chain_str(const SubsetChain& chain) {
    std::string out;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (k > 0) out += " < ";
        out += chain[k].str();
    }
    return out.empty() ? "()" : out;
}

}  // namespace klspecht
