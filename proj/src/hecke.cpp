#include "klspecht/hecke.hpp"

#include <stdexcept>

#include "klspecht/rsk.hpp"

namespace klspecht {

QPoly::QPoly(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(long long c, int degree) {
    std::vector<long long> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return QPoly(std::move(coeffs));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<long long> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[i + k] += a.coeffs_[i] * b.coeffs_[k];
    }
    return QPoly(std::move(out));
}

QPoly QPoly::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<long long> out(k, 0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return QPoly(std::move(out));
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        long long c = coeffs_[k];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? "+" : "-";
        else if (c < 0) out += "-";
        long long a = c < 0 ? -c : c;
        if (k == 0) {
            out += std::to_string(a);
            continue;
        }
        if (a != 1) out += std::to_string(a);
        out += "q";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

// KLTable

KLTable::KLTable(int n) : n_(n) {
    if (n < 1 || n > max_n) {
        throw std::out_of_range("KLTable supports 1 <= n <= " + std::to_string(max_n));
    }
    auto elements = all_permutations(n);
    size_ = elements.size();
    length_.resize(size_);
    first_right_descent_.resize(size_);
    right_mult_.assign(n - 1, std::vector<std::uint32_t>(size_));
    for (std::size_t x = 0; x < size_; ++x) {
        length_[x] = length(elements[x]);
        auto desc = right_descents(elements[x]);
        first_right_descent_[x] = desc.empty() ? 0 : desc.front();
        for (int j = 1; j < n; ++j) {
            right_mult_[j - 1][x] = static_cast<std::uint32_t>(lex_rank(right_multiply_simple(elements[x], j)));
        }
    }
    columns_.resize(size_);
    intern(QPoly{});               // id 0: zero
    intern(QPoly::constant(1));    // id 1: one
}

KLTable& KLTable::for_size(int n) {
    static std::mutex registry_mutex;
    static std::map<int, std::unique_ptr<KLTable>> registry;
    std::lock_guard lock(registry_mutex);
    auto& slot = registry[n];
    if (!slot) slot = std::make_unique<KLTable>(n);
    return *slot;
}

std::uint32_t KLTable::rank(const Permutation& w) const {
    if (w.size() != n_) throw std::invalid_argument("KLTable: permutation size mismatch");
    return static_cast<std::uint32_t>(lex_rank(w));
}

KLTable::PolyId KLTable::intern(const QPoly& p) {
    auto [it, inserted] = pool_index_.try_emplace(p.coeffs(), static_cast<PolyId>(pool_.size()));
    if (inserted) {
        if (pool_.size() > 0xFFFF) throw std::length_error("KLTable: polynomial pool overflow");
        pool_.push_back(p);
    }
    return it->second;
}

std::size_t KLTable::columns_computed() const {
    std::lock_guard lock(mutex_);
    std::size_t count = 0;
    for (const auto& c : columns_) count += c != nullptr;
    return count;
}

const KLTable::Column& KLTable::column(std::uint32_t w) {
    std::lock_guard lock(mutex_);
    if (columns_[w]) return *columns_[w];

    auto col = std::make_unique<Column>();
    col->poly.assign(size_, 0);
    if (length_[w] == 0) {
        col->poly[w] = 1;
        columns_[w] = std::move(col);
        return *columns_[w];
    }

    const int j = first_right_descent_[w];
    const auto& rj = right_mult_[j - 1];
    const std::uint32_t v = rj[w];
    const Column& cv = column(v);

    // z < v with z s_j < z and mu(z, v) != 0
    struct Term {
        const Column* col;
        long long mu;
        int shift;
    };
    std::vector<Term> terms;
    for (auto [z, m] : cv.mu_below) {
        if (length_[rj[z]] < length_[z]) {
            terms.push_back({&column(z), m, (length_[w] - length_[z]) / 2});
        }
    }
    const auto& pv = cv.poly;

    for (std::uint32_t x = 0; x < size_; ++x) {
        const std::uint32_t xs = rj[x];
        const bool descent = length_[xs] < length_[x];
        // x <= w iff min(x, x s) <= v
        if (pv[descent ? xs : x] == 0) continue;
        QPoly p = descent ? pool_[pv[xs]] + pool_[pv[x]].shifted(1)
                          : pool_[pv[xs]].shifted(1) + pool_[pv[x]];
        for (const auto& t : terms) {
            PolyId id = t.col->poly[x];
            if (id == 0) continue;
            p -= QPoly::constant(t.mu) * pool_[id].shifted(t.shift);
        }
        col->poly[x] = intern(p);
        int gap = length_[w] - length_[x];
        if (gap % 2 == 1) {
            long long m = p.coeff((gap - 1) / 2);
            if (m != 0) col->mu_below.emplace_back(x, m);
        }
    }
    columns_[w] = std::move(col);
    return *columns_[w];
}

QPoly KLTable::polynomial(const Permutation& v, const Permutation& w) {
    auto vi = rank(v);
    auto wi = rank(w);
    std::lock_guard lock(mutex_);
    return pool_[column(wi).poly[vi]];
}

long long KLTable::mu(const Permutation& v, const Permutation& w) {
    auto vi = rank(v);
    auto wi = rank(w);
    if (length_[vi] > length_[wi]) std::swap(vi, wi);
    int gap = length_[wi] - length_[vi];
    if (gap % 2 == 0) return 0;
    std::lock_guard lock(mutex_);
    return pool_[column(wi).poly[vi]].coeff((gap - 1) / 2);
}

QPoly kl_polynomial(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw std::invalid_argument("kl_polynomial: size mismatch");
    return KLTable::for_size(v.size()).polynomial(v, w);
}

long long mu(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw std::invalid_argument("mu: size mismatch");
    return KLTable::for_size(v.size()).mu(v, w);
}

// KLOracle

KLOracle::KLOracle(int n) : n_(n), elements_(all_permutations(n)) {
    if (n < 1 || n > 6) throw std::out_of_range("KLOracle supports 1 <= n <= 6");
    for (const auto& e : elements_) length_.push_back(length(e));
}

const QPoly& KLOracle::r_by_rank(std::size_t x, std::size_t w) {
    const std::uint64_t key = static_cast<std::uint64_t>(x) * elements_.size() + w;
    if (auto it = r_memo_.find(key); it != r_memo_.end()) return it->second;

    QPoly value;
    const auto& wp = elements_[w];
    auto desc = right_descents(wp);
    if (desc.empty()) {
        value = x == w ? QPoly::constant(1) : QPoly{};
    } else {
        int j = desc.front();
        std::size_t ws = lex_rank(right_multiply_simple(wp, j));
        std::size_t xs = lex_rank(right_multiply_simple(elements_[x], j));
        if (length_[xs] < length_[x]) {
            value = r_by_rank(xs, ws);
        } else {
            // (q - 1) R_{x, ws} + q R_{xs, ws}
            value = QPoly({-1, 1}) * r_by_rank(x, ws) + r_by_rank(xs, ws).shifted(1);
        }
    }
    return r_memo_.emplace(key, std::move(value)).first->second;
}

QPoly KLOracle::r_polynomial(const Permutation& x, const Permutation& w) {
    return r_by_rank(lex_rank(x), lex_rank(w));
}

std::vector<QPoly> KLOracle::column(const Permutation& w) {
    const std::size_t wi = lex_rank(w);
    const int lw = length_[wi];
    std::vector<QPoly> col(elements_.size());
    col[wi] = QPoly::constant(1);

    std::vector<std::size_t> order(elements_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return length_[a] > length_[b]; });

    for (std::size_t x : order) {
        if (x == wi) continue;
        const int gap = lw - length_[x];
        if (gap <= 0) continue;
        QPoly rhs;
        for (std::size_t y = 0; y < elements_.size(); ++y) {
            if (length_[y] <= length_[x] || col[y].is_zero()) continue;
            rhs += r_by_rank(x, y) * col[y];
        }
        // Low half of rhs is -P; the high half must be q^gap P(1/q).
        std::vector<long long> low;
        for (int k = 0; k <= (gap - 1) / 2; ++k) low.push_back(-rhs.coeff(k));
        QPoly p(low);
        std::vector<long long> mirrored(gap + 1, 0);
        for (int k = 0; k <= p.degree(); ++k) mirrored[gap - k] = p.coeff(k);
        if (QPoly(mirrored) - p != rhs) {
            throw std::logic_error("KLOracle: bar-invariance system inconsistent");
        }
        col[x] = std::move(p);
    }
    return col;
}

QPoly kl_oracle(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw std::invalid_argument("kl_oracle: size mismatch");
    KLOracle oracle(v.size());
    return oracle.column(w)[lex_rank(v)];
}

long long mu_tableaux(const StandardTableau& t, const StandardTableau& r) {
    if (t.shape() != r.shape()) throw std::invalid_argument("mu_tableaux: shape mismatch");
    return mu(column_word(t), column_word(r));
}

long long mu_tableaux(const StandardTableau& t, const StandardTableau& r,
                      const StandardTableau& recorder) {
    if (t.shape() != r.shape() || t.shape() != recorder.shape()) {
        throw std::invalid_argument("mu_tableaux: shape mismatch");
    }
    return mu(inverse_rsk(t, recorder), inverse_rsk(r, recorder));
}

bool check_rhoades_insertion(const Permutation& u, const Permutation& v, int k) {
    const int m = u.size();
    if (v.size() != m) throw std::invalid_argument("check_rhoades_insertion: size mismatch");
    if (k < 0 || k > m) throw std::out_of_range("check_rhoades_insertion: k out of range");
    auto insert = [&](const Permutation& p) {
        auto word = p.word();
        word.insert(word.begin() + k, m + 1);
        return Permutation(std::move(word));
    };
    return mu(u, v) == mu(insert(u), insert(v));
}

}  // namespace klspecht
