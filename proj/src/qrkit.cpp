#include "klspecht/qrkit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "klspecht/jdt.hpp"

namespace klspecht {

namespace {

using Vec = std::vector<mpq_class>;

Vec column(const ExactMatrix& m, int k) {
    Vec v(m.rows());
    for (int i = 0; i < m.rows(); ++i) v[i] = m(i, k);
    return v;
}

mpq_class dot(const Vec& a, const Vec& b) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& x) {
    if (sgn(x) < 0) return std::nullopt;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    mpq_class root(sqrt(num), sqrt(den));
    root.canonicalize();
    return root;
}

void require_square(const ExactMatrix& m) {
    if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("QR needs a nonempty square matrix");
}

}  // namespace

QRFactorization exact_qr(const ExactMatrix& m) {
    require_square(m);
    const int n = m.rows();
    QRFactorization f{ExactMatrix(n, n), ExactMatrix(n, n)};
    std::vector<Vec> qs;
    for (int k = 0; k < n; ++k) {
        Vec a = column(m, k);
        Vec u = a;
        for (int i = 0; i < k; ++i) {
            mpq_class rik = dot(qs[i], a);
            f.r(i, k) = rik;
            if (sgn(rik) == 0) continue;
            for (int t = 0; t < n; ++t) u[t] -= rik * qs[i][t];
        }
        mpq_class norm2 = dot(u, u);
        if (sgn(norm2) == 0) throw SingularMatrixError("exact_qr: matrix is singular");
        auto norm = rational_sqrt(norm2);
        if (!norm) {
            throw IrrationalNormError("exact_qr: column " + std::to_string(k + 1) + " has norm sqrt(" +
                                      norm2.get_str() + ")");
        }
        f.r(k, k) = *norm;
        for (int t = 0; t < n; ++t) {
            u[t] /= *norm;
            f.q(t, k) = u[t];
        }
        qs.push_back(std::move(u));
    }
    return f;
}

std::optional<SignedPermutation> as_signed_permutation(const ExactMatrix& q) {
    if (!q.is_square()) return std::nullopt;
    const int n = q.rows();
    SignedPermutation sp{std::vector<int>(n, -1), std::vector<int>(n, 0)};
    std::vector<bool> row_used(n, false);
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            const mpq_class& x = q(r, c);
            if (sgn(x) == 0) continue;
            if (sp.target[c] != -1 || row_used[r]) return std::nullopt;
            if (x != 1 && x != -1) return std::nullopt;
            sp.target[c] = r;
            sp.sign[c] = sgn(x);
            row_used[r] = true;
        }
        if (sp.target[c] == -1) return std::nullopt;
    }
    return sp;
}

std::optional<SignedPermutation> signed_permutation_of_q(const ExactMatrix& m) {
    require_square(m);
    const int n = m.rows();
    std::vector<Vec> frame;
    std::vector<mpq_class> norms;
    SignedPermutation sp{std::vector<int>(n, -1), std::vector<int>(n, 0)};
    bool signed_perm = true;
    for (int k = 0; k < n; ++k) {
        Vec a = column(m, k);
        Vec u = a;
        for (int i = 0; i < k; ++i) {
            mpq_class coeff = dot(frame[i], a) / norms[i];
            if (sgn(coeff) == 0) continue;
            for (int t = 0; t < n; ++t) u[t] -= coeff * frame[i][t];
        }
        mpq_class norm2 = dot(u, u);
        if (sgn(norm2) == 0) throw SingularMatrixError("signed_permutation_of_q: matrix is singular");
        int support = 0;
        for (int t = 0; t < n; ++t) {
            if (sgn(u[t]) != 0) {
                ++support;
                sp.target[k] = t;
                sp.sign[k] = sgn(u[t]);
            }
        }
        if (support != 1) signed_perm = false;
        frame.push_back(std::move(u));
        norms.push_back(norm2);
    }
    if (!signed_perm) return std::nullopt;
    return sp;
}

CheckReport verify_thm1(const Partition& shape, const BasisOrder& order) {
    if (order.shape() != shape) throw std::invalid_argument("verify_thm1: order has the wrong shape");
    if (!order.is_index_monotone()) throw std::invalid_argument("verify_thm1: order is not index-monotone");
    CheckReport report;
    report.check = "thm1";
    report.shape = shape.str();
    report.ordering = order.str();
    const int n = shape.size();
    const int d = order.dim();
    const ExactMatrix m = matrix_of(shape, long_cycle(n), order);

    QRFactorization qr;
    try {
        qr = exact_qr(m);
    } catch (const IrrationalNormError& e) {
        report.fail(e.what());
        return report;
    }
    if (qr.q * qr.r != m) report.fail("Q*R differs from [c]");
    if (!(qr.q.transpose() * qr.q).is_identity()) report.fail("Q is not orthogonal");
    if (!qr.r.is_upper_triangular()) report.fail("R is not upper triangular");

    auto sp = as_signed_permutation(qr.q);
    if (!sp) {
        report.fail("Q is not a signed permutation matrix");
        return report;
    }
    std::map<int, int> class_sign;
    for (int k = 0; k < d; ++k) {
        const auto& t = order[k];
        int expected = order.position(promote(t));
        if (sp->target[k] != expected) {
            report.fail("Q sends C_" + t.str() + " to C_" + order[sp->target[k]].str() + ", promotion gives " +
                        order[expected].str());
        }
        int i = index(t);
        auto [it, inserted] = class_sign.emplace(i, sp->sign[k]);
        if (!inserted && it->second != sp->sign[k]) {
            report.fail("sign not constant on index class " + std::to_string(i));
        }
        // column of [c] at T: +-C_pr(T) plus C_pr(R) with index(R) < index(T)
        for (int row = 0; row < d; ++row) {
            if (sgn(m(row, k)) == 0) continue;
            StandardTableau pre = inverse_promote(order[row]);
            if (pre == t) {
                if (m(row, k) != sp->sign[k]) report.fail("leading coefficient of C_" + t.str() + " is not +-1");
            } else if (index(pre) >= i) {
                report.fail("c.C_" + t.str() + " involves C_pr(" + pre.str() + ") of index " +
                            std::to_string(index(pre)));
            }
        }
    }
    for (const auto& [i, s] : class_sign) report.class_signs.emplace_back("idx" + std::to_string(i), s);
    bool plain = std::all_of(sp->sign.begin(), sp->sign.end(), [](int s) { return s > 0; });
    report.witness = plain ? "Q = [pr]" : "Q = signed [pr]";
    return report;
}

std::vector<BasisOrder> shuffled_index_orders(const Partition& shape, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto base = enumerate_syt(shape);
    std::vector<BasisOrder> out;
    for (int s = 0; s < samples; ++s) {
        auto seq = base;
        auto begin = seq.begin();
        while (begin != seq.end()) {
            int i = index(*begin);
            auto end = std::find_if(begin, seq.end(), [i](const StandardTableau& t) { return index(t) != i; });
            std::shuffle(begin, end, rng);
            begin = end;
        }
        out.emplace_back(shape, std::move(seq));
    }
    return out;
}

namespace {

std::pair<int, int> letter_span(const ParabolicSubset& j) {
    if (!j.is_connected()) throw std::invalid_argument("subset " + j.str() + " is not connected");
    return {j.generators().front(), j.generators().back() + 1};
}

}  // namespace

StandardTableau phi_connected(const ParabolicSubset& j, const StandardTableau& t) {
    auto [lo, hi] = letter_span(j);
    if (hi > t.size()) throw std::invalid_argument("phi_connected: subset exceeds the tableau size");
    return partial_evacuate(partial_evacuate(partial_evacuate(t, hi), hi - lo + 1), hi);
}

ConnectedPreorder::ConnectedPreorder(ParabolicSubset j, Partition shape)
    : j_(std::move(j)), shape_(std::move(shape)) {
    auto [lo, hi] = letter_span(j_);
    if (hi > shape_.size()) throw std::invalid_argument("preorder: subset exceeds the shape size");
    hi_ = hi;
    block_ = hi - lo + 1;
}

std::vector<int> ConnectedPreorder::key(const StandardTableau& t) const {
    return index_sequence(partial_evacuate(t, hi_), block_);
}

int ConnectedPreorder::compare(const StandardTableau& t, const StandardTableau& r) const {
    auto a = key(t);
    auto b = key(r);
    return a < b ? -1 : (b < a ? 1 : 0);
}

std::vector<std::vector<StandardTableau>> ConnectedPreorder::classes() const {
    std::map<std::vector<int>, std::vector<StandardTableau>> grouped;
    for (const auto& t : enumerate_syt(shape_)) grouped[key(t)].push_back(t);
    std::vector<std::vector<StandardTableau>> out;
    for (auto& [k, members] : grouped) out.push_back(std::move(members));
    return out;
}

ConnectedPreorder preorder_connected(const ParabolicSubset& j, const Partition& shape) {
    return ConnectedPreorder(j, shape);
}

StandardTableau phi_chain(const SubsetChain& chain, const StandardTableau& t) {
    StandardTableau out = t;
    for (const auto& j : chain) out = phi_connected(j, out);
    return out;
}

namespace {

void validate_chain(const SubsetChain& chain, int n) {
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (chain[k].n() != n) throw std::invalid_argument("chain member " + chain[k].str() + " has the wrong n");
        if (!chain[k].is_connected()) throw std::invalid_argument("chain member " + chain[k].str() + " is not connected");
        if (k > 0 && (!chain[k - 1].is_subset_of(chain[k]) || chain[k - 1] == chain[k])) {
            throw std::invalid_argument("chain is not strictly increasing at " + chain[k].str());
        }
    }
}

// Composite key, outermost subset first.
std::vector<std::vector<int>> chain_key(const SubsetChain& chain, const Partition& shape,
                                        const StandardTableau& t) {
    std::vector<std::vector<int>> levels(chain.size());
    StandardTableau cur = t;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        levels[chain.size() - 1 - k] = ConnectedPreorder(chain[k], shape).key(cur);
        cur = phi_connected(chain[k], cur);
    }
    return levels;
}

std::string key_str(const std::vector<std::vector<int>>& key) {
    std::string out;
    for (std::size_t k = 0; k < key.size(); ++k) {
        if (k > 0) out += "|";
        for (std::size_t i = 0; i < key[k].size(); ++i) {
            if (i > 0) out += ".";
            out += std::to_string(key[k][i]);
        }
    }
    return out.empty() ? "*" : out;
}

}  // namespace

BasisOrder chain_order(const SubsetChain& chain, const Partition& shape) {
    validate_chain(chain, shape.size());
    auto seq = enumerate_syt(shape);
    std::vector<std::vector<std::vector<int>>> keys;
    for (const auto& t : seq) keys.push_back(chain_key(chain, shape, t));
    std::vector<int> perm(seq.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    std::vector<StandardTableau> ordered;
    for (int k : perm) ordered.push_back(seq[k]);
    return BasisOrder(shape, std::move(ordered));
}

CheckReport verify_thm4_chain(const Partition& shape, const SubsetChain& chain) {
    const int n = shape.size();
    validate_chain(chain, n);
    CheckReport report;
    report.check = "thm4";
    report.shape = shape.str();
    report.ordering = chain_str(chain);
    const BasisOrder order = chain_order(chain, shape);
    const Permutation w = chain_product(chain, n);
    const ExactMatrix m = matrix_of(shape, w, order);
    auto sp = signed_permutation_of_q(m);
    if (!sp) {
        report.fail("Q of [" + w.str() + "] is not a signed permutation matrix under the chain order");
        return report;
    }
    auto qr = exact_qr(m);
    auto from_q = as_signed_permutation(qr.q);
    if (!from_q || from_q->target != sp->target || from_q->sign != sp->sign) {
        report.fail("exact QR disagrees with the Gram-Schmidt frame");
    }
    std::map<std::vector<std::vector<int>>, int> class_sign;
    for (int k = 0; k < order.dim(); ++k) {
        const auto& t = order[k];
        int expected = order.position(phi_chain(chain, t));
        if (sp->target[k] != expected) {
            report.fail("Q sends C_" + t.str() + " to C_" + order[sp->target[k]].str() + ", phi gives " +
                        order[expected].str());
        }
        auto key = chain_key(chain, shape, t);
        auto [it, inserted] = class_sign.emplace(key, sp->sign[k]);
        if (!inserted && it->second != sp->sign[k]) report.fail("sign not constant on class " + key_str(key));
    }
    for (const auto& [key, s] : class_sign) report.class_signs.emplace_back(key_str(key), s);
    report.witness = "w = " + w.str();
    return report;
}

std::vector<SubsetChain> connected_chains(int n) {
    std::vector<ParabolicSubset> intervals;
    for (int a = 0; a < n - 1; ++a) {
        for (int b = a + 1; b <= n - 1; ++b) intervals.push_back(ParabolicSubset::interval(a, b, n));
    }
    std::vector<SubsetChain> out;
    SubsetChain current;
    auto extend = [&](auto&& self) -> void {
        out.push_back(current);
        for (const auto& j : intervals) {
            if (current.back().is_subset_of(j) && !(current.back() == j)) {
                current.push_back(j);
                self(self);
                current.pop_back();
            }
        }
    };
    for (const auto& j : intervals) {
        current = {j};
        extend(extend);
    }
    return out;
}

std::vector<BasisOrder> orderings_with_signed_q(const Partition& shape, const Permutation& w,
                                                bool exhaustive, int max_dim) {
    const auto base = enumerate_syt(shape);
    const int d = static_cast<int>(base.size());
    if (d > max_dim) {
        throw std::invalid_argument("ordering search: dim " + std::to_string(d) + " exceeds bound " +
                                    std::to_string(max_dim));
    }
    const ExactMatrix m = matrix_of(shape, w, BasisOrder(shape, base));
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<BasisOrder> found;
    do {
        ExactMatrix reordered(d, d);
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) reordered(a, b) = m(perm[a], perm[b]);
        }
        if (signed_permutation_of_q(reordered)) {
            std::vector<StandardTableau> seq;
            for (int k : perm) seq.push_back(base[k]);
            found.emplace_back(shape, std::move(seq));
            if (!exhaustive) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

std::optional<BasisOrder> search_ordering(const Partition& shape, const Permutation& w, int max_dim) {
    auto found = orderings_with_signed_q(shape, w, false, max_dim);
    if (found.empty()) return std::nullopt;
    return std::move(found.front());
}

CheckReport verify_counterexample() {
    CheckReport report;
    report.check = "counterexample";
    const Partition shape({3, 1});
    report.shape = shape.str();
    report.ordering = "all 3! orderings";
    const Permutation w = Permutation::parse("2413");
    if (is_separable(w)) report.fail("2413 reported as separable");
    auto accepted = orderings_with_signed_q(shape, w, true);
    if (!accepted.empty()) {
        report.fail("2413 has a signed-permutation Q under " + accepted.front().str());
    }
    auto cycle_orders = orderings_with_signed_q(shape, long_cycle(4), true);
    if (cycle_orders.empty()) report.fail("no ordering works for the long cycle");
    report.witness = std::to_string(6 - accepted.size()) + "/6 orderings rejected for 2413; long cycle accepted under " +
                     std::to_string(cycle_orders.size()) + "/6";
    return report;
}

}  // namespace klspecht
