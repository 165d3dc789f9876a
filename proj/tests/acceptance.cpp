// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "klspecht/hecke.hpp"
#include "klspecht/jdt.hpp"
#include "klspecht/qrkit.hpp"
#include "klspecht/rsk.hpp"
#include "klspecht/specht.hpp"

using namespace klspecht;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;

    void fail(std::string why) {
        pass = false;
        if (problems.size() < 8) problems.push_back(std::move(why));
    }
};

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// (k+1) S_k = 3(2k-1) S_{k-1} - (k-2) S_{k-2}
long long large_schroeder(int m) {
    std::vector<long long> s{1, 2};
    for (int k = 2; k <= m; ++k) s.push_back((3 * (2 * k - 1) * s[k - 1] - (k - 2) * s[k - 2]) / (k + 1));
    return s[m];
}

bool q_is_signed_permutation(const ExactMatrix& m) {
    try {
        return as_signed_permutation(exact_qr(m).q).has_value();
    } catch (const IrrationalNormError&) {
        return false;
    }
}

Outcome worked_example() {
    Outcome out;
    const auto shape = Partition::parse("3,1,1");
    const auto order = BasisOrder::total_index(shape);
    const std::string listed = "1,4,5/2/3 1,3,5/2/4 1,2,5/3/4 1,3,4/2/5 1,2,4/3/5 1,2,3/4/5";
    if (order.str() != listed) out.fail("ordering " + order.str());

    const auto printed_c = ExactMatrix::from_rows({{0, 0, 0, 1, 0, 0},
                                                   {0, 0, 0, 0, 1, 0},
                                                   {1, 0, 0, -1, 1, 0},
                                                   {0, 0, 0, 0, 0, 1},
                                                   {0, 1, 0, -1, 0, 1},
                                                   {0, 0, 1, 0, -1, 1}});
    const auto printed_q = ExactMatrix::from_rows({{0, 0, 0, 1, 0, 0},
                                                   {0, 0, 0, 0, 1, 0},
                                                   {1, 0, 0, 0, 0, 0},
                                                   {0, 0, 0, 0, 0, 1},
                                                   {0, 1, 0, 0, 0, 0},
                                                   {0, 0, 1, 0, 0, 0}});
    const auto printed_r = ExactMatrix::from_rows({{1, 0, 0, -1, 1, 0},
                                                   {0, 1, 0, -1, 0, 1},
                                                   {0, 0, 1, 0, -1, 1},
                                                   {0, 0, 0, 1, 0, 0},
                                                   {0, 0, 0, 0, 1, 0},
                                                   {0, 0, 0, 0, 0, 1}});
    const auto c = matrix_of(shape, long_cycle(5), order);
    if (c != printed_c) out.fail("[c] differs:\n" + c.str());
    const auto qr = exact_qr(c);
    if (qr.q != printed_q) out.fail("Q differs:\n" + qr.q.str());
    if (qr.r != printed_r) out.fail("R differs:\n" + qr.r.str());

    std::vector<int> pr(order.dim());
    for (int k = 0; k < order.dim(); ++k) pr[k] = order.position(promote(order[k]));
    if (qr.q != permutation_matrix(pr)) out.fail("Q is not [pr]");
    auto sp = as_signed_permutation(qr.q);
    if (!sp) {
        out.fail("Q is not a signed permutation");
    } else if (std::any_of(sp->sign.begin(), sp->sign.end(), [](int s) { return s != 1; })) {
        out.fail("Q has a negative sign");
    }
    out.detail = "[c], Q, R match; Q = [pr] with signs +";
    return out;
}

Outcome theorem1_sweep(int lo, int hi, int shuffles) {
    Outcome out;
    int shapes = 0, orders = 0;
    for (int n = lo; n <= hi; ++n) {
        for (const auto& shape : partitions_of(n)) {
            ++shapes;
            std::vector<BasisOrder> all{BasisOrder::total_index(shape)};
            for (auto& o : shuffled_index_orders(shape, shuffles, 1000 + shapes)) all.push_back(std::move(o));
            for (const auto& order : all) {
                ++orders;
                if (!order.is_index_monotone()) out.fail(shape.str() + ": shuffled order not index-monotone");
                auto report = verify_thm1(shape, order);
                if (!report.pass) out.fail(to_text(report));
            }
        }
    }
    out.detail = std::to_string(shapes) + " shapes, " + std::to_string(orders) + " orders";
    return out;
}

Outcome long_cycle_sweep() {
    Outcome out;
    auto timed = [&](int lo, int hi, double budget) {
        auto start = std::chrono::steady_clock::now();
        auto part = theorem1_sweep(lo, hi, 10);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        for (auto& p : part.problems) out.fail(std::move(p));
        if (seconds > budget) out.fail("n = " + std::to_string(lo) + ".." + std::to_string(hi) + " over budget");
        char buf[96];
        std::snprintf(buf, sizeof buf, "n=%d..%d: %s (%.2fs)", lo, hi, part.detail.c_str(), seconds);
        return std::string(buf);
    };
    out.detail = timed(2, 6, 60) + "; " + timed(7, 7, 1800);
    return out;
}

Outcome theorem2_sweep() {
    Outcome out;
    int shapes = 0;
    for (int n = 2; n <= 6; ++n) {
        for (const auto& shape : partitions_of(n)) {
            ++shapes;
            auto filtration = check_filtration_invariance(shape);
            if (!filtration.pass) out.fail(to_text(filtration));
            auto branching = check_branching(shape);
            if (!branching.pass) out.fail(to_text(branching));
        }
    }
    out.detail = std::to_string(shapes) + " shapes, n = 2..6";
    return out;
}

Outcome lemma_promotion() {
    Outcome out;
    long long tableaux = 0;
    for (int n = 2; n <= 8; ++n) {
        for (const auto& shape : partitions_of(n)) {
            for (const auto& t : enumerate_syt(shape)) {
                ++tableaux;
                if (promote(t) != evacuate(partial_evacuate(t, n - 1))) out.fail(t.str());
            }
        }
    }
    out.detail = std::to_string(tableaux) + " tableaux, n = 2..8";
    return out;
}

Outcome proposition_mu() {
    Outcome out;
    long long pairs = 0;
    for (int n = 2; n <= 6; ++n) {
        for (const auto& shape : partitions_of(n)) {
            auto all = enumerate_syt(shape);
            for (const auto& a : all) {
                auto [da, i] = delete_largest(a);
                for (const auto& b : all) {
                    auto [db, k] = delete_largest(b);
                    if (i != k) continue;
                    ++pairs;
                    if (mu_tableaux(a, b) != mu_tableaux(da, db)) out.fail(a.str() + " vs " + b.str());
                }
            }
        }
    }
    out.detail = std::to_string(pairs) + " same-index pairs, n = 2..6";
    return out;
}

Outcome rhoades_insertion() {
    Outcome out;
    int cases = 0;
    for (const auto& u : all_permutations(3))
        for (const auto& v : all_permutations(3))
            for (int k = 0; k <= 3; ++k) {
                ++cases;
                if (!check_rhoades_insertion(u, v, k)) out.fail(u.str() + " " + v.str() + " k=" + std::to_string(k));
            }
    const int exhaustive = cases;
    std::mt19937_64 rng(20240601);
    auto four = all_permutations(4);
    std::uniform_int_distribution<std::size_t> pick(0, four.size() - 1);
    std::uniform_int_distribution<int> slot(0, 4);
    for (int s = 0; s < 1000; ++s) {
        const auto& u = four[pick(rng)];
        const auto& v = four[pick(rng)];
        const int k = slot(rng);
        ++cases;
        if (!check_rhoades_insertion(u, v, k)) out.fail(u.str() + " " + v.str() + " k=" + std::to_string(k));
    }
    out.detail = std::to_string(exhaustive) + " exhaustive + " + std::to_string(cases - exhaustive) + " sampled";
    return out;
}

Outcome counterexample() {
    Outcome out;
    const auto shape = Partition::parse("3,1");
    auto seq = enumerate_syt(shape);
    std::sort(seq.begin(), seq.end(), [](const auto& a, const auto& b) { return a.str() < b.str(); });
    int orderings = 0, rejected = 0, cycle_ok = 0;
    do {
        ++orderings;
        BasisOrder order(shape, seq);
        if (!q_is_signed_permutation(matrix_of(shape, Permutation::parse("2413"), order))) ++rejected;
        if (q_is_signed_permutation(matrix_of(shape, long_cycle(4), order))) ++cycle_ok;
    } while (std::next_permutation(seq.begin(), seq.end(),
                                   [](const auto& a, const auto& b) { return a.str() < b.str(); }));
    if (orderings != 6) out.fail("expected 6 orderings, saw " + std::to_string(orderings));
    if (rejected != orderings) out.fail("2413 accepted under some ordering");
    if (cycle_ok == 0) out.fail("no ordering works for the long cycle");
    auto report = verify_counterexample();
    if (!report.pass) out.fail(to_text(report));
    out.detail = "2413 rejected " + std::to_string(rejected) + "/" + std::to_string(orderings) +
                 "; long cycle accepted " + std::to_string(cycle_ok) + "/" + std::to_string(orderings);
    return out;
}

Outcome separable_descending() {
    Outcome out;
    long long sep6 = 0;
    for (int n = 1; n <= 6; ++n) {
        for (const auto& w : all_permutations(n)) {
            const bool sep = is_separable(w);
            auto chain = descending_decomposition(w);
            if (sep != chain.has_value()) out.fail(w.str());
            if (chain && chain_product(*chain, n) != w) out.fail(w.str() + ": chain product differs");
            if (n == 6) sep6 += sep;
        }
    }
    if (sep6 != large_schroeder(5)) out.fail("separable count in S_6 is " + std::to_string(sep6));
    out.detail = "n = 1..6; " + std::to_string(sep6) + " separable in S_6";
    return out;
}

Outcome kl_equivalence() {
    Outcome out;
    long long pairs = 0;
    for (int n = 1; n <= 5; ++n) {
        KLOracle oracle(n);
        auto all = all_permutations(n);
        for (const auto& w : all) {
            auto column = oracle.column(w);
            for (const auto& v : all) {
                ++pairs;
                if (kl_polynomial(v, w) != column[lex_rank(v)]) out.fail("P_{" + v.str() + "," + w.str() + "}");
            }
        }
    }
    long long checked = 0;
    for (int n = 1; n <= 6; ++n) {
        auto& table = KLTable::for_size(n);
        auto all = all_permutations(n);
        for (const auto& w : all) {
            for (const auto& v : all) {
                ++checked;
                auto p = table.polynomial(v, w);
                if (v == w) {
                    if (p.str() != "1") out.fail("P_{v,v} = " + p.str() + " at " + v.str());
                } else if (!bruhat_leq(v, w)) {
                    if (!p.is_zero()) out.fail("nonzero off Bruhat order at " + v.str() + "," + w.str());
                } else if (p.is_zero() || 2 * p.degree() > length(w) - length(v) - 1) {
                    out.fail("degree bound at " + v.str() + "," + w.str() + ": " + p.str());
                }
            }
        }
    }
    out.detail = std::to_string(pairs) + " pairs against the oracle, " + std::to_string(checked) +
                 " pairs for the structural properties";
    return out;
}

Outcome theorem4_chains() {
    Outcome out;
    int runs = 0, chains = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const auto& chain : connected_chains(n)) {
            ++chains;
            for (const auto& shape : partitions_of(n)) {
                ++runs;
                auto report = verify_thm4_chain(shape, chain);
                if (!report.pass) out.fail(chain_str(chain) + " " + to_text(report));
            }
        }
    }
    out.detail = std::to_string(chains) + " chains, " + std::to_string(runs) + " (chain, shape) runs";
    return out;
}

Outcome structural_suite() {
    Outcome out;
    int shapes = 0;
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> up, down;
        for (int k = 1; k < n; ++k)
            for (int j = k; j >= 1; --j) {
                up.push_back(j);
                down.push_back(n - j);
            }
        if (up == down && n > 2) out.fail("words coincide for n = " + std::to_string(n));
        if (from_word(n, up) != reversal(n, n) || from_word(n, down) != reversal(n, n))
            out.fail("word is not the long element for n = " + std::to_string(n));
        for (const auto& shape : partitions_of(n)) {
            ++shapes;
            auto order = BasisOrder::total_index(shape);
            const auto id = ExactMatrix::identity(order.dim());
            std::vector<ExactMatrix> g{ExactMatrix()};
            for (int j = 1; j < n; ++j) g.push_back(generator_matrix(shape, j, order));
            for (int i = 1; i < n; ++i) {
                if (g[i] * g[i] != id) out.fail(shape.str() + ": s_" + std::to_string(i) + " squared");
                for (int j = i + 1; j < n; ++j) {
                    bool ok = j == i + 1 ? g[i] * g[j] * g[i] == g[j] * g[i] * g[j] : g[i] * g[j] == g[j] * g[i];
                    if (!ok) out.fail(shape.str() + ": relation s_" + std::to_string(i) + " s_" + std::to_string(j));
                }
            }
            auto direct = matrix_of(shape, reversal(n, n), order);
            for (const auto* word : {&up, &down}) {
                ExactMatrix m = id;
                for (int j : *word) m = m * g[j];
                if (m != direct) out.fail(shape.str() + ": long element depends on the word");
            }
        }
    }
    for (int n = 1; n <= 8; ++n) {
        long long squares = 0;
        for (const auto& shape : partitions_of(n)) squares += count_syt(shape) * count_syt(shape);
        if (squares != factorial(n)) out.fail("sum of squares for n = " + std::to_string(n));
    }
    out.detail = std::to_string(shapes) + " shapes; sum dim^2 = n! for n = 1..8";
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"worked example (3,1,1)", 1, worked_example},
        {"long cycle sweep n=2..7", 0, long_cycle_sweep},
        {"filtration and branching n<=6", 60, theorem2_sweep},
        {"pr = ev_n ev_(n-1), n<=8", 10, lemma_promotion},
        {"mu under deletion n<=6", 0, proposition_mu},
        {"insertion of the largest letter", 0, rhoades_insertion},
        {"2413 counterexample", 0, counterexample},
        {"separable = descending n<=6", 0, separable_descending},
        {"KL recursion vs oracle", 0, kl_equivalence},
        {"connected chains n<=5", 0, theorem4_chains},
        {"structural suite", 0, structural_suite},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto& c = criteria[k];
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
            out.fail("took " + std::to_string(seconds) + "s, budget " + std::to_string(c.budget_seconds) + "s");
        }
        if (!out.pass) ++failed;
        std::printf("%s %2d  %-34s %8.3fs  %s\n", out.pass ? "PASS" : "FAIL", static_cast<int>(k + 1), c.name, seconds,
                    out.detail.c_str());
        for (const auto& p : out.problems) std::printf("        %s\n", p.c_str());
    }
    std::printf("%s: %d of %zu rows failed\n", failed ? "FAILED" : "OK", failed, criteria.size());
    return failed ? 1 : 0;
}
