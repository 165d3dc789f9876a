#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "klspecht/hecke.hpp"
#include "klspecht/jdt.hpp"
#include "klspecht/qrkit.hpp"
#include "klspecht/report.hpp"
#include "klspecht/rsk.hpp"
#include "klspecht/specht.hpp"

using namespace klspecht;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string format = "text";
    std::uint64_t seed = 1;
    int jobs = 1;
    bool timing = false;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool structured(const Options& o) { return o.format == "structured"; }

Permutation permutation_arg(const std::string& text, int n) {
    if (text == "c") return long_cycle(n);
    if (text == "w0") return reversal(n, n);
    auto w = Permutation::parse(text);
    if (w.size() != n) throw UsageError("permutation " + text + " is not in S_" + std::to_string(n));
    return w;
}

StandardTableau tableau_of_shape(const std::string& text, const Partition& shape) {
    auto t = StandardTableau::parse(text);
    if (t.shape() != shape) throw UsageError("tableau " + text + " does not have shape " + shape.str());
    return t;
}

json matrix_json(const ExactMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.entry_strings()) rows.push_back(row);
    return rows;
}

void emit(const Options& o, const json& doc, const std::string& text) {
    if (structured(o)) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

// -- verification sweeps ----------------------------------------------------

using Task = std::function<std::vector<CheckReport>()>;

std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks, int jobs) {
    std::vector<std::vector<CheckReport>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < tasks.size();) {
            auto start = std::chrono::steady_clock::now();
            slots[k] = tasks[k]();
            const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            for (auto& r : slots[k]) r.seconds = seconds / static_cast<double>(slots[k].size());
        }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<CheckReport> out;
    for (auto& slot : slots)
        for (auto& r : slot) out.push_back(std::move(r));
    return out;
}

CheckReport thm1_for_shape(const Partition& shape, std::uint64_t seed) {
    auto report = verify_thm1(shape, BasisOrder::total_index(shape));
    auto shuffles = shuffled_index_orders(shape, 10, seed);
    for (std::size_t k = 0; k < shuffles.size(); ++k) {
        auto r = verify_thm1(shape, shuffles[k]);
        for (const auto& f : r.failures) report.fail("shuffle " + std::to_string(k + 1) + ": " + f);
    }
    report.ordering = "total-index + 10 shuffles";
    return report;
}

CheckReport prop_dmu_for_shape(const Partition& shape) {
    CheckReport report;
    report.check = "prop-dmu";
    report.shape = shape.str();
    auto all = enumerate_syt(shape);
    long long pairs = 0;
    for (const auto& a : all) {
        auto [da, i] = delete_largest(a);
        for (const auto& b : all) {
            auto [db, k] = delete_largest(b);
            if (i != k) continue;
            ++pairs;
            const long long lhs = mu_tableaux(a, b);
            const long long rhs = mu_tableaux(da, db);
            if (lhs != rhs) {
                report.fail("mu(" + a.str() + ", " + b.str() + ") = " + std::to_string(lhs) + " but " +
                            std::to_string(rhs) + " after deletion");
            }
        }
    }
    report.witness = std::to_string(pairs) + " same-index pairs";
    return report;
}

CheckReport lemma_pr_for_shape(const Partition& shape) {
    CheckReport report;
    report.check = "lemma-pr";
    report.shape = shape.str();
    const int n = shape.size();
    long long count = 0;
    for (const auto& t : enumerate_syt(shape)) {
        ++count;
        auto lhs = promote(t);
        auto rhs = evacuate(partial_evacuate(t, n - 1));
        if (lhs != rhs) report.fail(t.str() + ": pr = " + lhs.str() + ", ev ev = " + rhs.str());
    }
    report.witness = std::to_string(count) + " tableaux";
    return report;
}

CheckReport rhoades_report(int max_n, std::uint64_t seed) {
    CheckReport report;
    report.check = "rhoades";
    report.ordering = "exhaustive S_3, sampled S_" + std::to_string(max_n - 1);
    long long cases = 0;
    auto check = [&](const Permutation& u, const Permutation& v, int k) {
        ++cases;
        if (!check_rhoades_insertion(u, v, k)) report.fail(u.str() + " " + v.str() + " k=" + std::to_string(k));
    };
    for (const auto& u : all_permutations(3))
        for (const auto& v : all_permutations(3))
            for (int k = 0; k <= 3; ++k) check(u, v, k);
    if (max_n >= 5) {
        std::mt19937_64 rng(seed);
        auto base = all_permutations(max_n - 1);
        std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
        std::uniform_int_distribution<int> slot(0, max_n - 1);
        for (int s = 0; s < 1000; ++s) {
            const auto& u = base[pick(rng)];
            const auto& v = base[pick(rng)];
            check(u, v, slot(rng));
        }
    }
    report.witness = std::to_string(cases) + " cases";
    return report;
}

CheckReport sep_desc_for_size(int n) {
    CheckReport report;
    report.check = "sep-desc";
    report.shape = "S_" + std::to_string(n);
    long long separable = 0;
    for (const auto& w : all_permutations(n)) {
        const bool sep = is_separable(w);
        auto chain = descending_decomposition(w);
        separable += sep;
        if (sep != chain.has_value()) {
            report.fail(w.str() + (sep ? " separable but not descending" : " descending but not separable"));
        } else if (chain && chain_product(*chain, n) != w) {
            report.fail(w.str() + ": chain " + chain_str(*chain) + " has the wrong product");
        }
    }
    report.witness = std::to_string(separable) + " separable";
    return report;
}

struct Sweep {
    int default_max;
    int cap;
    int min_n;
};

Sweep sweep_limits(const std::string& which) {
    if (which == "thm1") return {6, KLTable::max_n, 2};
    if (which == "branching") return {6, KLTable::max_n, 2};
    if (which == "prop-dmu") return {6, KLTable::max_n, 2};
    if (which == "lemma-pr") return {8, 10, 2};
    if (which == "thm4") return {5, 6, 2};
    if (which == "rhoades") return {5, KLTable::max_n, 4};
    if (which == "sep-desc") return {6, 7, 1};
    return {0, 0, 0};
}

int resolve_max_n(const std::string& which, int requested) {
    auto limits = sweep_limits(which);
    int n = limits.default_max;
    if (const char* env = std::getenv("KLSPECHT_MAX_N"); env && *env) {
        try {
            n = std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("KLSPECHT_MAX_N is not an integer: ") + env);
        }
    }
    if (requested > 0) n = requested;
    if (n < limits.min_n || n > limits.cap) {
        throw UsageError("verify " + which + ": max-n must lie in " + std::to_string(limits.min_n) + ".." +
                         std::to_string(limits.cap));
    }
    return n;
}

int run_verify(const Options& o, const std::string& which, int requested_max) {
    std::vector<Task> tasks;
    int max_n = 0;
    if (which == "counterexample") {
        tasks.push_back([] { return std::vector<CheckReport>{verify_counterexample()}; });
    } else {
        max_n = resolve_max_n(which, requested_max);
        const std::uint64_t seed = o.seed;
        if (which == "rhoades") {
            tasks.push_back([max_n, seed] { return std::vector<CheckReport>{rhoades_report(max_n, seed)}; });
        } else if (which == "sep-desc") {
            for (int n = 1; n <= max_n; ++n) tasks.push_back([n] { return std::vector<CheckReport>{sep_desc_for_size(n)}; });
        } else {
            std::uint64_t salt = 0;
            for (int n = 2; n <= max_n; ++n) {
                if (which == "thm4") {
                    for (const auto& chain : connected_chains(n))
                        for (const auto& shape : partitions_of(n))
                            tasks.push_back([shape, chain] {
                                auto r = verify_thm4_chain(shape, chain);
                                r.ordering = chain_str(chain);
                                return std::vector<CheckReport>{r};
                            });
                    continue;
                }
                for (const auto& shape : partitions_of(n)) {
                    ++salt;
                    if (which == "thm1") {
                        tasks.push_back([shape, s = seed + salt] { return std::vector<CheckReport>{thm1_for_shape(shape, s)}; });
                    } else if (which == "branching") {
                        tasks.push_back([shape] {
                            return std::vector<CheckReport>{check_filtration_invariance(shape), check_branching(shape)};
                        });
                    } else if (which == "prop-dmu") {
                        tasks.push_back([shape] { return std::vector<CheckReport>{prop_dmu_for_shape(shape)}; });
                    } else {
                        tasks.push_back([shape] { return std::vector<CheckReport>{lemma_pr_for_shape(shape)}; });
                    }
                }
            }
        }
    }

    auto reports = run_tasks(tasks, o.jobs);
    int failed = 0;
    for (const auto& r : reports) failed += !r.pass;

    if (structured(o)) {
        json doc;
        doc["command"] = "verify " + which;
        if (max_n > 0) doc["max_n"] = max_n;
        doc["seed"] = o.seed;
        doc["pass"] = failed == 0;
        doc["checks"] = reports.size();
        doc["failed"] = failed;
        json records = json::array();
        for (const auto& r : reports) records.push_back(to_json(r, o.timing));
        doc["reports"] = records;
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << to_text(r);
            if (o.timing) std::cout << "  (" << r.seconds << "s)";
            std::cout << "\n";
        }
        std::cout << (failed ? "FAILED " : "OK ") << reports.size() - failed << "/" << reports.size() << " checks passed\n";
    }
    return failed ? 1 : 0;
}

// -- plain computations -----------------------------------------------------

std::string matrix_block(const std::string& title, const ExactMatrix& m) {
    return title + "\n" + m.str() + "\n";
}

int run_qr(const Options& o, const std::string& shape_text, const std::string& perm_text) {
    auto shape = Partition::parse(shape_text);
    auto w = permutation_arg(perm_text, shape.size());
    auto order = BasisOrder::total_index(shape);
    auto m = matrix_of(shape, w, order);
    json doc;
    doc["shape"] = shape.str();
    doc["permutation"] = w.str();
    doc["ordering"] = order.str();
    doc["matrix"] = matrix_json(m);
    std::string text = "shape " + shape.str() + ", w = " + w.str() + "\nbasis " + order.str() + "\n" +
                       matrix_block("[w] =", m);
    try {
        auto qr = exact_qr(m);
        doc["q"] = matrix_json(qr.q);
        doc["r"] = matrix_json(qr.r);
        text += matrix_block("Q =", qr.q) + matrix_block("R =", qr.r);
        auto sp = as_signed_permutation(qr.q);
        doc["signed_permutation"] = sp.has_value();
        if (sp) {
            json cols = json::array();
            text += "Q is a signed permutation:\n";
            for (int c = 0; c < order.dim(); ++c) {
                cols.push_back({{"from", order[c].str()}, {"to", order[sp->target[c]].str()}, {"sign", sp->sign[c]}});
                text += "  " + order[c].str() + " -> " + order[sp->target[c]].str() + (sp->sign[c] > 0 ? "  (+)" : "  (-)") + "\n";
            }
            doc["columns"] = cols;
        } else {
            text += "Q is not a signed permutation\n";
        }
    } catch (const IrrationalNormError& e) {
        doc["signed_permutation"] = false;
        doc["note"] = e.what();
        text += std::string("no rational QR: ") + e.what() + "\n";
    }
    emit(o, doc, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kazhdan-Lusztig bases of Specht modules: tableaux, KL polynomials and exact QR checks"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for sampled checks")->capture_default_str();
    app.add_option("--jobs", o.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_flag("--timing", o.timing, "Report elapsed time per check");

    std::string a, b, c;
    int k = 0;
    int max_n = 0;
    std::function<int()> action;

    auto* syt = app.add_subcommand("syt", "List SYT(shape) in total index order");
    syt->add_option("shape", a)->required();
    syt->callback([&] {
        action = [&] {
            auto shape = Partition::parse(a);
            json rows = json::array();
            std::string text;
            for (const auto& t : enumerate_syt(shape)) {
                rows.push_back({{"tableau", t.str()}, {"index", index(t)}, {"descents", descent_set(t)}});
                text += t.str() + "  index " + std::to_string(index(t)) + "\n";
            }
            emit(o, json{{"shape", shape.str()}, {"count", count_syt(shape)}, {"tableaux", rows}}, text);
            return 0;
        };
    });

    auto unary = [&](const char* name, const char* help, StandardTableau (*op)(const StandardTableau&)) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("tableau", a)->required();
        sub->callback([&, name, op] {
            action = [&, name, op] {
                auto t = StandardTableau::parse(a);
                auto r = op(t);
                emit(o, json{{"op", name}, {"input", t.str()}, {"result", r.str()}}, r.str() + "\n");
                return 0;
            };
        });
    };
    unary("pr", "Promotion", promote);
    unary("ev", "Evacuation", evacuate);

    auto* evk = app.add_subcommand("evk", "Partial evacuation of the entries 1..k");
    evk->add_option("tableau", a)->required();
    evk->add_option("k", k)->required();
    evk->callback([&] {
        action = [&] {
            auto r = partial_evacuate(StandardTableau::parse(a), k);
            emit(o, json{{"op", "evk"}, {"input", a}, {"k", k}, {"result", r.str()}}, r.str() + "\n");
            return 0;
        };
    });

    auto* rsk_cmd = app.add_subcommand("rsk", "Row insertion of a permutation");
    rsk_cmd->add_option("permutation", a)->required();
    rsk_cmd->callback([&] {
        action = [&] {
            auto w = Permutation::parse(a);
            auto [p, q] = rsk(w);
            emit(o, json{{"permutation", w.str()}, {"P", p.str()}, {"Q", q.str()}},
                 "P = " + p.str() + "\nQ = " + q.str() + "\n");
            return 0;
        };
    });

    auto* rsk_inv = app.add_subcommand("rsk-inv", "Permutation with insertion P and recording Q");
    rsk_inv->add_option("P", a)->required();
    rsk_inv->add_option("Q", b)->required();
    rsk_inv->callback([&] {
        action = [&] {
            auto w = inverse_rsk(StandardTableau::parse(a), StandardTableau::parse(b));
            emit(o, json{{"P", a}, {"Q", b}, {"permutation", w.str()}}, w.str() + "\n");
            return 0;
        };
    });

    auto* css_cmd = app.add_subcommand("css", "Column superstandard tableau, or CSS_i with i given");
    css_cmd->add_option("shape", a)->required();
    css_cmd->add_option("i", k);
    css_cmd->callback([&] {
        action = [&] {
            auto shape = Partition::parse(a);
            auto t = k > 0 ? css_i(shape, k) : css(shape);
            json doc{{"shape", shape.str()}, {"tableau", t.str()}};
            if (k > 0) doc["i"] = k;
            emit(o, doc, t.str() + "\n");
            return 0;
        };
    });

    auto* klpoly = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial P_{v,w}");
    klpoly->add_option("v", a)->required();
    klpoly->add_option("w", b)->required();
    klpoly->callback([&] {
        action = [&] {
            auto v = Permutation::parse(a);
            auto w = permutation_arg(b, v.size());
            auto p = kl_polynomial(v, w);
            emit(o, json{{"v", v.str()}, {"w", w.str()}, {"polynomial", p.str()}, {"coefficients", p.coeffs()}},
                 p.str() + "\n");
            return 0;
        };
    });

    auto* mu_cmd = app.add_subcommand("mu", "Leading coefficient mu(v, w)");
    mu_cmd->add_option("v", a)->required();
    mu_cmd->add_option("w", b)->required();
    mu_cmd->callback([&] {
        action = [&] {
            auto v = Permutation::parse(a);
            auto w = permutation_arg(b, v.size());
            auto m = mu(v, w);
            emit(o, json{{"v", v.str()}, {"w", w.str()}, {"mu", m}}, std::to_string(m) + "\n");
            return 0;
        };
    });

    auto* mu_tab = app.add_subcommand("mu-tab", "mu between two tableaux of the same shape");
    mu_tab->add_option("shape", a)->required();
    mu_tab->add_option("T", b)->required();
    mu_tab->add_option("R", c)->required();
    mu_tab->callback([&] {
        action = [&] {
            auto shape = Partition::parse(a);
            auto m = mu_tableaux(tableau_of_shape(b, shape), tableau_of_shape(c, shape));
            emit(o, json{{"shape", shape.str()}, {"T", b}, {"R", c}, {"mu", m}}, std::to_string(m) + "\n");
            return 0;
        };
    });

    auto* matrix_cmd = app.add_subcommand("matrix", "Matrix of w on the KL basis in total index order");
    matrix_cmd->add_option("shape", a)->required();
    matrix_cmd->add_option("w", b)->required()->description("one-line notation, or c / w0");
    matrix_cmd->callback([&] {
        action = [&] {
            auto shape = Partition::parse(a);
            auto w = permutation_arg(b, shape.size());
            auto order = BasisOrder::total_index(shape);
            auto m = matrix_of(shape, w, order);
            emit(o,
                 json{{"shape", shape.str()}, {"permutation", w.str()}, {"ordering", order.str()},
                      {"matrix", matrix_json(m)}},
                 "basis " + order.str() + "\n" + m.str() + "\n");
            return 0;
        };
    });

    auto* qr_cmd = app.add_subcommand("qr", "Exact QR of [w] in total index order");
    qr_cmd->add_option("shape", a)->required();
    qr_cmd->add_option("w", b)->required()->description("one-line notation, or c / w0");
    qr_cmd->callback([&] { action = [&] { return run_qr(o, a, b); }; });

    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->add_option("check", a, "Which sweep")
        ->required()
        ->check(CLI::IsMember(
            {"thm1", "branching", "prop-dmu", "lemma-pr", "thm4", "rhoades", "counterexample", "sep-desc"}));
    verify->add_option("--max-n", max_n, "Largest n in the sweep (default per check, or KLSPECHT_MAX_N)");
    verify->callback([&] { action = [&] { return run_verify(o, a, max_n); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
