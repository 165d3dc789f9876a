#include "doctest.h"

#include <deque>
#include <set>

#include "klspecht/symgroup.hpp"

using namespace klspecht;

namespace {

Permutation P(const char* text) { return Permutation::parse(text); }

// Bruhat order as the transitive closure of length-increasing transpositions
std::set<std::vector<int>> upper_set(const Permutation& v) {
    std::set<std::vector<int>> seen{v.word()};
    std::deque<std::vector<int>> queue{v.word()};
    while (!queue.empty()) {
        auto w = queue.front();
        queue.pop_front();
        const int n = static_cast<int>(w.size());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (w[i] > w[j]) continue;
                auto u = w;
                std::swap(u[i], u[j]);
                if (seen.insert(u).second) queue.push_back(u);
            }
        }
    }
    return seen;
}

int inversions(const std::vector<int>& w) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j];
    return count;
}

bool contains_pattern(const std::vector<int>& w, const std::vector<int>& pattern) {
    const int n = static_cast<int>(w.size());
    std::vector<int> pick(4);
    for (pick[0] = 0; pick[0] < n; ++pick[0])
        for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1])
            for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2])
                for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3]) {
                    bool match = true;
                    for (int a = 0; a < 4 && match; ++a)
                        for (int b = 0; b < 4 && match; ++b)
                            match = (pattern[a] < pattern[b]) == (w[pick[a]] < w[pick[b]]);
                    if (match) return true;
                }
    return false;
}

long long large_schroeder(int m) {
    std::vector<long long> s{1, 2};
    for (int k = 2; k <= m; ++k) s.push_back((3 * (2 * k - 1) * s[k - 1] - (k - 2) * s[k - 2]) / (k + 1));
    return s[m];
}

}  // namespace

TEST_CASE("parsing") {
    CHECK(P("8,5,1,6,2,7,3,4") == P("85162734"));
    CHECK(P("312").str() == "3,1,2");
    CHECK(P("1") == Permutation::identity(1));
    CHECK_THROWS_AS(P("1,1"), ParseError);
    CHECK_THROWS_AS(P("1,3"), ParseError);
    CHECK_THROWS_AS(P("abc"), ParseError);
    CHECK(Permutation(std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 10, 9}).str() == "1,2,3,4,5,6,7,8,10,9");
}

TEST_CASE("products and inverses") {
    auto u = P("231");
    auto v = P("213");
    CHECK(multiply(u, v)(1) == u(v(1)));
    CHECK(multiply(u, inverse(u)) == Permutation::identity(3));
    CHECK_THROWS(multiply(u, P("2143")));
    CHECK(left_multiply_simple(1, P("132")) == multiply(P("213"), P("132")));
    CHECK(right_multiply_simple(P("132"), 1) == multiply(P("132"), P("213")));
}

TEST_CASE("length and descents") {
    CHECK(length(Permutation::identity(4)) == 0);
    for (int n = 1; n <= 7; ++n) CHECK(length(reversal(n, n)) == n * (n - 1) / 2);
    CHECK(left_descents(P("2413")) == std::vector<int>{1, 3});
    for (const auto& w : all_permutations(5)) {
        CHECK(length(w) == inversions(w.word()));
        for (int j = 1; j <= 4; ++j) {
            CHECK(is_left_descent(w, j) == (length(left_multiply_simple(j, w)) < length(w)));
            bool right = length(right_multiply_simple(w, j)) < length(w);
            auto rd = right_descents(w);
            CHECK(right == (std::find(rd.begin(), rd.end(), j) != rd.end()));
        }
    }
}

TEST_CASE("bruhat order against swap chains on S_4") {
    CHECK(bruhat_leq(P("1324"), P("3412")));
    auto all = all_permutations(4);
    for (const auto& v : all) {
        auto above = upper_set(v);
        CHECK(bruhat_leq(Permutation::identity(4), v));
        for (const auto& w : all) {
            CHECK(bruhat_leq(v, w) == (above.count(w.word()) == 1));
            if (bruhat_leq(v, w) && bruhat_leq(w, v)) CHECK(v == w);
        }
    }
}

TEST_CASE("reduced words") {
    CHECK(reduced_word(Permutation::identity(4)).empty());
    CHECK(reduced_word(P("1324")) == std::vector<int>{2});
    auto w0 = reduced_word(P("321"));
    CHECK(w0.size() == 3);
    CHECK(from_word(3, w0) == P("321"));
    for (int n = 1; n <= 6; ++n) {
        for (const auto& w : all_permutations(n)) {
            auto word = reduced_word(w);
            CHECK(static_cast<int>(word.size()) == length(w));
            CHECK(from_word(n, word) == w);
        }
    }
}

TEST_CASE("parabolic subsets") {
    auto j = ParabolicSubset::parse("{4,1,2}", 5);
    CHECK(j.generators() == std::vector<int>{1, 2, 4});
    CHECK(j.str() == "{1,2,4}");
    CHECK_FALSE(j.is_connected());
    CHECK(j.blocks().size() == 2);
    CHECK(ParabolicSubset::interval(1, 3, 5).generators() == std::vector<int>{2, 3});
    CHECK(ParabolicSubset::parse("2,3", 4).is_subset_of(ParabolicSubset::parse("1,2,3", 4)));
    CHECK_THROWS_AS(ParabolicSubset::parse("{5}", 5), ParseError);
    CHECK_THROWS_AS(ParabolicSubset::parse("{}", 5), ParseError);
}

TEST_CASE("longest elements of parabolic subgroups") {
    CHECK(longest_element(ParabolicSubset::parse("1,2,3", 4)) == P("4321"));
    CHECK(longest_element(ParabolicSubset::parse("2,3", 4)) == P("1432"));
    CHECK(longest_element(ParabolicSubset::parse("1,3", 4)) == P("2143"));
    for (int n = 2; n <= 6; ++n) {
        for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
            std::vector<int> gens;
            for (int j = 1; j < n; ++j)
                if (mask >> (j - 1) & 1) gens.push_back(j);
            ParabolicSubset sub(gens, n);
            auto w = longest_element(sub);
            // every generator of J is a left descent, none of the others can be added
            for (int j : gens) CHECK(is_left_descent(w, j));
            int expected = 0;
            for (const auto& block : sub.blocks()) {
                int k = static_cast<int>(block.generators().size()) + 1;
                expected += k * (k - 1) / 2;
            }
            CHECK(length(w) == expected);
        }
    }
}

TEST_CASE("connected longest elements through prefix reversals") {
    // w_J = w_{b+1} w_{b-a+1} w_{b+1} for J = {a+1, ..., b}
    for (int n = 2; n <= 7; ++n) {
        for (int a = 0; a < n - 1; ++a) {
            for (int b = a + 1; b <= n - 1; ++b) {
                auto outer = reversal(b + 1, n);
                auto inner = reversal(b - a + 1, n);
                CHECK(longest_element(ParabolicSubset::interval(a, b, n)) == multiply(multiply(outer, inner), outer));
            }
        }
    }
    // with b - a in the middle the product collapses for J = {1}
    auto literal = multiply(multiply(reversal(2, 3), reversal(1, 3)), reversal(2, 3));
    CHECK(literal == Permutation::identity(3));
    CHECK(longest_element(ParabolicSubset::parse("1", 3)) == P("213"));
}

TEST_CASE("long cycle") {
    CHECK(long_cycle(4) == P("2341"));
    for (int n = 2; n <= 8; ++n) {
        auto top = longest_element(ParabolicSubset::interval(0, n - 1, n));
        auto below = n > 2 ? longest_element(ParabolicSubset::interval(0, n - 2, n)) : Permutation::identity(n);
        CHECK(long_cycle(n) == multiply(top, below));
    }
}

TEST_CASE("separable permutations") {
    CHECK_FALSE(is_separable(P("2413")));
    CHECK_FALSE(is_separable(P("3142")));
    CHECK(is_separable(Permutation::identity(5)));
    CHECK(is_separable(long_cycle(6)));
    CHECK(is_separable(reversal(6, 6)));
    CHECK(separable_tree(P("12"))->kind == SeparableTree::Kind::DirectSum);
    CHECK(separable_tree(P("21"))->kind == SeparableTree::Kind::SkewSum);
    CHECK_FALSE(separable_tree(P("2413")).has_value());
    for (int n = 1; n <= 6; ++n) {
        long long count = 0;
        for (const auto& w : all_permutations(n)) {
            bool avoids = !contains_pattern(w.word(), {2, 4, 1, 3}) && !contains_pattern(w.word(), {3, 1, 4, 2});
            CHECK(is_separable(w) == avoids);
            auto tree = separable_tree(w);
            CHECK(tree.has_value() == avoids);
            if (tree) CHECK(tree->evaluate() == w);
            count += avoids;
        }
        CHECK(count == large_schroeder(n - 1));
    }
}

TEST_CASE("descending decompositions") {
    CHECK(descending_decomposition(Permutation::identity(3))->empty());
    auto w0 = descending_decomposition(reversal(4, 4));
    REQUIRE(w0.has_value());
    CHECK(w0->size() == 1);
    CHECK(chain_product(SubsetChain{ParabolicSubset::parse("1,2", 4), ParabolicSubset::parse("1,2,3", 4)}, 4) ==
          long_cycle(4));
    CHECK_FALSE(descending_decomposition(P("2413")).has_value());
    for (int n = 1; n <= 5; ++n) {
        for (const auto& w : all_permutations(n)) {
            auto chain = descending_decomposition(w);
            CHECK(chain.has_value() == is_separable(w));
            if (!chain) continue;
            CHECK(chain_product(*chain, n) == w);
            for (std::size_t k = 1; k < chain->size(); ++k) {
                CHECK((*chain)[k - 1].is_subset_of((*chain)[k]));
                CHECK((*chain)[k - 1] != (*chain)[k]);
            }
        }
    }
}
