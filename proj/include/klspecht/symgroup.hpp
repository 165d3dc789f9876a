#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "klspecht/errors.hpp"

namespace klspecht {

/// A permutation of 1..n in one-line notation: word()[i-1] is the image of i.
class Permutation {
public:
    Permutation() = default;
    /// Throws ParseError unless `word` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    /// Accepts "8,5,1,6,2,7,3,4" or, for n <= 9, the digit string "85162734".
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; }
    const std::vector<int>& word() const { return word_; }
    /// 1-based position holding value v.
    int position_of(int v) const;

    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

/// Composition (u*v)(i) = u(v(i)); sizes must agree.
Permutation multiply(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);
/// Inversion count.
int length(const Permutation& w);

/// s_j * w: swaps the values j and j+1.
Permutation left_multiply_simple(int j, const Permutation& w);
/// w * s_j: swaps the positions j and j+1.
Permutation right_multiply_simple(const Permutation& w, int j);

/// {j : l(s_j w) < l(w)}, i.e. j+1 appears before j in the one-line word.
std::vector<int> left_descents(const Permutation& w);
bool is_left_descent(const Permutation& w, int j);
/// {j : w(j) > w(j+1)}.
std::vector<int> right_descents(const Permutation& w);

/// Bruhat order via the Ehresmann tableau criterion on sorted prefixes.
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// Generator indices j_1..j_k with s_{j_1}...s_{j_k} = w and k = l(w),
/// found by repeatedly stripping the smallest left descent.
std::vector<int> reduced_word(const Permutation& w);
/// Product s_{j_1} ... s_{j_k} in S_n.
Permutation from_word(int n, const std::vector<int>& word);

/// All of S_n in lexicographic order of one-line words.
std::vector<Permutation> all_permutations(int n);
/// Position of w in all_permutations(w.size()).
std::size_t lex_rank(const Permutation& w);

/// A nonempty set of simple reflections s_j, 1 <= j <= n-1.
class ParabolicSubset {
public:
    ParabolicSubset() = default;
    /// Throws ParseError if empty or out of range.
    ParabolicSubset(std::vector<int> generators, int n);

    /// Parses "{1,2,4}" or "1,2,4".
    static ParabolicSubset parse(std::string_view text, int n);
    /// {a+1, ..., b}.
    static ParabolicSubset interval(int a, int b, int n);

    const std::vector<int>& generators() const { return gens_; }
    int n() const { return n_; }
    bool contains(int j) const;
    bool is_connected() const;
    bool is_subset_of(const ParabolicSubset& other) const;
    /// Maximal runs of consecutive generators.
    std::vector<ParabolicSubset> blocks() const;

    std::string str() const;

    friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;
    friend auto operator<=>(const ParabolicSubset&, const ParabolicSubset&) = default;

private:
    std::vector<int> gens_;
    int n_ = 0;
};

/// Reverses 1..k and fixes the rest.
Permutation reversal(int k, int n);
/// Longest element of S_J: reverses the letters spanned by each block of J.
Permutation longest_element(const ParabolicSubset& j);
/// i -> i+1 mod n; one-line 2,3,...,n,1. Equals reversal(n) * reversal(n-1).
Permutation long_cycle(int n);

/// True iff w contains neither 2413 nor 3142 as a pattern.
bool is_separable(const Permutation& w);

/// Binary decomposition of a separable permutation into direct and skew sums.
struct SeparableTree {
    enum class Kind { Leaf, DirectSum, SkewSum };
    Kind kind = Kind::Leaf;
    std::unique_ptr<SeparableTree> left;
    std::unique_ptr<SeparableTree> right;

    Permutation evaluate() const;
    std::string str() const;
};

/// Present exactly when w is separable.
std::optional<SeparableTree> separable_tree(const Permutation& w);

/// An increasing chain J_1 < ... < J_k of generator subsets.
using SubsetChain = std::vector<ParabolicSubset>;

/// Product w_{J_k} ... w_{J_1}; the empty chain gives the identity.
Permutation chain_product(const SubsetChain& chain, int n);

/// A chain with w = w_{J_k} ... w_{J_1}, if one exists. Depth-first search
/// over strictly increasing chains; the identity is witnessed by the empty
/// chain.
std::optional<SubsetChain> descending_decomposition(const Permutation& w);

std::string chain_str(const SubsetChain& chain);

}  // namespace klspecht

template <>
struct std::hash<klspecht::Permutation> {
    std::size_t operator()(const klspecht::Permutation& w) const noexcept {
        std::size_t h = 0;
        for (int v : w.word()) h = h * 31 + static_cast<std::size_t>(v);
        return h;
    }
};
