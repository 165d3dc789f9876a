#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "klspecht/symgroup.hpp"
#include "klspecht/tableaux.hpp"

namespace klspecht {

/// Integer polynomial in q, coefficients indexed by degree, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<long long> coeffs);
    static QPoly constant(long long c) { return QPoly({c}); }
    static QPoly monomial(long long c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    long long coeff(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0;
    }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    /// Multiplication by q^k.
    QPoly shifted(int k) const;

    /// "1+q^2"-style text, ascending degree; "0" for zero.
    std::string str() const;

    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    void trim();
    std::vector<long long> coeffs_;
};

/// Kazhdan-Lusztig polynomials of S_n, computed column by column on demand
/// with the right-descent recursion and memoized for the lifetime of the
/// table. Polynomials are interned, so a column costs two bytes per element.
/// All member functions are safe to call concurrently.
class KLTable {
public:
    static constexpr int max_n = 7;

    explicit KLTable(int n);
    KLTable(const KLTable&) = delete;
    KLTable& operator=(const KLTable&) = delete;

    /// Process-wide table for S_n.
    static KLTable& for_size(int n);

    int n() const { return n_; }
    QPoly polynomial(const Permutation& v, const Permutation& w);
    /// Symmetrized mu; 0 unless the pair is comparable with odd length gap.
    long long mu(const Permutation& v, const Permutation& w);
    /// Number of materialized columns.
    std::size_t columns_computed() const;

private:
    using PolyId = std::uint16_t;
    struct Column {
        std::vector<PolyId> poly;                       // indexed by x
        std::vector<std::pair<std::uint32_t, long long>> mu_below;  // x < w, mu != 0
    };

    const Column& column(std::uint32_t w);
    PolyId intern(const QPoly& p);
    std::uint32_t rank(const Permutation& w) const;

    int n_;
    std::size_t size_;
    std::vector<std::vector<std::uint32_t>> right_mult_;  // [j-1][x] -> x s_j
    std::vector<int> length_;
    std::vector<int> first_right_descent_;
    std::vector<std::unique_ptr<Column>> columns_;
    std::vector<QPoly> pool_;
    std::map<std::vector<long long>, PolyId> pool_index_;
    mutable std::recursive_mutex mutex_;
};

/// P_{v,w}(q) through the shared KLTable.
QPoly kl_polynomial(const Permutation& v, const Permutation& w);

/// Independent route to P_{v,w}: R-polynomials from their recursion, then the
/// triangular system q^{l(w)-l(x)} P_{x,w}(1/q) - P_{x,w}(q) = sum R_{x,y} P_{y,w}
/// solved with the degree bound. No Bruhat-order test is used. Intended for
/// n <= 5; throws std::logic_error if the system turns out inconsistent.
class KLOracle {
public:
    explicit KLOracle(int n);
    QPoly r_polynomial(const Permutation& x, const Permutation& w);
    /// P_{x,w} for every x, indexed by lex_rank(x).
    std::vector<QPoly> column(const Permutation& w);

private:
    const QPoly& r_by_rank(std::size_t x, std::size_t w);

    int n_;
    std::vector<Permutation> elements_;
    std::vector<int> length_;
    std::unordered_map<std::uint64_t, QPoly> r_memo_;
};

QPoly kl_oracle(const Permutation& v, const Permutation& w);

/// Coefficient of q^{(l(w)-l(v)-1)/2} in P_{v,w}, symmetrized in (v, w).
long long mu(const Permutation& v, const Permutation& w);

/// mu between the permutations with insertion tableaux T, R and a common
/// recording tableau (css of the shape unless given).
long long mu_tableaux(const StandardTableau& t, const StandardTableau& r);
long long mu_tableaux(const StandardTableau& t, const StandardTableau& r,
                      const StandardTableau& recorder);

/// Inserts n after position k (0 <= k <= n-1) in both u, v in S_{n-1} and
/// compares mu(u, v) with mu(u', v').
bool check_rhoades_insertion(const Permutation& u, const Permutation& v, int k);

}  // namespace klspecht
