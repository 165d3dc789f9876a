#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "klspecht/matrix.hpp"
#include "klspecht/report.hpp"
#include "klspecht/specht.hpp"
#include "klspecht/symgroup.hpp"
#include "klspecht/tableaux.hpp"

namespace klspecht {

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Some column norm is irrational, so Q has no exact rational form.
class IrrationalNormError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct QRFactorization {
    ExactMatrix q;  // orthogonal
    ExactMatrix r;  // upper triangular, positive diagonal
};

/// Gram-Schmidt over the rationals. Throws SingularMatrixError for singular
/// input and IrrationalNormError when a column norm is not rational.
QRFactorization exact_qr(const ExactMatrix& m);

/// Column c of the matrix is sign[c] times the basis vector target[c].
struct SignedPermutation {
    std::vector<int> target;
    std::vector<int> sign;
};

/// Present iff every row and column has a single nonzero entry equal to +-1.
std::optional<SignedPermutation> as_signed_permutation(const ExactMatrix& q);

/// Decides whether the Q factor of m is a signed permutation without taking
/// square roots: Q's column k is +-e_i exactly when the k-th Gram-Schmidt
/// vector is supported on the single coordinate i. Throws SingularMatrixError.
std::optional<SignedPermutation> signed_permutation_of_q(const ExactMatrix& m);

/// Promotion leading-term check for the long cycle under an index-monotone
/// order. Throws std::invalid_argument for an order that is not.
CheckReport verify_thm1(const Partition& shape, const BasisOrder& order);

/// `samples` index-monotone orders, each obtained from the total index order
/// by shuffling inside every index class with a generator seeded by `seed`.
std::vector<BasisOrder> shuffled_index_orders(const Partition& shape, int samples, std::uint64_t seed);

/// phi_J for J = {a+1, ..., b}: ev_{b+1} ev_{b-a+1} ev_{b+1}. Throws
/// std::invalid_argument for a disconnected J.
StandardTableau phi_connected(const ParabolicSubset& j, const StandardTableau& t);

/// The total preorder attached to a connected J whose generators move the
/// letters lo..hi: T is ranked by the recursive index sequence of ev_hi(T)
/// over its largest n - (hi - lo + 1) entries.
class ConnectedPreorder {
public:
    ConnectedPreorder(ParabolicSubset j, Partition shape);

    std::vector<int> key(const StandardTableau& t) const;
    /// -1, 0 or 1 as T precedes, is equivalent to, or follows R.
    int compare(const StandardTableau& t, const StandardTableau& r) const;
    /// Equivalence classes listed in increasing order, members in total index order.
    std::vector<std::vector<StandardTableau>> classes() const;

    const ParabolicSubset& subset() const { return j_; }

private:
    ParabolicSubset j_;
    Partition shape_;
    int hi_;
    int block_;
};

ConnectedPreorder preorder_connected(const ParabolicSubset& j, const Partition& shape);

/// Basis order refining the composite preorder of a chain: keys compared from
/// the outermost subset inward, ties broken by total index order.
BasisOrder chain_order(const SubsetChain& chain, const Partition& shape);

/// phi_{J_k} ... phi_{J_1}.
StandardTableau phi_chain(const SubsetChain& chain, const StandardTableau& t);

/// QR of [w_{J_k} ... w_{J_1}] in chain_order must be the signed permutation
/// matrix of phi_chain with signs constant on preorder classes.
CheckReport verify_thm4_chain(const Partition& shape, const SubsetChain& chain);

/// Every strictly increasing chain of connected subsets of {1..n-1}.
std::vector<SubsetChain> connected_chains(int n);

/// 2413 on (3,1) under all 3! orders, plus the long cycle sanity run.
CheckReport verify_counterexample();

/// All orderings of SYT(shape) under which Q of [w] is a signed permutation.
/// Stops at the first hit unless `exhaustive`. Throws std::invalid_argument
/// when dim exceeds `max_dim`.
std::vector<BasisOrder> orderings_with_signed_q(const Partition& shape, const Permutation& w,
                                                bool exhaustive, int max_dim = 7);

std::optional<BasisOrder> search_ordering(const Partition& shape, const Permutation& w, int max_dim = 7);

}  // namespace klspecht
