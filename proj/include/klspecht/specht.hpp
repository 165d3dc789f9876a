#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "klspecht/matrix.hpp"
#include "klspecht/report.hpp"
#include "klspecht/symgroup.hpp"
#include "klspecht/tableaux.hpp"

namespace klspecht {

/// An ordering of SYT(shape), used as the ordered KL basis.
class BasisOrder {
public:
    /// Throws std::invalid_argument unless `sequence` lists SYT(shape) exactly once.
    BasisOrder(Partition shape, std::vector<StandardTableau> sequence);
    /// enumerate_syt order.
    static BasisOrder total_index(const Partition& shape);

    const Partition& shape() const { return shape_; }
    const std::vector<StandardTableau>& sequence() const { return sequence_; }
    int dim() const { return static_cast<int>(sequence_.size()); }
    int position(const StandardTableau& t) const;
    const StandardTableau& operator[](int k) const { return sequence_[k]; }

    /// True when index(T) never decreases along the sequence.
    bool is_index_monotone() const;
    std::string str() const;

private:
    Partition shape_;
    std::vector<StandardTableau> sequence_;
    std::unordered_map<StandardTableau, int> position_;
};

/// S^shape on the KL basis: tableaux, descent sets and the mu table between
/// them, cached per shape.
class SpechtModule {
public:
    explicit SpechtModule(const Partition& shape);

    /// Process-wide cached module; safe to call from several threads.
    static const SpechtModule& for_shape(const Partition& shape);

    const Partition& shape() const { return shape_; }
    int dim() const { return static_cast<int>(tableaux_.size()); }
    /// In total index order.
    const std::vector<StandardTableau>& tableaux() const { return tableaux_; }
    long long mu(int t, int r) const { return mu_[t][r]; }
    bool has_descent(int t, int j) const { return descents_[t][j]; }

    /// Matrix of s_j; column T holds the coordinates of s_j . C_T.
    ExactMatrix generator(int j, const BasisOrder& order) const;
    /// Product of generator matrices along reduced_word(w).
    ExactMatrix matrix(const Permutation& w, const BasisOrder& order) const;

private:
    Partition shape_;
    std::vector<StandardTableau> tableaux_;
    std::unordered_map<StandardTableau, int> canonical_;
    std::vector<std::vector<bool>> descents_;   // [t][j], j in 1..n-1
    std::vector<std::vector<long long>> mu_;
};

ExactMatrix generator_matrix(const Partition& shape, int j, const BasisOrder& order);
ExactMatrix matrix_of(const Partition& shape, const Permutation& w, const BasisOrder& order);

/// Columns of s_j (j <= n-2) at T never reach an R of larger index.
CheckReport check_filtration_invariance(const Partition& shape);

/// Action of s_1..s_{n-2} on the quotient basis {[C_T] : index(T) = i}, in
/// total index order.
std::vector<ExactMatrix> quotient_matrices(const Partition& shape, int i);

/// Each quotient equals the S^{mu_i} generator matrices after reindexing by
/// delete_largest; also records the restriction multiset.
CheckReport check_branching(const Partition& shape);

}  // namespace klspecht
