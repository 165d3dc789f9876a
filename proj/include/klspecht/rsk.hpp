#pragma once

#include <utility>

#include "klspecht/symgroup.hpp"
#include "klspecht/tableaux.hpp"

namespace klspecht {

struct RSKPair {
    StandardTableau insertion;  // P
    StandardTableau recording;  // Q
};

/// Schensted row insertion of w(1), ..., w(n).
RSKPair rsk(const Permutation& w);

/// Reverse bumping; throws std::invalid_argument on a shape mismatch.
Permutation inverse_rsk(const StandardTableau& insertion, const StandardTableau& recording);

/// Column super-strict tableau: 1..n filled column by column.
StandardTableau css(const Partition& shape);

/// n in removable box i (row k); n-m ends row k-m for 1 <= m < k; the rest
/// column by column. Throws std::out_of_range unless 1 <= i <= r.
StandardTableau css_i(const Partition& shape, int i);

/// Columns left to right, each read bottom to top. This is the RSK preimage
/// of (P, css(shape(P))).
Permutation column_word(const StandardTableau& p);

}  // namespace klspecht
