#pragma once

#include "klspecht/tableaux.hpp"

namespace klspecht {

/// Jeu-de-taquin promotion: n slides north-west (always swapping with the
/// larger of the entries above and to the left), entries are incremented and
/// 1 fills the corner.
StandardTableau promote(const StandardTableau& t);

/// Two-sided inverse of promote: 1 slides south-east (swapping with the
/// smaller of the entries right and below), entries are decremented and n
/// fills the vacated box.
StandardTableau inverse_promote(const StandardTableau& t);

/// Schützenberger evacuation.
StandardTableau evacuate(const StandardTableau& t);

/// Evacuation of the subtableau on entries 1..k; larger entries stay put.
/// Requires 1 <= k <= n.
StandardTableau partial_evacuate(const StandardTableau& t, int k);

}  // namespace klspecht
