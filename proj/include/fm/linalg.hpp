#pragma once

// Small exact linear-algebra kit: fraction-free (Bareiss) determinants,
// nullspace bases, and a general rational solver with a deterministic
// free-variable convention. Rank decisions here are exact by construction.

#include <optional>
#include <vector>

#include "fm/rational.hpp"

namespace fm {

using RatMatrix = std::vector<RatVec>;

// Determinant by fraction-free Gaussian elimination (Bareiss), exact.
Rat determinant(RatMatrix m);

// Basis of the right nullspace of an r x c matrix. Each basis vector is scaled
// to a primitive integer vector with positive first nonzero entry, so the
// output is deterministic.
std::vector<RatVec> nullspace(const RatMatrix& m);

struct LinearSolution {
    RatVec x;                     // deterministic solution (free variables = 0)
    bool consistent = false;      // true iff A x = b exactly
    std::vector<int> free_cols;   // columns without a pivot
};

// Solve A x = b over the rationals. Columns are scanned left to right; within
// a column the pivot is the first unused row with a nonzero entry. When the
// system is inconsistent, x still holds the convention solution of the pivoted
// subsystem so that the caller can report an exact residual.
LinearSolution solve_linear(RatMatrix a, RatVec b);

}  // namespace fm
