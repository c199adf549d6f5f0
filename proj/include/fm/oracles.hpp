#pragma once

// Independent reference implementations used to cross-check the main code
// paths. Each routine here deliberately takes a different algorithmic route
// from the one it validates: path enumeration instead of the recurrence
// iteration, the Lagrange inversion formula instead of Newton iteration, and
// naive convolution loops for series arithmetic.

#include "fm/measures.hpp"
#include "fm/series.hpp"

namespace fm {
namespace oracles {

// m_n as a sum over Motzkin paths (explicit enumeration, exponential in depth;
// fine for depth <= 12).
Rat motzkin_moment(const JacobiParameters& j, int n);

// [z^n] of the compositional inverse via Lagrange inversion:
// h_n = (1/n) [w^{n-1}] (w / f(w))^n.
FormalPowerSeries lagrange_revert(const FormalPowerSeries& f);

// Plain O(N^2) convolution and O(N^3) power-accumulation composition.
FormalPowerSeries naive_multiply(const FormalPowerSeries& f, const FormalPowerSeries& g);
FormalPowerSeries naive_compose(const FormalPowerSeries& f, const FormalPowerSeries& g);

// Determinant by cofactor expansion (k <= 9 or so).
Rat cofactor_determinant(const std::vector<RatVec>& m);

}  // namespace oracles
}  // namespace fm
