#pragma once

// Monic orthogonal polynomial systems, the moment functional, and the
// c-free Appell polynomials of a pair of measures.

#include <vector>

#include "fm/measures.hpp"
#include "fm/polynomial.hpp"

namespace fm {

struct PolynomialSystem {
    std::vector<Polynomial> polys;  // polys[n] is monic of degree n
    const Polynomial& operator[](int n) const { return polys[n]; }
    int size() const { return static_cast<int>(polys.size()); }
};

// P_{n+1} = (x - beta_n) P_n - gamma_n P_{n-1}, P_0 = 1.
PolynomialSystem orthogonal_polys(const JacobiParameters& j, int up_to);

// mu[f] = sum coeff_k m_k. Throws InsufficientMoments if deg f > depth.
Rat functional(const MomentSequence& m, const Polynomial& f);

// mu[f g].
Rat inner_product(const MomentSequence& m, const Polynomial& f, const Polynomial& g);

// Unique monic A_n with L_nu[A_n] = A_{n-1} and mu[A_n] = 0 for n >= 1,
// built degree by degree (L_nu inverts triangularly; the constant term is
// fixed by the mu-mean-zero condition).
PolynomialSystem cfree_appell(const MeasurePair& pair, int up_to);

}  // namespace fm
