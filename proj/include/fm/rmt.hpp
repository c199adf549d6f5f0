#pragma once

// Desk-scale random-matrix models: GUE, Wishart via rank-k projections
// (W = X P X), and the two-Wishart Jacobi construction, with empirical
// spectral distributions compared against the closed-form limits.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fm/numerics.hpp"

namespace fm {

struct EnsembleSample {
    std::vector<double> eigenvalues;  // sorted ascending
    std::string model;
    std::uint64_t seed = 0;
};

// Hermitian n x n, entries with variance 1/n, so the spectral limit is the
// semicircle on [-2, 2].
EnsembleSample sample_gue(int n, std::uint64_t seed);

// W = X P X with X a GUE matrix and P a rank-k coordinate projection;
// limit Marchenko-Pastur(k/n). Throws RankTooLarge when k > n.
EnsembleSample sample_wishart(int n, int k, std::uint64_t seed);

// (W1 + W2)^{-1/2} W1 (W1 + W2)^{-1/2} with independent Wishart factors;
// limit free binomial(k1/n, k2/n). Requires k1 + k2 >= n (SingularSum
// otherwise, or when the sum is numerically singular).
EnsembleSample sample_jacobi_ensemble(int n, int k1, int k2, std::uint64_t seed);

// Kolmogorov-Smirnov distance between the empirical spectral distribution and
// a closed-form limit. Eigenvalues within snap_tol of an atom location are
// attributed to the atom. Empty samples give distance 1 by convention.
double ks_distance(const EnsembleSample& sample, const CdfTable& limit,
                   double snap_tol = 1e-9);
double ks_distance(const EnsembleSample& sample, const DensitySpec& limit,
                   double snap_tol = 1e-9);

namespace detail {
// Exposed for the hermiticity invariant test.
Eigen::MatrixXcd gue_matrix(int n, std::uint64_t seed);
}  // namespace detail

}  // namespace fm
