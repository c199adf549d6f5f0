#pragma once

// Floating-point verification layer: Gaussian quadrature from Jacobi data,
// adaptive integration of the closed-form densities, CDF tables, and the
// conjugate-variable / symmetry identities that are analytic rather than
// algebraic.

#include <functional>
#include <vector>

#include "fm/measures.hpp"
#include "fm/meixner.hpp"
#include "fm/polynomial.hpp"

namespace fm {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int source_depth = 0;  // Jacobi truncation depth used
};

// Golub-Welsch: nodes and weights from the symmetric tridiagonal eigenproblem.
// Throws DegenerateJacobi when a needed gamma is not positive.
QuadratureRule gauss_rule(const JacobiParameters& j, int n);

// Integral of F against the ac part, via the edge-regularizing substitution
// x = center + radius sin(theta) and adaptive Simpson.
double ac_integral(const DensitySpec& ds, const std::function<double(double)>& F,
                   double abs_tol = 1e-10);

// ac mass + atom weights; should be 1 for a probability measure.
double total_mass(const DensitySpec& ds, double abs_tol = 1e-10);

// k-th moment of the measure: ac integral plus atom contributions.
double density_moment(const DensitySpec& ds, int k, double abs_tol = 1e-10);

// |(mu x mu)[d x^k] - mu[H x^k]|: exact moment convolution on the left,
// quadrature of H x^k against the density on the right.
// Throws AtomPresent unless the measure is absolutely continuous.
double check_conjugate(const ClosedFormMeasure& cf, int k);

// Defect of mu[L[f] g] = mu[H g f] - mu[f L[g]] by quadrature of the H term.
double check_A_symmetry(const ClosedFormMeasure& cf, const Polynomial& f, const Polynomial& g);

// Cumulative distribution of a DensitySpec, precomputed for repeated
// evaluation (used by the random-matrix comparisons).
class CdfTable {
  public:
    explicit CdfTable(const DensitySpec& ds, int panels = 2048);

    double operator()(double x) const;       // right-continuous CDF
    double left_limit(double x) const;       // F(x-)
    const DensitySpec& spec() const { return ds_; }

  private:
    DensitySpec ds_;
    double lo_ = 0, hi_ = 0;                 // support of the ac part
    std::vector<double> cum_;                // cumulative ac mass on theta grid
    double ac_mass_ = 0;
    double ac_below(double x) const;
};

}  // namespace fm
