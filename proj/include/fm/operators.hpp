#pragma once

// The operator L_mu on polynomials, the second-order operators
// Q = p L_nu L_mu + q L_mu (one- and two-measure forms), higher-order
// operators, the exact polynomial eigensystem solver, and the moment-side
// characterization checks.

#include <optional>
#include <vector>

#include "fm/linalg.hpp"
#include "fm/measures.hpp"
#include "fm/polynomial.hpp"
#include "fm/polysys.hpp"
#include "fm/series.hpp"

namespace fm {

// L_mu[x^n] = sum_{k<n} m_{n-k-1} x^k, extended linearly.
//
// Off the polynomial algebra, the resolvents x -> 1/(z - x) are eigenfunctions
// of L_mu with eigenvalue G_mu(z); only the polynomial action is implemented
// here.
Polynomial apply_L(const MomentSequence& m, const Polynomial& f);

// Q = p(x) L_nu L_mu + q(x) L_mu with p = a + b x + c x^2, q = d + e x.
// Without nu this is the one-measure operator (nu = mu).
struct BochnerOperator {
    Rat a, b, c;  // p
    Rat d, e;     // q
    MomentSequence mu;
    std::optional<MomentSequence> nu;

    const MomentSequence& nu_or_mu() const { return nu ? *nu : mu; }
    Polynomial p() const { return Polynomial{a, b, c}; }
    Polynomial q() const { return Polynomial{d, e}; }
    // diagonal of the triangular action: 0 for n = 0, e for n = 1, c + e for n >= 2
    Rat eigenvalue_ladder(int n) const { return n == 0 ? Rat(0) : (n == 1 ? e : c + e); }
};

Polynomial apply_Q(const BochnerOperator& Q, const Polynomial& f);

// Q = sum_k p_k(x) L_mu^k with deg p_k <= k (throws DegreeViolation).
Polynomial apply_Q_higher(const std::vector<Polynomial>& p_list, const MomentSequence& m,
                          const Polynomial& f);

// Residual of the higher-order eigenfunction condition
// sum_k p_k(z) G(z)^k - sum_k [x^k] p_k, as a series in w = 1/z.
FormalPowerSeries check_higher_identity(const std::vector<Polynomial>& p_list,
                                        const MomentSequence& m, int order = default_order());

struct EigenResult {
    int degree = 0;
    Rat eigenvalue;          // ladder value for this degree
    Polynomial eigenfunction;  // monic, convention: free coefficients set to 0
    Polynomial residual;     // Q[v] - lambda v; zero iff v is an exact eigenfunction
    bool exists = false;     // the linear system was consistent
    bool degenerate = false; // lambda collides with a lower ladder value
};

struct EigenReport {
    std::vector<EigenResult> levels;  // degrees 0..upTo
    Rat alpha;                        // degree-1 shift (constant term of level 1)
    bool all_exist = true;
    // closed-form cross-check (one- and two-measure, c != 0): beta_n from
    // B(z) = z (1 - M_mu M_nu), gamma_n from (c+e) C(z) = z M_mu (a z M_nu + d (1 - M_nu))
    bool closed_form_checked = false;
    bool beta_match = true;
    bool gamma_match = true;
};

// Exact eigensystem solve by back-substitution on the triangular action of Q
// in the monomial basis. Degenerate ladder values are handled by a full
// rational solve with free coefficients pinned to zero; inconsistent degrees
// are reported with their exact residual instead of throwing.
EigenReport eigensystem(const BochnerOperator& Q, int up_to);

// Strict single-degree variant; throws NoEigenfunction on inconsistency.
Polynomial eigenfunction(const BochnerOperator& Q, int degree);

// Closed forms for the eigenfunction corrections when c != 0:
// B(z) = z (1 - M_mu(z) M_nu(z)) carries beta_n; C(z) (defined when
// c + e != 0) carries gamma_n.
FormalPowerSeries correction_beta_series(const BochnerOperator& Q, int order = default_order());
std::optional<FormalPowerSeries> correction_gamma_series(const BochnerOperator& Q,
                                                         int order = default_order());

// Exact nullspace of the stacked moment recursion
//   a sum m_i m_{n-i-2} + b sum m_i m_{n-i-1} + c sum m_i m_{n-i}
//     + d m_{n-1} + e m_n = 0   (n = 1..depth; the n = 0 row closes to c + e)
// in the unknowns (a, b, c, d, e). Nonzero nullspace <=> candidate Bochner
// coefficients exist.
struct NullspaceReport {
    std::vector<RatVec> basis;  // vectors (a, b, c, d, e)
    // residual of e*alpha = d per basis vector: 0 when e != 0, else d
    RatVec linear_coefficient_residuals;
    int dimension() const { return static_cast<int>(basis.size()); }
};

NullspaceReport bochner_nullspace(const MomentSequence& m, int depth);
NullspaceReport bochner_nullspace_pair(const MeasurePair& pair, int depth);

// True when (a,b,c,d,e) satisfies the stacked recursion rows exactly.
bool in_nullspace(const MeasurePair& pair, const RatVec& coeffs, int depth);

// Left side of (a + b z + c z^2) G(z)^2 + (d + e z) G(z) - (c + e) as a series
// in w = 1/z; identically zero iff the identity holds to the given order.
FormalPowerSeries check_cauchy_identity(const BochnerOperator& Q, int order = default_order());

// Residual of the Riccati form, multiplied through by u:
// -(2c+e) R(u) - (b+d) - u (a + b R(u) + c R(u)^2).
FormalPowerSeries check_riccati_identity(const BochnerOperator& Q, int order = default_order());

// Symmetry defect mu[(Q f) g] - mu[f (Q g)] for Q = L_nu L_mu - H L_mu with a
// polynomial H (the degree-one case of the two-measure conjugate variable).
Rat check_symmetry(const MeasurePair& pair, const Polynomial& H, const Polynomial& f,
                   const Polynomial& g);

// Residuals r_n of (nu x mu)[dx^n] = mu[((x - beta)/gamma) x^n], n = 0..up_to;
// all zero iff mu = Phi_{beta,gamma}[nu].
RatVec check_H_identity(const MeasurePair& pair, int up_to, const Rat& beta = Rat(0),
                        const Rat& gamma = Rat(1));

}  // namespace fm
