#pragma once

// Compactly supported probability measures, represented in the exact layer by
// truncated moment sequences and Jacobi (three-term recurrence) parameters.

#include <optional>
#include <vector>

#include "fm/rational.hpp"
#include "fm/series.hpp"

namespace fm {

// m_0..m_N with m_0 = 1; doubles as the moment functional on polynomials.
class MomentSequence {
  public:
    MomentSequence() : m_{Rat(1)} {}
    explicit MomentSequence(RatVec moments);

    static MomentSequence point_mass(const Rat& xi, int depth);

    int depth() const { return static_cast<int>(m_.size()) - 1; }
    Rat operator[](int k) const;
    const RatVec& moments() const { return m_; }

    bool operator==(const MomentSequence& o) const { return m_ == o.m_; }

  private:
    RatVec m_;
};

// Diagonal beta_0, beta_1, ... and off-diagonal squares gamma_1, gamma_2, ....
// A zero gamma terminates the sequence (finitely supported measure); entries
// after the first zero are dropped. Negative gammas are rejected.
class JacobiParameters {
  public:
    JacobiParameters() = default;
    JacobiParameters(RatVec beta, RatVec gamma);

    const RatVec& beta() const { return beta_; }
    const RatVec& gamma() const { return gamma_; }          // gamma()[i] is gamma_{i+1}
    Rat beta_at(int n) const { return beta_[n]; }           // beta_n
    Rat gamma_at(int n) const { return gamma_[n - 1]; }     // gamma_n, n >= 1

    // number of (beta, gamma) levels usable by the recurrence
    int levels() const { return static_cast<int>(beta_.size()); }
    // true when some gamma_k = 0 ended the sequence (k-atom measure)
    bool terminated() const { return terminated_; }

    bool operator==(const JacobiParameters& o) const {
        return beta_ == o.beta_ && gamma_ == o.gamma_;
    }

  private:
    RatVec beta_;
    RatVec gamma_;
    bool terminated_ = false;
};

struct MeasurePair {
    MomentSequence mu;
    MomentSequence nu;
};

// M(z) = sum m_n z^n, truncated at min(depth, order).
FormalPowerSeries mgf(const MomentSequence& m, int order = default_order());

// The Cauchy transform as a series in w = 1/z: G = sum m_n w^{n+1}.
FormalPowerSeries cauchy_series(const MomentSequence& m, int order = default_order());

// R-transform series, defined by G(R(z) + 1/z) = z. Requires depth >= 2.
FormalPowerSeries r_transform(const MomentSequence& m, int order = default_order());

// Stieltjes/Chebyshev algorithm, exact. Recovers as many (beta, gamma) levels
// as the moment depth supports; throws NotPositiveDefinite when a Hankel
// pivot goes negative.
JacobiParameters moments_to_jacobi(const MomentSequence& m);

// m_n = <e_0, J^n e_0> computed by the exact monic-recurrence iteration
// (no square roots). Terminated sequences give exact moments to any depth.
MomentSequence jacobi_to_moments(const JacobiParameters& j, int depth);

// Jacobi-shift map Phi_{beta,gamma}: prepend (beta, gamma) to the Jacobi
// parameters of nu; equivalently 1/M_mu = 1 - beta z - gamma z^2 M_nu.
MomentSequence phi_shift(const MomentSequence& nu, const Rat& beta, const Rat& gamma);
JacobiParameters phi_shift(const JacobiParameters& nu, const Rat& beta, const Rat& gamma);

// Same map evaluated through the reciprocal identity, used as the second
// route in cross-checks.
FormalPowerSeries phi_shift_mgf(const FormalPowerSeries& nu_mgf, const Rat& beta, const Rat& gamma);

// Coefficient stripping, the left inverse of phi_shift. Throws
// FinitelySupported when gamma_1 = 0.
MomentSequence strip(const MomentSequence& m);

// Pushforward under x -> s x + t, s != 0.
MomentSequence affine(const MomentSequence& m, const Rat& s, const Rat& t);

struct HankelReport {
    RatVec determinants;                 // det (m_{i+j})_{0..k}, k = 0..depth
    std::optional<int> first_negative;   // index of the first negative one
    bool positive_definite() const { return !first_negative.has_value(); }
};

HankelReport hankel_check(const MomentSequence& m, int depth);

}  // namespace fm
