#pragma once

// Truncated formal power series with exact rational coefficients.
//
// A series of order N retains the coefficients of z^0..z^N; every binary
// operation aligns to the minimum of the two orders, so a result's order is an
// honest statement of how many coefficients are correct. Nothing is rounded.

#include <vector>

#include "fm/polynomial.hpp"
#include "fm/rational.hpp"

namespace fm {

// Default truncation order (highest retained power). Overridable through the
// FREEMEIXNER_ORDER environment variable, clamped to [4, 128].
int default_order();

class FormalPowerSeries {
  public:
    FormalPowerSeries() : coeffs_(1, Rat(0)) {}
    // order N, all coefficients zero
    explicit FormalPowerSeries(int order) : coeffs_(order + 1, Rat(0)) {}
    FormalPowerSeries(RatVec coeffs, int order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, Rat(0));
    }

    static FormalPowerSeries constant(const Rat& c, int order) {
        FormalPowerSeries f(order);
        f.coeffs_[0] = c;
        return f;
    }
    static FormalPowerSeries identity(int order) {  // the series z
        FormalPowerSeries f(order);
        if (order >= 1) f.coeffs_[1] = 1;
        return f;
    }
    static FormalPowerSeries from_polynomial(const Polynomial& p, int order) {
        FormalPowerSeries f(order);
        for (int k = 0; k <= std::min(order, p.degree()); ++k) f.coeffs_[k] = p[k];
        return f;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat operator[](int k) const {
        return (k >= 0 && k <= order()) ? coeffs_[k] : Rat(0);
    }
    const RatVec& coeffs() const { return coeffs_; }
    bool is_zero() const;

    FormalPowerSeries truncated(int order) const;

    FormalPowerSeries operator+(const FormalPowerSeries& g) const;
    FormalPowerSeries operator-(const FormalPowerSeries& g) const;
    FormalPowerSeries operator-() const;
    FormalPowerSeries operator*(const FormalPowerSeries& g) const;  // Cauchy product
    FormalPowerSeries operator*(const Rat& s) const;

    // multiply by z^k (shifts coefficients up, order unchanged)
    FormalPowerSeries shifted(int k) const;

  private:
    RatVec coeffs_;
};

inline FormalPowerSeries operator*(const Rat& s, const FormalPowerSeries& f) { return f * s; }

// 1/f; requires f[0] != 0 (throws ZeroConstantTerm).
FormalPowerSeries reciprocal(const FormalPowerSeries& f);

// f(g(z)); requires g[0] = 0 (throws NonzeroInnerConstant).
FormalPowerSeries compose(const FormalPowerSeries& f, const FormalPowerSeries& g);

// Functional inverse by Newton iteration on series: f(revert(f)) = z.
// Requires f[0] = 0 and f[1] != 0 (throws NotInvertible).
FormalPowerSeries revert(const FormalPowerSeries& f);

}  // namespace fm
