#pragma once

// The free Meixner family: construction from (b, c, mean, variance), the
// six-case classification, canonical Bochner operators, closed-form densities
// with atoms, and conjugate variables.
//
// Measures whose Cauchy transform satisfies the quadratic identity
//   (a + b z + c z^2) G^2 + (d + e z) G - (c + e) = 0
// are also handled directly through their coefficient vector (a,b,c,d,e);
// this covers affine frames such as the standard Marchenko-Pastur and free
// binomial laws whose normalized (b, c) parameters are irrational.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fm/measures.hpp"
#include "fm/operators.hpp"
#include "fm/polynomial.hpp"
#include "fm/quadext.hpp"

namespace fm {

enum class MeixnerCase {
    semicircular,      // i:   b = c = 0
    marchenko_pastur,  // ii:  c = 0, b != 0
    free_binomial,     // iii: -1 <= c < 0
    gamma_type,        // iv:  c > 0, b^2 = 4c
    secant_type,       // v:   c > 0, b^2 < 4c
    negative_type,     // vi:  c > 0, b^2 > 4c
};

const char* case_name(MeixnerCase c);

struct FreeMeixnerSpec {
    Rat b, c;
    Rat mean{0}, variance{1};

    FreeMeixnerSpec(Rat b_, Rat c_, Rat mean_ = Rat(0), Rat variance_ = Rat(1));

    MeixnerCase case_tag() const { return tag_; }
    bool normalized() const { return mean == 0 && variance == 1; }

  private:
    MeixnerCase tag_;
};

// Jacobi parameters {(0,b,b,...),(1,1+c,...)} in normalized coordinates,
// affine-adjusted for mean/variance. The adjustment scales beta by
// sqrt(variance); it is exact when the variance is a rational square or
// b = 0, and throws InvalidScale otherwise.
JacobiParameters meixner_jacobi(const FreeMeixnerSpec& spec, int depth);

MomentSequence meixner_moments(const FreeMeixnerSpec& spec, int depth);

// The unique-up-to-scale coefficients p = 1 + b x + c x^2,
// q = -(b + (1+2c) x) in normalized coordinates, transported to the spec's
// frame. Throws NoOperator on the excluded stripe c = -1/2, b != 0.
BochnerOperator canonical_operator(const FreeMeixnerSpec& spec, int moment_depth = 32);

struct Atom {
    QuadExt location;
    QuadExt weight;
};

struct DensitySpec {
    // absolutely continuous part: sqrt(radicand(x)_+) / (2 pi |denominator(x)|)
    std::array<Rat, 3> radicand;     // ascending coefficients, opens downward
    std::array<Rat, 3> denominator;  // p(x) = a + b x + c x^2
    bool has_ac = false;
    QuadExt support_lo, support_hi;
    std::vector<Atom> atoms;

    double density(double x) const;
};

// Density and atoms of the measure with Cauchy coefficient vector
// (a, b, c, d, e). Atom weights are residues of the closed-form G: at a
// simple root x0 of p outside the support the weight is -q(x0)/p'(x0) on the
// non-cancelling branch; double roots carry no atom.
DensitySpec density_from_coefficients(const RatVec& coeffs);

DensitySpec density_and_atoms(const FreeMeixnerSpec& spec);

// Conjugate variable H = -q/p as a rational function (numerator, denominator).
struct RationalFunction {
    Polynomial num, den;
    double eval(double x) const { return num.eval(x) / den.eval(x); }
};

RationalFunction conjugate_variable(const FreeMeixnerSpec& spec);
RationalFunction conjugate_from_coefficients(const RatVec& coeffs);

// Moment sequence of the coefficient-vector measure, from the moment
// recursion (needs 2c + e != 0).
MomentSequence moments_from_coefficients(const RatVec& coeffs, int depth);

// A measure with closed-form Cauchy transform, bundled for the numeric layer.
struct ClosedFormMeasure {
    std::string label;
    RatVec coeffs;  // (a, b, c, d, e)
    MomentSequence moments;
    DensitySpec density;
    RationalFunction conjugate;
};

ClosedFormMeasure closed_form_measure(std::string label, RatVec coeffs, int depth = 32);
ClosedFormMeasure closed_form_measure(const FreeMeixnerSpec& spec, int depth = 32);

// Named frames used by the numeric and random-matrix layers.
RatVec marchenko_pastur_coeffs(const Rat& alpha);            // (0, 1, 0, alpha-1, -1)
RatVec free_binomial_coeffs(const Rat& alpha, const Rat& beta);  // (0, 1, -1, alpha-1, 2-alpha-beta)

}  // namespace fm
