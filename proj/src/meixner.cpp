#include "fm/meixner.hpp"

#include <algorithm>
#include <cmath>

#include "fm/errors.hpp"

namespace fm {

const char* case_name(MeixnerCase c) {
    switch (c) {
        case MeixnerCase::semicircular: return "semicircular";
        case MeixnerCase::marchenko_pastur: return "marchenko_pastur";
        case MeixnerCase::free_binomial: return "free_binomial";
        case MeixnerCase::gamma_type: return "gamma_type";
        case MeixnerCase::secant_type: return "secant_type";
        case MeixnerCase::negative_type: return "negative_type";
    }
    return "?";
}

namespace {

MeixnerCase classify(const Rat& b, const Rat& c) {
    if (c == 0) return b == 0 ? MeixnerCase::semicircular : MeixnerCase::marchenko_pastur;
    if (sgn(c) < 0) return MeixnerCase::free_binomial;
    Rat disc = b * b - 4 * c;
    if (disc == 0) return MeixnerCase::gamma_type;
    return sgn(disc) < 0 ? MeixnerCase::secant_type : MeixnerCase::negative_type;
}

// Scale of the affine frame: sqrt(variance), exact or InvalidScale.
Rat frame_scale(const FreeMeixnerSpec& spec) {
    Rat s;
    if (rational_sqrt(spec.variance, s)) return s;
    if (spec.b == 0) return Rat(0);  // unused: betas are constant `mean`
    throw InvalidScale();
}

}  // namespace

FreeMeixnerSpec::FreeMeixnerSpec(Rat b_, Rat c_, Rat mean_, Rat variance_)
    : b(std::move(b_)), c(std::move(c_)), mean(std::move(mean_)), variance(std::move(variance_)) {
    if (c < -1) throw InvalidC();
    if (sgn(variance) <= 0) throw Error("variance must be positive");
    tag_ = classify(b, c);
}

JacobiParameters meixner_jacobi(const FreeMeixnerSpec& spec, int depth) {
    int levels = depth / 2 + 1;
    RatVec beta(levels + 1, Rat(0)), gamma(levels, Rat(1) + spec.c);
    for (int i = 1; i <= levels; ++i) beta[i] = spec.b;
    gamma[0] = 1;
    if (!spec.normalized()) {
        Rat s = frame_scale(spec);  // x -> s x + mean
        for (auto& g : gamma) g *= spec.variance;
        for (auto& bb : beta) bb = s * bb + spec.mean;
    }
    return JacobiParameters(std::move(beta), std::move(gamma));
}

MomentSequence meixner_moments(const FreeMeixnerSpec& spec, int depth) {
    return jacobi_to_moments(meixner_jacobi(spec, depth), depth);
}

BochnerOperator canonical_operator(const FreeMeixnerSpec& spec, int moment_depth) {
    if (spec.c == Rat(-1, 2) && spec.b != 0) throw NoOperator();
    Rat a(1), b = spec.b, c = spec.c;
    Rat d = -spec.b, e = -(1 + 2 * spec.c);
    if (!spec.normalized()) {
        // p'(x) = s^2 p((x-t)/s), q'(x) = s q((x-t)/s) keeps the c and e slots
        Rat s = frame_scale(spec);
        const Rat& t = spec.mean;
        Rat a2 = spec.variance * a - s * b * t + c * t * t;
        Rat b2 = s * b - 2 * c * t;
        Rat d2 = s * d - e * t;
        a = a2;
        b = b2;
        d = d2;
    }
    return BochnerOperator{a, b, c, d, e, meixner_moments(spec, moment_depth), std::nullopt};
}

double DensitySpec::density(double x) const {
    if (!has_ac) return 0.0;
    double r = to_double(radicand[0]) + to_double(radicand[1]) * x + to_double(radicand[2]) * x * x;
    if (r <= 0) return 0.0;
    double den = to_double(denominator[0]) + to_double(denominator[1]) * x +
                 to_double(denominator[2]) * x * x;
    return std::sqrt(r) / (2.0 * M_PI * std::abs(den));
}

DensitySpec density_from_coefficients(const RatVec& k) {
    const Rat &a = k[0], &b = k[1], &c = k[2], &d = k[3], &e = k[4];
    DensitySpec ds;
    // disc(x) = (d + e x)^2 + 4 (c + e)(a + b x + c x^2) is a quadratic with
    // leading coefficient (e + 2c)^2; the ac density is sqrt(-disc)/2pi|p|.
    Rat r2 = -(e * e + 4 * c * (c + e));
    Rat r1 = -(2 * d * e + 4 * (c + e) * b);
    Rat r0 = -(d * d + 4 * (c + e) * a);
    ds.radicand = {r0, r1, r2};
    ds.denominator = {a, b, c};

    const Rat e2c = e + 2 * c;
    if (e2c == 0) throw Error("degenerate coefficient vector: e + 2c = 0");

    QuadExt branch_ref;  // sign reference for the square-root branch of G
    Rat rad_disc = r1 * r1 - 4 * r2 * r0;  // radicand has real roots iff >= 0
    if (r2 != 0 && sgn(rad_disc) > 0) {
        QuadExt s = QuadExt::sqrt_of(rad_disc);
        QuadExt lo = (QuadExt(-r1) - s) / QuadExt(2 * r2);
        QuadExt hi = (QuadExt(-r1) + s) / QuadExt(2 * r2);
        if (lo.value() > hi.value()) std::swap(lo, hi);
        ds.support_lo = lo;
        ds.support_hi = hi;
        ds.has_ac = true;
        branch_ref = lo;  // anything in [lo, hi] works: roots of p never lie inside
    } else {
        // no ac part; -disc is a perfect square and the branch flips at its root
        ds.has_ac = false;
        branch_ref = QuadExt(-r1) / QuadExt(2 * r2 != 0 ? 2 * r2 : Rat(1));
        if (r2 == 0) branch_ref = QuadExt(Rat(0));
    }

    // Candidate atoms at the real roots of p outside the support. At a simple
    // root the branch of sqrt(disc) equals sign(q(x0)) * |q(x0)| exactly when
    // the residue -q(x0)/p'(x0) survives; the branch sign is +-sign(e+2c) to
    // the left/right of the reference cut.
    std::vector<QuadExt> roots;
    if (c != 0) {
        Rat pd = b * b - 4 * a * c;
        if (sgn(pd) > 0) {
            QuadExt s = QuadExt::sqrt_of(pd);
            roots.push_back((QuadExt(-b) - s) / QuadExt(2 * c));
            roots.push_back((QuadExt(-b) + s) / QuadExt(2 * c));
        }
        // double root of p: no atom
    } else if (b != 0) {
        roots.push_back(QuadExt(-a / b));
    }
    for (const auto& x0 : roots) {
        bool on_right;
        if (ds.has_ac) {
            if (x0.value() >= ds.support_lo.value() && x0.value() <= ds.support_hi.value())
                continue;  // boundary-degenerate; carries no mass
            on_right = x0.value() > ds.support_hi.value();
        } else {
            on_right = x0.value() > branch_ref.value();
        }
        int sigma = on_right ? -sign(e2c) : sign(e2c);
        QuadExt qx = QuadExt(d) + QuadExt(e) * x0;
        double qv = qx.value();
        if (qv == 0) continue;
        if (sigma != (qv > 0 ? 1 : -1)) continue;  // branch cancels the pole
        QuadExt pprime = QuadExt(b) + QuadExt(2 * c) * x0;
        QuadExt w = -(qx / pprime);
        if (w.value() > 0) ds.atoms.push_back({x0, w});
    }
    std::sort(ds.atoms.begin(), ds.atoms.end(),
              [](const Atom& u, const Atom& v) { return u.location.value() < v.location.value(); });
    return ds;
}

DensitySpec density_and_atoms(const FreeMeixnerSpec& spec) {
    BochnerOperator op = canonical_operator(spec, 4);
    return density_from_coefficients({op.a, op.b, op.c, op.d, op.e});
}

RationalFunction conjugate_from_coefficients(const RatVec& k) {
    return RationalFunction{Polynomial{-k[3], -k[4]}, Polynomial{k[0], k[1], k[2]}};
}

RationalFunction conjugate_variable(const FreeMeixnerSpec& spec) {
    BochnerOperator op = canonical_operator(spec, 4);
    return conjugate_from_coefficients({op.a, op.b, op.c, op.d, op.e});
}

MomentSequence moments_from_coefficients(const RatVec& k, int depth) {
    const Rat &a = k[0], &b = k[1], &c = k[2], &d = k[3], &e = k[4];
    Rat pivot = 2 * c + e;
    if (pivot == 0) throw Error("moment recursion needs 2c + e != 0");
    RatVec m(depth + 1, Rat(0));
    m[0] = 1;
    for (int n = 1; n <= depth; ++n) {
        Rat acc(0);
        for (int i = 0; i + 2 <= n; ++i) acc += a * m[i] * m[n - 2 - i];
        for (int i = 0; i + 1 <= n; ++i) acc += b * m[i] * m[n - 1 - i];
        for (int i = 1; i <= n - 1; ++i) acc += c * m[i] * m[n - i];
        acc += d * m[n - 1];
        m[n] = -acc / pivot;
    }
    return MomentSequence(std::move(m));
}

ClosedFormMeasure closed_form_measure(std::string label, RatVec coeffs, int depth) {
    ClosedFormMeasure cf;
    cf.label = std::move(label);
    cf.density = density_from_coefficients(coeffs);
    cf.conjugate = conjugate_from_coefficients(coeffs);
    cf.moments = moments_from_coefficients(coeffs, depth);
    cf.coeffs = std::move(coeffs);
    return cf;
}

ClosedFormMeasure closed_form_measure(const FreeMeixnerSpec& spec, int depth) {
    BochnerOperator op = canonical_operator(spec, depth);
    ClosedFormMeasure cf;
    cf.label = std::string(case_name(spec.case_tag()));
    cf.coeffs = {op.a, op.b, op.c, op.d, op.e};
    cf.density = density_from_coefficients(cf.coeffs);
    cf.conjugate = conjugate_from_coefficients(cf.coeffs);
    cf.moments = op.mu;
    return cf;
}

RatVec marchenko_pastur_coeffs(const Rat& alpha) {
    return {Rat(0), Rat(1), Rat(0), alpha - 1, Rat(-1)};
}

RatVec free_binomial_coeffs(const Rat& alpha, const Rat& beta) {
    return {Rat(0), Rat(1), Rat(-1), alpha - 1, 2 - alpha - beta};
}

}  // namespace fm
