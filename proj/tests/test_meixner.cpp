#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fm/errors.hpp"
#include "fm/meixner.hpp"
#include "fm/operators.hpp"

using namespace fm;

TEST_CASE("classification") {
    CHECK(FreeMeixnerSpec(Rat(0), Rat(0)).case_tag() == MeixnerCase::semicircular);
    CHECK(FreeMeixnerSpec(Rat(1), Rat(0)).case_tag() == MeixnerCase::marchenko_pastur);
    CHECK(FreeMeixnerSpec(Rat(0), Rat(-1)).case_tag() == MeixnerCase::free_binomial);
    CHECK(FreeMeixnerSpec(Rat(0), Rat(-3, 4)).case_tag() == MeixnerCase::free_binomial);
    CHECK(FreeMeixnerSpec(Rat(2), Rat(1)).case_tag() == MeixnerCase::gamma_type);
    CHECK(FreeMeixnerSpec(Rat(0), Rat(1)).case_tag() == MeixnerCase::secant_type);
    CHECK(FreeMeixnerSpec(Rat(3), Rat(1)).case_tag() == MeixnerCase::negative_type);
    CHECK_THROWS_AS(FreeMeixnerSpec(Rat(0), Rat(-2)), InvalidC);
}

TEST_CASE("meixner_jacobi") {
    JacobiParameters sc = meixner_jacobi(FreeMeixnerSpec(Rat(0), Rat(0)), 10);
    for (const auto& b : sc.beta()) CHECK(b == 0);
    for (const auto& g : sc.gamma()) CHECK(g == 1);

    JacobiParameters mp = meixner_jacobi(FreeMeixnerSpec(Rat(1), Rat(0)), 10);
    CHECK(mp.beta()[0] == 0);
    CHECK(mp.beta()[1] == 1);
    CHECK(mp.beta()[2] == 1);
    for (const auto& g : mp.gamma()) CHECK(g == 1);

    JacobiParameters bern = meixner_jacobi(FreeMeixnerSpec(Rat(0), Rat(-1)), 10);
    CHECK(bern.terminated());
    CHECK(bern.gamma() == RatVec{Rat(1)});
}

TEST_CASE("mean and variance adjustment") {
    // variance 4 is a rational square: exact transport
    FreeMeixnerSpec spec(Rat(1), Rat(0), Rat(2), Rat(4));
    JacobiParameters j = meixner_jacobi(spec, 10);
    CHECK(j.beta()[0] == 2);
    CHECK(j.beta()[1] == 4);  // 2 * 1 + 2
    CHECK(j.gamma()[0] == 4);
    MomentSequence direct = meixner_moments(spec, 8);
    MomentSequence viaaffine =
        affine(meixner_moments(FreeMeixnerSpec(Rat(1), Rat(0)), 8), Rat(2), Rat(2));
    CHECK(direct == viaaffine);

    // canonical operator transports with the frame
    BochnerOperator op = canonical_operator(spec, 12);
    CHECK(check_cauchy_identity(op, 10).is_zero());

    // non-square variance requires b = 0
    CHECK_NOTHROW(meixner_jacobi(FreeMeixnerSpec(Rat(0), Rat(1), Rat(1), Rat(2)), 8));
    CHECK_THROWS_AS(meixner_jacobi(FreeMeixnerSpec(Rat(1), Rat(0), Rat(0), Rat(2)), 8),
                    InvalidScale);
}

TEST_CASE("canonical_operator") {
    BochnerOperator sc = canonical_operator(FreeMeixnerSpec(Rat(0), Rat(0)), 8);
    CHECK(sc.a == 1);
    CHECK(sc.b == 0);
    CHECK(sc.c == 0);
    CHECK(sc.d == 0);
    CHECK(sc.e == -1);

    // Marchenko-Pastur family: (1 + bx) L^2 - (b + x) L
    BochnerOperator mp = canonical_operator(FreeMeixnerSpec(Rat(3, 4), Rat(0)), 8);
    CHECK(mp.p() == Polynomial{Rat(1), Rat(3, 4)});
    CHECK(mp.q() == Polynomial{Rat(-3, 4), Rat(-1)});

    // Bernoulli family: (1 + bx - x^2) L^2 - (b - x) L, eigenvalues 1, 0
    BochnerOperator bern = canonical_operator(FreeMeixnerSpec(Rat(1, 2), Rat(-1)), 8);
    CHECK(bern.p() == Polynomial{Rat(1), Rat(1, 2), Rat(-1)});
    CHECK(bern.q() == Polynomial{Rat(-1, 2), Rat(1)});
    CHECK(bern.eigenvalue_ladder(1) == 1);
    CHECK(bern.eigenvalue_ladder(2) == 0);

    CHECK_THROWS_AS(canonical_operator(FreeMeixnerSpec(Rat(1), Rat(-1, 2)), 8), NoOperator);
    CHECK_NOTHROW(canonical_operator(FreeMeixnerSpec(Rat(0), Rat(-1, 2)), 8));
}

TEST_CASE("canonical coefficients span the nullspace, eigenvalue sign") {
    for (const Rat& b : {Rat(-1), Rat(0), Rat(1, 2)}) {
        for (const Rat& c : {Rat(-3, 4), Rat(0), Rat(2)}) {
            MomentSequence m = meixner_moments(FreeMeixnerSpec(b, c), 16);
            CHECK(in_nullspace({m, m}, {Rat(1), b, c, -b, -(1 + 2 * c)}, 8));
            // c + e = -(1 + c) <= 0 for c >= -1
            CHECK(sgn(c + (-(1 + 2 * c))) <= 0);
        }
    }
}

TEST_CASE("density_and_atoms") {
    DensitySpec sc = density_and_atoms(FreeMeixnerSpec(Rat(0), Rat(0)));
    CHECK(sc.has_ac);
    CHECK(sc.atoms.empty());
    CHECK(sc.support_lo == QuadExt(Rat(-2)));
    CHECK(sc.support_hi == QuadExt(Rat(2)));
    CHECK(sc.density(0.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-12));

    // Marchenko-Pastur alpha = 1/2: atom of weight 1/2 at the origin
    DensitySpec mp = density_from_coefficients(marchenko_pastur_coeffs(Rat(1, 2)));
    REQUIRE(mp.atoms.size() == 1);
    CHECK(mp.atoms[0].location == QuadExt(Rat(0)));
    CHECK(mp.atoms[0].weight == QuadExt(Rat(1, 2)));
    // and alpha = 2 has none
    CHECK(density_from_coefficients(marchenko_pastur_coeffs(Rat(2))).atoms.empty());

    // free binomial alpha = beta = 1 is the arcsine law on [0, 1]
    DensitySpec arc = density_from_coefficients(free_binomial_coeffs(Rat(1), Rat(1)));
    CHECK(arc.atoms.empty());
    CHECK(arc.support_lo == QuadExt(Rat(0)));
    CHECK(arc.support_hi == QuadExt(Rat(1)));
    CHECK(arc.density(0.5) == doctest::Approx(2.0 / M_PI).epsilon(1e-12));

    // c = -1: no ac part, two atoms of weight 1/2 at +-1
    DensitySpec bern = density_and_atoms(FreeMeixnerSpec(Rat(0), Rat(-1)));
    CHECK(!bern.has_ac);
    REQUIRE(bern.atoms.size() == 2);
    CHECK(bern.atoms[0].location == QuadExt(Rat(-1)));
    CHECK(bern.atoms[0].weight == QuadExt(Rat(1, 2)));
    CHECK(bern.atoms[1].location == QuadExt(Rat(1)));

    // case vi carries at most one atom
    DensitySpec neg = density_and_atoms(FreeMeixnerSpec(Rat(3), Rat(1)));
    CHECK(neg.atoms.size() == 1);

    // case iii with two irrational atoms of exact weight 1/3
    DensitySpec fb = density_and_atoms(FreeMeixnerSpec(Rat(0), Rat(-3, 4)));
    REQUIRE(fb.atoms.size() == 2);
    CHECK(fb.atoms[0].weight == QuadExt(Rat(1, 3)));
    CHECK(fb.atoms[1].weight == QuadExt(Rat(1, 3)));
    CHECK(fb.atoms[1].location.value() == doctest::Approx(2.0 / std::sqrt(3.0)));
}

TEST_CASE("conjugate_variable") {
    RationalFunction sc = conjugate_variable(FreeMeixnerSpec(Rat(0), Rat(0)));
    CHECK(sc.num == Polynomial::monomial(1));
    CHECK(sc.den == Polynomial::one());

    // general -q/p form
    Rat b(1, 2), c(2);
    RationalFunction h = conjugate_variable(FreeMeixnerSpec(b, c));
    CHECK(h.num == Polynomial{b, 1 + 2 * c});
    CHECK(h.den == Polynomial{Rat(1), b, c});

    // gamma-type case in its own frame: H(y) = (2 + alpha)/y - 1/y^2 with
    // alpha = 1 for the normalized (b, c) = (2, 1); the frame shift is y = x + 1.
    RationalFunction g = conjugate_variable(FreeMeixnerSpec(Rat(2), Rat(1)));
    Polynomial y_minus_1{Rat(-1), Rat(1)};
    Polynomial y2 = Polynomial::monomial(2);
    Polynomial display{Rat(-1), Rat(3)};  // (2 + alpha) y - 1, alpha = 1
    // g.num(y-1) * y^2 == display * g.den(y-1), checked as polynomials
    auto substitute = [](const Polynomial& p, const Polynomial& inner) {
        Polynomial acc;
        for (int k = p.degree(); k >= 0; --k) acc = acc * inner + Polynomial(p[k]);
        return acc;
    };
    CHECK(substitute(g.num, y_minus_1) * y2 == display * substitute(g.den, y_minus_1));

    // secant-type (0, 1): H = 3x/(1 + x^2), matching ((2+alpha)x - beta)/(1+x^2)
    RationalFunction s = conjugate_variable(FreeMeixnerSpec(Rat(0), Rat(1)));
    CHECK(s.num == Polynomial{Rat(0), Rat(3)});
    CHECK(s.den == Polynomial{Rat(1), Rat(0), Rat(1)});
}

TEST_CASE("moments_from_coefficients agrees with the Jacobi route") {
    // standard Marchenko-Pastur(1/2): Jacobi (1/2; 3/2, 3/2, ...), (1/2; 1/2, ...)
    RatVec beta{Rat(1, 2)}, gamma;
    for (int i = 0; i < 8; ++i) {
        beta.push_back(Rat(3, 2));
        gamma.push_back(Rat(1, 2));
    }
    MomentSequence viajacobi = jacobi_to_moments(JacobiParameters(beta, gamma), 12);
    MomentSequence viarec = moments_from_coefficients(marchenko_pastur_coeffs(Rat(1, 2)), 12);
    CHECK(viajacobi == viarec);
    CHECK(viarec[1] == Rat(1, 2));
    CHECK(viarec[2] == Rat(3, 4));
}

TEST_CASE("meixner jacobi round trip on the grid") {
    for (const Rat& b : {Rat(-1), Rat(0), Rat(2)}) {
        for (const Rat& c : {Rat(-3, 4), Rat(0), Rat(1), Rat(3)}) {
            JacobiParameters j = meixner_jacobi(FreeMeixnerSpec(b, c), 16);
            JacobiParameters back = moments_to_jacobi(jacobi_to_moments(j, 16));
            for (size_t i = 0; i < back.beta().size() && i < 8; ++i)
                CHECK(back.beta()[i] == j.beta()[i]);
            for (size_t i = 0; i < back.gamma().size() && i < 8; ++i)
                CHECK(back.gamma()[i] == j.gamma()[i]);
        }
    }
}
