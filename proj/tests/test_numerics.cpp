#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fm/errors.hpp"
#include "fm/meixner.hpp"
#include "fm/numerics.hpp"

using namespace fm;

TEST_CASE("gauss_rule") {
    JacobiParameters sc = meixner_jacobi(FreeMeixnerSpec(Rat(0), Rat(0)), 16);
    QuadratureRule two = gauss_rule(sc, 2);
    REQUIRE(two.nodes.size() == 2);
    CHECK(two.nodes[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(two.nodes[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(two.weights[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(two.weights[1] == doctest::Approx(0.5).epsilon(1e-12));

    QuadratureRule point = gauss_rule(JacobiParameters({Rat(2, 3)}, {}), 1);
    CHECK(point.nodes[0] == doctest::Approx(2.0 / 3).epsilon(1e-14));
    CHECK(point.weights[0] == doctest::Approx(1.0).epsilon(1e-14));

    QuadratureRule three = gauss_rule(sc, 3);
    double m4 = 0;
    for (size_t i = 0; i < three.nodes.size(); ++i)
        m4 += three.weights[i] * std::pow(three.nodes[i], 4);
    CHECK(m4 == doctest::Approx(2.0).epsilon(1e-10));

    CHECK_THROWS_AS(gauss_rule(JacobiParameters({Rat(0), Rat(0)}, {Rat(0)}), 2),
                    DegenerateJacobi);
}

TEST_CASE("gauss rule integrates x^k exactly for k <= 2n-1") {
    for (const Rat& b : {Rat(0), Rat(1, 2)}) {
        for (const Rat& c : {Rat(0), Rat(1)}) {
            FreeMeixnerSpec spec(b, c);
            JacobiParameters j = meixner_jacobi(spec, 24);
            MomentSequence m = meixner_moments(spec, 24);
            for (int n : {4, 8}) {
                QuadratureRule rule = gauss_rule(j, n);
                double wsum = 0;
                for (double w : rule.weights) wsum += w;
                CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));
                for (int k = 1; k <= 2 * n - 1; ++k) {
                    double acc = 0, scale = 0;
                    for (size_t i = 0; i < rule.nodes.size(); ++i) {
                        acc += rule.weights[i] * std::pow(rule.nodes[i], k);
                        scale += rule.weights[i] * std::pow(std::abs(rule.nodes[i]), k);
                    }
                    double exact = to_double(m[k]);
                    // cancelling odd moments bound the attainable precision by
                    // the conditioning scale mu[|x|^k], not |mu[x^k]|
                    double tol = 1e-10 * std::max(1.0, scale);
                    CHECK(std::abs(acc - exact) < tol);
                }
            }
        }
    }
}

TEST_CASE("total_mass") {
    CHECK(total_mass(density_and_atoms(FreeMeixnerSpec(Rat(0), Rat(0)))) ==
          doctest::Approx(1.0).epsilon(1e-8));

    DensitySpec mp = density_from_coefficients(marchenko_pastur_coeffs(Rat(1, 2)));
    double ac = ac_integral(mp, [](double) { return 1.0; });
    CHECK(ac == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(total_mass(mp) == doctest::Approx(1.0).epsilon(1e-7));

    DensitySpec fb = density_from_coefficients(free_binomial_coeffs(Rat(3, 2), Rat(3, 2)));
    CHECK(fb.atoms.empty());
    CHECK(total_mass(fb) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("density moments match exact moments") {
    ClosedFormMeasure cf = closed_form_measure(FreeMeixnerSpec(Rat(2), Rat(1)));
    for (int k = 1; k <= 4; ++k)
        CHECK(density_moment(cf.density, k) ==
              doctest::Approx(to_double(cf.moments[k])).epsilon(1e-8));
}

TEST_CASE("check_conjugate") {
    ClosedFormMeasure sc = closed_form_measure(FreeMeixnerSpec(Rat(0), Rat(0)));
    CHECK(check_conjugate(sc, 2) < 1e-8);
    CHECK(check_conjugate(sc, 4) < 1e-6);

    // gamma-type representative, k = 3 (conjugate variable (2+alpha)/x - 1/x^2
    // in its own frame; -q/p here)
    ClosedFormMeasure gamma = closed_form_measure(FreeMeixnerSpec(Rat(2), Rat(1)));
    CHECK(check_conjugate(gamma, 3) < 1e-6);

    ClosedFormMeasure mp = closed_form_measure("mp(1/2)", marchenko_pastur_coeffs(Rat(1, 2)));
    CHECK_THROWS_AS(check_conjugate(mp, 2), AtomPresent);
}

TEST_CASE("check_A_symmetry") {
    ClosedFormMeasure sc = closed_form_measure(FreeMeixnerSpec(Rat(0), Rat(0)));
    Polynomial x = Polynomial::monomial(1);
    CHECK(check_A_symmetry(sc, x, x) < 1e-8);
    CHECK(check_A_symmetry(sc, Polynomial::one(), Polynomial::monomial(3)) < 1e-8);

    // Marchenko-Pastur alpha = 2 is atom-free
    ClosedFormMeasure mp2 = closed_form_measure("mp(2)", marchenko_pastur_coeffs(Rat(2)));
    CHECK(check_A_symmetry(mp2, Polynomial::monomial(2), Polynomial::monomial(3)) < 1e-6);
}

TEST_CASE("cdf table") {
    CdfTable F(density_and_atoms(FreeMeixnerSpec(Rat(0), Rat(0))));
    CHECK(F(-2.5) == 0.0);
    CHECK(F(0.0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(F(2.5) == doctest::Approx(1.0).epsilon(1e-9));

    CdfTable M(density_from_coefficients(marchenko_pastur_coeffs(Rat(1, 2))));
    CHECK(M(0.0) == doctest::Approx(0.5).epsilon(1e-9));       // atom included
    CHECK(M.left_limit(0.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(M(3.0) == doctest::Approx(1.0).epsilon(1e-7));
}
