#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fm/errors.hpp"
#include "fm/meixner.hpp"
#include "fm/operators.hpp"
#include "fm/polysys.hpp"

using namespace fm;

namespace {

JacobiParameters random_jacobi(std::mt19937_64& gen, int levels) {
    std::uniform_int_distribution<long> bn(-8, 8), bd(1, 4), gn(1, 12), gd(1, 4);
    RatVec beta, gamma;
    for (int i = 0; i <= levels; ++i) beta.push_back(rat(bn(gen), bd(gen)));
    for (int i = 0; i < levels; ++i) gamma.push_back(rat(gn(gen), gd(gen)));
    return JacobiParameters(std::move(beta), std::move(gamma));
}

}  // namespace

TEST_CASE("orthogonal_polys") {
    JacobiParameters sc = meixner_jacobi(FreeMeixnerSpec(Rat(0), Rat(0)), 12);
    PolynomialSystem P = orthogonal_polys(sc, 3);
    CHECK(P[2] == Polynomial{Rat(-1), Rat(0), Rat(1)});
    CHECK(P[3] == Polynomial{Rat(0), Rat(-2), Rat(0), Rat(1)});

    PolynomialSystem D = orthogonal_polys(JacobiParameters({Rat(2, 5)}, {}), 1);
    CHECK(D[1] == Polynomial{Rat(-2, 5), Rat(1)});

    JacobiParameters mx = meixner_jacobi(FreeMeixnerSpec(Rat(3), Rat(1)), 12);
    CHECK(orthogonal_polys(mx, 2)[2] == Polynomial{Rat(-1), Rat(-3), Rat(1)});

    for (int n = 0; n <= 3; ++n) CHECK(P[n].degree() == n);
}

TEST_CASE("functional and inner_product") {
    MomentSequence sc = meixner_moments(FreeMeixnerSpec(Rat(0), Rat(0)), 16);
    CHECK(functional(sc, Polynomial::one()) == 1);
    CHECK(functional(sc, Polynomial::monomial(4)) == 2);

    PolynomialSystem P = orthogonal_polys(moments_to_jacobi(sc), 6);
    for (int n = 1; n <= 6; ++n) CHECK(functional(sc, P[n]) == 0);

    CHECK(inner_product(sc, P[2], P[3]) == 0);
    CHECK(inner_product(sc, P[2], P[2]) == 1);  // gamma_1 gamma_2 = 1

    MomentSequence m01 = meixner_moments(FreeMeixnerSpec(Rat(0), Rat(1)), 16);
    PolynomialSystem Q = orthogonal_polys(moments_to_jacobi(m01), 4);
    CHECK(inner_product(m01, Q[3], Q[3]) == 4);  // 1 * 2 * 2

    CHECK_THROWS_AS(functional(MomentSequence::point_mass(Rat(1), 2), Polynomial::monomial(5)),
                    InsufficientMoments);
}

TEST_CASE("cfree_appell basics") {
    MomentSequence sc = meixner_moments(FreeMeixnerSpec(Rat(0), Rat(0)), 12);
    PolynomialSystem A = cfree_appell({sc, sc}, 4);
    CHECK(A[2] == Polynomial{Rat(-1), Rat(0), Rat(1)});

    // nu = delta_0 turns L_nu into the divided-difference at 0
    MomentSequence d0 = MomentSequence::point_mass(Rat(0), 12);
    std::mt19937_64 gen(3);
    MomentSequence mu = jacobi_to_moments(random_jacobi(gen, 8), 12);
    PolynomialSystem B = cfree_appell({mu, d0}, 5);
    CHECK(B[1] == Polynomial{-mu[1], Rat(1)});
    for (int n = 1; n <= 5; ++n) {
        CHECK(apply_L(d0, B[n]) == B[n - 1]);
        CHECK(functional(mu, B[n]) == 0);
    }
}

TEST_CASE("appell defining relations on random pairs") {
    std::mt19937_64 gen(20260809);
    for (int trial = 0; trial < 10; ++trial) {
        MeasurePair pair{jacobi_to_moments(random_jacobi(gen, 10), 16),
                         jacobi_to_moments(random_jacobi(gen, 10), 16)};
        PolynomialSystem A = cfree_appell(pair, 8);
        for (int n = 1; n <= 8; ++n) {
            CHECK(apply_L(pair.nu, A[n]) == A[n - 1]);
            CHECK(functional(pair.mu, A[n]) == 0);
        }
    }
}

TEST_CASE("appell orthogonality holds only for shifted semicircular nu") {
    // nu semicircular, mu = Phi_{beta,gamma}[nu]: orthogonal
    RatVec sb(12, Rat(1, 2)), sg(11, Rat(2));
    JacobiParameters jnu(sb, sg);
    JacobiParameters jmu = phi_shift(jnu, Rat(-1), Rat(3));
    MeasurePair pair{jacobi_to_moments(jmu, 16), jacobi_to_moments(jnu, 16)};
    PolynomialSystem A = cfree_appell(pair, 6);
    for (int n = 1; n <= 6; ++n)
        for (int m = 0; m < n; ++m) CHECK(inner_product(pair.mu, A[n], A[m]) == 0);

    // nu = Marchenko-Pastur(1) (free Poisson): some pair fails
    RatVec pb{Rat(1)}, pg;
    for (int i = 0; i < 10; ++i) {
        pb.push_back(Rat(2));
        pg.push_back(Rat(1));
    }
    JacobiParameters jpois(pb, pg);
    MeasurePair poisson{jacobi_to_moments(phi_shift(jpois, Rat(0), Rat(1)), 12),
                        jacobi_to_moments(jpois, 12)};
    PolynomialSystem B = cfree_appell(poisson, 4);
    bool found = false;
    for (int n = 1; n <= 4 && !found; ++n)
        for (int m = 0; m < n && !found; ++m)
            if (inner_product(poisson.mu, B[n], B[m]) != 0) found = true;
    CHECK(found);
}

TEST_CASE("orthogonality and norm identity on random measures") {
    std::mt19937_64 gen(42);
    for (int trial = 0; trial < 10; ++trial) {
        JacobiParameters j = random_jacobi(gen, 9);
        MomentSequence m = jacobi_to_moments(j, 18);
        PolynomialSystem P = orthogonal_polys(j, 8);
        for (int n = 1; n <= 8; ++n) {
            for (int k = 0; k < n; ++k) CHECK(inner_product(m, P[n], P[k]) == 0);
            Rat norm(1);
            for (int i = 1; i <= n; ++i) norm *= j.gamma_at(i);
            CHECK(inner_product(m, P[n], P[n]) == norm);
        }
    }
}
