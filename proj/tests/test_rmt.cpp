#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fm/errors.hpp"
#include "fm/meixner.hpp"
#include "fm/numerics.hpp"
#include "fm/rmt.hpp"

using namespace fm;

TEST_CASE("determinism: same seed, bitwise-equal spectra") {
    EnsembleSample a = sample_gue(64, 1234), b = sample_gue(64, 1234);
    CHECK(a.eigenvalues == b.eigenvalues);
    EnsembleSample c = sample_jacobi_ensemble(32, 24, 24, 99);
    EnsembleSample d = sample_jacobi_ensemble(32, 24, 24, 99);
    CHECK(c.eigenvalues == d.eigenvalues);
}

TEST_CASE("sampled matrices are exactly Hermitian") {
    Eigen::MatrixXcd x = detail::gue_matrix(48, 7);
    CHECK((x - x.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("wishart edge cases") {
    EnsembleSample zero = sample_wishart(16, 0, 5);
    for (double ev : zero.eigenvalues) CHECK(ev == 0.0);
    CHECK_THROWS_AS(sample_wishart(8, 9, 5), RankTooLarge);

    EnsembleSample w = sample_wishart(64, 32, 5);
    for (double ev : w.eigenvalues) CHECK(ev >= -1e-10);
    // rank <= 32 forces at least 32 exact kernel eigenvalues
    int zeros = 0;
    for (double ev : w.eigenvalues) zeros += std::abs(ev) < 1e-9;
    CHECK(zeros >= 32);
}

TEST_CASE("jacobi ensemble support and boundary") {
    EnsembleSample j = sample_jacobi_ensemble(48, 36, 36, 11);
    for (double ev : j.eigenvalues) {
        CHECK(ev >= -1e-10);
        CHECK(ev <= 1 + 1e-10);
    }
    // k1 + k2 = n boundary still lands in [0, 1]
    EnsembleSample edge = sample_jacobi_ensemble(32, 16, 16, 3);
    for (double ev : edge.eigenvalues) {
        CHECK(ev >= -1e-10);
        CHECK(ev <= 1 + 1e-10);
    }
    CHECK_THROWS_AS(sample_jacobi_ensemble(32, 8, 8, 3), SingularSum);
}

TEST_CASE("ks_distance") {
    DensitySpec sc = density_and_atoms(FreeMeixnerSpec(Rat(0), Rat(0)));
    CdfTable F(sc);

    // a perfect pseudo-sample from the limit itself: inverse-CDF quantiles.
    // (Equal-weight Gauss nodes are no good here: orthogonal-polynomial zeros
    // equidistribute to the arcsine law, KS -> 1/2pi against the semicircle.)
    const int n = 40;
    EnsembleSample pseudo;
    for (int i = 0; i < n; ++i) {
        double q = (i + 0.5) / n;
        double lo = -2, hi = 2;
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (lo + hi);
            (F(mid) < q ? lo : hi) = mid;
        }
        pseudo.eigenvalues.push_back(0.5 * (lo + hi));
    }
    CHECK(ks_distance(pseudo, F) < 1.0 / n + 0.02);

    // empty sample: distance 1 by convention
    EnsembleSample empty;
    CHECK(ks_distance(empty, F) == 1.0);

    // mismatched pair separates cleanly
    CdfTable mp(density_from_coefficients(marchenko_pastur_coeffs(Rat(1, 2))));
    CHECK(ks_distance(sample_gue(512, 42), mp) > 0.2);
    CHECK(ks_distance(sample_gue(512, 42), F) < 0.06);
}

TEST_CASE("gue n = 1 is a single gaussian draw") {
    EnsembleSample s = sample_gue(1, 31337);
    CHECK(s.eigenvalues.size() == 1);
    CHECK(std::abs(s.eigenvalues[0]) < 6.0);
}

TEST_CASE("gue normalized trace concentrates at zero") {
    double worst = 0;
    for (int t = 0; t < 10; ++t) {
        EnsembleSample s = sample_gue(128, 500 + t);
        double tr = 0;
        for (double ev : s.eigenvalues) tr += ev;
        worst = std::max(worst, std::abs(tr / 128));
    }
    CHECK(worst < 0.1);
}

TEST_CASE("wishart spectrum matches Marchenko-Pastur with atom handling") {
    CdfTable mp(density_from_coefficients(marchenko_pastur_coeffs(Rat(1, 2))));
    double ks = ks_distance(sample_wishart(256, 128, 2026), mp);
    CHECK(ks < 0.08);
}
