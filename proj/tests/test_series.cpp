#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fm/errors.hpp"
#include "fm/oracles.hpp"
#include "fm/series.hpp"

using namespace fm;

namespace {

FormalPowerSeries make(std::initializer_list<long> cs, int order) {
    RatVec v;
    for (long c : cs) v.push_back(Rat(c));
    return FormalPowerSeries(std::move(v), order);
}

FormalPowerSeries random_series(std::mt19937_64& gen, int order, bool zero_const,
                                bool unit_linear = false) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 4);
    RatVec v(order + 1);
    for (auto& q : v) q = rat(num(gen), den(gen));
    if (zero_const) v[0] = 0;
    if (unit_linear && v[1] == 0) v[1] = 1;
    return FormalPowerSeries(std::move(v), order);
}

}  // namespace

TEST_CASE("multiply") {
    FormalPowerSeries a = make({1, 1}, 6), b = make({1, -1}, 6);
    CHECK((a * b).coeffs() == make({1, 0, -1}, 6).coeffs());

    FormalPowerSeries one = FormalPowerSeries::constant(Rat(1), 6);
    CHECK((a * one).coeffs() == a.coeffs());

    // M_{delta_1}(z)^2 = (1/(1-z))^2 = sum (k+1) z^k
    FormalPowerSeries geo = reciprocal(make({1, -1}, 5));
    FormalPowerSeries sq = geo * geo;
    for (int k = 0; k <= 4; ++k) CHECK(sq[k] == k + 1);
    CHECK((sq - oracles::naive_multiply(geo, geo)).is_zero());
}

TEST_CASE("reciprocal") {
    FormalPowerSeries geo = reciprocal(make({1, -1}, 8));
    for (int k = 0; k <= 8; ++k) CHECK(geo[k] == 1);

    CHECK(reciprocal(FormalPowerSeries::constant(Rat(1), 4)).coeffs() ==
          FormalPowerSeries::constant(Rat(1), 4).coeffs());

    // 1/(1 - z^2) at xi = 0, checked by multiplying back
    FormalPowerSeries f = make({1, 0, -1}, 9);
    FormalPowerSeries r = reciprocal(f);
    for (int k = 0; k <= 9; ++k) CHECK(r[k] == (k % 2 ? Rat(0) : Rat(1)));
    FormalPowerSeries back = f * r;
    CHECK(back[0] == 1);
    for (int k = 1; k <= 9; ++k) CHECK(back[k] == 0);

    CHECK_THROWS_AS(reciprocal(make({0, 1}, 4)), ZeroConstantTerm);
}

TEST_CASE("compose") {
    std::mt19937_64 gen(7);
    FormalPowerSeries f = random_series(gen, 8, false);
    CHECK((compose(f, FormalPowerSeries::identity(8)) - f).is_zero());

    // 1/(1-w) at w = z + z^2 gives the Fibonacci numbers
    FormalPowerSeries geo = reciprocal(make({1, -1}, 8));
    FormalPowerSeries fib = compose(geo, make({0, 1, 1}, 8));
    long expect[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
    for (int k = 0; k <= 8; ++k) CHECK(fib[k] == expect[k]);

    FormalPowerSeries sq = compose(make({0, 0, 1}, 5), make({0, 2}, 5));
    CHECK(sq.coeffs() == make({0, 0, 4}, 5).coeffs());

    CHECK_THROWS_AS(compose(f, FormalPowerSeries::constant(Rat(1), 8)), NonzeroInnerConstant);
}

TEST_CASE("revert") {
    CHECK((revert(FormalPowerSeries::identity(8)) - FormalPowerSeries::identity(8)).is_zero());

    // revert(z - z^2) generates the Catalan numbers
    FormalPowerSeries cat = revert(make({0, 1, -1}, 8));
    long expect[] = {0, 1, 1, 2, 5, 14, 42, 132, 429};
    for (int k = 0; k <= 8; ++k) CHECK(cat[k] == expect[k]);

    FormalPowerSeries half = revert(make({0, 2}, 6));
    CHECK(half[1] == Rat(1, 2));
    for (int k = 2; k <= 6; ++k) CHECK(half[k] == 0);

    CHECK_THROWS_AS(revert(make({1, 1}, 6)), NotInvertible);
    CHECK_THROWS_AS(revert(make({0, 0, 1}, 6)), NotInvertible);
}

TEST_CASE("algebra properties on random series") {
    std::mt19937_64 gen(20260809);
    for (int trial = 0; trial < 30; ++trial) {
        FormalPowerSeries f = random_series(gen, 12, false);
        FormalPowerSeries g = random_series(gen, 12, false);
        FormalPowerSeries h = random_series(gen, 12, false);
        CHECK((f * g - g * f).is_zero());
        CHECK(((f * g) * h - f * (g * h)).is_zero());
        if (f[0] != 0) CHECK((reciprocal(reciprocal(f)) - f).is_zero());
    }
    for (int trial = 0; trial < 20; ++trial) {
        FormalPowerSeries f = random_series(gen, 10, true, true);
        CHECK((compose(f, revert(f)) - FormalPowerSeries::identity(10)).is_zero());
    }
}

TEST_CASE("naive oracles agree to order 8") {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 20; ++trial) {
        FormalPowerSeries f = random_series(gen, 8, false);
        FormalPowerSeries g = random_series(gen, 8, true);
        CHECK((f * g - oracles::naive_multiply(f, g)).is_zero());
        CHECK((compose(f, g) - oracles::naive_compose(f, g)).is_zero());
    }
}
