#include "fm/oracles.hpp"

#include "fm/errors.hpp"

namespace fm {
namespace oracles {

namespace {

// weight of the remaining path segment starting at height h with n steps left
Rat motzkin_walk(const JacobiParameters& j, int height, int steps) {
    if (steps == 0) return height == 0 ? Rat(1) : Rat(0);
    if (height > steps) return Rat(0);
    Rat acc(0);
    // up step (weight 1 on the monic lattice)
    acc += motzkin_walk(j, height + 1, steps - 1);
    // flat step, weight beta_h
    Rat beta = height < (int)j.beta().size() ? j.beta()[height] : Rat(0);
    if (beta != 0) acc += beta * motzkin_walk(j, height, steps - 1);
    // down step, weight gamma_h
    if (height >= 1) {
        Rat gamma = height - 1 < (int)j.gamma().size() ? j.gamma()[height - 1] : Rat(0);
        if (gamma != 0) acc += gamma * motzkin_walk(j, height - 1, steps - 1);
    }
    return acc;
}

}  // namespace

Rat motzkin_moment(const JacobiParameters& j, int n) { return motzkin_walk(j, 0, n); }

FormalPowerSeries lagrange_revert(const FormalPowerSeries& f) {
    if (f[0] != 0 || f[1] == 0) throw NotInvertible();
    int n = f.order();
    // w / f(w) = 1 / (f(w)/w)
    RatVec base(n + 1, Rat(0));
    for (int k = 0; k <= n - 1; ++k) base[k] = f[k + 1];
    FormalPowerSeries inv = reciprocal(FormalPowerSeries(std::move(base), n));
    RatVec out(n + 1, Rat(0));
    FormalPowerSeries power = FormalPowerSeries::constant(Rat(1), n);
    for (int k = 1; k <= n; ++k) {
        power = naive_multiply(power, inv);  // (w/f)^k
        out[k] = power[k - 1] / k;
    }
    return FormalPowerSeries(std::move(out), n);
}

FormalPowerSeries naive_multiply(const FormalPowerSeries& f, const FormalPowerSeries& g) {
    int n = std::min(f.order(), g.order());
    RatVec out(n + 1, Rat(0));
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i) out[k] += f[i] * g[k - i];
    return FormalPowerSeries(std::move(out), n);
}

FormalPowerSeries naive_compose(const FormalPowerSeries& f, const FormalPowerSeries& g) {
    if (g[0] != 0) throw NonzeroInnerConstant();
    int n = std::min(f.order(), g.order());
    FormalPowerSeries acc = FormalPowerSeries::constant(f[0], n);
    FormalPowerSeries gk = FormalPowerSeries::constant(Rat(1), n);
    for (int k = 1; k <= n; ++k) {
        gk = naive_multiply(gk, g);
        acc = acc + gk * f[k];
    }
    return acc;
}

Rat cofactor_determinant(const std::vector<RatVec>& m) {
    const size_t n = m.size();
    if (n == 0) return Rat(1);
    if (n == 1) return m[0][0];
    Rat acc(0);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<RatVec> minor(n - 1, RatVec(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        Rat term = m[0][j] * cofactor_determinant(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace oracles
}  // namespace fm
