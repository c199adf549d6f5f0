#include "fm/series.hpp"

#include <algorithm>
#include <cstdlib>

#include "fm/errors.hpp"

namespace fm {

int default_order() {
    static const int order = [] {
        if (const char* env = std::getenv("FREEMEIXNER_ORDER")) {
            int n = std::atoi(env);
            return std::clamp(n, 4, 128);
        }
        return 16;
    }();
    return order;
}

bool FormalPowerSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

FormalPowerSeries FormalPowerSeries::truncated(int order) const {
    RatVec v(coeffs_.begin(), coeffs_.begin() + std::min<size_t>(order + 1, coeffs_.size()));
    return FormalPowerSeries(std::move(v), order);
}

FormalPowerSeries FormalPowerSeries::operator+(const FormalPowerSeries& g) const {
    int n = std::min(order(), g.order());
    FormalPowerSeries h(n);
    for (int k = 0; k <= n; ++k) h.coeffs_[k] = coeffs_[k] + g.coeffs_[k];
    return h;
}

FormalPowerSeries FormalPowerSeries::operator-(const FormalPowerSeries& g) const {
    int n = std::min(order(), g.order());
    FormalPowerSeries h(n);
    for (int k = 0; k <= n; ++k) h.coeffs_[k] = coeffs_[k] - g.coeffs_[k];
    return h;
}

FormalPowerSeries FormalPowerSeries::operator-() const {
    FormalPowerSeries h(order());
    for (int k = 0; k <= order(); ++k) h.coeffs_[k] = -coeffs_[k];
    return h;
}

FormalPowerSeries FormalPowerSeries::operator*(const FormalPowerSeries& g) const {
    int n = std::min(order(), g.order());
    FormalPowerSeries h(n);
    for (int i = 0; i <= n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (g.coeffs_[j] == 0) continue;
            h.coeffs_[i + j] += coeffs_[i] * g.coeffs_[j];
        }
    }
    return h;
}

FormalPowerSeries FormalPowerSeries::operator*(const Rat& s) const {
    FormalPowerSeries h(order());
    for (int k = 0; k <= order(); ++k) h.coeffs_[k] = coeffs_[k] * s;
    return h;
}

FormalPowerSeries FormalPowerSeries::shifted(int k) const {
    FormalPowerSeries h(order());
    for (int j = order(); j >= k; --j) h.coeffs_[j] = coeffs_[j - k];
    return h;
}

FormalPowerSeries reciprocal(const FormalPowerSeries& f) {
    if (f[0] == 0) throw ZeroConstantTerm();
    int n = f.order();
    RatVec r(n + 1, Rat(0));
    r[0] = Rat(1) / f[0];
    for (int k = 1; k <= n; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j) acc += f[j] * r[k - j];
        r[k] = -acc / f[0];
    }
    return FormalPowerSeries(std::move(r), n);
}

FormalPowerSeries compose(const FormalPowerSeries& f, const FormalPowerSeries& g) {
    if (g[0] != 0) throw NonzeroInnerConstant();
    int n = std::min(f.order(), g.order());
    FormalPowerSeries gc = g.truncated(n);
    // Horner over truncated series
    FormalPowerSeries acc = FormalPowerSeries::constant(f[n], n);
    for (int k = n - 1; k >= 0; --k) acc = acc * gc + FormalPowerSeries::constant(f[k], n);
    return acc;
}

FormalPowerSeries revert(const FormalPowerSeries& f) {
    if (f[0] != 0 || f[1] == 0) throw NotInvertible();
    int n = f.order();
    // Newton: h <- h - (f(h) - z) / f'(h), starting from the linear inverse.
    FormalPowerSeries z = FormalPowerSeries::identity(n);
    FormalPowerSeries h = z * (Rat(1) / f[1]);
    FormalPowerSeries fprime(n);
    {
        RatVec d(n + 1, Rat(0));
        for (int k = 1; k <= n; ++k) d[k - 1] = f[k] * k;
        fprime = FormalPowerSeries(std::move(d), n);
    }
    for (int iter = 0; iter < 2 * n + 4; ++iter) {
        FormalPowerSeries err = compose(f, h) - z;
        if (err.is_zero()) return h;
        h = h - err * reciprocal(compose(fprime, h));
    }
    if (!(compose(f, h) - z).is_zero()) throw ReversionFailure();
    return h;
}

}  // namespace fm
