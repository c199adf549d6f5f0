#include "fm/polysys.hpp"

#include "fm/errors.hpp"
#include "fm/operators.hpp"

namespace fm {

PolynomialSystem orthogonal_polys(const JacobiParameters& j, int up_to) {
    if (up_to >= 1 && (int)j.beta().size() < up_to) throw InsufficientJacobi();
    PolynomialSystem sys;
    sys.polys.reserve(up_to + 1);
    sys.polys.push_back(Polynomial::one());
    if (up_to == 0) return sys;
    Polynomial x = Polynomial::monomial(1);
    sys.polys.push_back(x - Polynomial(j.beta_at(0)));
    for (int n = 1; n < up_to; ++n) {
        // gamma_n is zero past a terminated sequence
        Rat g = n <= (int)j.gamma().size() ? j.gamma_at(n) : Rat(0);
        sys.polys.push_back((x - Polynomial(j.beta_at(n))) * sys.polys[n] -
                            g * sys.polys[n - 1]);
    }
    return sys;
}

Rat functional(const MomentSequence& m, const Polynomial& f) {
    if (f.degree() > m.depth()) throw InsufficientMoments();
    Rat acc(0);
    for (int k = 0; k <= f.degree(); ++k) acc += f[k] * m[k];
    return acc;
}

Rat inner_product(const MomentSequence& m, const Polynomial& f, const Polynomial& g) {
    return functional(m, f * g);
}

PolynomialSystem cfree_appell(const MeasurePair& pair, int up_to) {
    if (pair.mu.depth() < up_to || pair.nu.depth() < up_to) throw InsufficientMoments();
    PolynomialSystem sys;
    sys.polys.push_back(Polynomial::one());
    for (int n = 1; n <= up_to; ++n) {
        const Polynomial& prev = sys.polys[n - 1];
        // coefficient of x^k in L_nu[A_n] is sum_{j>k} c_j nu[x^{j-k-1}];
        // solve top-down, constant term from mu[A_n] = 0.
        RatVec c(n + 1, Rat(0));
        c[n] = 1;
        for (int k = n - 2; k >= 0; --k) {
            Rat acc(0);
            for (int j = k + 2; j <= n; ++j) acc += c[j] * pair.nu[j - k - 1];
            c[k + 1] = prev[k] - acc;  // the j = k+1 term has nu[x^0] = 1
        }
        Rat mean(0);
        for (int j = 1; j <= n; ++j) mean += c[j] * pair.mu[j];
        c[0] = -mean;
        sys.polys.push_back(Polynomial(std::move(c)));
    }
    return sys;
}

}  // namespace fm
