#include "fm/measures.hpp"

#include <algorithm>

#include "fm/errors.hpp"
#include "fm/linalg.hpp"

namespace fm {

MomentSequence::MomentSequence(RatVec moments) : m_(std::move(moments)) {
    if (m_.empty() || m_[0] != 1) throw Error("moment sequence must start with m_0 = 1");
}

MomentSequence MomentSequence::point_mass(const Rat& xi, int depth) {
    RatVec m(depth + 1);
    m[0] = 1;
    for (int k = 1; k <= depth; ++k) m[k] = m[k - 1] * xi;
    return MomentSequence(std::move(m));
}

Rat MomentSequence::operator[](int k) const {
    if (k < 0 || k > depth()) throw InsufficientMoments();
    return m_[k];
}

JacobiParameters::JacobiParameters(RatVec beta, RatVec gamma)
    : beta_(std::move(beta)), gamma_(std::move(gamma)) {
    for (size_t i = 0; i < gamma_.size(); ++i) {
        if (sgn(gamma_[i]) < 0) throw InvalidJacobi();
        if (gamma_[i] == 0) {
            gamma_.resize(i);
            terminated_ = true;
            break;
        }
    }
    if (beta_.empty()) beta_.push_back(Rat(0));
    // once gamma_k = 0 the walk cannot pass height k, so betas above it are moot
    if (terminated_) beta_.resize(gamma_.size() + 1, Rat(0));
}

FormalPowerSeries mgf(const MomentSequence& m, int order) {
    int n = std::min(order, m.depth());
    RatVec c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = m[k];
    return FormalPowerSeries(std::move(c), n);
}

FormalPowerSeries cauchy_series(const MomentSequence& m, int order) {
    int n = std::min(order, m.depth() + 1);
    RatVec c(n + 1, Rat(0));
    for (int k = 1; k <= n; ++k) c[k] = m[k - 1];
    return FormalPowerSeries(std::move(c), n);
}

FormalPowerSeries r_transform(const MomentSequence& m, int order) {
    if (m.depth() < 2) throw InsufficientMoments();
    // g(w) = w M(w) is the Cauchy transform in w = 1/z; with k = g^{-1},
    // R(z) = 1/k(z) - 1/z = (z - k)/(z k), a genuine power series.
    // R exact to z^N needs g to w^{N+2}, i.e. moments to m_{N+1}.
    int n = std::min(order + 2, m.depth() + 1);
    FormalPowerSeries g = cauchy_series(m, n);
    FormalPowerSeries k = revert(g);
    FormalPowerSeries z = FormalPowerSeries::identity(n);
    FormalPowerSeries num = z - k;  // z^2 (m_1 + ...)
    FormalPowerSeries den = z * k;  // z^2 (1 + ...)
    RatVec nc(n - 1), dc(n - 1);
    for (int i = 0; i + 2 <= n; ++i) {
        nc[i] = num[i + 2];
        dc[i] = den[i + 2];
    }
    FormalPowerSeries r = FormalPowerSeries(std::move(nc), n - 2) *
                          reciprocal(FormalPowerSeries(std::move(dc), n - 2));
    return r;
}

JacobiParameters moments_to_jacobi(const MomentSequence& m) {
    const int depth = m.depth();
    // Chebyshev algorithm on sigma_{k,l} = mu[P_k x^l], monic recurrence
    //   P_{k+1} = (x - beta_k) P_k - gamma_k P_{k-1}.
    RatVec alpha{depth >= 1 ? m[1] : Rat(0)};
    RatVec gamma;
    std::vector<RatVec> s;
    s.emplace_back(depth + 1);
    for (int l = 0; l <= depth; ++l) s[0][l] = m[l];
    for (int k = 1; 2 * k <= depth; ++k) {
        s.emplace_back(depth + 1, Rat(0));
        const RatVec& prev = s[k - 1];
        for (int l = k; l <= depth - k; ++l) {
            Rat v = prev[l + 1] - alpha[k - 1] * prev[l];
            if (k >= 2) v -= gamma[k - 2] * s[k - 2][l];
            s[k][l] = v;
        }
        Rat nk = s[k][k];  // <P_k, P_k>
        if (sgn(nk) < 0) throw NotPositiveDefinite(k);
        if (nk == 0) {  // finitely supported, k atoms
            gamma.push_back(Rat(0));
            break;
        }
        gamma.push_back(nk / s[k - 1][k - 1]);
        if (depth - k >= k + 1)
            alpha.push_back(s[k][k + 1] / s[k][k] - prev[k] / prev[k - 1]);
        else
            break;
    }
    return JacobiParameters(std::move(alpha), std::move(gamma));
}

MomentSequence jacobi_to_moments(const JacobiParameters& j, int depth) {
    // m_n touches beta_0..beta_{floor((n-1)/2)} and gamma_1..gamma_{floor(n/2)}
    if (!j.terminated()) {
        if (2 * (int)j.gamma().size() + 1 < depth || 2 * (int)j.beta().size() < depth)
            throw InsufficientJacobi();
    }
    const int size = depth / 2 + 2;
    auto beta_of = [&](int i) { return i < (int)j.beta().size() ? j.beta()[i] : Rat(0); };
    auto gamma_of = [&](int i) {  // gamma_i, i >= 1
        return (i - 1) < (int)j.gamma().size() ? j.gamma()[i - 1] : Rat(0);
    };
    // u <- J u on the monic basis: (J u)_i = u_{i-1} + beta_i u_i + gamma_{i+1} u_{i+1}
    RatVec u(size, Rat(0)), next(size, Rat(0));
    u[0] = 1;
    RatVec m(depth + 1);
    m[0] = 1;
    for (int n = 1; n <= depth; ++n) {
        for (int i = 0; i < size; ++i) {
            Rat v = beta_of(i) * u[i];
            if (i > 0) v += u[i - 1];
            if (i + 1 < size) v += gamma_of(i + 1) * u[i + 1];
            next[i] = v;
        }
        std::swap(u, next);
        m[n] = u[0];
    }
    return MomentSequence(std::move(m));
}

JacobiParameters phi_shift(const JacobiParameters& nu, const Rat& beta, const Rat& gamma) {
    if (sgn(gamma) <= 0) throw Error("phi_shift requires gamma > 0");
    RatVec b{beta}, g{gamma};
    b.insert(b.end(), nu.beta().begin(), nu.beta().end());
    g.insert(g.end(), nu.gamma().begin(), nu.gamma().end());
    if (nu.terminated()) g.push_back(Rat(0));
    return JacobiParameters(std::move(b), std::move(g));
}

MomentSequence phi_shift(const MomentSequence& nu, const Rat& beta, const Rat& gamma) {
    return jacobi_to_moments(phi_shift(moments_to_jacobi(nu), beta, gamma), nu.depth());
}

FormalPowerSeries phi_shift_mgf(const FormalPowerSeries& nu_mgf, const Rat& beta,
                                const Rat& gamma) {
    int n = nu_mgf.order();
    // 1/M_mu = 1 - beta z - gamma z^2 M_nu
    FormalPowerSeries inv = FormalPowerSeries::constant(Rat(1), n) -
                            FormalPowerSeries::identity(n) * beta -
                            (nu_mgf * gamma).shifted(2);
    return reciprocal(inv);
}

MomentSequence strip(const MomentSequence& m) {
    JacobiParameters j = moments_to_jacobi(m);
    if (j.gamma().empty()) throw FinitelySupported();
    RatVec b(j.beta().begin() + 1, j.beta().end());
    RatVec g(j.gamma().begin() + 1, j.gamma().end());
    if (j.terminated()) g.push_back(Rat(0));
    JacobiParameters stripped(std::move(b), std::move(g));
    int depth = std::max(0, m.depth() - 2);
    if (!stripped.terminated())
        depth = std::min(depth, std::min(2 * (int)stripped.gamma().size() + 1,
                                         2 * (int)stripped.beta().size()));
    return jacobi_to_moments(stripped, depth);
}

MomentSequence affine(const MomentSequence& m, const Rat& s, const Rat& t) {
    if (s == 0) throw Error("affine scale must be nonzero");
    RatVec out(m.depth() + 1, Rat(0));
    for (int n = 0; n <= m.depth(); ++n) {
        Rat acc(0);
        for (int k = 0; k <= n; ++k)
            acc += binomial(n, k) * pow_rat(s, k) * pow_rat(t, n - k) * m[k];
        out[n] = acc;
    }
    return MomentSequence(std::move(out));
}

HankelReport hankel_check(const MomentSequence& m, int depth) {
    HankelReport rep;
    for (int k = 0; k <= depth; ++k) {
        if (2 * k > m.depth()) break;
        RatMatrix h(k + 1, RatVec(k + 1));
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) h[i][j] = m[i + j];
        Rat d = determinant(std::move(h));
        if (sgn(d) < 0 && !rep.first_negative) rep.first_negative = k;
        rep.determinants.push_back(std::move(d));
    }
    return rep;
}

}  // namespace fm
