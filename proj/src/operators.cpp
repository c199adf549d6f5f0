#include "fm/operators.hpp"

#include <algorithm>

#include "fm/errors.hpp"

namespace fm {

Polynomial apply_L(const MomentSequence& m, const Polynomial& f) {
    if (f.degree() > m.depth() + 1) throw InsufficientMoments();
    if (f.degree() < 1) return Polynomial::zero();
    RatVec out(f.degree(), Rat(0));
    for (int n = 1; n <= f.degree(); ++n) {
        if (f[n] == 0) continue;
        for (int k = 0; k < n; ++k) out[k] += f[n] * m[n - k - 1];
    }
    return Polynomial(std::move(out));
}

Polynomial apply_Q(const BochnerOperator& Q, const Polynomial& f) {
    Polynomial lf = apply_L(Q.mu, f);
    Polynomial llf = apply_L(Q.nu_or_mu(), lf);
    return Q.p() * llf + Q.q() * lf;
}

Polynomial apply_Q_higher(const std::vector<Polynomial>& p_list, const MomentSequence& m,
                          const Polynomial& f) {
    for (size_t k = 0; k < p_list.size(); ++k)
        if (p_list[k].degree() > static_cast<int>(k)) throw DegreeViolation();
    Polynomial acc;
    Polynomial lkf = f;  // L^k f
    for (size_t k = 0; k < p_list.size(); ++k) {
        if (k > 0) lkf = apply_L(m, lkf);
        acc = acc + p_list[k] * lkf;
    }
    return acc;
}

FormalPowerSeries check_higher_identity(const std::vector<Polynomial>& p_list,
                                        const MomentSequence& m, int order) {
    for (size_t k = 0; k < p_list.size(); ++k)
        if (p_list[k].degree() > static_cast<int>(k)) throw DegreeViolation();
    int n = std::min(order, m.depth());
    FormalPowerSeries M = mgf(m, n);
    // z = 1/w: p_k(z) G(z)^k = (w^k p_k(1/w)) M(w)^k, a polynomial in w
    FormalPowerSeries acc(n);
    FormalPowerSeries Mk = FormalPowerSeries::constant(Rat(1), n);
    Rat leading_sum(0);
    for (size_t k = 0; k < p_list.size(); ++k) {
        if (k > 0) Mk = Mk * M;
        RatVec rev(n + 1, Rat(0));
        for (int j = 0; j <= p_list[k].degree(); ++j)
            if ((int)k - j <= n) rev[k - j] = p_list[k][j];
        acc = acc + FormalPowerSeries(std::move(rev), n) * Mk;
        leading_sum += p_list[k][static_cast<int>(k)];
    }
    return acc - FormalPowerSeries::constant(leading_sum, n);
}

namespace {

// Columns of Q acting on 1, x, ..., x^n in the monomial basis.
std::vector<Polynomial> operator_columns(const BochnerOperator& Q, int up_to) {
    std::vector<Polynomial> cols;
    cols.reserve(up_to + 1);
    for (int k = 0; k <= up_to; ++k) cols.push_back(apply_Q(Q, Polynomial::monomial(k)));
    return cols;
}

EigenResult solve_degree(const BochnerOperator& Q, const std::vector<Polynomial>& cols, int n) {
    EigenResult res;
    res.degree = n;
    res.eigenvalue = cols[n][n];
    if (n == 0) {
        res.eigenfunction = Polynomial::one();
        res.residual = cols[0];  // Q[1] = 0 always
        res.exists = res.residual.is_zero();
        return res;
    }
    // degrees >= 2 always share c + e; degeneracy means colliding with a
    // different ladder class (the constants at 0, or degree 1 at e)
    res.degenerate = (res.eigenvalue == cols[0][0]) ||
                     (n >= 2 && res.eigenvalue == cols[1][1]);
    // (Q - lambda) v = -(Q - lambda) x^n over the lower-degree coefficients
    RatMatrix A(n, RatVec(n, Rat(0)));
    RatVec rhs(n, Rat(0));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) A[j][k] = cols[k][j] - (j == k ? res.eigenvalue : Rat(0));
        rhs[j] = -cols[n][j];
    }
    LinearSolution sol = solve_linear(std::move(A), std::move(rhs));
    RatVec v(sol.x);
    v.resize(n + 1, Rat(0));
    v[n] = 1;
    res.eigenfunction = Polynomial(std::move(v));
    res.residual = apply_Q(Q, res.eigenfunction) - res.eigenvalue * res.eigenfunction;
    res.exists = sol.consistent && res.residual.is_zero();
    return res;
}

}  // namespace

EigenReport eigensystem(const BochnerOperator& Q, int up_to) {
    EigenReport rep;
    std::vector<Polynomial> cols = operator_columns(Q, up_to);
    for (int n = 0; n <= up_to; ++n) {
        rep.levels.push_back(solve_degree(Q, cols, n));
        rep.all_exist = rep.all_exist && rep.levels.back().exists;
    }
    if (up_to >= 1) rep.alpha = rep.levels[1].eigenfunction[0];

    if (Q.c != 0) {
        rep.closed_form_checked = true;
        int order = std::max(default_order(), up_to);
        order = std::min({order, Q.mu.depth(), Q.nu_or_mu().depth()});
        FormalPowerSeries B = correction_beta_series(Q, order);
        auto C = correction_gamma_series(Q, order);
        for (int n = 2; n <= std::min(up_to, order); ++n) {
            if (!rep.levels[n].exists) {
                rep.beta_match = rep.gamma_match = false;
                continue;
            }
            if (rep.levels[n].eigenfunction[1] != B[n]) rep.beta_match = false;
            if (C && rep.levels[n].eigenfunction[0] != (*C)[n]) rep.gamma_match = false;
        }
        if (!C) rep.gamma_match = false;
    }
    return rep;
}

Polynomial eigenfunction(const BochnerOperator& Q, int degree) {
    std::vector<Polynomial> cols = operator_columns(Q, degree);
    EigenResult res = solve_degree(Q, cols, degree);
    if (!res.exists) throw NoEigenfunction(degree);
    return res.eigenfunction;
}

FormalPowerSeries correction_beta_series(const BochnerOperator& Q, int order) {
    int n = std::min({order, Q.mu.depth(), Q.nu_or_mu().depth()});
    FormalPowerSeries Mm = mgf(Q.mu, n), Mn = mgf(Q.nu_or_mu(), n);
    FormalPowerSeries one = FormalPowerSeries::constant(Rat(1), n);
    return (one - Mm * Mn).shifted(1);
}

std::optional<FormalPowerSeries> correction_gamma_series(const BochnerOperator& Q, int order) {
    if (Q.c + Q.e == 0) return std::nullopt;
    int n = std::min({order, Q.mu.depth(), Q.nu_or_mu().depth()});
    FormalPowerSeries Mm = mgf(Q.mu, n), Mn = mgf(Q.nu_or_mu(), n);
    FormalPowerSeries one = FormalPowerSeries::constant(Rat(1), n);
    FormalPowerSeries inner = Mn.shifted(1) * Q.a + (one - Mn) * Q.d;
    return (Mm * inner).shifted(1) * (Rat(1) / (Q.c + Q.e));
}

namespace {

RatMatrix recursion_rows(const MomentSequence& mu, const MomentSequence& nu, int depth) {
    int d = std::min({depth, mu.depth(), nu.depth()});
    // row n: coefficient of z^n in (a z^2 + b z + c) M_mu M_nu + (d z + e) M_mu - (c + e)
    RatMatrix rows;
    auto conv = [&](int n) {  // [z^n] M_mu M_nu
        Rat acc(0);
        for (int i = 0; i <= n; ++i) acc += mu[i] * nu[n - i];
        return acc;
    };
    for (int n = 0; n <= d; ++n) {
        RatVec row(5, Rat(0));
        if (n >= 2) row[0] = conv(n - 2);
        if (n >= 1) row[1] = conv(n - 1);
        row[2] = conv(n);
        if (n >= 1) row[3] = mu[n - 1];
        row[4] = mu[n];
        if (n == 0) {  // normalization row ties the constant term to c + e
            row[2] -= 1;
            row[4] -= 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

NullspaceReport bochner_nullspace_pair(const MeasurePair& pair, int depth) {
    NullspaceReport rep;
    rep.basis = nullspace(recursion_rows(pair.mu, pair.nu, depth));
    for (const auto& v : rep.basis)
        rep.linear_coefficient_residuals.push_back(v[4] != 0 ? Rat(0) : v[3]);
    return rep;
}

NullspaceReport bochner_nullspace(const MomentSequence& m, int depth) {
    return bochner_nullspace_pair({m, m}, depth);
}

bool in_nullspace(const MeasurePair& pair, const RatVec& coeffs, int depth) {
    for (const auto& row : recursion_rows(pair.mu, pair.nu, depth)) {
        Rat acc(0);
        for (int i = 0; i < 5; ++i) acc += row[i] * coeffs[i];
        if (acc != 0) return false;
    }
    return true;
}

FormalPowerSeries check_cauchy_identity(const BochnerOperator& Q, int order) {
    // In w = 1/z the identity reads (a w^2 + b w + c) M_mu M_nu + (d w + e) M_mu = c + e,
    // so the residual series in w is the moment-recursion generating function.
    int n = std::min({order, Q.mu.depth(), Q.nu_or_mu().depth()});
    FormalPowerSeries Mm = mgf(Q.mu, n), Mn = mgf(Q.nu_or_mu(), n);
    FormalPowerSeries prod = Mm * Mn;
    FormalPowerSeries res = prod.shifted(2) * Q.a + prod.shifted(1) * Q.b + prod * Q.c +
                            Mm.shifted(1) * Q.d + Mm * Q.e -
                            FormalPowerSeries::constant(Q.c + Q.e, n);
    return res;
}

FormalPowerSeries check_riccati_identity(const BochnerOperator& Q, int order) {
    int n = std::min(order, Q.mu.depth() - 1);
    FormalPowerSeries R = r_transform(Q.mu, n);
    n = R.order();
    FormalPowerSeries lhs = R * (-(2 * Q.c + Q.e)) - FormalPowerSeries::constant(Q.b + Q.d, n);
    FormalPowerSeries rhs = (FormalPowerSeries::constant(Q.a, n) + R * Q.b + R * R * Q.c).shifted(1);
    return lhs - rhs;
}

Rat check_symmetry(const MeasurePair& pair, const Polynomial& H, const Polynomial& f,
                   const Polynomial& g) {
    auto apply = [&](const Polynomial& h) {
        Polynomial lh = apply_L(pair.mu, h);
        return apply_L(pair.nu, lh) - H * lh;
    };
    return functional(pair.mu, apply(f) * g) - functional(pair.mu, f * apply(g));
}

RatVec check_H_identity(const MeasurePair& pair, int up_to, const Rat& beta, const Rat& gamma) {
    if (sgn(gamma) == 0) throw Error("check_H_identity requires gamma != 0");
    RatVec res;
    res.reserve(up_to + 1);
    for (int n = 0; n <= up_to; ++n) {
        // (nu x mu)[d x^n] = sum_{i+j=n-1} nu[x^i] mu[x^j]
        Rat lhs(0);
        for (int i = 0; i + 1 <= n; ++i) lhs += pair.nu[i] * pair.mu[n - 1 - i];
        Rat rhs = (pair.mu[n + 1] - beta * pair.mu[n]) / gamma;
        res.push_back(lhs - rhs);
    }
    return res;
}

}  // namespace fm
