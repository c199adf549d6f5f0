#include "fm/numerics.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "fm/errors.hpp"
#include "fm/polysys.hpp"

namespace fm {

QuadratureRule gauss_rule(const JacobiParameters& j, int n) {
    if (n < 1) throw Error("gauss_rule needs n >= 1");
    if ((int)j.beta().size() < n) throw DegenerateJacobi();
    for (int k = 1; k < n; ++k) {
        if (k > (int)j.gamma().size() || sgn(j.gamma_at(k)) <= 0) throw DegenerateJacobi();
    }
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        J(i, i) = to_double(j.beta_at(i));
        if (i + 1 < n) {
            double off = std::sqrt(to_double(j.gamma_at(i + 1)));
            J(i, i + 1) = off;
            J(i + 1, i) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadratureRule rule;
    rule.source_depth = n;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        double v = es.eigenvectors()(0, i);
        rule.weights[i] = v * v;
    }
    return rule;
}

namespace {

struct SimpsonResult {
    double value;
    double error;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

void adaptive(const std::function<double(double)>& f, double a, double m, double b, double fa,
              double fm, double fb, double whole, double tol, int depth, SimpsonResult& out) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, m, fa, flm, fm);
    double right = simpson(m, b, fm, frm, fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        out.value += left + right + delta / 15.0;
        out.error += std::abs(delta) / 15.0;
        return;
    }
    adaptive(f, a, lm, m, fa, flm, fm, left, tol / 2, depth - 1, out);
    adaptive(f, m, rm, b, fm, frm, fb, right, tol / 2, depth - 1, out);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    // Fixed initial subdivision: symmetric integrands can fool the Simpson
    // error estimate on the full interval (coincident zeros at the ends and
    // midpoint), so start from panels that break the symmetry.
    const int panels = 9;
    SimpsonResult out{0.0, 0.0};
    double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        double pa = a + i * h, pb = pa + h, pm = 0.5 * (pa + pb);
        double fa = f(pa), fm = f(pm), fb = f(pb);
        adaptive(f, pa, pm, pb, fa, fm, fb, simpson(pa, pb, fa, fm, fb), tol / panels, 24, out);
    }
    if (out.error > std::max(tol * 64, 1e-7)) throw IntegrationFailure(out.error);
    return out.value;
}

}  // namespace

double ac_integral(const DensitySpec& ds, const std::function<double(double)>& F, double abs_tol) {
    if (!ds.has_ac) return 0.0;
    double lo = ds.support_lo.value(), hi = ds.support_hi.value();
    double center = 0.5 * (lo + hi), radius = 0.5 * (hi - lo);
    double r2 = std::abs(to_double(ds.radicand[2]));
    double scale = std::sqrt(r2) * radius * radius / (2.0 * M_PI);
    auto integrand = [&](double theta) {
        double ct = std::cos(theta);
        double x = center + radius * std::sin(theta);
        double den = to_double(ds.denominator[0]) + to_double(ds.denominator[1]) * x +
                     to_double(ds.denominator[2]) * x * x;
        return scale * ct * ct / std::abs(den) * F(x);
    };
    return integrate(integrand, -M_PI / 2, M_PI / 2, abs_tol);
}

double total_mass(const DensitySpec& ds, double abs_tol) {
    double mass = ac_integral(ds, [](double) { return 1.0; }, abs_tol);
    for (const auto& atom : ds.atoms) mass += atom.weight.value();
    return mass;
}

double density_moment(const DensitySpec& ds, int k, double abs_tol) {
    double v = ac_integral(ds, [k](double x) { return std::pow(x, k); }, abs_tol);
    for (const auto& atom : ds.atoms) v += atom.weight.value() * std::pow(atom.location.value(), k);
    return v;
}

double check_conjugate(const ClosedFormMeasure& cf, int k) {
    if (!cf.density.atoms.empty()) throw AtomPresent();
    double lhs = 0;  // sum_{i+j=k-1} m_i m_j, exact
    for (int i = 0; i + 1 <= k; ++i) lhs += to_double(cf.moments[i] * cf.moments[k - 1 - i]);
    double rhs = ac_integral(cf.density,
                             [&](double x) { return cf.conjugate.eval(x) * std::pow(x, k); });
    return std::abs(lhs - rhs);
}

double check_A_symmetry(const ClosedFormMeasure& cf, const Polynomial& f, const Polynomial& g) {
    if (!cf.density.atoms.empty()) throw AtomPresent();
    Rat exact = functional(cf.moments, apply_L(cf.moments, f) * g) +
                functional(cf.moments, f * apply_L(cf.moments, g));
    Polynomial fg = f * g;
    double hterm = ac_integral(cf.density,
                               [&](double x) { return cf.conjugate.eval(x) * fg.eval(x); });
    return std::abs(to_double(exact) - hterm);
}

CdfTable::CdfTable(const DensitySpec& ds, int panels) : ds_(ds) {
    if (!ds_.has_ac) return;
    lo_ = ds_.support_lo.value();
    hi_ = ds_.support_hi.value();
    double center = 0.5 * (lo_ + hi_), radius = 0.5 * (hi_ - lo_);
    double r2 = std::abs(to_double(ds_.radicand[2]));
    double scale = std::sqrt(r2) * radius * radius / (2.0 * M_PI);
    auto integrand = [&](double theta) {
        double ct = std::cos(theta);
        double x = center + radius * std::sin(theta);
        double den = to_double(ds_.denominator[0]) + to_double(ds_.denominator[1]) * x +
                     to_double(ds_.denominator[2]) * x * x;
        return scale * ct * ct / std::abs(den);
    };
    // cumulative composite Simpson on a uniform theta grid
    cum_.assign(panels + 1, 0.0);
    double h = M_PI / panels;
    for (int i = 0; i < panels; ++i) {
        double a = -M_PI / 2 + i * h;
        cum_[i + 1] = cum_[i] + h / 6.0 * (integrand(a) + 4.0 * integrand(a + h / 2) +
                                           integrand(a + h));
    }
    ac_mass_ = cum_.back();
}

double CdfTable::ac_below(double x) const {
    if (!ds_.has_ac || x <= lo_) return 0.0;
    if (x >= hi_) return ac_mass_;
    double center = 0.5 * (lo_ + hi_), radius = 0.5 * (hi_ - lo_);
    double t = (x - center) / radius;
    double theta = std::asin(std::clamp(t, -1.0, 1.0));
    double pos = (theta + M_PI / 2) / M_PI * (cum_.size() - 1);
    int i = std::clamp((int)pos, 0, (int)cum_.size() - 2);
    double frac = pos - i;
    return cum_[i] * (1 - frac) + cum_[i + 1] * frac;
}

double CdfTable::operator()(double x) const {
    double v = ac_below(x);
    for (const auto& atom : ds_.atoms)
        if (atom.location.value() <= x) v += atom.weight.value();
    return v;
}

double CdfTable::left_limit(double x) const {
    double v = ac_below(x);
    for (const auto& atom : ds_.atoms)
        if (atom.location.value() < x) v += atom.weight.value();
    return v;
}

}  // namespace fm
