#include "fm/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "fm/meixner.hpp"
#include "fm/numerics.hpp"
#include "fm/operators.hpp"
#include "fm/oracles.hpp"
#include "fm/polysys.hpp"
#include "fm/rmt.hpp"

namespace fm {

namespace {

constexpr int kMomentDepth = 32;

struct GridPoint {
    Rat b, c;
    std::string tag() const { return "(b=" + rat_str(b) + ", c=" + rat_str(c) + ")"; }
};

std::vector<GridPoint> parameter_grid() {
    std::vector<GridPoint> pts;
    const RatVec bs{Rat(-1), Rat(0), Rat(1, 2), Rat(2)};
    const RatVec cs{Rat(-1), Rat(-3, 4), Rat(0), Rat(1), Rat(3)};
    for (const auto& b : bs)
        for (const auto& c : cs) {
            if (c == Rat(-1, 2) && b != 0) continue;
            pts.push_back({b, c});
        }
    return pts;
}

Rat random_rat(std::mt19937_64& gen, long num_lo, long num_hi, long den_max) {
    std::uniform_int_distribution<long> den(1, den_max);
    long d = den(gen);
    std::uniform_int_distribution<long> num(num_lo * d, num_hi * d);
    return rat(num(gen), d);
}

// rational in (0, hi], denominator up to den_max
Rat random_positive_rat(std::mt19937_64& gen, long hi, long den_max) {
    std::uniform_int_distribution<long> den(1, den_max);
    long d = den(gen);
    std::uniform_int_distribution<long> num(1, hi * d);
    return rat(num(gen), d);
}

JacobiParameters random_jacobi(std::mt19937_64& gen, int levels) {
    RatVec beta, gamma;
    for (int i = 0; i <= levels; ++i) beta.push_back(random_rat(gen, -2, 2, 6));
    for (int i = 0; i < levels; ++i) gamma.push_back(random_positive_rat(gen, 3, 6));
    return JacobiParameters(std::move(beta), std::move(gamma));
}

Polynomial random_poly(std::mt19937_64& gen, int degree) {
    RatVec c(degree + 1);
    for (auto& q : c) q = random_rat(gen, -3, 3, 5);
    if (c[degree] == 0) c[degree] = 1;
    return Polynomial(std::move(c));
}

BochnerOperator grid_operator(const GridPoint& g) {
    return canonical_operator(FreeMeixnerSpec(g.b, g.c), kMomentDepth);
}

// ---------------------------------------------------------------- criterion 1

CheckResult criterion1_eigensystems() {
    CheckResult res{1, "canonical-operator eigensystems on the (b,c) grid", true, {}, 0};
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& g : parameter_grid()) {
        BochnerOperator Q = grid_operator(g);
        EigenReport rep = eigensystem(Q, 12);
        for (const auto& lvl : rep.levels) {
            if (lvl.eigenvalue != Q.eigenvalue_ladder(lvl.degree)) {
                res.passed = false;
                res.details.push_back(g.tag() + " degree " + std::to_string(lvl.degree) +
                                      ": eigenvalue off the 0/e/c+e ladder");
            }
            if (!lvl.exists) {
                res.passed = false;
                res.details.push_back(g.tag() + " degree " + std::to_string(lvl.degree) +
                                      ": no exact eigenfunction, residual " +
                                      lvl.residual.str());
            }
        }
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (res.seconds >= 10.0) {
        res.passed = false;
        res.details.push_back("grid eigensystem runtime exceeded 10 s");
    }
    return res;
}

// ---------------------------------------------------------------- criterion 2

CheckResult criterion2_characterization(std::uint64_t seed) {
    CheckResult res{2, "nullspace characterization, forward and converse", true, {}, 0};
    auto grid = parameter_grid();
    for (const auto& g : grid) {
        MomentSequence m = meixner_moments(FreeMeixnerSpec(g.b, g.c), 16);
        NullspaceReport rep = bochner_nullspace(m, 8);
        if (rep.dimension() != 1) {
            res.passed = false;
            res.details.push_back(g.tag() + ": nullspace dimension " +
                                  std::to_string(rep.dimension()) + " != 1");
            continue;
        }
        RatVec canon{Rat(1), g.b, g.c, -g.b, -(1 + 2 * g.c)};
        if (!in_nullspace({m, m}, canon, 8)) {
            res.passed = false;
            res.details.push_back(g.tag() + ": canonical coefficients not in nullspace");
        }
    }
    std::mt19937_64 gen(seed ^ 0x6d6f6d656e743200ULL);
    for (int trial = 0; trial < 50; ++trial) {
        const GridPoint& g = grid[trial % grid.size()];
        RatVec m = meixner_moments(FreeMeixnerSpec(g.b, g.c), 16).moments();
        Rat r = random_positive_rat(gen, 1, 997);
        if (r == 1) r = Rat(1, 2);
        m[4] += r;
        NullspaceReport rep = bochner_nullspace(MomentSequence(std::move(m)), 8);
        if (rep.dimension() != 0) {
            res.passed = false;
            res.details.push_back(g.tag() + " perturbed by " + rat_str(r) +
                                  ": nullspace dimension " + std::to_string(rep.dimension()));
        }
    }
    return res;
}

// ---------------------------------------------------------------- criterion 3

CheckResult criterion3_transforms() {
    CheckResult res{3, "Cauchy, Riccati and R-transform identities", true, {}, 0};
    for (const auto& g : parameter_grid()) {
        BochnerOperator Q = grid_operator(g);
        FormalPowerSeries cauchy = check_cauchy_identity(Q, 14);
        if (!cauchy.is_zero()) {
            res.passed = false;
            res.details.push_back(g.tag() + ": Cauchy residual nonzero");
        }
        FormalPowerSeries riccati = check_riccati_identity(Q, 14);
        if (!riccati.is_zero()) {
            res.passed = false;
            res.details.push_back(g.tag() + ": Riccati residual nonzero");
        }
        // (R(u) - m)/u = t + b (R - m) + (c/t)(R - m)^2 at m = 0, t = 1
        FormalPowerSeries R = r_transform(Q.mu, 12);
        int n = R.order();
        FormalPowerSeries rhs = (FormalPowerSeries::constant(Rat(1), n) + R * g.b +
                                 R * R * g.c).shifted(1);
        if (!(R - rhs).is_zero()) {
            res.passed = false;
            res.details.push_back(g.tag() + ": characteristic equation residual nonzero");
        }
    }
    return res;
}

// ---------------------------------------------------------------- criterion 4

CheckResult criterion4_closed_forms() {
    CheckResult res{4, "eigenfunction corrections match B(z) and C(z)", true, {}, 0};
    for (const auto& g : parameter_grid()) {
        if (g.c == 0) continue;
        BochnerOperator Q = grid_operator(g);
        EigenReport rep = eigensystem(Q, 10);
        if (!rep.closed_form_checked || !rep.beta_match || !rep.gamma_match) {
            res.passed = false;
            std::string what = !rep.beta_match ? "beta_n vs B(z)" : "gamma_n vs C(z)";
            res.details.push_back(g.tag() + ": " + what + " mismatch" +
                                  (Q.c + Q.e == 0 ? " (C(z) undefined: c + e = 0)" : ""));
        }
    }
    return res;
}

// ---------------------------------------------------------------- criterion 5

// A mu-orthogonal eigenfunction system, being monic with deg v_n = n, can
// only be the orthogonal polynomials of mu themselves. So orthogonality holds
// exactly when every P^mu_n is an eigenfunction; at the semicircular point it
// must, everywhere else some P_n with n <= 4 must fail. (The solver's
// free-coefficient convention cannot decide this: at c = 0 the shared
// eigenvalue makes x^3 and x^3 - 2x equally valid picks.)
CheckResult criterion5_orthogonality() {
    CheckResult res{5, "orthogonal eigenfunctions only at the semicircular point", true, {}, 0};
    for (const auto& g : parameter_grid()) {
        BochnerOperator Q = grid_operator(g);
        bool is_semicircular = (g.b == 0 && g.c == 0);
        int up_to = is_semicircular ? 6 : 4;
        JacobiParameters j = meixner_jacobi(FreeMeixnerSpec(g.b, g.c), 16);
        // a terminated sequence (c = -1, two atoms) defines P_n only up to the
        // atom count + 1; the failure shows up within that range
        if (j.terminated()) up_to = std::min(up_to, (int)j.beta().size());
        PolynomialSystem P = orthogonal_polys(j, up_to);
        bool all_eigen = true;
        for (int n = 0; n <= up_to; ++n) {
            Polynomial residual = apply_Q(Q, P[n]) - Q.eigenvalue_ladder(n) * P[n];
            if (!residual.is_zero()) all_eigen = false;
        }
        if (is_semicircular && !all_eigen) {
            res.passed = false;
            res.details.push_back("semicircular orthogonal polynomials are not all eigenfunctions");
        } else if (!is_semicircular && all_eigen) {
            res.passed = false;
            res.details.push_back(g.tag() + ": orthogonal polynomials diagonalize Q up to degree 4");
        }
        // pairwise check in the solver's convention, recorded for the report
        if (is_semicircular) {
            for (int n = 1; n <= up_to; ++n)
                for (int m = 0; m < n; ++m)
                    if (inner_product(Q.mu, P[n], P[m]) != 0) {
                        res.passed = false;
                        res.details.push_back("semicircular pair (" + std::to_string(m) + "," +
                                              std::to_string(n) + ") not orthogonal");
                    }
        }
    }
    return res;
}

// ---------------------------------------------------------------- criterion 6

CheckResult criterion6_two_measure(std::uint64_t seed) {
    CheckResult res{6, "two-measure operators, Phi-shift and H identities", true, {}, 0};
    std::mt19937_64 gen(seed ^ 0x74776f2d6d736465ULL);
    auto fail = [&](const std::string& msg) {
        res.passed = false;
        res.details.push_back(msg);
    };

    for (int trial = 0; trial < 20; ++trial) {
        JacobiParameters jnu = random_jacobi(gen, 12);
        Rat beta = random_rat(gen, -2, 2, 6);
        Rat gamma = random_positive_rat(gen, 3, 6);
        JacobiParameters jmu = phi_shift(jnu, beta, gamma);
        MomentSequence nu = jacobi_to_moments(jnu, 24);
        MomentSequence mu = jacobi_to_moments(jmu, 24);
        std::string tag = "trial " + std::to_string(trial);

        // (a) Q = L_nu L_mu - (1/gamma)(x - beta) L_mu fixes the P^mu_n
        BochnerOperator Q{Rat(1), Rat(0), Rat(0), beta / gamma, Rat(-1) / gamma, mu, nu};
        PolynomialSystem pmu = orthogonal_polys(jmu, 11);
        for (int n = 1; n <= 10; ++n) {
            if (!(apply_Q(Q, pmu[n]) == pmu[n] * (Rat(-1) / gamma)))
                fail(tag + " (a): Q[P_" + std::to_string(n) + "] != -P_n/gamma");
        }
        Polynomial f = random_poly(gen, 8);
        Polynomial expected = (Polynomial(functional(mu, f)) - f) * (Rat(1) / gamma);
        if (!(apply_Q(Q, f) == expected)) fail(tag + " (a): Q[f] != (mu[f] - f)/gamma");

        // (b) x P^nu_n = P^mu_{n+1} + beta P^nu_n + gamma P^tau_{n-1}
        RatVec tb(jnu.beta().begin() + 1, jnu.beta().end());
        RatVec tg(jnu.gamma().begin() + 1, jnu.gamma().end());
        JacobiParameters jtau(std::move(tb), std::move(tg));
        PolynomialSystem pnu = orthogonal_polys(jnu, 11);
        PolynomialSystem ptau = orthogonal_polys(jtau, 10);
        Polynomial x = Polynomial::monomial(1);
        for (int n = 0; n <= 10; ++n) {
            Polynomial rhs = pmu[n + 1] + beta * pnu[n];
            if (n >= 1) rhs = rhs + gamma * ptau[n - 1];
            if (!(x * pnu[n] == rhs))
                fail(tag + " (b): stripped-measure identity fails at n = " + std::to_string(n));
        }

        // (c) H residuals vanish iff mu = Phi_{beta,gamma}[nu]
        for (const Rat& r : check_H_identity({mu, nu}, 12, beta, gamma))
            if (r != 0) fail(tag + " (c): residual nonzero for the Phi pair");
        MomentSequence mu_wrong = jacobi_to_moments(phi_shift(jnu, beta + 1, gamma), 24);
        bool any_nonzero = false;
        for (const Rat& r : check_H_identity({mu_wrong, nu}, 12, beta, gamma))
            if (r != 0) any_nonzero = true;
        if (!any_nonzero) fail(tag + " (c): residuals all zero for a non-Phi pair");
    }

    // (d) Bernoulli nu admits operator coefficients for any mu
    for (int trial = 0; trial < 5; ++trial) {
        Rat b1 = random_rat(gen, -2, 2, 5), b2 = b1;
        while (b2 == b1) b2 = random_rat(gen, -2, 2, 5);
        Rat a1 = rat(1 + (long)(gen() % 9), 10);  // in (0,1)
        Rat a2 = 1 - a1;
        RatVec numom(11);
        for (int n = 0; n <= 10; ++n) numom[n] = a1 * pow_rat(b1, n) + a2 * pow_rat(b2, n);
        MomentSequence nu(std::move(numom));
        MomentSequence mu = jacobi_to_moments(random_jacobi(gen, 6), 10);
        RatVec coeffs{b1 * b2, -(b1 + b2), Rat(1), a1 * b2 + a2 * b1, Rat(-1)};
        if (!in_nullspace({mu, nu}, coeffs, 10))
            fail("(d): Bernoulli coefficients not in pair nullspace, trial " +
                 std::to_string(trial));
    }

    // (e) nu = delta_xi forces M_mu = (1 - xi z)/(1 - xi z - z^2)
    for (const Rat& xi : {Rat(0), Rat(1), Rat(-1, 2)}) {
        const int order = 12;
        FormalPowerSeries mnu = mgf(MomentSequence::point_mass(xi, order), order);
        // orthogonality constraints pin (a,b,c,d,e) = (-(c+e), -c xi, c, 0, e);
        // take c = 1, e = 0
        FormalPowerSeries denom = mnu.shifted(2) * Rat(-1) + mnu.shifted(1) * (-xi) + mnu;
        FormalPowerSeries recovered = reciprocal(denom);
        FormalPowerSeries closed =
            (FormalPowerSeries::constant(Rat(1), order) - FormalPowerSeries::identity(order) * xi) *
            reciprocal(FormalPowerSeries({Rat(1), -xi, Rat(-1)}, order));
        if (!(recovered - closed).is_zero())
            fail("(e): recovered M_mu wrong for xi = " + rat_str(xi));
        FormalPowerSeries via_phi =
            mgf(phi_shift(MomentSequence::point_mass(xi, order + 2), Rat(0), Rat(1)), order);
        if (!(via_phi - closed).is_zero())
            fail("(e): Phi_{0,1}[delta_xi] mgf disagrees for xi = " + rat_str(xi));
    }
    return res;
}

// ---------------------------------------------------------------- criterion 7

CheckResult criterion7_appell(std::uint64_t seed) {
    CheckResult res{7, "c-free Appell relations and orthogonality rigidity", true, {}, 0};
    std::mt19937_64 gen(seed ^ 0x617070656c6c3737ULL);
    for (int trial = 0; trial < 20; ++trial) {
        MeasurePair pair{jacobi_to_moments(random_jacobi(gen, 10), 18),
                         jacobi_to_moments(random_jacobi(gen, 10), 18)};
        PolynomialSystem A = cfree_appell(pair, 8);
        for (int n = 1; n <= 8; ++n) {
            if (!(apply_L(pair.nu, A[n]) == A[n - 1])) {
                res.passed = false;
                res.details.push_back("trial " + std::to_string(trial) + ": L_nu[A_" +
                                      std::to_string(n) + "] != A_" + std::to_string(n - 1));
            }
            if (functional(pair.mu, A[n]) != 0) {
                res.passed = false;
                res.details.push_back("trial " + std::to_string(trial) + ": mu[A_" +
                                      std::to_string(n) + "] != 0");
            }
        }
    }
    // orthogonal for nu semicircular, mu = Phi_{beta,gamma}[nu]
    for (int trial = 0; trial < 5; ++trial) {
        Rat mean = random_rat(gen, -2, 2, 4);
        Rat var = random_positive_rat(gen, 3, 4);
        Rat beta = random_rat(gen, -2, 2, 4), gamma = random_positive_rat(gen, 3, 4);
        RatVec sb(14, mean), sg(13, var);
        JacobiParameters jnu(std::move(sb), std::move(sg));
        JacobiParameters jmu = phi_shift(jnu, beta, gamma);
        MeasurePair pair{jacobi_to_moments(jmu, 16), jacobi_to_moments(jnu, 16)};
        PolynomialSystem A = cfree_appell(pair, 6);
        for (int n = 1; n <= 6; ++n)
            for (int m = 0; m < n; ++m)
                if (inner_product(pair.mu, A[n], A[m]) != 0) {
                    res.passed = false;
                    res.details.push_back("semicircular nu: <A_" + std::to_string(n) + ", A_" +
                                          std::to_string(m) + "> != 0");
                }
    }
    // and not orthogonal for nu = Marchenko-Pastur(1) (free Poisson)
    {
        RatVec pb{Rat(1)}, pg;
        for (int i = 0; i < 12; ++i) {
            pb.push_back(Rat(2));
            pg.push_back(Rat(1));
        }
        JacobiParameters jnu(std::move(pb), std::move(pg));
        JacobiParameters jmu = phi_shift(jnu, Rat(0), Rat(1));
        MeasurePair pair{jacobi_to_moments(jmu, 12), jacobi_to_moments(jnu, 12)};
        PolynomialSystem A = cfree_appell(pair, 4);
        bool found = false;
        for (int n = 1; n <= 4 && !found; ++n)
            for (int m = 0; m < n && !found; ++m)
                if (inner_product(pair.mu, A[n], A[m]) != 0) found = true;
        if (!found) {
            res.passed = false;
            res.details.push_back("Marchenko-Pastur nu: Appell system unexpectedly orthogonal");
        }
    }
    return res;
}

// ---------------------------------------------------------------- criterion 8

CheckResult criterion8_numerics() {
    CheckResult res{8, "densities, atoms, quadrature and analytic identities", true, {}, 0};
    auto fail = [&](const std::string& msg) {
        res.passed = false;
        res.details.push_back(msg);
    };
    std::vector<ClosedFormMeasure> reps;
    reps.push_back(closed_form_measure(FreeMeixnerSpec(Rat(0), Rat(0))));          // i
    reps.push_back(closed_form_measure("marchenko_pastur(1/2)",
                                       marchenko_pastur_coeffs(Rat(1, 2))));        // ii
    reps.push_back(closed_form_measure(FreeMeixnerSpec(Rat(0), Rat(-3, 4))));       // iii
    reps.push_back(closed_form_measure(FreeMeixnerSpec(Rat(2), Rat(1))));           // iv
    reps.push_back(closed_form_measure(FreeMeixnerSpec(Rat(0), Rat(1))));           // v
    reps.push_back(closed_form_measure(FreeMeixnerSpec(Rat(3), Rat(1))));           // vi

    for (const auto& cf : reps) {
        double mass = total_mass(cf.density);
        if (std::abs(mass - 1.0) > 1e-6)
            fail(cf.label + ": total mass " + std::to_string(mass));
        for (int k = 1; k <= 4; ++k) {
            double qm = density_moment(cf.density, k);
            if (std::abs(qm - to_double(cf.moments[k])) > 1e-6)
                fail(cf.label + ": moment " + std::to_string(k) + " off by " +
                     std::to_string(qm - to_double(cf.moments[k])));
        }
    }
    // the pinned Marchenko-Pastur(1/2) atom
    {
        const auto& atoms = reps[1].density.atoms;
        if (atoms.size() != 1 || std::abs(atoms[0].location.value()) > 1e-12 ||
            std::abs(atoms[0].weight.value() - 0.5) > 1e-6)
            fail("marchenko_pastur(1/2): expected a single atom of weight 1/2 at 0");
    }
    // analytic identities on atom-free representatives
    std::vector<ClosedFormMeasure> smooth{reps[0], reps[3], reps[4],
                                          closed_form_measure("free_binomial(3/2,3/2)",
                                                              free_binomial_coeffs(Rat(3, 2),
                                                                                   Rat(3, 2)))};
    for (const auto& cf : smooth) {
        if (!cf.density.atoms.empty()) {
            fail(cf.label + ": unexpected atoms on an atom-free representative");
            continue;
        }
        for (int k = 1; k <= 6; ++k) {
            double defect = check_conjugate(cf, k);
            if (defect > 1e-6)
                fail(cf.label + ": conjugate defect " + std::to_string(defect) + " at k = " +
                     std::to_string(k));
        }
        std::vector<Polynomial> fs{Polynomial::one(), Polynomial::monomial(1),
                                   Polynomial::monomial(2), Polynomial::monomial(3)};
        for (const auto& f : fs)
            for (const auto& g : fs) {
                double defect = check_A_symmetry(cf, f, g);
                if (defect > 1e-6)
                    fail(cf.label + ": symmetry defect " + std::to_string(defect));
            }
    }
    return res;
}

// ---------------------------------------------------------------- criterion 9

CheckResult criterion9_rmt(std::uint64_t seed) {
    CheckResult res{9, "random-matrix spectra against closed-form limits", true, {}, 0};
    auto t0 = std::chrono::steady_clock::now();
    auto fail = [&](const std::string& msg) {
        res.passed = false;
        res.details.push_back(msg);
    };
    const int trials = 20;
    CdfTable semicircle(closed_form_measure(FreeMeixnerSpec(Rat(0), Rat(0))).density);
    CdfTable mp_half(density_from_coefficients(marchenko_pastur_coeffs(Rat(1, 2))));
    CdfTable fb34(density_from_coefficients(free_binomial_coeffs(Rat(3, 4), Rat(3, 4))));

    auto mean_ks = [&](const std::string& model, int n, int k1, int k2,
                       const CdfTable& limit) {
        double acc = 0;
        for (int t = 0; t < trials; ++t) {
            std::uint64_t s = seed + 7919 * t;
            EnsembleSample sample = model == "gue"       ? sample_gue(n, s)
                                    : model == "wishart" ? sample_wishart(n, k1, s)
                                                         : sample_jacobi_ensemble(n, k1, k2, s);
            acc += ks_distance(sample, limit);
        }
        return acc / trials;
    };

    double gue512 = mean_ks("gue", 512, 0, 0, semicircle);
    if (gue512 >= 0.06) fail("GUE n=512 mean KS " + std::to_string(gue512) + " >= 0.06");
    double wis512 = mean_ks("wishart", 512, 256, 0, mp_half);
    if (wis512 >= 0.08) fail("Wishart n=512 mean KS " + std::to_string(wis512) + " >= 0.08");
    double jac256 = mean_ks("jacobi", 256, 192, 192, fb34);
    if (jac256 >= 0.10) fail("Jacobi n=256 mean KS " + std::to_string(jac256) + " >= 0.10");

    double gue64 = mean_ks("gue", 64, 0, 0, semicircle);
    double wis64 = mean_ks("wishart", 64, 32, 0, mp_half);
    double jac64 = mean_ks("jacobi", 64, 48, 48, fb34);
    if (!(gue512 < gue64)) fail("GUE KS not improving from n=64 to n=512");
    if (!(wis512 < wis64)) fail("Wishart KS not improving from n=64 to n=512");
    if (!(jac256 < jac64)) fail("Jacobi KS not improving from n=64 to n=256");

    std::ostringstream note;
    note << "mean KS: gue " << gue512 << " (n=64: " << gue64 << "), wishart " << wis512
         << " (n=64: " << wis64 << "), jacobi " << jac256 << " (n=64: " << jac64 << ")";
    if (res.passed) res.details.push_back(note.str());
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// --------------------------------------------------------------- criterion 10

CheckResult criterion10_oracles(std::uint64_t seed) {
    CheckResult res{10, "oracle equivalence: Motzkin paths and Lagrange inversion", true, {}, 0};
    std::mt19937_64 gen(seed ^ 0x6f7261636c653130ULL);
    for (int trial = 0; trial < 20; ++trial) {
        JacobiParameters j = random_jacobi(gen, 8);
        MomentSequence m = jacobi_to_moments(j, 8);
        for (int n = 0; n <= 8; ++n)
            if (m[n] != oracles::motzkin_moment(j, n)) {
                res.passed = false;
                res.details.push_back("trial " + std::to_string(trial) +
                                      ": Motzkin oracle disagrees at n = " + std::to_string(n));
            }
    }
    for (int trial = 0; trial < 20; ++trial) {
        RatVec c(11, Rat(0));
        for (int k = 1; k <= 10; ++k) c[k] = random_rat(gen, -3, 3, 5);
        if (c[1] == 0) c[1] = 1;
        FormalPowerSeries f(std::move(c), 10);
        if (!(revert(f) - oracles::lagrange_revert(f)).is_zero()) {
            res.passed = false;
            res.details.push_back("trial " + std::to_string(trial) +
                                  ": Newton and Lagrange reversion disagree");
        }
    }
    return res;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& log) {
    std::vector<CheckResult> out;
    auto want = [&](int id) { return opts.only == 0 || opts.only == id; };
    auto push = [&](CheckResult r) {
        log << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name;
        if (r.seconds > 0.5) log << " (" << r.seconds << " s)";
        log << "\n";
        for (const auto& d : r.details) log << "       " << d << "\n";
        out.push_back(std::move(r));
    };
    if (want(1)) push(criterion1_eigensystems());
    if (want(2)) push(criterion2_characterization(opts.seed));
    if (want(3)) push(criterion3_transforms());
    if (want(4)) push(criterion4_closed_forms());
    if (want(5)) push(criterion5_orthogonality());
    if (want(6)) push(criterion6_two_measure(opts.seed));
    if (want(7)) push(criterion7_appell(opts.seed));
    if (want(8)) push(criterion8_numerics());
    if (want(9) && opts.run_rmt) push(criterion9_rmt(opts.seed));
    if (want(10)) push(criterion10_oracles(opts.seed));
    return out;
}

bool report(const std::vector<CheckResult>& results, std::ostream& out) {
    bool ok = true;
    int failed = 0;
    for (const auto& r : results) {
        ok = ok && r.passed;
        failed += r.passed ? 0 : 1;
    }
    out << (ok ? "all acceptance checks passed"
               : std::to_string(failed) + " acceptance check(s) failed")
        << " (" << results.size() << " run)\n";
    return ok;
}

}  // namespace fm
