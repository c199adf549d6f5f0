#include "fm/rmt.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "fm/errors.hpp"

namespace fm {

namespace detail {

Eigen::MatrixXcd gue_matrix(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double sd = std::sqrt(1.0 / n);        // real diagonal
    const double so = std::sqrt(1.0 / (2.0 * n));  // Re/Im of off-diagonal
    Eigen::MatrixXcd x(n, n);
    for (int i = 0; i < n; ++i) {
        x(i, i) = std::complex<double>(normal(gen) * sd, 0.0);
        for (int j = i + 1; j < n; ++j) {
            std::complex<double> v(normal(gen) * so, normal(gen) * so);
            x(i, j) = v;
            x(j, i) = std::conj(v);
        }
    }
    return x;
}

}  // namespace detail

namespace {

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + h.rows());
    std::sort(ev.begin(), ev.end());
    return ev;
}

// W = X P X = B B^* with B the first k columns of Hermitian X.
Eigen::MatrixXcd wishart_matrix(int n, int k, std::mt19937_64::result_type seed) {
    Eigen::MatrixXcd x = detail::gue_matrix(n, seed);
    Eigen::MatrixXcd b = x.leftCols(k);
    return b * b.adjoint();
}

}  // namespace

EnsembleSample sample_gue(int n, std::uint64_t seed) {
    if (n < 1) throw Error("dimension must be positive");
    EnsembleSample s;
    s.model = "gue";
    s.seed = seed;
    s.eigenvalues = sorted_eigenvalues(detail::gue_matrix(n, seed));
    return s;
}

EnsembleSample sample_wishart(int n, int k, std::uint64_t seed) {
    if (n < 1) throw Error("dimension must be positive");
    if (k > n || k < 0) throw RankTooLarge();
    EnsembleSample s;
    s.model = "wishart";
    s.seed = seed;
    if (k == 0) {
        s.eigenvalues.assign(n, 0.0);
        return s;
    }
    s.eigenvalues = sorted_eigenvalues(wishart_matrix(n, k, seed));
    return s;
}

EnsembleSample sample_jacobi_ensemble(int n, int k1, int k2, std::uint64_t seed) {
    if (n < 1) throw Error("dimension must be positive");
    if (k1 > n || k2 > n || k1 < 0 || k2 < 0) throw RankTooLarge();
    if (k1 + k2 < n) throw SingularSum();
    // independent Wishart factors from decorrelated seeds
    Eigen::MatrixXcd w1 = wishart_matrix(n, k1, seed * 0x9E3779B97F4A7C15ULL + 1);
    Eigen::MatrixXcd w2 = wishart_matrix(n, k2, seed * 0xC2B2AE3D27D4EB4FULL + 2);
    Eigen::MatrixXcd sum = w1 + w2;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sum);
    const auto& d = es.eigenvalues();
    if (d(0) <= 1e-12 * d(n - 1)) throw SingularSum();
    Eigen::VectorXd inv_sqrt(n);
    for (int i = 0; i < n; ++i) inv_sqrt(i) = 1.0 / std::sqrt(d(i));
    Eigen::MatrixXcd s_half = es.eigenvectors() * inv_sqrt.asDiagonal() *
                              es.eigenvectors().adjoint();
    Eigen::MatrixXcd j = s_half * w1 * s_half;
    j = 0.5 * (j + j.adjoint());  // remove roundoff asymmetry
    EnsembleSample s;
    s.model = "jacobi";
    s.seed = seed;
    s.eigenvalues = sorted_eigenvalues(j);
    return s;
}

double ks_distance(const EnsembleSample& sample, const CdfTable& limit, double snap_tol) {
    const auto& ev = sample.eigenvalues;
    const std::size_t n = ev.size();
    if (n == 0) return 1.0;
    auto snapped = [&](double x) {
        for (const auto& atom : limit.spec().atoms) {
            double loc = atom.location.value();
            if (std::abs(x - loc) <= snap_tol) return loc;
        }
        return x;
    };
    // compare per distinct value so shared jumps (atoms) line up correctly
    double d = 0.0;
    std::size_t i = 0;
    while (i < n) {
        double x = snapped(ev[i]);
        std::size_t j = i;
        while (j < n && snapped(ev[j]) == x) ++j;
        d = std::max(d, std::abs(j / double(n) - limit(x)));
        d = std::max(d, std::abs(i / double(n) - limit.left_limit(x)));
        i = j;
    }
    return d;
}

double ks_distance(const EnsembleSample& sample, const DensitySpec& limit, double snap_tol) {
    return ks_distance(sample, CdfTable(limit), snap_tol);
}

}  // namespace fm
