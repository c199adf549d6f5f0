#include "fm/linalg.hpp"

#include <algorithm>

namespace fm {

namespace {

using ZVec = std::vector<mpz_class>;
using ZMatrix = std::vector<ZVec>;

// Clear denominators row by row; preserves row spans, hence rank, nullspace
// and determinant sign patterns (determinant handled separately).
ZMatrix to_integer_rows(const RatMatrix& m) {
    ZMatrix z(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        mpz_class lcm = 1;
        for (const auto& q : m[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        z[i].resize(m[i].size());
        for (size_t j = 0; j < m[i].size(); ++j) {
            mpz_class t = lcm / m[i][j].get_den();
            z[i][j] = m[i][j].get_num() * t;
        }
    }
    return z;
}

}  // namespace

Rat determinant(RatMatrix m) {
    const size_t n = m.size();
    if (n == 0) return Rat(1);
    // Scale rows to integers, run Bareiss, divide the scale back out.
    Rat scale(1);
    ZMatrix z(n);
    for (size_t i = 0; i < n; ++i) {
        mpz_class lcm = 1;
        for (const auto& q : m[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        scale *= Rat(lcm);
        z[i].resize(n);
        for (size_t j = 0; j < n; ++j) z[i][j] = m[i][j].get_num() * mpz_class(lcm / m[i][j].get_den());
    }
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (z[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && z[p][k] == 0) ++p;
            if (p == n) return Rat(0);
            std::swap(z[k], z[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = z[k][k] * z[i][j] - z[i][k] * z[k][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][k] = 0;
        }
        prev = z[k][k];
    }
    return Rat(sign * z[n - 1][n - 1]) / scale;
}

std::vector<RatVec> nullspace(const RatMatrix& m) {
    if (m.empty()) return {};
    const size_t rows = m.size(), cols = m[0].size();
    ZMatrix z = to_integer_rows(m);

    // Fraction-free forward elimination with column-ordered pivoting.
    std::vector<bool> row_used(rows, false);
    std::vector<int> pivot_row_of_col(cols, -1);
    mpz_class prev = 1;
    for (size_t c = 0; c < cols; ++c) {
        size_t p = rows;
        for (size_t r = 0; r < rows; ++r)
            if (!row_used[r] && z[r][c] != 0) { p = r; break; }
        if (p == rows) continue;
        row_used[p] = true;
        pivot_row_of_col[c] = static_cast<int>(p);
        // Bareiss update must rescale every remaining row, zeros included,
        // or the exact divisions below lose their minor-determinant invariant.
        for (size_t r = 0; r < rows; ++r) {
            if (row_used[r]) continue;
            const mpz_class mult = z[r][c];
            for (size_t j = 0; j < cols; ++j) {
                mpz_class t = z[p][c] * z[r][j] - mult * z[p][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                z[r][j] = t;
            }
        }
        prev = z[p][c];
    }

    // Back-substitute one basis vector per free column.
    std::vector<RatVec> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (pivot_row_of_col[fc] >= 0) continue;
        RatVec v(cols, Rat(0));
        v[fc] = 1;
        for (int c = static_cast<int>(fc) - 1; c >= 0; --c) {
            int pr = pivot_row_of_col[c];
            if (pr < 0) continue;
            Rat acc(0);
            for (size_t j = c + 1; j < cols; ++j)
                if (v[j] != 0) acc += Rat(z[pr][j]) * v[j];
            v[c] = -acc / Rat(z[pr][c]);
        }
        // normalize to a primitive integer vector, first nonzero positive
        mpz_class lcm = 1, gcd = 0;
        for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        for (auto& q : v) q *= Rat(lcm);
        for (const auto& q : v) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), q.get_num().get_mpz_t());
        if (gcd != 0)
            for (auto& q : v) q /= Rat(gcd);
        for (const auto& q : v) {
            if (q != 0) {
                if (sgn(q) < 0)
                    for (auto& w : v) w = -w;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve_linear(RatMatrix a, RatVec b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    LinearSolution out;
    std::vector<int> pivot_row_of_col(cols, -1);
    std::vector<bool> row_used(rows, false);
    for (size_t c = 0; c < cols; ++c) {
        size_t p = rows;
        for (size_t r = 0; r < rows; ++r)
            if (!row_used[r] && a[r][c] != 0) { p = r; break; }
        if (p == rows) {
            out.free_cols.push_back(static_cast<int>(c));
            continue;
        }
        row_used[p] = true;
        pivot_row_of_col[c] = static_cast<int>(p);
        for (size_t r = 0; r < rows; ++r) {
            if (r == p || a[r][c] == 0) continue;
            Rat f = a[r][c] / a[p][c];
            for (size_t j = c; j < cols; ++j) a[r][j] -= f * a[p][j];
            b[r] -= f * b[p];
        }
    }
    out.x.assign(cols, Rat(0));
    for (size_t c = 0; c < cols; ++c) {
        int pr = pivot_row_of_col[c];
        if (pr >= 0) out.x[c] = b[pr] / a[pr][c];
    }
    out.consistent = true;
    for (size_t r = 0; r < rows; ++r) {
        if (row_used[r]) continue;
        if (b[r] != 0) { out.consistent = false; break; }
    }
    return out;
}

}  // namespace fm
