#include "feqs/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace feqs::linalg {

namespace {

struct Echelon {
    Matrix rows;                  // reduced rows, one per pivot
    std::vector<int> pivot_cols;  // column of each pivot row
};

Echelon reduce(Matrix m, int ncols, const NumericPolicy& policy) {
    Echelon e;
    size_t next = 0;  // first unprocessed row
    for (int col = 0; col < ncols && next < m.size(); ++col) {
        size_t best = next;
        double best_mag = 0.0;
        for (size_t r = next; r < m.size(); ++r) {
            const double mag = std::abs(m[r][col]);
            if (mag > best_mag) {
                best_mag = mag;
                best = r;
            }
        }
        if (best_mag <= policy.epsilon) continue;  // free column
        if (best_mag < 100.0 * policy.epsilon) throw IllConditioned(best_mag);
        std::swap(m[next], m[best]);
        const Complex inv = 1.0 / m[next][col];
        for (int j = 0; j < ncols; ++j) m[next][j] *= inv;
        m[next][col] = 1.0;  // exact pivot
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == next) continue;
            const Complex factor = m[r][col];
            if (std::abs(factor) == 0.0) continue;
            for (int j = 0; j < ncols; ++j) m[r][j] -= factor * m[next][j];
            m[r][col] = 0.0;
        }
        e.pivot_cols.push_back(col);
        ++next;
    }
    m.resize(next);
    e.rows = std::move(m);
    return e;
}

}  // namespace

std::vector<Row> nullspace_basis(Matrix m, int ncols, const NumericPolicy& policy) {
    const Echelon e = reduce(std::move(m), ncols, policy);
    std::vector<char> is_pivot(ncols, 0);
    for (int c : e.pivot_cols) is_pivot[c] = 1;
    std::vector<Row> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Row v(ncols, 0.0);
        v[free] = 1.0;
        for (size_t r = 0; r < e.rows.size(); ++r) v[e.pivot_cols[r]] = -e.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(Matrix m, int ncols, const NumericPolicy& policy) {
    return static_cast<int>(reduce(std::move(m), ncols, policy).pivot_cols.size());
}

LeastSquares least_squares_fit(const std::vector<CFunction>& basis, const CFunction& target) {
    const int k = static_cast<int>(basis.size());
    LeastSquares out;
    if (k == 0) {
        out.residual = max_abs(target);
        return out;
    }
    const int n = target.size();
    // normal equations G x = rhs with G = A^H A
    Matrix g(k, Row(k, 0.0));
    Row rhs(k, 0.0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            for (int x = 0; x < n; ++x) g[i][j] += std::conj(basis[i][x]) * basis[j][x];
        for (int x = 0; x < n; ++x) rhs[i] += std::conj(basis[i][x]) * target[x];
    }
    // Gaussian elimination with partial pivoting
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    for (int col = 0; col < k; ++col) {
        int best = col;
        for (int r = col + 1; r < k; ++r)
            if (std::abs(g[r][col]) > std::abs(g[best][col])) best = r;
        std::swap(g[col], g[best]);
        std::swap(rhs[col], rhs[best]);
        if (std::abs(g[col][col]) == 0.0)
            throw std::invalid_argument("least_squares_fit: dependent basis");
        for (int r = col + 1; r < k; ++r) {
            const Complex factor = g[r][col] / g[col][col];
            for (int j = col; j < k; ++j) g[r][j] -= factor * g[col][j];
            rhs[r] -= factor * rhs[col];
        }
    }
    out.coeffs.assign(k, 0.0);
    for (int r = k - 1; r >= 0; --r) {
        Complex acc = rhs[r];
        for (int j = r + 1; j < k; ++j) acc -= g[r][j] * out.coeffs[j];
        out.coeffs[r] = acc / g[r][r];
    }
    CFunction fitted = CFunction::zeros(n);
    for (int i = 0; i < k; ++i) fitted += out.coeffs[i] * basis[i];
    out.residual = max_abs_diff(fitted, target);
    return out;
}

}  // namespace feqs::linalg
