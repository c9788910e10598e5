#include "hullcert/matcore.hpp"

#include <algorithm>
#include <cmath>

namespace hullcert {

double determinant(const Matrix& m) {
    if (!m.square()) throw DimensionError("determinant requires a square matrix");
    const int n = m.rows();
    if (n == 1) return m(0, 0);

    Matrix a = m;
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
        if (a(p, k) == 0.0) return 0.0;
        if (p != k) {
            for (int j = k; j < n; ++j) std::swap(a(p, j), a(k, j));
            det = -det;
        }
        det *= a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

Matrix submatrix(const Matrix& m, const IndexSet& rows, const IndexSet& cols) {
    if (rows.empty() || cols.empty())
        throw DimensionError("submatrix index sets must be nonempty");
    if (rows[rows.size() - 1] >= m.rows() || cols[cols.size() - 1] >= m.cols())
        throw DimensionError("submatrix index out of range");
    Matrix s(rows.size(), cols.size());
    for (int i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
    return s;
}

void for_each_principal_minor(const Matrix& m,
                              const std::function<bool(const IndexSet&, double)>& visit,
                              int cap) {
    if (!m.square()) throw DimensionError("principal minors require a square matrix");
    const int n = m.rows();
    if (n > cap)
        throw ComplexityError("principal minor enumeration capped at n = " +
                              std::to_string(cap) + " (got n = " + std::to_string(n) + ")");

    std::vector<int> comb;
    for (int k = 1; k <= n; ++k) {
        comb.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
        while (true) {
            IndexSet s(comb);
            if (!visit(s, determinant(submatrix(m, s, s)))) return;
            // advance to the next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

std::vector<PrincipalMinor> principal_minors(const Matrix& m, int cap) {
    std::vector<PrincipalMinor> out;
    for_each_principal_minor(
        m,
        [&](const IndexSet& s, double v) {
            out.push_back({s, v});
            return true;
        },
        cap);
    return out;
}

Matrix inverse(const Matrix& m, const Tolerance& tol) {
    if (!m.square()) throw DimensionError("inverse requires a square matrix");
    const int n = m.rows();
    const double scale = m.max_abs();

    // Gauss-Jordan on [M | Id] with partial pivoting.
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
        if (std::abs(a(p, k)) <= tol.abs_eps + tol.rel_eps * scale)
            throw SingularMatrixError("matrix is singular to working tolerance");
        if (p != k) {
            for (int j = 0; j < n; ++j) {
                std::swap(a(p, j), a(k, j));
                std::swap(inv(p, j), inv(k, j));
            }
        }
        const double piv = a(k, k);
        for (int j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            const double f = a(i, k);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }

    double residual = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = (i == j) ? -1.0 : 0.0;
            for (int k = 0; k < n; ++k) s += m(i, k) * inv(k, j);
            residual = std::max(residual, std::abs(s));
        }
    if (residual > 1e-6 * std::max(1.0, scale))
        throw IllConditionedError("inverse residual too large; matrix is ill-conditioned");
    return inv;
}

std::vector<std::vector<double>> null_space_basis(const Matrix& m, const Tolerance& tol) {
    const int rows = m.rows(), cols = m.cols();
    const double band = tol.abs_eps + tol.rel_eps * m.max_abs();

    // Reduce to RREF, tracking pivot columns.
    Matrix a = m;
    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        for (int i = r + 1; i < rows; ++i)
            if (std::abs(a(i, c)) > std::abs(a(p, c))) p = i;
        if (std::abs(a(p, c)) <= band) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        const double piv = a(r, c);
        for (int j = 0; j < cols; ++j) a(r, j) /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const double f = a(i, c);
            if (f == 0.0) continue;
            for (int j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<double>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<double> v(static_cast<std::size_t>(cols), 0.0);
        v[static_cast<std::size_t>(f)] = 1.0;
        for (std::size_t row = 0; row < pivot_col_of_row.size(); ++row)
            v[static_cast<std::size_t>(pivot_col_of_row[row])] = -a(static_cast<int>(row), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace hullcert
