#include "hullcert/lpfeas.hpp"

#include <algorithm>
#include <cmath>

namespace hullcert {
namespace {

// Phase-1 simplex for {w >= 0 : E w >= f (Ge rows) / E w = f (Eq rows)}.
//
// Tableau layout: columns [original vars | surplus (one per Ge row) |
// artificials (one per row) | rhs]. Rows with negative rhs are negated first
// so the artificial basis is feasible. Bland's rule throughout (entering:
// lowest-index column with positive reduced cost; leaving: lowest basic index
// among minimizers of the ratio test), which guarantees termination.
//
// On infeasibility the simplex multipliers pi, read from the reduced-cost row
// under the artificial columns, give a certificate of the alternative system:
// E^T y <= 0, f^T y > 0, with y_i >= 0 on inequality rows (y free on equality
// rows). Row negations are undone when mapping pi back to y.

enum class RowKind { Ge, Eq };

constexpr double kPivTol = 1e-10;

struct Phase1Outcome {
    bool feasible = false;
    std::vector<double> w;  // original variables (feasible case)
    std::vector<double> y;  // row multipliers (infeasible case)
};

Phase1Outcome solve_phase1(const Matrix& e, const std::vector<double>& f,
                           const std::vector<RowKind>& kinds) {
    const int m = e.rows();
    const int nw = e.cols();

    int n_ge = 0;
    for (RowKind k : kinds)
        if (k == RowKind::Ge) ++n_ge;

    const int n_cols = nw + n_ge + m;  // vars, surplus, artificials
    const int rhs = n_cols;

    std::vector<std::vector<double>> t(static_cast<std::size_t>(m),
                                       std::vector<double>(static_cast<std::size_t>(n_cols + 1), 0.0));
    std::vector<bool> flipped(static_cast<std::size_t>(m), false);
    std::vector<int> surplus_col(static_cast<std::size_t>(m), -1);
    std::vector<int> basis(static_cast<std::size_t>(m));

    int next_surplus = nw;
    for (int i = 0; i < m; ++i) {
        const double sgn = f[static_cast<std::size_t>(i)] < 0.0 ? -1.0 : 1.0;
        flipped[static_cast<std::size_t>(i)] = sgn < 0.0;
        auto& row = t[static_cast<std::size_t>(i)];
        for (int j = 0; j < nw; ++j) row[static_cast<std::size_t>(j)] = sgn * e(i, j);
        if (kinds[static_cast<std::size_t>(i)] == RowKind::Ge) {
            surplus_col[static_cast<std::size_t>(i)] = next_surplus;
            row[static_cast<std::size_t>(next_surplus)] = -sgn;
            ++next_surplus;
        }
        const int art = nw + n_ge + i;
        row[static_cast<std::size_t>(art)] = 1.0;
        row[static_cast<std::size_t>(rhs)] = sgn * f[static_cast<std::size_t>(i)];
        basis[static_cast<std::size_t>(i)] = art;
    }

    // Reduced-cost row z_j - c_j for min(sum of artificials), artificial basis.
    std::vector<double> zrow(static_cast<std::size_t>(n_cols + 1), 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n_cols; ++j) zrow[static_cast<std::size_t>(j)] += t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (int i = 0; i < m; ++i) zrow[static_cast<std::size_t>(nw + n_ge + i)] -= 1.0;

    const long max_iters = 2000L * (m + n_cols + 1);
    for (long iter = 0;; ++iter) {
        if (iter > max_iters) throw Error("phase-1 simplex failed to terminate");

        int enter = -1;
        for (int j = 0; j < n_cols; ++j) {
            if (zrow[static_cast<std::size_t>(j)] > kPivTol) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;

        double min_ratio = 0.0;
        bool any = false;
        for (int i = 0; i < m; ++i) {
            const double a = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (a <= kPivTol) continue;
            const double ratio = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(rhs)] / a;
            if (!any || ratio < min_ratio) {
                min_ratio = ratio;
                any = true;
            }
        }
        if (!any) throw Error("phase-1 simplex met an unbounded direction");
        int leave = -1;
        for (int i = 0; i < m; ++i) {
            const double a = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (a <= kPivTol) continue;
            const double ratio = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(rhs)] / a;
            if (ratio <= min_ratio + kPivTol &&
                (leave < 0 || basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)]))
                leave = i;
        }

        auto& prow = t[static_cast<std::size_t>(leave)];
        const double piv = prow[static_cast<std::size_t>(enter)];
        for (int j = 0; j <= n_cols; ++j) prow[static_cast<std::size_t>(j)] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            auto& row = t[static_cast<std::size_t>(i)];
            const double fct = row[static_cast<std::size_t>(enter)];
            if (fct == 0.0) continue;
            for (int j = 0; j <= n_cols; ++j) row[static_cast<std::size_t>(j)] -= fct * prow[static_cast<std::size_t>(j)];
        }
        {
            const double fct = zrow[static_cast<std::size_t>(enter)];
            if (fct != 0.0)
                for (int j = 0; j <= n_cols; ++j) zrow[static_cast<std::size_t>(j)] -= fct * prow[static_cast<std::size_t>(j)];
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    double f_scale = 1.0;
    for (double v : f) f_scale = std::max(f_scale, std::abs(v));
    const double objective = zrow[static_cast<std::size_t>(rhs)];

    Phase1Outcome out;
    out.feasible = objective <= 1e-8 * f_scale * static_cast<double>(std::max(1, m));
    if (out.feasible) {
        out.w.assign(static_cast<std::size_t>(nw), 0.0);
        for (int i = 0; i < m; ++i) {
            const int b = basis[static_cast<std::size_t>(i)];
            if (b < nw) out.w[static_cast<std::size_t>(b)] = std::max(0.0, t[static_cast<std::size_t>(i)][static_cast<std::size_t>(rhs)]);
        }
    } else {
        out.y.assign(static_cast<std::size_t>(m), 0.0);
        for (int i = 0; i < m; ++i) {
            const double pi = 1.0 + zrow[static_cast<std::size_t>(nw + n_ge + i)];
            out.y[static_cast<std::size_t>(i)] = flipped[static_cast<std::size_t>(i)] ? -pi : pi;
        }
    }
    return out;
}

constexpr double kVerifyTol = 1e-7;

// Normalizes to ||y||_inf = 1 and clips roundoff negatives on rows that
// require y_i >= 0.
void tidy_dual(std::vector<double>& y, const std::vector<RowKind>& kinds) {
    const double norm = max_abs(y);
    if (norm > 0.0)
        for (double& v : y) v /= norm;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (kinds[i] == RowKind::Ge && y[i] < 0.0 && y[i] > -kVerifyTol) y[i] = 0.0;
}

bool dual_verifies(const Matrix& e, const std::vector<double>& f,
                   const std::vector<RowKind>& kinds, const std::vector<double>& y) {
    if (max_abs(y) <= 0.0) return false;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (kinds[i] == RowKind::Ge && y[i] < -kVerifyTol) return false;
    const double scale = std::max(1.0, e.max_abs() * max_abs(y));
    for (int j = 0; j < e.cols(); ++j) {
        double s = 0.0;
        for (int i = 0; i < e.rows(); ++i) s += e(i, j) * y[static_cast<std::size_t>(i)];
        if (s > kVerifyTol * scale) return false;
    }
    return dot(f, y) > kVerifyTol;
}

// Re-derives a dual certificate by solving the alternative system
// {E^T y <= 0, f^T y = 1, y_i >= 0 on Ge rows} as its own phase-1 problem.
// Used when the multipliers read off the tableau fail verification.
std::optional<std::vector<double>> solve_alternative(const Matrix& e, const std::vector<double>& f,
                                                     const std::vector<RowKind>& kinds) {
    const int m = e.rows();
    const int n = e.cols();
    int n_free = 0;
    for (RowKind k : kinds)
        if (k == RowKind::Eq) ++n_free;

    // Variables: y_i (>= 0) for Ge rows; y_i = u_i - v_i for Eq rows.
    const int nvars = m + n_free;
    Matrix sys(n + 1, nvars);
    std::vector<int> neg_col(static_cast<std::size_t>(m), -1);
    int next = m;
    for (int i = 0; i < m; ++i)
        if (kinds[static_cast<std::size_t>(i)] == RowKind::Eq) neg_col[static_cast<std::size_t>(i)] = next++;

    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) {
            sys(j, i) = -e(i, j);  // -(E^T y)_j >= 0
            if (neg_col[static_cast<std::size_t>(i)] >= 0) sys(j, neg_col[static_cast<std::size_t>(i)]) = e(i, j);
        }
    for (int i = 0; i < m; ++i) {
        sys(n, i) = f[static_cast<std::size_t>(i)];
        if (neg_col[static_cast<std::size_t>(i)] >= 0) sys(n, neg_col[static_cast<std::size_t>(i)]) = -f[static_cast<std::size_t>(i)];
    }

    std::vector<double> rhs(static_cast<std::size_t>(n + 1), 0.0);
    rhs[static_cast<std::size_t>(n)] = 1.0;
    std::vector<RowKind> row_kinds(static_cast<std::size_t>(n), RowKind::Ge);
    row_kinds.push_back(RowKind::Eq);

    Phase1Outcome alt = solve_phase1(sys, rhs, row_kinds);
    if (!alt.feasible) return std::nullopt;
    std::vector<double> y(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        y[static_cast<std::size_t>(i)] = alt.w[static_cast<std::size_t>(i)];
        if (neg_col[static_cast<std::size_t>(i)] >= 0) y[static_cast<std::size_t>(i)] -= alt.w[static_cast<std::size_t>(neg_col[static_cast<std::size_t>(i)])];
    }
    return y;
}

std::vector<double> certified_dual(const Matrix& e, const std::vector<double>& f,
                                   const std::vector<RowKind>& kinds, std::vector<double> y) {
    tidy_dual(y, kinds);
    if (dual_verifies(e, f, kinds, y)) return y;
    auto alt = solve_alternative(e, f, kinds);
    if (alt) {
        tidy_dual(*alt, kinds);
        if (dual_verifies(e, f, kinds, *alt)) return *alt;
    }
    throw Error("infeasible system but no dual certificate verified");
}

}  // namespace

FeasibilityResult strict_feasible_nonneg(const Matrix& a) {
    const int m = a.rows();
    std::vector<double> ones(static_cast<std::size_t>(m), 1.0);
    std::vector<RowKind> kinds(static_cast<std::size_t>(m), RowKind::Ge);

    Phase1Outcome p1 = solve_phase1(a, ones, kinds);
    FeasibilityResult res;
    if (p1.feasible) {
        const std::vector<double> ax = a * p1.w;
        for (double v : ax)
            if (v < 1.0 - kVerifyTol) throw Error("primal certificate failed verification");
        res.feasible = true;
        res.primal = std::move(p1.w);
    } else {
        res.feasible = false;
        res.dual = certified_dual(a, ones, kinds, std::move(p1.y));
    }
    return res;
}

FeasibilityResult signed_open_cone_feasible(const Matrix& a, const OrthantSigns& sigma_dom,
                                            const OrthantSigns& sigma_img) {
    const int m = a.rows(), n = a.cols();
    if (sigma_dom.size() != n || sigma_img.size() != m)
        throw DimensionError("orthant sign length mismatch");

    // Substitute u = D_dom x, u = 1 + v with v >= 0; constraints become
    // B v >= 1 - B 1 with B = D_img A D_dom.
    Matrix b(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            b(i, j) = sigma_img.sigma[static_cast<std::size_t>(i)] * a(i, j) *
                      sigma_dom.sigma[static_cast<std::size_t>(j)];
    std::vector<double> f(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < n; ++j) row_sum += b(i, j);
        f[static_cast<std::size_t>(i)] = 1.0 - row_sum;
    }
    std::vector<RowKind> kinds(static_cast<std::size_t>(m), RowKind::Ge);

    Phase1Outcome p1 = solve_phase1(b, f, kinds);
    FeasibilityResult res;
    if (p1.feasible) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            x[static_cast<std::size_t>(j)] = sigma_dom.sigma[static_cast<std::size_t>(j)] * (1.0 + p1.w[static_cast<std::size_t>(j)]);
        const std::vector<double> ax = a * x;
        for (int j = 0; j < n; ++j)
            if (sigma_dom.sigma[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)] < 1.0 - kVerifyTol)
                throw Error("signed cone primal failed verification");
        for (int i = 0; i < m; ++i)
            if (sigma_img.sigma[static_cast<std::size_t>(i)] * ax[static_cast<std::size_t>(i)] < 1.0 - kVerifyTol)
                throw Error("signed cone primal failed verification");
        res.feasible = true;
        res.primal = std::move(x);
    } else {
        res.feasible = false;
        res.dual = certified_dual(b, f, kinds, std::move(p1.y));
    }
    return res;
}

FeasibilityResult signed_null_vector_exists(const Matrix& a, const OrthantSigns& sigma) {
    const int m = a.rows(), n = a.cols();
    if (sigma.size() != n) throw DimensionError("orthant sign length mismatch");

    // x = D_sigma (1 + v), v >= 0; Ax = 0 becomes A D_sigma v = -A D_sigma 1.
    Matrix e(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) e(i, j) = a(i, j) * sigma.sigma[static_cast<std::size_t>(j)];
    std::vector<double> f(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < n; ++j) row_sum += e(i, j);
        f[static_cast<std::size_t>(i)] = -row_sum;
    }
    std::vector<RowKind> kinds(static_cast<std::size_t>(m), RowKind::Eq);

    Phase1Outcome p1 = solve_phase1(e, f, kinds);
    FeasibilityResult res;
    if (p1.feasible) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            x[static_cast<std::size_t>(j)] = sigma.sigma[static_cast<std::size_t>(j)] * (1.0 + p1.w[static_cast<std::size_t>(j)]);
        const std::vector<double> ax = a * x;
        const double scale = std::max(1.0, a.max_abs() * max_abs(x));
        if (max_abs(ax) > kVerifyTol * scale) throw Error("null-space primal failed verification");
        for (int j = 0; j < n; ++j)
            if (sigma.sigma[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)] < 1.0 - kVerifyTol)
                throw Error("null-space primal failed verification");
        res.feasible = true;
        res.primal = std::move(x);
    } else {
        res.feasible = false;
        res.dual = certified_dual(e, f, kinds, std::move(p1.y));
    }
    return res;
}

} // namespace hullcert
