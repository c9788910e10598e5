#ifndef HULLCERT_TESTS_SUPPORT_HPP
#define HULLCERT_TESTS_SUPPORT_HPP

#include <random>
#include <stdexcept>
#include <vector>

#include "hullcert/classes.hpp"
#include "hullcert/matcore.hpp"
#include "hullcert/matrix.hpp"
#include "hullcert/rng.hpp"

namespace testsupport {

using hullcert::IndexSet;
using hullcert::Matrix;

// Independent determinant oracle: Laplace cofactor expansion along the first
// row. Exponential, fine for the n <= 7 oracles used in tests.
inline double det_cofactor(const Matrix& m) {
    const int n = m.rows();
    if (n == 1) return m(0, 0);
    double det = 0.0;
    for (int c = 0; c < n; ++c) {
        Matrix sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int jc = 0;
            for (int j = 0; j < n; ++j) {
                if (j == c) continue;
                sub(i - 1, jc++) = m(i, j);
            }
        }
        const double term = m(0, c) * det_cofactor(sub);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

// Brute-force N-matrix check via cofactor minors (no shared code with the
// LU-based predicates).
inline bool oracle_is_n_matrix(const Matrix& m) {
    const int n = m.rows();
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) idx.push_back(i);
        Matrix sub(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) sub(static_cast<int>(i), static_cast<int>(j)) = m(idx[i], idx[j]);
        if (det_cofactor(sub) >= 0.0) return false;
    }
    return true;
}

inline Matrix rand_matrix(std::mt19937_64& g, int rows, int cols, double lo, double hi) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = hullcert::uniform(g, lo, hi);
    return m;
}

inline IndexSet rand_proper_subset(std::mt19937_64& g, int n) {
    while (true) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (hullcert::uniform01(g) < 0.5) idx.push_back(i);
        if (!idx.empty() && static_cast<int>(idx.size()) < n) return IndexSet(idx);
    }
}

// Strictly diagonally dominant with positive diagonal; every principal
// submatrix inherits the pattern, so all principal minors are positive.
inline Matrix rand_p_matrix(std::mt19937_64& g, int n) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        Matrix m = rand_matrix(g, n, n, -1.0, 1.0);
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) row += std::abs(m(i, j));
            m(i, i) = row + hullcert::uniform(g, 0.5, 2.0);
        }
        if (hullcert::is_p_matrix(m).status == hullcert::Status::Holds) return m;
    }
    throw std::runtime_error("p-matrix generator exhausted its attempts");
}

// -s * (ones + (eps-1) I) has size-k principal minors
// (-1)^k s^k (k + eps - 1)(eps - 1)^(k-1), all negative for 0 < eps < 1;
// a small additive perturbation keeps the pattern.
inline Matrix rand_n2_matrix(std::mt19937_64& g, int n, double perturbation = 0.02) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        const double eps = hullcert::uniform(g, 0.3, 0.7);
        const double s = hullcert::uniform(g, 0.8, 1.6);
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m(i, j) = -s * (i == j ? eps : 1.0);
                m(i, j) += s * perturbation * hullcert::uniform(g, -1.0, 1.0);
            }
        if (hullcert::is_n2_matrix(m).status == hullcert::Status::Holds) return m;
    }
    throw std::runtime_error("n2 generator exhausted its attempts");
}

// Conjugating an all-negative N-matrix by diag(+-1) keeps every principal
// minor and flips exactly the cross-block entries positive.
inline Matrix rand_n1_matrix(std::mt19937_64& g, int n, const IndexSet& j) {
    const Matrix base = rand_n2_matrix(g, n);
    Matrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const double sr = j.contains(r) ? 1.0 : -1.0;
            const double sc = j.contains(c) ? 1.0 : -1.0;
            m(r, c) = sr * sc * base(r, c);
        }
    if (hullcert::is_n_first_wrt(m, j).status != hullcert::Status::Holds)
        throw std::runtime_error("n1 generator produced an out-of-class matrix");
    return m;
}

inline Matrix rand_ap2_matrix(std::mt19937_64& g, int n) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        const Matrix m = hullcert::inverse(rand_n2_matrix(g, n));
        if (hullcert::is_ap2_matrix(m).status == hullcert::Status::Holds) return m;
    }
    throw std::runtime_error("ap2 generator exhausted its attempts");
}

inline Matrix rand_ap1_matrix(std::mt19937_64& g, int n, const IndexSet& j) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        const Matrix m = hullcert::inverse(rand_n1_matrix(g, n, j));
        if (hullcert::is_ap1_wrt(m, j).status == hullcert::Status::Holds) return m;
    }
    throw std::runtime_error("ap1 generator exhausted its attempts");
}

// s I - N with N >= 0 and s above the max row sum: invertible with an
// entrywise nonnegative inverse.
inline Matrix rand_inverse_nonneg(std::mt19937_64& g, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = -hullcert::uniform(g, 0.0, 2.0);
    double max_row = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += -m(i, j);
        max_row = std::max(max_row, row);
    }
    const double s = max_row + hullcert::uniform(g, 0.5, 2.0);
    for (int i = 0; i < n; ++i) m(i, i) += s;
    return m;
}

} // namespace testsupport

#endif
