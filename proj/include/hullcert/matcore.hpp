#ifndef HULLCERT_MATCORE_HPP
#define HULLCERT_MATCORE_HPP

#include <functional>
#include <vector>

#include "hullcert/matrix.hpp"

namespace hullcert {

/// Enumerating all principal minors is O(2^n); refuse above this dimension.
inline constexpr int kMinorCap = 16;

/// det(M) by LU factorization with partial pivoting; the 1x1 determinant is
/// the entry itself.
double determinant(const Matrix& m);

/// Submatrix with the given row and column index sets, in ascending order.
Matrix submatrix(const Matrix& m, const IndexSet& rows, const IndexSet& cols);

struct PrincipalMinor {
    IndexSet subset;
    double value;
};

/// Visits all 2^n - 1 nonempty principal minors in order of increasing subset
/// size, lexicographic within a size. The visitor returns false to stop early.
void for_each_principal_minor(const Matrix& m,
                              const std::function<bool(const IndexSet&, double)>& visit,
                              int cap = kMinorCap);

std::vector<PrincipalMinor> principal_minors(const Matrix& m, int cap = kMinorCap);

/// M^{-1} by LU with partial pivoting. A pivot inside the zero band (scaled by
/// the max entry of M) raises SingularMatrixError; a residual
/// ||M*Minv - Id||_max above 1e-6 * max(1, ||M||_max) raises IllConditionedError.
Matrix inverse(const Matrix& m, const Tolerance& tol = {});

/// Basis of the numerical kernel via row-echelon reduction with the tolerance
/// rule; empty iff M has full column rank.
std::vector<std::vector<double>> null_space_basis(const Matrix& m, const Tolerance& tol = {});

} // namespace hullcert

#endif
