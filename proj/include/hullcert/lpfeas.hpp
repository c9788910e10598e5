#ifndef HULLCERT_LPFEAS_HPP
#define HULLCERT_LPFEAS_HPP

#include <optional>
#include <vector>

#include "hullcert/matrix.hpp"

namespace hullcert {

/// Outcome of a strict cone-feasibility question. Exactly one of primal/dual
/// is present: the primal is a point of the open system, the dual is a
/// theorem-of-alternatives certificate that none exists. Both sides are
/// verified by direct substitution before being returned.
struct FeasibilityResult {
    bool feasible = false;
    std::optional<std::vector<double>> primal;
    std::optional<std::vector<double>> dual;
};

/// Orthant membership pattern: sigma_i = +1 demands x_i > 0, -1 demands x_i < 0.
struct OrthantSigns {
    std::vector<int> sigma;

    static OrthantSigns all_plus(int n) { return {std::vector<int>(static_cast<std::size_t>(n), 1)}; }
    static OrthantSigns from_index_set(const IndexSet& j, int n) {
        OrthantSigns s{std::vector<int>(static_cast<std::size_t>(n), -1)};
        for (int i : j.indices()) s.sigma[static_cast<std::size_t>(i)] = 1;
        return s;
    }
    OrthantSigns negated() const {
        OrthantSigns s = *this;
        for (int& e : s.sigma) e = -e;
        return s;
    }
    int size() const { return static_cast<int>(sigma.size()); }
};

/// Does some x >= 0 satisfy Ax > 0?  Decided through the closed homogenization
/// {x >= 0, Ax >= 1} (equivalent by positive scaling). Infeasibility returns
/// y >= 0, y != 0 with A^T y <= 0.
FeasibilityResult strict_feasible_nonneg(const Matrix& a);

/// Does some x with sign pattern sigma_dom satisfy sign pattern sigma_img on Ax?
/// i.e. sigma_dom_i * x_i > 0 for all i and sigma_img_j * (Ax)_j > 0 for all j.
FeasibilityResult signed_open_cone_feasible(const Matrix& a, const OrthantSigns& sigma_dom,
                                            const OrthantSigns& sigma_img);

/// Does the null space of A meet the open orthant given by sigma?
/// i.e. some x with Ax = 0 and sigma_i * x_i > 0 for all i.
FeasibilityResult signed_null_vector_exists(const Matrix& a, const OrthantSigns& sigma);

} // namespace hullcert

#endif
