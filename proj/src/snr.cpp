#include "hullcert/snr.hpp"

#include <algorithm>
#include <cmath>

#include "hullcert/lpfeas.hpp"
#include "hullcert/matcore.hpp"
#include "hullcert/rng.hpp"

namespace hullcert {
namespace {

// Per-component magnitude reference |x_i| * (|M| |x|)_i; products are judged
// against their own natural size so the decision is scale invariant.
std::vector<double> product_scales(const Matrix& m, const std::vector<double>& x) {
    std::vector<double> ax(x.size(), 0.0);
    for (int i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols(); ++j) s += std::abs(m(i, j)) * std::abs(x[static_cast<std::size_t>(j)]);
        ax[static_cast<std::size_t>(i)] = s * std::abs(x[static_cast<std::size_t>(i)]);
    }
    return ax;
}

bool is_reversal(const Matrix& m, const std::vector<double>& x, const Tolerance& tol,
                 std::vector<double>& products) {
    products = m * x;
    const auto scales = product_scales(m, x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        products[i] *= x[i];
        if (sign_of(products[i], scales[i], tol) == Sign3::Positive) return false;
    }
    return true;
}

bool is_zero_vector(const std::vector<double>& x) {
    for (double v : x)
        if (v != 0.0) return false;
    return true;
}

// Reversal sets can be thin cones; cycle through several candidate shapes.
std::vector<double> sample_candidate(std::mt19937_64& rng, long trial, int n,
                                     const std::optional<Matrix>& inv) {
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    switch (trial % 6) {
        case 0:
            for (auto& v : x) v = normal(rng);
            break;
        case 1: {  // sparse
            bool nonzero = false;
            for (auto& v : x)
                if (uniform01(rng) < 0.5) {
                    v = normal(rng);
                    nonzero = true;
                }
            if (!nonzero) x[rng() % static_cast<std::uint64_t>(n)] = normal(rng);
            break;
        }
        case 2:
            for (auto& v : x) v = uniform01(rng) < 0.5 ? -1.0 : 1.0;
            break;
        case 3:
            x[rng() % static_cast<std::uint64_t>(n)] = uniform01(rng) < 0.5 ? -1.0 : 1.0;
            break;
        case 4:
            if (inv) {
                const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
                const double s = uniform01(rng) < 0.5 ? -1.0 : 1.0;
                for (int r = 0; r < n; ++r) x[static_cast<std::size_t>(r)] = s * (*inv)(r, i);
                break;
            }
            [[fallthrough]];
        default:
            for (auto& v : x) v = cauchy(rng);
            break;
    }
    if (is_zero_vector(x)) x[0] = 1.0;
    // Unit max-norm: reversal is invariant under positive scaling, and
    // normalizing keeps the absolute epsilon from flooding tiny products.
    const double norm = max_abs(x);
    for (auto& v : x) v /= norm;
    return x;
}

std::vector<Sign3> entry_signs(const std::vector<double>& x, const Tolerance& tol) {
    const double scale = max_abs(x);
    std::vector<Sign3> s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = sign_of(x[i], scale, tol);
    return s;
}

bool all_in(const std::vector<Sign3>& s, Sign3 a, Sign3 b) {
    return std::all_of(s.begin(), s.end(), [&](Sign3 v) { return v == a || v == b; });
}

// z_i = +1 if x_i >= 0 (zero-band entries included), -1 if x_i < 0.
SignVector sign_rule(const std::vector<double>& x, const Tolerance& tol) {
    const auto s = entry_signs(x, tol);
    std::vector<int> z(x.size(), 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (s[i] == Sign3::Negative) z[i] = -1;
    return SignVector(std::move(z));
}

bool conclusion_for_claim(const ClassSpec& claim, const std::vector<double>& x,
                          const Tolerance& tol) {
    switch (claim.kind) {
        case ClassSpec::Kind::P:
            return false;  // a P-matrix admits no nonzero reversal at all
        case ClassSpec::Kind::N2:
            return check_conclusion(x, SignPatternClaim::unisigned_(), tol);
        case ClassSpec::Kind::N1:
            return check_conclusion(x, SignPatternClaim::unisigned_wrt(claim.j), tol);
        case ClassSpec::Kind::AP2:
            return check_conclusion(x, SignPatternClaim::strict_orthant(), tol) ||
                   check_conclusion(x, SignPatternClaim::must_be_zero(), tol);
        case ClassSpec::Kind::AP1:
            return check_conclusion(x, SignPatternClaim::strict_j_orthant(claim.j), tol) ||
                   check_conclusion(x, SignPatternClaim::must_be_zero(), tol);
        default:
            throw PreconditionError("sign non-reversal claims cover p, n2, n1, ap2, ap1 only");
    }
}

void check_ground_truth(const Matrix& m, const ClassSpec& claim, const Tolerance& tol) {
    const ClassVerdict v = classify_as(m, claim, tol);
    if (v.status != Status::Holds)
        throw PreconditionError("matrix is not certified in class '" + claim.to_string() + "'");
}

} // namespace

std::optional<ReversalWitness> find_reversal(const Matrix& m, long trials, std::uint64_t seed,
                                             const Tolerance& tol) {
    if (!m.square()) throw DimensionError("reversal search requires a square matrix");
    std::optional<Matrix> inv;
    try {
        inv = inverse(m, tol);
    } catch (const Error&) {
        inv.reset();
    }
    std::mt19937_64 rng(seed);
    std::vector<double> products;
    for (long t = 0; t < trials; ++t) {
        const std::vector<double> x = sample_candidate(rng, t, m.rows(), inv);
        if (is_reversal(m, x, tol, products)) return ReversalWitness{x, products};
    }
    return std::nullopt;
}

bool check_conclusion(const std::vector<double>& x, const SignPatternClaim& claim,
                      const Tolerance& tol) {
    const auto s = entry_signs(x, tol);
    const auto part = [&](const IndexSet& j, Sign3 a, Sign3 b, Sign3 ca, Sign3 cb) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            const bool in_j = j.contains(static_cast<int>(i));
            const Sign3 v = s[i];
            if (in_j ? (v != a && v != b) : (v != ca && v != cb)) return false;
        }
        return true;
    };
    switch (claim.kind) {
        case SignPatternClaim::Kind::MustBeZero:
            return all_in(s, Sign3::Zero, Sign3::Zero);
        case SignPatternClaim::Kind::Unisigned:
            return all_in(s, Sign3::Zero, Sign3::Positive) || all_in(s, Sign3::Zero, Sign3::Negative);
        case SignPatternClaim::Kind::UnisignedWrtJ:
            return part(claim.j, Sign3::Negative, Sign3::Zero, Sign3::Positive, Sign3::Zero) ||
                   part(claim.j, Sign3::Positive, Sign3::Zero, Sign3::Negative, Sign3::Zero);
        case SignPatternClaim::Kind::StrictOrthant:
            return all_in(s, Sign3::Positive, Sign3::Positive) ||
                   all_in(s, Sign3::Negative, Sign3::Negative);
        case SignPatternClaim::Kind::StrictJOrthant:
            return part(claim.j, Sign3::Positive, Sign3::Positive, Sign3::Negative, Sign3::Negative) ||
                   part(claim.j, Sign3::Negative, Sign3::Negative, Sign3::Positive, Sign3::Positive);
    }
    throw Error("unhandled sign pattern claim");
}

SnrReport verify_snr_theorem(const Matrix& m, const ClassSpec& claim, long trials,
                             std::uint64_t seed, const Tolerance& tol) {
    if (!m.square()) throw DimensionError("sign non-reversal checks need a square matrix");
    if (claim.kind == ClassSpec::Kind::SP || claim.kind == ClassSpec::Kind::MSP)
        throw PreconditionError("sign non-reversal claims cover p, n2, n1, ap2, ap1 only");
    check_ground_truth(m, claim, tol);

    SnrReport report;
    report.trials = trials;

    std::optional<Matrix> inv;
    try {
        inv = inverse(m, tol);
    } catch (const Error&) {
        inv.reset();
    }
    std::mt19937_64 rng(seed);
    std::vector<double> products;
    for (long t = 0; t < trials; ++t) {
        const std::vector<double> x = sample_candidate(rng, t, m.rows(), inv);
        if (!is_reversal(m, x, tol, products)) continue;
        ++report.witnesses;
        if (!conclusion_for_claim(claim, x, tol)) {
            ++report.violation_count;
            if (report.violations.size() < 32)
                report.violations.push_back(
                    {x, products, "reversal witness breaks the " + claim.to_string() + " conclusion"});
        }
    }

    if (claim.kind == ClassSpec::Kind::AP2 || claim.kind == ClassSpec::Kind::AP1) {
        const int n = m.rows();
        const OrthantSigns dom = claim.kind == ClassSpec::Kind::AP2
                                     ? OrthantSigns::all_plus(n)
                                     : OrthantSigns::from_index_set(claim.j, n);
        report.kernel_cone_empty = !signed_null_vector_exists(m, dom).feasible;
        report.image_cone_reachable = signed_open_cone_feasible(m, dom, dom.negated()).feasible;
    }
    return report;
}

std::optional<int> uniform_positivity_index(const IntervalHull& h, const std::vector<double>& x,
                                            const Tolerance& tol) {
    CertStatus certified;
    try {
        certified = certify_n2(h, tol).status;
    } catch (const DiagonalPreconditionError&) {
        throw NotCertifiedError("hull does not certify as n2 (diagonal precondition violated)");
    }
    if (certified != CertStatus::Certified) throw NotCertifiedError("hull does not certify as n2");
    if (static_cast<int>(x.size()) != h.rows()) throw DimensionError("vector length mismatch");
    if (check_conclusion(x, SignPatternClaim::unisigned_(), tol))
        throw UnisignedInputError("x must be non-unisigned");

    // scale-free: the index only depends on the direction of x
    std::vector<double> u = x;
    const double norm = max_abs(u);
    for (auto& v : u) v /= norm;

    const Matrix iz = test_matrix_iz(h, sign_rule(u, tol));
    std::vector<double> products = iz * u;
    const auto scales = product_scales(iz, u);
    for (std::size_t i = 0; i < u.size(); ++i) {
        products[i] *= u[i];
        if (sign_of(products[i], scales[i], tol) == Sign3::Positive) return static_cast<int>(i);
    }
    return std::nullopt;
}

bool pointwise_bound_check(const IntervalHull& h, const Matrix& c, const std::vector<double>& x,
                           const Tolerance& tol) {
    if (!contains(h, c, tol)) throw NotMemberError("C is not a member of the hull");
    if (static_cast<int>(x.size()) != h.rows()) throw DimensionError("vector length mismatch");

    const Matrix iz = test_matrix_iz(h, sign_rule(x, tol));
    const std::vector<double> cx = c * x;
    const std::vector<double> izx = iz * x;
    const auto sc = product_scales(c, x);
    const auto si = product_scales(iz, x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lhs = x[i] * cx[i];
        const double rhs = x[i] * izx[i];
        const double slack = tol.abs_eps + tol.rel_eps * (sc[i] + si[i]);
        if (lhs < rhs - slack) return false;
    }
    return true;
}

} // namespace hullcert
