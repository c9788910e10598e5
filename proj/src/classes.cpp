#include "hullcert/classes.hpp"

#include <algorithm>
#include <cmath>

#include "hullcert/lpfeas.hpp"

namespace hullcert {
namespace {

// Magnitude reference for a size-k principal minor: max(1, ||M||_max)^k.
std::vector<double> minor_scales(const Matrix& m) {
    const double base = std::max(1.0, m.max_abs());
    std::vector<double> s(static_cast<std::size_t>(m.rows()) + 1, 1.0);
    for (std::size_t k = 1; k < s.size(); ++k) s[k] = s[k - 1] * base;
    return s;
}

Sign3 entry_sign(const Matrix& m, int i, int j, const Tolerance& tol) {
    return sign_of(m(i, j), m.max_abs(), tol);
}

// Scans all minors; a minor deciding `bad` fails immediately, a zero-band
// minor is remembered and reported as Indeterminate if nothing fails.
ClassVerdict all_minors_decide(const Matrix& m, Sign3 required, const Tolerance& tol, int cap) {
    if (!m.square()) throw DimensionError("class predicate requires a square matrix");
    const auto scales = minor_scales(m);
    std::optional<MinorWitness> fail;
    std::optional<MinorWitness> zero;
    for_each_principal_minor(
        m,
        [&](const IndexSet& s, double v) {
            const Sign3 sg = sign_of(v, scales[static_cast<std::size_t>(s.size())], tol);
            if (sg == Sign3::Zero) {
                if (!zero) zero = MinorWitness{s, v};
            } else if (sg != required) {
                fail = MinorWitness{s, v};
                return false;
            }
            return true;
        },
        cap);
    if (fail) return ClassVerdict::fails(*fail);
    if (zero) return ClassVerdict::indeterminate(*zero);
    return ClassVerdict::holds();
}

// Entrywise sign check against a required-sign function; same
// definite-failure-beats-zero-band policy, row-major order.
template <typename RequiredSign>
ClassVerdict all_entries_decide(const Matrix& m, RequiredSign required, const Tolerance& tol) {
    std::optional<EntryWitness> zero;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Sign3 sg = entry_sign(m, i, j, tol);
            if (sg == Sign3::Zero) {
                if (!zero) zero = EntryWitness{i, j, m(i, j)};
            } else if (sg != required(i, j)) {
                return ClassVerdict::fails(EntryWitness{i, j, m(i, j)});
            }
        }
    if (zero) return ClassVerdict::indeterminate(*zero);
    return ClassVerdict::holds();
}

void check_proper_subset(const IndexSet& j, int n) {
    if (j.empty() || j.size() >= n)
        throw PreconditionError("J must be a nonempty proper subset of {1,...," +
                                std::to_string(n) + "}");
    if (j[j.size() - 1] >= n) throw PreconditionError("J contains an index out of range");
}

ClassVerdict block_sign_check(const Matrix& m, const IndexSet& j, const Tolerance& tol) {
    return all_entries_decide(
        m,
        [&](int r, int c) {
            const bool same_block = j.contains(r) == j.contains(c);
            return same_block ? Sign3::Negative : Sign3::Positive;
        },
        tol);
}

} // namespace

std::string ClassSpec::to_string() const {
    switch (kind) {
        case Kind::P: return "p";
        case Kind::N2: return "n2";
        case Kind::AP2: return "ap2";
        case Kind::SP: return "sp";
        case Kind::MSP: return "msp";
        case Kind::N1:
        case Kind::AP1: {
            std::string s = kind == Kind::N1 ? "n1:" : "ap1:";
            const auto ob = j.one_based();
            for (std::size_t k = 0; k < ob.size(); ++k) {
                if (k > 0) s += ',';
                s += std::to_string(ob[k]);
            }
            return s;
        }
    }
    return "";
}

ClassSpec ClassSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);

    ClassSpec spec{};
    if (head == "p") spec.kind = Kind::P;
    else if (head == "n2") spec.kind = Kind::N2;
    else if (head == "n1") spec.kind = Kind::N1;
    else if (head == "ap2") spec.kind = Kind::AP2;
    else if (head == "ap1") spec.kind = Kind::AP1;
    else if (head == "sp") spec.kind = Kind::SP;
    else if (head == "msp") spec.kind = Kind::MSP;
    else throw Error("unknown class spec '" + text + "'");

    if (spec.needs_j()) {
        if (tail.empty())
            throw Error("class spec '" + head + "' needs indices, e.g. " + head + ":1,3");
        std::vector<int> idx;
        std::size_t pos = 0;
        while (pos <= tail.size()) {
            const auto comma = std::min(tail.find(',', pos), tail.size());
            const std::string tok = tail.substr(pos, comma - pos);
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw Error("bad index '" + tok + "' in class spec");
            }
            if (used != tok.size() || v < 1) throw Error("bad index '" + tok + "' in class spec");
            idx.push_back(v);
            pos = comma + 1;
        }
        spec.j = IndexSet::from_one_based(std::move(idx));
    } else if (!tail.empty()) {
        throw Error("class spec '" + head + "' takes no indices");
    }
    return spec;
}

ClassVerdict is_p_matrix(const Matrix& m, const Tolerance& tol, int cap) {
    return all_minors_decide(m, Sign3::Positive, tol, cap);
}

ClassVerdict is_n_matrix(const Matrix& m, const Tolerance& tol, int cap) {
    return all_minors_decide(m, Sign3::Negative, tol, cap);
}

NCategory n_category(const Matrix& m, const Tolerance& tol, int cap) {
    const ClassVerdict base = is_n_matrix(m, tol, cap);
    if (base.status != Status::Holds) throw NotNMatrixError("matrix is not an N-matrix");

    const int n = m.rows();
    bool any_positive = false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            switch (entry_sign(m, i, j, tol)) {
                case Sign3::Zero:
                    throw IndeterminateSignError("entry (" + std::to_string(i + 1) + "," +
                                                 std::to_string(j + 1) + ") is in the zero band");
                case Sign3::Positive: any_positive = true; break;
                case Sign3::Negative: break;
            }
        }
    if (!any_positive) return NCategory::second();

    // First category: indices sharing a block with 1 are those j with M_1j < 0.
    std::vector<int> j_members{0};
    for (int j = 1; j < n; ++j)
        if (entry_sign(m, 0, j, tol) == Sign3::Negative) j_members.push_back(j);
    if (static_cast<int>(j_members.size()) == n)
        throw NoValidPartitionError("positive entry present but no unpermuted block partition");
    IndexSet j(std::move(j_members));

    if (block_sign_check(m, j, tol).status != Status::Holds)
        throw NoValidPartitionError("positive entry present but no unpermuted block partition");
    return NCategory::first(std::move(j));
}

ClassVerdict is_n_first_wrt(const Matrix& m, const IndexSet& j, const Tolerance& tol, int cap) {
    if (!m.square()) throw DimensionError("class predicate requires a square matrix");
    check_proper_subset(j, m.rows());
    const ClassVerdict base = is_n_matrix(m, tol, cap);
    if (base.status != Status::Holds) return base;
    return block_sign_check(m, j, tol);
}

ClassVerdict is_almost_p(const Matrix& m, const Tolerance& tol, int cap) {
    if (!m.square()) throw DimensionError("class predicate requires a square matrix");
    const int n = m.rows();
    if (n < 2) throw DimensionError("almost P-matrices need n >= 2");
    const auto scales = minor_scales(m);
    std::optional<MinorWitness> fail;
    std::optional<MinorWitness> zero;
    for_each_principal_minor(
        m,
        [&](const IndexSet& s, double v) {
            const Sign3 required = s.size() == n ? Sign3::Negative : Sign3::Positive;
            const Sign3 sg = sign_of(v, scales[static_cast<std::size_t>(s.size())], tol);
            if (sg == Sign3::Zero) {
                if (!zero) zero = MinorWitness{s, v};
            } else if (sg != required) {
                fail = MinorWitness{s, v};
                return false;
            }
            return true;
        },
        cap);
    if (fail) return ClassVerdict::fails(*fail);
    if (zero) return ClassVerdict::indeterminate(*zero);
    return ClassVerdict::holds();
}

NCategory almost_p_category(const Matrix& m, const Tolerance& tol, int cap) {
    if (is_almost_p(m, tol, cap).status != Status::Holds)
        throw NotAlmostPError("matrix is not an almost P-matrix");
    return n_category(inverse(m, tol), tol, cap);
}

ClassVerdict is_semipositive(const Matrix& m, const Tolerance&) {
    FeasibilityResult r = strict_feasible_nonneg(m);
    if (r.feasible) return ClassVerdict::holds(VectorWitness{true, std::move(*r.primal)});
    return ClassVerdict::fails(VectorWitness{false, std::move(*r.dual)});
}

ClassVerdict is_minimally_semipositive(const Matrix& m, const Tolerance& tol) {
    const ClassVerdict sp = is_semipositive(m, tol);
    if (sp.status != Status::Holds) return sp;
    const int n = m.cols();
    for (int j = 0; j < n; ++j) {
        if (n == 1) break;  // a column-deleted 0-column matrix is not semipositive
        const Matrix mj = submatrix(m, IndexSet::full(m.rows()), IndexSet::of({j}).complement(n));
        if (is_semipositive(mj, tol).status == Status::Holds)
            return ClassVerdict::fails(ColumnWitness{j});
    }
    return ClassVerdict::holds(sp.witness);
}

ClassVerdict msp_square_crosscheck(const Matrix& m, const Tolerance& tol) {
    if (!m.square()) throw DimensionError("square crosscheck requires a square matrix");
    Matrix inv(1, 1);
    try {
        inv = inverse(m, tol);
    } catch (const SingularMatrixError&) {
        return ClassVerdict::fails(MinorWitness{IndexSet::full(m.rows()), determinant(m)});
    }
    // Inverse-nonnegative: zero-band entries count as nonnegative.
    for (int i = 0; i < inv.rows(); ++i)
        for (int j = 0; j < inv.cols(); ++j)
            if (entry_sign(inv, i, j, tol) == Sign3::Negative)
                return ClassVerdict::fails(EntryWitness{i, j, inv(i, j)});
    return ClassVerdict::holds();
}

ClassVerdict is_n2_matrix(const Matrix& m, const Tolerance& tol, int cap) {
    const ClassVerdict base = is_n_matrix(m, tol, cap);
    if (base.status != Status::Holds) return base;
    return all_entries_decide(m, [](int, int) { return Sign3::Negative; }, tol);
}

ClassVerdict is_ap2_matrix(const Matrix& m, const Tolerance& tol, int cap) {
    const ClassVerdict base = is_almost_p(m, tol, cap);
    if (base.status != Status::Holds) return base;
    return is_n2_matrix(inverse(m, tol), tol, cap);  // witness indices refer to the inverse
}

ClassVerdict is_ap1_wrt(const Matrix& m, const IndexSet& j, const Tolerance& tol, int cap) {
    if (!m.square()) throw DimensionError("class predicate requires a square matrix");
    check_proper_subset(j, m.rows());
    const ClassVerdict base = is_almost_p(m, tol, cap);
    if (base.status != Status::Holds) return base;
    return is_n_first_wrt(inverse(m, tol), j, tol, cap);
}

ClassVerdict classify_as(const Matrix& m, const ClassSpec& spec, const Tolerance& tol, int cap) {
    switch (spec.kind) {
        case ClassSpec::Kind::P: return is_p_matrix(m, tol, cap);
        case ClassSpec::Kind::N2: return is_n2_matrix(m, tol, cap);
        case ClassSpec::Kind::N1: return is_n_first_wrt(m, spec.j, tol, cap);
        case ClassSpec::Kind::AP2: return is_ap2_matrix(m, tol, cap);
        case ClassSpec::Kind::AP1: return is_ap1_wrt(m, spec.j, tol, cap);
        case ClassSpec::Kind::SP: return is_semipositive(m, tol);
        case ClassSpec::Kind::MSP: return is_minimally_semipositive(m, tol);
    }
    throw Error("unhandled class spec");
}

} // namespace hullcert
