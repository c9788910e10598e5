#ifndef HULLCERT_CLASSES_HPP
#define HULLCERT_CLASSES_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hullcert/matcore.hpp"
#include "hullcert/matrix.hpp"

namespace hullcert {

class NotNMatrixError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotAlmostPError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// The matrix has a positive entry but no index set puts it in the
/// negative-diagonal-blocks / positive-off-blocks form without permutation.
class NoValidPartitionError : public Error {
public:
    using Error::Error;
};

enum class Status { Holds, Fails, Indeterminate };

struct MinorWitness {
    IndexSet subset;
    double value;
};
struct EntryWitness {
    int row;  // 0-based
    int col;
    double value;
};
struct PartitionWitness {
    IndexSet j;
};
struct ColumnWitness {
    int col;  // 0-based
};
struct VectorWitness {
    bool primal;  // true: feasible x, false: dual certificate y
    std::vector<double> v;
};

using Witness =
    std::variant<std::monostate, MinorWitness, EntryWitness, PartitionWitness, ColumnWitness, VectorWitness>;

/// Tri-state verdict. Fails and Indeterminate always carry a witness for the
/// first violated (resp. first undecidable) condition; a definite violation
/// found later in the scan order beats an earlier zero-band value.
struct ClassVerdict {
    Status status = Status::Holds;
    Witness witness;

    static ClassVerdict holds(Witness w = {}) { return {Status::Holds, std::move(w)}; }
    static ClassVerdict fails(Witness w) { return {Status::Fails, std::move(w)}; }
    static ClassVerdict indeterminate(Witness w) { return {Status::Indeterminate, std::move(w)}; }
};

struct NCategory {
    enum class Kind { SecondCategory, FirstCategory } kind;
    IndexSet j;  // meaningful for FirstCategory; canonicalized so index 1 is in J

    static NCategory second() { return {Kind::SecondCategory, {}}; }
    static NCategory first(IndexSet j) { return {Kind::FirstCategory, std::move(j)}; }
    bool operator==(const NCategory&) const = default;
};

/// Class tags used by classification, hull certification and the CLI.
/// Spelled p | n2 | n1:J | ap2 | ap1:J | sp | msp with J a 1-based comma list.
struct ClassSpec {
    enum class Kind { P, N2, N1, AP2, AP1, SP, MSP } kind;
    IndexSet j;  // for N1 / AP1

    bool needs_j() const { return kind == Kind::N1 || kind == Kind::AP1; }
    std::string to_string() const;
    static ClassSpec parse(const std::string& text);
    bool operator==(const ClassSpec&) const = default;
};

// -- Single-matrix predicates -------------------------------------------------

/// All principal minors positive.
ClassVerdict is_p_matrix(const Matrix& m, const Tolerance& tol = {}, int cap = kMinorCap);

/// All principal minors negative.
ClassVerdict is_n_matrix(const Matrix& m, const Tolerance& tol = {}, int cap = kMinorCap);

/// Category of an N-matrix: second iff every entry is negative, else the
/// partition detected from row 1's sign pattern, verified blockwise.
/// Throws NotNMatrixError / NoValidPartitionError / IndeterminateSignError.
NCategory n_category(const Matrix& m, const Tolerance& tol = {}, int cap = kMinorCap);

/// N-matrix in block form for this exact J: M_JJ < 0, M_J'J' < 0, off-blocks > 0.
ClassVerdict is_n_first_wrt(const Matrix& m, const IndexSet& j, const Tolerance& tol = {},
                            int cap = kMinorCap);

/// All proper principal minors positive, determinant negative (n >= 2).
ClassVerdict is_almost_p(const Matrix& m, const Tolerance& tol = {}, int cap = kMinorCap);

/// Category of an almost P-matrix = category of its inverse as an N-matrix.
NCategory almost_p_category(const Matrix& m, const Tolerance& tol = {}, int cap = kMinorCap);

/// Some x >= 0 with Mx > 0 (LP-decided; witness carries x or the dual y).
ClassVerdict is_semipositive(const Matrix& m, const Tolerance& tol = {});

/// Semipositive and no single column deletion stays semipositive.
ClassVerdict is_minimally_semipositive(const Matrix& m, const Tolerance& tol = {});

/// Square route: invertible with entrywise nonnegative inverse.
ClassVerdict msp_square_crosscheck(const Matrix& m, const Tolerance& tol = {});

// -- Composite predicates (class + category in one verdict) -------------------

ClassVerdict is_n2_matrix(const Matrix& m, const Tolerance& tol = {}, int cap = kMinorCap);
ClassVerdict is_ap2_matrix(const Matrix& m, const Tolerance& tol = {}, int cap = kMinorCap);
ClassVerdict is_ap1_wrt(const Matrix& m, const IndexSet& j, const Tolerance& tol = {},
                        int cap = kMinorCap);

/// Dispatch on a class spec; the J inside the spec is validated against m.
ClassVerdict classify_as(const Matrix& m, const ClassSpec& spec, const Tolerance& tol = {},
                         int cap = kMinorCap);

} // namespace hullcert

#endif
