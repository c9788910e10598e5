#ifndef HULLCERT_SNR_HPP
#define HULLCERT_SNR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hullcert/hull.hpp"
#include "hullcert/matrix.hpp"

namespace hullcert {

class NotCertifiedError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class UnisignedInputError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotMemberError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A vector whose componentwise products x_i (Mx)_i all decide <= 0.
struct ReversalWitness {
    std::vector<double> x;
    std::vector<double> products;
};

/// Sign pattern a characterization theorem forces on a reversal witness.
struct SignPatternClaim {
    enum class Kind { MustBeZero, Unisigned, UnisignedWrtJ, StrictOrthant, StrictJOrthant } kind;
    IndexSet j;  // for the *WrtJ / *JOrthant kinds

    static SignPatternClaim must_be_zero() { return {Kind::MustBeZero, {}}; }
    static SignPatternClaim unisigned_() { return {Kind::Unisigned, {}}; }
    static SignPatternClaim unisigned_wrt(IndexSet j) { return {Kind::UnisignedWrtJ, std::move(j)}; }
    static SignPatternClaim strict_orthant() { return {Kind::StrictOrthant, {}}; }
    static SignPatternClaim strict_j_orthant(IndexSet j) { return {Kind::StrictJOrthant, std::move(j)}; }
};

/// Randomized search for a sign-reversed vector: mixes normal, heavy-tailed,
/// sparse, +-1, coordinate, and inverse-column candidates. Returns the first
/// nonzero x whose products all decide <= 0, or nullopt after `trials` draws.
std::optional<ReversalWitness> find_reversal(const Matrix& m, long trials, std::uint64_t seed,
                                             const Tolerance& tol = {});

/// Does x match the claimed sign pattern (tolerance-gated entry signs)?
bool check_conclusion(const std::vector<double>& x, const SignPatternClaim& claim,
                      const Tolerance& tol = {});

struct SnrViolation {
    std::vector<double> x;
    std::vector<double> products;
    std::string reason;
};

struct SnrReport {
    long trials = 0;
    long witnesses = 0;
    std::vector<SnrViolation> violations;        // capped; see violation_count
    long violation_count = 0;
    std::optional<bool> kernel_cone_empty;       // open-cone kernel condition (ap classes)
    std::optional<bool> image_cone_reachable;    // open-cone image condition (ap classes)

    bool ok() const {
        return violation_count == 0 && kernel_cone_empty.value_or(true) &&
               image_cone_reachable.value_or(true);
    }
};

/// Empirically validates the sign non-reversal characterization of the
/// claimed class on a matrix certified in that class (precondition; checked
/// against the minor/inverse predicates, which are the deciders). Every
/// reversal witness found must match the class conclusion:
///   p   -> no witness exists
///   n2  -> unisigned
///   n1  -> unisigned with respect to J
///   ap2 -> strictly one-signed, or zero when a component is zero
///   ap1 -> strictly in the J orthant pair, or zero when a component is zero
/// For ap classes the kernel / image open-cone conditions are also decided.
SnrReport verify_snr_theorem(const Matrix& m, const ClassSpec& claim, long trials,
                             std::uint64_t seed, const Tolerance& tol = {});

/// For a hull certified n2 and a non-unisigned x: the first index i with
/// x_i (I_z x)_i > 0, where z follows x's signs (such an index always exists).
std::optional<int> uniform_positivity_index(const IntervalHull& h, const std::vector<double>& x,
                                            const Tolerance& tol = {});

/// x_i (Cx)_i >= x_i (I_z x)_i - slack for all i, with z built from x's signs.
/// C must be a hull member.
bool pointwise_bound_check(const IntervalHull& h, const Matrix& c, const std::vector<double>& x,
                           const Tolerance& tol = {});

} // namespace hullcert

#endif
