#ifndef HULLCERT_HULL_HPP
#define HULLCERT_HULL_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hullcert/classes.hpp"
#include "hullcert/matrix.hpp"

namespace hullcert {

/// The N-matrix hull procedures require max(a_ii, b_ii) < 0 for every i.
class DiagonalPreconditionError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Vector over {+1,-1}. The quotient representative used for test-matrix
/// enumeration has first entry +1 (negating z leaves the test matrix alone).
class SignVector {
public:
    explicit SignVector(std::vector<int> signs);
    static SignVector all_plus(int n);
    static SignVector from_index_set(const IndexSet& j, int n);  // +1 on J, -1 off J

    int size() const { return static_cast<int>(z_.size()); }
    int operator[](int i) const { return z_[static_cast<std::size_t>(i)]; }
    SignVector negated() const;
    SignVector canonical() const { return z_[0] < 0 ? negated() : *this; }
    std::string to_string() const;  // e.g. "+--+"
    bool operator==(const SignVector&) const = default;

private:
    std::vector<int> z_;
};

/// Entrywise interval of matrices spanned by A and B (no ordering assumed).
class IntervalHull {
public:
    IntervalHull(Matrix a, Matrix b);

    const Matrix& a() const { return a_; }
    const Matrix& b() const { return b_; }
    const Matrix& lower() const { return lower_; }  // entrywise min
    const Matrix& upper() const { return upper_; }  // entrywise max
    Matrix center() const;                          // (A+B)/2
    Matrix radius() const;                          // (upper-lower)/2

    int rows() const { return a_.rows(); }
    int cols() const { return a_.cols(); }
    bool square() const { return a_.square(); }

private:
    Matrix a_, b_, lower_, upper_;
};

/// The distinguished hull member with entries lower_ij where z_i z_j = +1 and
/// upper_ij where z_i z_j = -1 (center - D_z * radius * D_z, evaluated by
/// corner selection so structural identities hold exactly).
Matrix test_matrix_iz(const IntervalHull& h, const SignVector& z);

/// The distinguished hull member with upper entries on the J and J' diagonal
/// blocks and lower entries on the off blocks (center + I_J * radius * I_J).
Matrix test_matrix_ipj(const IntervalHull& h, const IndexSet& j);

/// Entrywise lower - band <= C <= upper + band.
bool contains(const IntervalHull& h, const Matrix& c, const Tolerance& tol = {});

/// Entrywise uniform draw from the hull; deterministic given the generator state.
Matrix sample(const IntervalHull& h, std::mt19937_64& rng);
Matrix sample(const IntervalHull& h, std::uint64_t seed);

struct SignExclusion {
    enum class Kind { None, PlusMinusE, PlusMinusEJ } kind = Kind::None;
    IndexSet j;

    static SignExclusion none() { return {}; }
    static SignExclusion plus_minus_e() { return {Kind::PlusMinusE, {}}; }
    static SignExclusion plus_minus_ej(IndexSet j) { return {Kind::PlusMinusEJ, std::move(j)}; }
};

/// Canonical representatives (z_1 = +1) of {+-1}^n modulo global sign, minus
/// the excluded pair: 2^(n-1) vectors for None, one fewer for either exclusion.
std::vector<SignVector> enumerate_test_signs(int n, const SignExclusion& exclude = {});

enum class CertStatus { Certified, Refuted, Indeterminate };

/// Enumerating certifiers run 2^(n-1) test matrices; refuse above this
/// dimension unless the caller raises the cap explicitly.
inline constexpr int kCertifyCap = 12;

/// Result of hull certification. Refuted always carries a hull member on
/// which the class predicate fails, plus the descriptor of the failing test.
struct Certificate {
    ClassSpec target;
    CertStatus status = CertStatus::Certified;
    std::string failing_test;                       // "z=+-", "corner=I_u", "J=...", "" if none
    std::optional<Matrix> refuting_member;
    ClassVerdict detail;                            // verdict behind the failure/indeterminacy
    std::optional<std::vector<double>> feasible_x;  // uniform witness for sp/msp
    std::vector<std::string> tested;                // descriptors in test order
};

Certificate certify_n2(const IntervalHull& h, const Tolerance& tol = {}, int max_n = kCertifyCap);
Certificate certify_n1(const IntervalHull& h, const IndexSet& j, const Tolerance& tol = {},
                       int max_n = kCertifyCap);
Certificate certify_ap2(const IntervalHull& h, const Tolerance& tol = {}, int max_n = kCertifyCap);
Certificate certify_ap1(const IntervalHull& h, const IndexSet& j, const Tolerance& tol = {},
                        int max_n = kCertifyCap);
Certificate certify_sp(const IntervalHull& h, const Tolerance& tol = {});
Certificate certify_msp(const IntervalHull& h, const Tolerance& tol = {});
Certificate certify_p(const IntervalHull& h, const Tolerance& tol = {}, int max_n = kCertifyCap);

/// Dispatch on the class spec (the J inside N1/AP1 specs is used).
Certificate certify(const IntervalHull& h, const ClassSpec& spec, const Tolerance& tol = {},
                    int max_n = kCertifyCap);

/// Certify, then draw k hull samples and run the class predicate on each.
/// A Certified verdict with a definitely failing sample is a theorem
/// violation / numerical escape and makes ok() false, as does a Refuted
/// verdict whose refuting member does not re-verify.
struct ValidationReport {
    Certificate certificate;
    int samples = 0;
    int passing = 0;
    int failing = 0;
    int indeterminate = 0;
    bool refuter_verified = true;
    std::vector<int> failing_sample_indices;  // first few

    bool ok() const {
        if (certificate.status == CertStatus::Certified) return failing == 0;
        if (certificate.status == CertStatus::Refuted) return refuter_verified;
        return true;
    }
};

ValidationReport sample_validate(const IntervalHull& h, const ClassSpec& spec, int k,
                                 std::uint64_t seed, const Tolerance& tol = {},
                                 int max_n = kCertifyCap);

} // namespace hullcert

#endif
