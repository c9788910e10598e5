#include "hullcert/hull.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hullcert/rng.hpp"

namespace hullcert {

SignVector::SignVector(std::vector<int> signs) : z_(std::move(signs)) {
    if (z_.empty()) throw Error("sign vector must be nonempty");
    for (int s : z_)
        if (s != 1 && s != -1) throw Error("sign vector entries must be +1 or -1");
}

SignVector SignVector::all_plus(int n) {
    return SignVector(std::vector<int>(static_cast<std::size_t>(n), 1));
}

SignVector SignVector::from_index_set(const IndexSet& j, int n) {
    std::vector<int> z(static_cast<std::size_t>(n), -1);
    for (int i : j.indices()) {
        if (i >= n) throw Error("index set out of range for sign vector");
        z[static_cast<std::size_t>(i)] = 1;
    }
    return SignVector(std::move(z));
}

SignVector SignVector::negated() const {
    std::vector<int> z = z_;
    for (int& s : z) s = -s;
    return SignVector(std::move(z));
}

std::string SignVector::to_string() const {
    std::string s;
    s.reserve(z_.size());
    for (int v : z_) s += v > 0 ? '+' : '-';
    return s;
}

IntervalHull::IntervalHull(Matrix a, Matrix b)
    : a_(std::move(a)), b_(std::move(b)), lower_(a_.rows(), a_.cols()), upper_(a_.rows(), a_.cols()) {
    a_.check_same_shape(b_);
    for (int i = 0; i < a_.rows(); ++i)
        for (int j = 0; j < a_.cols(); ++j) {
            lower_(i, j) = std::min(a_(i, j), b_(i, j));
            upper_(i, j) = std::max(a_(i, j), b_(i, j));
        }
}

Matrix IntervalHull::center() const { return 0.5 * (a_ + b_); }

Matrix IntervalHull::radius() const { return 0.5 * (upper_ - lower_); }

Matrix test_matrix_iz(const IntervalHull& h, const SignVector& z) {
    if (!h.square()) throw DimensionError("test matrices need a square hull");
    if (z.size() != h.rows()) throw DimensionError("sign vector length mismatch");
    const int n = h.rows();
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = z[i] * z[j] > 0 ? h.lower()(i, j) : h.upper()(i, j);
    return m;
}

Matrix test_matrix_ipj(const IntervalHull& h, const IndexSet& j) {
    if (!h.square()) throw DimensionError("test matrices need a square hull");
    const int n = h.rows();
    if (j.empty() || j.size() >= n || j[j.size() - 1] >= n)
        throw PreconditionError("J must be a nonempty proper subset of {1,...," + std::to_string(n) + "}");
    Matrix m(n, n);
    const Matrix center = h.center();
    const Matrix radius = h.radius();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const bool same_block = j.contains(r) == j.contains(c);
            m(r, c) = same_block ? h.upper()(r, c) : h.lower()(r, c);
            // cross-check the block form against center + I_J radius I_J
            const double arithmetic = center(r, c) + (same_block ? 1.0 : -1.0) * radius(r, c);
            if (std::abs(m(r, c) - arithmetic) >
                1e-12 * std::max(1.0, std::max(std::abs(m(r, c)), std::abs(arithmetic))))
                throw Error("block and diagonal-scaling constructions disagree");
        }
    return m;
}

bool contains(const IntervalHull& h, const Matrix& c, const Tolerance& tol) {
    h.a().check_same_shape(c);
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j) {
            const double lo = h.lower()(i, j), hi = h.upper()(i, j);
            const double band = tol.abs_eps + tol.rel_eps * std::max(std::abs(lo), std::abs(hi));
            if (c(i, j) < lo - band || c(i, j) > hi + band) return false;
        }
    return true;
}

Matrix sample(const IntervalHull& h, std::mt19937_64& rng) {
    Matrix m(h.rows(), h.cols());
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j) {
            const double lo = h.lower()(i, j), hi = h.upper()(i, j);
            if (lo == hi) {
                m(i, j) = lo;
            } else {
                m(i, j) = std::clamp(lo + uniform01(rng) * (hi - lo), lo, hi);
            }
        }
    return m;
}

Matrix sample(const IntervalHull& h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample(h, rng);
}

std::vector<SignVector> enumerate_test_signs(int n, const SignExclusion& exclude) {
    if (n < 1) throw DimensionError("sign enumeration needs n >= 1");
    if (n > 63) throw ComplexityError("sign enumeration capped far below n = 64");

    std::optional<SignVector> skip;
    if (exclude.kind == SignExclusion::Kind::PlusMinusE) skip = SignVector::all_plus(n);
    if (exclude.kind == SignExclusion::Kind::PlusMinusEJ)
        skip = SignVector::from_index_set(exclude.j, n).canonical();

    std::vector<SignVector> out;
    const std::uint64_t count = 1ULL << (n - 1);
    out.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        std::vector<int> z(static_cast<std::size_t>(n), 1);
        for (int i = 1; i < n; ++i)
            if ((bits >> (i - 1)) & 1ULL) z[static_cast<std::size_t>(i)] = -1;
        SignVector sv(std::move(z));
        if (skip && sv == *skip) continue;
        out.push_back(std::move(sv));
    }
    return out;
}

namespace {

using TestCase = std::pair<std::string, Matrix>;
using Predicate = std::function<ClassVerdict(const Matrix&)>;

void check_certify_cap(const IntervalHull& h, int max_n) {
    if (!h.square()) throw DimensionError("hull certification needs a square hull");
    if (h.rows() > max_n)
        throw ComplexityError("hull certification capped at n = " + std::to_string(max_n) +
                              " (got n = " + std::to_string(h.rows()) + "); raise the cap explicitly");
}

void check_diagonal_precondition(const IntervalHull& h) {
    const double scale = std::max(h.a().max_abs(), h.b().max_abs());
    for (int i = 0; i < h.rows(); ++i)
        if (sign_of(h.upper()(i, i), scale) != Sign3::Negative)
            throw DiagonalPreconditionError("max(a_ii, b_ii) < 0 required, violated at i = " +
                                            std::to_string(i + 1));
}

// Runs the test matrices in order. First definite failure refutes; otherwise
// the first zero-band test makes the certificate Indeterminate.
Certificate run_tests(ClassSpec target, const std::vector<TestCase>& tests, const Predicate& pred) {
    Certificate cert;
    cert.target = std::move(target);
    std::optional<std::size_t> first_indet;
    std::vector<ClassVerdict> verdicts;
    for (const auto& [descriptor, matrix] : tests) {
        cert.tested.push_back(descriptor);
        const ClassVerdict v = pred(matrix);
        verdicts.push_back(v);
        if (v.status == Status::Fails) {
            cert.status = CertStatus::Refuted;
            cert.failing_test = descriptor;
            cert.refuting_member = matrix;
            cert.detail = v;
            return cert;
        }
        if (v.status == Status::Indeterminate && !first_indet)
            first_indet = cert.tested.size() - 1;
    }
    if (first_indet) {
        cert.status = CertStatus::Indeterminate;
        cert.failing_test = cert.tested[*first_indet];
        cert.detail = verdicts[*first_indet];
        return cert;
    }
    cert.status = CertStatus::Certified;
    return cert;
}

std::vector<TestCase> iz_tests(const IntervalHull& h, const SignExclusion& exclude) {
    std::vector<TestCase> tests;
    for (const SignVector& z : enumerate_test_signs(h.rows(), exclude))
        tests.emplace_back("z=" + z.to_string(), test_matrix_iz(h, z));
    return tests;
}

} // namespace

Certificate certify_n2(const IntervalHull& h, const Tolerance& tol, int max_n) {
    check_certify_cap(h, max_n);
    check_diagonal_precondition(h);
    return run_tests({ClassSpec::Kind::N2, {}}, iz_tests(h, SignExclusion::plus_minus_e()),
                     [&](const Matrix& m) { return is_n2_matrix(m, tol); });
}

Certificate certify_n1(const IntervalHull& h, const IndexSet& j, const Tolerance& tol, int max_n) {
    check_certify_cap(h, max_n);
    check_diagonal_precondition(h);
    return run_tests({ClassSpec::Kind::N1, j}, iz_tests(h, SignExclusion::plus_minus_ej(j)),
                     [&](const Matrix& m) { return is_n_first_wrt(m, j, tol); });
}

Certificate certify_ap2(const IntervalHull& h, const Tolerance& tol, int max_n) {
    check_certify_cap(h, max_n);
    if (h.rows() < 2) throw DimensionError("almost P certification needs n >= 2");
    std::vector<TestCase> tests;
    tests.emplace_back("corner=I_u", h.upper());
    for (auto& t : iz_tests(h, SignExclusion::none())) tests.push_back(std::move(t));
    return run_tests({ClassSpec::Kind::AP2, {}}, tests,
                     [&](const Matrix& m) { return is_ap2_matrix(m, tol); });
}

Certificate certify_ap1(const IntervalHull& h, const IndexSet& j, const Tolerance& tol, int max_n) {
    check_certify_cap(h, max_n);
    if (h.rows() < 2) throw DimensionError("almost P certification needs n >= 2");
    std::vector<TestCase> tests;
    tests.emplace_back("J=" + j.label(), test_matrix_ipj(h, j));
    for (auto& t : iz_tests(h, SignExclusion::none())) tests.push_back(std::move(t));
    return run_tests({ClassSpec::Kind::AP1, j}, tests,
                     [&](const Matrix& m) { return is_ap1_wrt(m, j, tol); });
}

Certificate certify_sp(const IntervalHull& h, const Tolerance& tol) {
    Certificate cert;
    cert.target = {ClassSpec::Kind::SP, {}};
    cert.tested.push_back("corner=I_l");
    const ClassVerdict v = is_semipositive(h.lower(), tol);
    if (v.status == Status::Holds) {
        cert.status = CertStatus::Certified;
        cert.feasible_x = std::get<VectorWitness>(v.witness).v;
    } else {
        cert.status = CertStatus::Refuted;
        cert.failing_test = "corner=I_l";
        cert.refuting_member = h.lower();
        cert.detail = v;
    }
    return cert;
}

Certificate certify_msp(const IntervalHull& h, const Tolerance& tol) {
    Certificate cert;
    cert.target = {ClassSpec::Kind::MSP, {}};
    cert.tested.push_back("corner=I_l");
    const ClassVerdict lower_sp = is_semipositive(h.lower(), tol);
    if (lower_sp.status != Status::Holds) {
        cert.status = CertStatus::Refuted;
        cert.failing_test = "corner=I_l";
        cert.refuting_member = h.lower();
        cert.detail = lower_sp;
        return cert;
    }
    cert.tested.push_back("corner=I_u");
    const ClassVerdict upper_msp = is_minimally_semipositive(h.upper(), tol);
    if (upper_msp.status != Status::Holds) {
        cert.status = CertStatus::Refuted;
        cert.failing_test = "corner=I_u";
        cert.refuting_member = h.upper();
        cert.detail = upper_msp;
        return cert;
    }
    cert.status = CertStatus::Certified;
    cert.feasible_x = std::get<VectorWitness>(lower_sp.witness).v;
    return cert;
}

Certificate certify_p(const IntervalHull& h, const Tolerance& tol, int max_n) {
    check_certify_cap(h, max_n);
    return run_tests({ClassSpec::Kind::P, {}}, iz_tests(h, SignExclusion::none()),
                     [&](const Matrix& m) { return is_p_matrix(m, tol); });
}

Certificate certify(const IntervalHull& h, const ClassSpec& spec, const Tolerance& tol, int max_n) {
    switch (spec.kind) {
        case ClassSpec::Kind::P: return certify_p(h, tol, max_n);
        case ClassSpec::Kind::N2: return certify_n2(h, tol, max_n);
        case ClassSpec::Kind::N1: return certify_n1(h, spec.j, tol, max_n);
        case ClassSpec::Kind::AP2: return certify_ap2(h, tol, max_n);
        case ClassSpec::Kind::AP1: return certify_ap1(h, spec.j, tol, max_n);
        case ClassSpec::Kind::SP: return certify_sp(h, tol);
        case ClassSpec::Kind::MSP: return certify_msp(h, tol);
    }
    throw Error("unhandled class spec");
}

ValidationReport sample_validate(const IntervalHull& h, const ClassSpec& spec, int k,
                                 std::uint64_t seed, const Tolerance& tol, int max_n) {
    ValidationReport report;
    report.certificate = certify(h, spec, tol, max_n);
    report.samples = k;

    std::mt19937_64 rng(seed);
    for (int t = 0; t < k; ++t) {
        const Matrix c = sample(h, rng);
        switch (classify_as(c, spec, tol).status) {
            case Status::Holds: ++report.passing; break;
            case Status::Indeterminate: ++report.indeterminate; break;
            case Status::Fails:
                ++report.failing;
                if (report.failing_sample_indices.size() < 16) report.failing_sample_indices.push_back(t);
                break;
        }
    }

    if (report.certificate.status == CertStatus::Refuted) {
        const Matrix& member = *report.certificate.refuting_member;
        report.refuter_verified =
            contains(h, member, tol) && classify_as(member, spec, tol).status == Status::Fails;
    }
    return report;
}

} // namespace hullcert
