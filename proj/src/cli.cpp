#include "hullcert/cli.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "hullcert/json_io.hpp"
#include "hullcert/snr.hpp"

namespace hullcert {
namespace {

std::string num(double v) { return nlohmann::json(v).dump(); }  // shortest round-trip

std::string vec_text(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ", ";
        s += num(v[i]);
    }
    return s + "]";
}

std::string witness_text(const Witness& w) {
    std::string s;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MinorWitness>) {
                s = "minor " + v.subset.label() + " = " + num(v.value);
            } else if constexpr (std::is_same_v<T, EntryWitness>) {
                s = "entry (" + std::to_string(v.row + 1) + "," + std::to_string(v.col + 1) +
                    ") = " + num(v.value);
            } else if constexpr (std::is_same_v<T, PartitionWitness>) {
                s = "J = " + v.j.label();
            } else if constexpr (std::is_same_v<T, ColumnWitness>) {
                s = "column " + std::to_string(v.col + 1) + " deletable";
            } else if constexpr (std::is_same_v<T, VectorWitness>) {
                s = (v.primal ? std::string("x = ") : std::string("y = ")) + vec_text(v.v);
            }
        },
        w);
    return s;
}

void print_matrix(std::ostream& out, const Matrix& m, const std::string& indent) {
    for (int i = 0; i < m.rows(); ++i) {
        out << indent << "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ", ";
            out << num(m(i, j));
        }
        out << "]\n";
    }
}

std::string status_text(Status s) {
    switch (s) {
        case Status::Holds: return "Holds";
        case Status::Fails: return "Fails";
        case Status::Indeterminate: return "Indeterminate";
    }
    return "";
}

std::string cert_status_text(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "Certified";
        case CertStatus::Refuted: return "Refuted";
        case CertStatus::Indeterminate: return "Indeterminate";
    }
    return "";
}

int exit_code(Status s) {
    return s == Status::Holds ? 0 : (s == Status::Fails ? 1 : 2);
}

int exit_code(CertStatus s) {
    return s == CertStatus::Certified ? 0 : (s == CertStatus::Refuted ? 1 : 2);
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream f(path);
    if (!f) throw Error("cannot write '" + path + "'");
    f << j.dump(2) << "\n";
}

void print_verdict_line(std::ostream& out, const ClassVerdict& v) {
    out << "status: " << status_text(v.status) << "\n";
    if (!std::holds_alternative<std::monostate>(v.witness))
        out << "witness: " << witness_text(v.witness) << "\n";
}

// Auto mode: one row per class from the summary table, category noted for the
// classes that split into categories.
void classify_auto(std::ostream& out, const Matrix& m, const Tolerance& tol,
                   std::optional<std::string> json_path) {
    nlohmann::json results;
    const auto emit = [&](const std::string& label, const std::string& key, const ClassVerdict& v,
                          const std::string& note) {
        out << label << std::string(label.size() < 24 ? 24 - label.size() : 1, ' ') << ": "
            << status_text(v.status);
        if (!note.empty()) out << "  (" << note << ")";
        else if (v.status != Status::Holds && !std::holds_alternative<std::monostate>(v.witness))
            out << "  (" << witness_text(v.witness) << ")";
        out << "\n";
        results[key] = to_json(v);
        if (!note.empty()) results[key]["note"] = note;
    };

    const auto category_note = [&](auto category_fn) -> std::string {
        try {
            const NCategory cat = category_fn();
            if (cat.kind == NCategory::Kind::SecondCategory) return "second category";
            return "first category, J = " + cat.j.label();
        } catch (const NoValidPartitionError&) {
            return "first category only after permutation";
        } catch (const IndeterminateSignError&) {
            return "category indeterminate";
        } catch (const Error&) {
            return "category undecided";
        }
    };

    if (m.square()) {
        emit("P-matrix", "p", is_p_matrix(m, tol), "");
        const ClassVerdict n = is_n_matrix(m, tol);
        emit("N-matrix", "n", n,
             n.status == Status::Holds ? category_note([&] { return n_category(m, tol); }) : "");
        if (m.rows() >= 2) {
            const ClassVerdict ap = is_almost_p(m, tol);
            emit("almost P-matrix", "ap", ap,
                 ap.status == Status::Holds ? category_note([&] { return almost_p_category(m, tol); })
                                            : "");
        }
    }
    emit("semipositive", "sp", is_semipositive(m, tol), "");
    emit("minimally semipositive", "msp", is_minimally_semipositive(m, tol), "");
    if (json_path) write_json_file(*json_path, results);
}

void print_certificate(std::ostream& out, const Certificate& cert) {
    out << "class: " << cert.target.to_string() << "\n";
    out << "status: " << cert_status_text(cert.status) << "\n";
    out << "tests: " << cert.tested.size() << "\n";
    if (cert.tested.size() <= 40) {
        for (const auto& t : cert.tested) {
            out << "  " << t;
            if (t == cert.failing_test && cert.status != CertStatus::Certified)
                out << (cert.status == CertStatus::Refuted ? "  (fails)" : "  (indeterminate)");
            out << "\n";
        }
    } else if (!cert.failing_test.empty()) {
        out << "  " << cert.failing_test
            << (cert.status == CertStatus::Refuted ? "  (fails)" : "  (indeterminate)") << "\n";
    }
    if (cert.refuting_member) {
        out << "refuting member:\n";
        print_matrix(out, *cert.refuting_member, "  ");
    }
    if (cert.status != CertStatus::Certified && !std::holds_alternative<std::monostate>(cert.detail.witness))
        out << "witness: " << witness_text(cert.detail.witness) << "\n";
    if (cert.feasible_x) out << "x: " << vec_text(*cert.feasible_x) << "\n";
}

struct Options {
    std::string input;
    std::string class_spec;
    std::string json_path;
    double tol_abs = Tolerance{}.abs_eps;
    double tol_rel = Tolerance{}.rel_eps;
    int max_n = kCertifyCap;
    int k = 1000;
    long trials = 10000;
    std::uint64_t seed = 0;

    Tolerance tol() const { return Tolerance{tol_abs, tol_rel}; }
    std::optional<std::string> json() const {
        return json_path.empty() ? std::nullopt : std::optional(json_path);
    }
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"matrix class certification over interval hulls"};
    app.require_subcommand(1);

    Options o;
    const auto add_common = [&](CLI::App* sub, bool with_max_n) {
        sub->add_option("--tol-abs", o.tol_abs, "absolute tolerance of the sign zero band");
        sub->add_option("--tol-rel", o.tol_rel, "relative tolerance of the sign zero band");
        sub->add_option("--json", o.json_path, "write the full JSON report to this path");
        if (with_max_n)
            sub->add_option("--max-n", o.max_n, "dimension cap for test-set enumeration");
    };

    CLI::App* classify = app.add_subcommand("classify", "decide class membership of one matrix");
    classify->add_option("matrix", o.input, "matrix JSON file")->required();
    classify->add_option("class", o.class_spec, "class spec (p|n2|n1:J|ap2|ap1:J|sp|msp); omit for all");
    add_common(classify, false);

    CLI::App* certify = app.add_subcommand("certify", "certify an interval hull for a class");
    certify->add_option("hull", o.input, "hull JSON file")->required();
    certify->add_option("class", o.class_spec, "class spec")->required();
    add_common(certify, true);

    CLI::App* validate = app.add_subcommand("sample-validate", "certify, then cross-check with hull samples");
    validate->add_option("hull", o.input, "hull JSON file")->required();
    validate->add_option("class", o.class_spec, "class spec")->required();
    validate->add_option("--k", o.k, "number of samples");
    validate->add_option("--seed", o.seed, "sampling seed")->required();
    add_common(validate, true);

    CLI::App* snr = app.add_subcommand("snr-verify", "empirically check the sign non-reversal property");
    snr->add_option("matrix", o.input, "matrix JSON file")->required();
    snr->add_option("class", o.class_spec, "class spec (p|n2|n1:J|ap2|ap1:J)")->required();
    snr->add_option("--trials", o.trials, "number of candidate vectors");
    snr->add_option("--seed", o.seed, "sampling seed")->required();
    add_common(snr, false);

    std::vector<const char*> argv{"hullcert"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 3;
    }

    try {
        if (classify->parsed()) {
            const Matrix m = load_matrix(o.input);
            out << "matrix: " << m.rows() << "x" << m.cols() << "\n";
            if (o.class_spec.empty()) {
                classify_auto(out, m, o.tol(), o.json());
                return 0;
            }
            const ClassSpec spec = ClassSpec::parse(o.class_spec);
            const ClassVerdict v = classify_as(m, spec, o.tol());
            out << "class: " << spec.to_string() << "\n";
            print_verdict_line(out, v);
            if (o.json()) {
                nlohmann::json j = to_json(v);
                j["class"] = spec.to_string();
                write_json_file(*o.json(), j);
            }
            return exit_code(v.status);
        }

        if (certify->parsed()) {
            const IntervalHull h = load_hull(o.input);
            const ClassSpec spec = ClassSpec::parse(o.class_spec);
            out << "hull: " << h.rows() << "x" << h.cols() << "\n";
            const Certificate cert = hullcert::certify(h, spec, o.tol(), o.max_n);
            print_certificate(out, cert);
            if (o.json()) write_json_file(*o.json(), to_json(cert));
            return exit_code(cert.status);
        }

        if (validate->parsed()) {
            const IntervalHull h = load_hull(o.input);
            const ClassSpec spec = ClassSpec::parse(o.class_spec);
            out << "hull: " << h.rows() << "x" << h.cols() << "\n";
            const ValidationReport report = sample_validate(h, spec, o.k, o.seed, o.tol(), o.max_n);
            print_certificate(out, report.certificate);
            out << "samples: " << report.samples << "  pass: " << report.passing
                << "  fail: " << report.failing << "  indeterminate: " << report.indeterminate << "\n";
            if (report.certificate.status == CertStatus::Refuted)
                out << "refuting member re-verified: " << (report.refuter_verified ? "yes" : "NO") << "\n";
            out << "oracle agreement: " << (report.ok() ? "yes" : "NO") << "\n";
            if (o.json()) write_json_file(*o.json(), to_json(report));
            if (!report.ok()) {
                err << "error: certificate and sampling oracle disagree\n";
                return 3;
            }
            return exit_code(report.certificate.status);
        }

        if (snr->parsed()) {
            const Matrix m = load_matrix(o.input);
            const ClassSpec spec = ClassSpec::parse(o.class_spec);
            out << "matrix: " << m.rows() << "x" << m.cols() << "\n";
            out << "claim: " << spec.to_string() << "\n";
            const SnrReport report = verify_snr_theorem(m, spec, o.trials, o.seed, o.tol());
            out << "trials: " << report.trials << "\n";
            out << "witnesses: " << report.witnesses << "\n";
            out << "violations: " << report.violation_count << "\n";
            if (report.kernel_cone_empty)
                out << "kernel cone empty: " << (*report.kernel_cone_empty ? "yes" : "NO") << "\n";
            if (report.image_cone_reachable)
                out << "image cone reachable: " << (*report.image_cone_reachable ? "yes" : "NO") << "\n";
            out << "result: " << (report.ok() ? "ok" : "VIOLATED") << "\n";
            if (o.json()) write_json_file(*o.json(), to_json(report));
            return report.ok() ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

} // namespace hullcert
