#include "hullcert/json_io.hpp"

#include <cmath>
#include <fstream>

namespace hullcert {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
    json data = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        data.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ParseError("matrix JSON needs keys rows, cols, data");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw ParseError("matrix rows/cols must be integers");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    if (rows < 1 || cols < 1) throw ParseError("matrix rows/cols must be positive");
    const json& data = j["data"];
    if (!data.is_array() || static_cast<int>(data.size()) != rows)
        throw ParseError("matrix data must have exactly 'rows' rows");
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(rows) * cols);
    for (const json& row : data) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("matrix data is ragged");
        for (const json& e : row) {
            if (!e.is_number()) throw ParseError("matrix entries must be numbers");
            const double v = e.get<double>();
            if (!std::isfinite(v)) throw ParseError("matrix entries must be finite");
            entries.push_back(v);
        }
    }
    return Matrix(rows, cols, std::move(entries));
}

IntervalHull hull_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("hull JSON must be an object");
    const bool corner_form = j.contains("A") && j.contains("B");
    const bool center_form = j.contains("center") && j.contains("radius");
    if (corner_form == center_form)
        throw ParseError("hull JSON needs either keys A and B or keys center and radius");
    if (corner_form) return IntervalHull(matrix_from_json(j["A"]), matrix_from_json(j["B"]));

    const Matrix c = matrix_from_json(j["center"]);
    const Matrix r = matrix_from_json(j["radius"]);
    c.check_same_shape(r);
    for (int i = 0; i < r.rows(); ++i)
        for (int k = 0; k < r.cols(); ++k)
            if (r(i, k) < 0.0) throw ParseError("hull radius must be entrywise nonnegative");
    return IntervalHull(c - r, c + r);
}

namespace {

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Holds: return "Holds";
        case Status::Fails: return "Fails";
        case Status::Indeterminate: return "Indeterminate";
    }
    return "";
}

std::string cert_status_name(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "Certified";
        case CertStatus::Refuted: return "Refuted";
        case CertStatus::Indeterminate: return "Indeterminate";
    }
    return "";
}

json witness_to_json(const Witness& w) {
    json out;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MinorWitness>) {
                out = json{{"kind", "minor"}, {"indices", v.subset.one_based()}, {"value", v.value}};
            } else if constexpr (std::is_same_v<T, EntryWitness>) {
                out = json{{"kind", "entry"}, {"row", v.row + 1}, {"col", v.col + 1}, {"value", v.value}};
            } else if constexpr (std::is_same_v<T, PartitionWitness>) {
                out = json{{"kind", "partition"}, {"j", v.j.one_based()}};
            } else if constexpr (std::is_same_v<T, ColumnWitness>) {
                out = json{{"kind", "column"}, {"col", v.col + 1}};
            } else if constexpr (std::is_same_v<T, VectorWitness>) {
                out = json{{"kind", v.primal ? "primal" : "dual"}, {"v", v.v}};
            }
        },
        w);
    return out;
}

} // namespace

Matrix load_matrix(const std::string& path) { return matrix_from_json(read_file(path)); }

IntervalHull load_hull(const std::string& path) { return hull_from_json(read_file(path)); }

json to_json(const ClassVerdict& v) {
    json out{{"status", status_name(v.status)}};
    if (!std::holds_alternative<std::monostate>(v.witness)) out["witness"] = witness_to_json(v.witness);
    return out;
}

json to_json(const Certificate& c) {
    json out{{"class", c.target.to_string()}, {"status", cert_status_name(c.status)}};
    if (!c.failing_test.empty()) out["failing_test"] = c.failing_test;
    if (c.refuting_member) out["refuting_member"] = matrix_to_json(*c.refuting_member);
    if (c.feasible_x) out["x"] = *c.feasible_x;
    return out;
}

json to_json(const SnrReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back(json{{"x", v.x}, {"products", v.products}, {"reason", v.reason}});
    json out{{"trials", r.trials}, {"witnesses", r.witnesses}, {"violations", std::move(violations)}};
    if (r.kernel_cone_empty) out["kernel_cone_empty"] = *r.kernel_cone_empty;
    if (r.image_cone_reachable) out["image_cone_reachable"] = *r.image_cone_reachable;
    return out;
}

json to_json(const ValidationReport& r) {
    json out{{"certificate", to_json(r.certificate)},
             {"samples", r.samples},
             {"passing", r.passing},
             {"failing", r.failing},
             {"indeterminate", r.indeterminate},
             {"ok", r.ok()}};
    if (r.certificate.status == CertStatus::Refuted) out["refuter_verified"] = r.refuter_verified;
    if (!r.failing_sample_indices.empty()) out["failing_sample_indices"] = r.failing_sample_indices;
    return out;
}

} // namespace hullcert
