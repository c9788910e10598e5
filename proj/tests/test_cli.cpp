#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hullcert/cli.hpp"
#include "hullcert/json_io.hpp"

using namespace hullcert;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "hullcert_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string write_fixture(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream f(p);
    f << content;
    return p.string();
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains_line(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("matrix json round-trips and rejects malformed input") {
    const Matrix m{{1.5, -2.0}, {0.25, 8.0}};
    CHECK(matrix_from_json(matrix_to_json(m)) == m);

    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":2,"cols":2,"data":[[1,2],[3]]})")),
                    ParseError);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":1,"data":[["x"]]})")),
                    ParseError);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":0,"cols":1,"data":[]})")),
                    ParseError);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":1,"cols":1})")), ParseError);
}

TEST_CASE("hull json accepts corner and center-radius forms") {
    const auto corner = nlohmann::json::parse(
        R"({"A":{"rows":1,"cols":1,"data":[[1]]},"B":{"rows":1,"cols":1,"data":[[3]]}})");
    const IntervalHull h1 = hull_from_json(corner);
    CHECK(h1.lower() == Matrix{{1}});
    CHECK(h1.upper() == Matrix{{3}});

    const auto center = nlohmann::json::parse(
        R"({"center":{"rows":1,"cols":1,"data":[[2]]},"radius":{"rows":1,"cols":1,"data":[[1]]}})");
    const IntervalHull h2 = hull_from_json(center);
    CHECK(h2.lower() == Matrix{{1}});
    CHECK(h2.upper() == Matrix{{3}});

    const auto bad_radius = nlohmann::json::parse(
        R"({"center":{"rows":1,"cols":1,"data":[[2]]},"radius":{"rows":1,"cols":1,"data":[[-1]]}})");
    CHECK_THROWS_AS(hull_from_json(bad_radius), ParseError);
    CHECK_THROWS_AS(hull_from_json(nlohmann::json::parse(R"({"A":{}})")), ParseError);
}

TEST_CASE("classify auto mode mirrors the summary table") {
    const std::string id2 = write_fixture("id2.json", R"({"rows":2,"cols":2,"data":[[1,0],[0,1]]})");
    const CliResult r = cli({"classify", id2});
    CHECK(r.code == 0);
    CHECK(contains_line(r.out, "P-matrix"));
    CHECK(contains_line(r.out, "N-matrix"));
    CHECK(contains_line(r.out, "almost P-matrix"));
    CHECK(contains_line(r.out, "semipositive"));
    CHECK(contains_line(r.out, "minimally semipositive"));
    // identity: Holds for P, SP, MSP; Fails for N and almost P
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("P-matrix", 0) == 0 || contains_line(line, "semipositive"))
            CHECK(contains_line(line, "Holds"));
        if (line.rfind("N-matrix", 0) == 0 || line.rfind("almost P-matrix", 0) == 0)
            CHECK(contains_line(line, "Fails"));
    }
}

TEST_CASE("classify with an explicit class maps status to the exit code") {
    const std::string nmat =
        write_fixture("n1.json", R"({"rows":2,"cols":2,"data":[[-1,2],[2,-1]]})");
    CHECK(cli({"classify", nmat, "n1:1"}).code == 0);
    CHECK(cli({"classify", nmat, "p"}).code == 1);
    CHECK(cli({"classify", nmat, "n2"}).code == 1);

    const std::string zero_band =
        write_fixture("zb.json", R"({"rows":2,"cols":2,"data":[[1,0],[0,0]]})");
    CHECK(cli({"classify", zero_band, "p"}).code == 2);

    CHECK(cli({"classify", nmat, "nope"}).code == 3);
    CHECK(cli({"classify", scratch_dir().string() + "/missing.json", "p"}).code == 3);
    const std::string ragged = write_fixture("ragged.json", R"({"rows":2,"cols":2,"data":[[1,2],[3]]})");
    CHECK(cli({"classify", ragged, "p"}).code == 3);
}

TEST_CASE("certify reports the tested z set and exits by status") {
    const std::string good = write_fixture(
        "hull_n2.json",
        R"({"A":{"rows":2,"cols":2,"data":[[-1,-3],[-3,-1]]},"B":{"rows":2,"cols":2,"data":[[-1.1,-2.9],[-2.9,-1.1]]}})");
    const CliResult r = cli({"certify", good, "n2"});
    CHECK(r.code == 0);
    CHECK(contains_line(r.out, "status: Certified"));
    CHECK(contains_line(r.out, "tests: 1"));
    CHECK(contains_line(r.out, "z=+-"));

    const std::string bad = write_fixture(
        "hull_n2_refuted.json",
        R"({"A":{"rows":2,"cols":2,"data":[[-3,-2],[-2,-3]]},"B":{"rows":2,"cols":2,"data":[[-1,-1],[-1,-1]]}})");
    const fs::path json_out = scratch_dir() / "refuted.json";
    const CliResult r2 = cli({"certify", bad, "n2", "--json", json_out.string()});
    CHECK(r2.code == 1);
    CHECK(contains_line(r2.out, "status: Refuted"));

    std::ifstream jf(json_out);
    nlohmann::json report;
    jf >> report;
    REQUIRE(report.contains("refuting_member"));
    const Matrix member = matrix_from_json(report["refuting_member"]);
    CHECK(member == Matrix{{-3, -1}, {-1, -3}});

    // the emitted refuting member re-verifies as failing through classify
    const fs::path member_path = scratch_dir() / "member.json";
    {
        std::ofstream mf(member_path);
        mf << matrix_to_json(member).dump() << "\n";
    }
    CHECK(cli({"classify", member_path.string(), "n2"}).code == 1);

    // precondition violations exit 3
    const std::string diag = write_fixture(
        "hull_diag.json",
        R"({"A":{"rows":1,"cols":1,"data":[[1]]},"B":{"rows":1,"cols":1,"data":[[2]]}})");
    CHECK(cli({"certify", diag, "n2"}).code == 3);
}

TEST_CASE("sample-validate requires a seed and reports oracle agreement") {
    const std::string good = write_fixture(
        "hull_sv.json",
        R"({"A":{"rows":2,"cols":2,"data":[[-1,-3],[-3,-1]]},"B":{"rows":2,"cols":2,"data":[[-1.1,-2.9],[-2.9,-1.1]]}})");
    CHECK(cli({"sample-validate", good, "n2", "--k", "50"}).code == 3);  // missing --seed

    const CliResult r = cli({"sample-validate", good, "n2", "--k", "200", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(contains_line(r.out, "pass: 200"));
    CHECK(contains_line(r.out, "oracle agreement: yes"));
}

TEST_CASE("snr-verify reports witnesses and conditions") {
    const std::string ap1 = write_fixture("ap1.json", R"({"rows":2,"cols":2,"data":[[1,2],[2,1]]})");
    const CliResult r = cli({"snr-verify", ap1, "ap1:1", "--trials", "2000", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(contains_line(r.out, "violations: 0"));
    CHECK(contains_line(r.out, "kernel cone empty: yes"));
    CHECK(contains_line(r.out, "image cone reachable: yes"));
    CHECK(contains_line(r.out, "result: ok"));

    // claiming a class the matrix is not in is a precondition error
    CHECK(cli({"snr-verify", ap1, "p", "--trials", "100", "--seed", "5"}).code == 3);
    CHECK(cli({"snr-verify", ap1, "sp", "--trials", "100", "--seed", "5"}).code == 3);
}

TEST_CASE("reports are byte-identical across runs with the same inputs and seed") {
    const std::string hull = write_fixture(
        "hull_det.json",
        R"({"A":{"rows":2,"cols":2,"data":[[-1,-3],[-3,-1]]},"B":{"rows":2,"cols":2,"data":[[-1.1,-2.9],[-2.9,-1.1]]}})");
    const auto a = cli({"sample-validate", hull, "n2", "--k", "100", "--seed", "99"});
    const auto b = cli({"sample-validate", hull, "n2", "--k", "100", "--seed", "99"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);

    const std::string mat = write_fixture("det_m.json", R"({"rows":2,"cols":2,"data":[[-1,2],[2,-1]]})");
    const auto c = cli({"snr-verify", mat, "n1:1", "--trials", "500", "--seed", "4"});
    const auto d = cli({"snr-verify", mat, "n1:1", "--trials", "500", "--seed", "4"});
    CHECK(c.out == d.out);

    const auto e = cli({"classify", mat});
    const auto f = cli({"classify", mat});
    CHECK(e.out == f.out);
}

TEST_CASE("tolerance flags move the zero band") {
    const std::string near_zero =
        write_fixture("nz.json", R"({"rows":2,"cols":2,"data":[[1,0],[0,1e-10]]})");
    CHECK(cli({"classify", near_zero, "p"}).code == 2);  // 1e-10 sits in the default band
    CHECK(cli({"classify", near_zero, "p", "--tol-abs", "1e-12", "--tol-rel", "1e-12"}).code == 0);
}

TEST_CASE("the certification cap is a flag") {
    const std::string hull = write_fixture(
        "hull_cap.json",
        R"({"A":{"rows":2,"cols":2,"data":[[-1,-3],[-3,-1]]},"B":{"rows":2,"cols":2,"data":[[-1.1,-2.9],[-2.9,-1.1]]}})");
    CHECK(cli({"certify", hull, "n2", "--max-n", "1"}).code == 3);
    CHECK(cli({"certify", hull, "n2", "--max-n", "2"}).code == 0);
}

TEST_CASE("center-radius hull files are converted to corners") {
    const std::string cr = write_fixture(
        "hull_cr.json",
        R"({"center":{"rows":2,"cols":2,"data":[[-1.05,-2.95],[-2.95,-1.05]]},"radius":{"rows":2,"cols":2,"data":[[0.05,0.05],[0.05,0.05]]}})");
    const CliResult r = cli({"certify", cr, "n2"});
    CHECK(r.code == 0);
    CHECK(contains_line(r.out, "status: Certified"));
}

TEST_CASE("classify auto mode on a rectangular matrix lists only the cone classes") {
    const std::string tall =
        write_fixture("tall.json", R"({"rows":3,"cols":2,"data":[[1,0],[0,1],[1,1]]})");
    const CliResult r = cli({"classify", tall});
    CHECK(r.code == 0);
    CHECK_FALSE(contains_line(r.out, "P-matrix"));
    CHECK(contains_line(r.out, "semipositive"));
    CHECK(contains_line(r.out, "minimally semipositive"));
}

TEST_CASE("non-finite entries are rejected") {
    nlohmann::json j;
    j["rows"] = 1;
    j["cols"] = 1;
    j["data"] = nlohmann::json::array({nlohmann::json::array({1.0})});
    j["data"][0][0] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(matrix_from_json(j), ParseError);
}

TEST_CASE("verdict and certificate json use 1-based indices") {
    const ClassVerdict v = is_p_matrix(Matrix{{1, 2}, {2, 1}});
    const nlohmann::json j = to_json(v);
    CHECK(j["status"] == "Fails");
    CHECK(j["witness"]["kind"] == "minor");
    CHECK(j["witness"]["indices"] == nlohmann::json::array({1, 2}));
    CHECK(j["witness"]["value"] == -3.0);

    const ClassVerdict msp = is_minimally_semipositive(Matrix{{1, 1}, {1, 1}});
    CHECK(to_json(msp)["witness"]["col"] == 1);
}
