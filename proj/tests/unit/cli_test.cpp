#include "hjps/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int exit_code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = hjps::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << content;
    return path;
}

const std::string kSklyaninK1 = "n=4\n1/2*x0^2+1/2*x2^2+x1*x3\n1/2*x1^2+1/2*x3^2+x0*x2\n";
const std::string kBrieskorn = "n=5\nx0\nx1^2+x4^2\nx2^2+x3^2\n";

}  // namespace

TEST_CASE("basis payload") {
    const Run result = run_cli({"basis", "--n", "3", "--r", "2", "--json"});
    REQUIRE(result.exit_code == 0);
    const auto payload = nlohmann::json::parse(result.out);
    CHECK(payload["dimension"] == 10);
    CHECK(payload["invariant_dimension"] == 4);
    CHECK(payload["monomials"].size() == 10);
    CHECK(payload["degree"] == 6);
    CHECK(payload["tau_offset"] == 0);

    const Run with_orbits = run_cli({"basis", "--n", "4", "--r", "1", "--json", "--orbits"});
    REQUIRE(with_orbits.exit_code == 0);
    const auto orbit_payload = nlohmann::json::parse(with_orbits.out);
    CHECK(orbit_payload["orbits"].size() == 3);
    CHECK(orbit_payload["tau_offset"] == 2);

    const Run text = run_cli({"basis", "--n", "3", "--r", "1"});
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("dimension           4") != std::string::npos);
}

TEST_CASE("count methods agree") {
    long counts[4];
    int i = 0;
    for (const std::string method : {"closed-form", "triangle", "compositions", "monomial-filter"}) {
        const Run result = run_cli({"count", "--n", "3", "--r", "2", "--method", method});
        REQUIRE(result.exit_code == 0);
        const auto payload = nlohmann::json::parse(result.out);
        counts[i++] = payload["count"].get<long>();
        CHECK(payload["cross_check"]["agree"] == true);
    }
    CHECK(counts[0] == 10);
    CHECK(counts[1] == 10);
    CHECK(counts[2] == 10);
    CHECK(counts[3] == 10);

    CHECK(run_cli({"count", "--n", "4", "--r", "1", "--method", "closed-form"}).exit_code == 2);
    CHECK(run_cli({"count", "--n", "3", "--r", "1", "--method", "nonsense"}).exit_code == 2);
}

TEST_CASE("poincare payload") {
    const Run result = run_cli({"poincare", "--max-r", "4"});
    REQUIRE(result.exit_code == 0);
    const auto payload = nlohmann::json::parse(result.out);
    CHECK(payload["coefficients"] == nlohmann::json::array({1, 4, 10, 19, 31}));
    CHECK(payload["series"] == "(1+t^3+t^6)/(1-t^3)^3");
}

TEST_CASE("bracket subcommand") {
    const auto path = write_temp("hjps_cli_sklyanin.txt", kSklyaninK1);
    const Run table = run_cli({"bracket", "--casimirs", path.string()});
    REQUIRE(table.exit_code == 0);
    const auto payload = nlohmann::json::parse(table.out);
    CHECK(payload["n"] == 4);
    CHECK(payload["entries"].size() == 6);

    const Run pair = run_cli({"bracket", "--casimirs", path.string(), "--pair", "0", "1"});
    REQUIRE(pair.exit_code == 0);
    const auto single = nlohmann::json::parse(pair.out);
    CHECK(single["bracket"] == "-x0*x1+x2*x3");

    CHECK(run_cli({"bracket", "--casimirs", "/nonexistent/file.txt"}).exit_code == 2);
    CHECK(run_cli({"bracket", "--casimirs", path.string(), "--pair", "0", "9"}).exit_code == 2);
}

TEST_CASE("check subcommand verdicts") {
    const auto good = write_temp("hjps_cli_check_good.txt", kSklyaninK1);
    const Run pass = run_cli({"check", "--casimirs", good.string()});
    REQUIRE(pass.exit_code == 0);
    const auto payload = nlohmann::json::parse(pass.out);
    CHECK(payload["sigma_ok"] == true);
    CHECK(payload["tau_ok"] == true);
    CHECK(payload["degree_signature_ok"] == true);
    CHECK(payload["jacobi_ok"] == true);
    CHECK(payload["casimir_ok"] == true);
    CHECK(payload["failures"].empty());

    const Run flipped = run_cli({"check", "--casimirs", good.string(), "--sign", "-1"});
    CHECK(flipped.exit_code == 0);

    const auto bad = write_temp("hjps_cli_check_bad.txt", kBrieskorn);
    const Run fail = run_cli({"check", "--casimirs", bad.string()});
    CHECK(fail.exit_code == 1);
    const auto fail_payload = nlohmann::json::parse(fail.out);
    CHECK(fail_payload["sigma_ok"] == false);
    CHECK(!fail_payload["failures"].empty());

    CHECK(run_cli({"check", "--casimirs", good.string(), "--sign", "2"}).exit_code == 2);
}

TEST_CASE("dual subcommand") {
    const Run result =
        run_cli({"dual", "--gamma", "0", "--samples", "16", "--seed", "42", "--tol", "1e-8"});
    REQUIRE(result.exit_code == 0);
    const auto payload = nlohmann::json::parse(result.out);
    CHECK(payload["pass"] == true);
    CHECK(payload["residual"].get<double>() < 1e-8);
    CHECK(payload["euler_max"].get<double>() < 1e-10);
    CHECK(payload["gamma"] == "0");

    CHECK(run_cli({"dual", "--gamma", "-3", "--samples", "8", "--seed", "1"}).exit_code == 2);
    CHECK(run_cli({"dual", "--gamma", "x", "--samples", "8", "--seed", "1"}).exit_code == 2);

    // An unreachable tolerance makes the verdict a checker failure, not a usage error.
    const Run strict =
        run_cli({"dual", "--gamma", "1", "--samples", "12", "--seed", "3", "--tol", "1e-30"});
    CHECK(strict.exit_code == 1);
    CHECK(nlohmann::json::parse(strict.out)["pass"] == false);
}

TEST_CASE("polytope subcommand") {
    const Run result = run_cli({"polytope", "--n", "3", "--r", "2"});
    REQUIRE(result.exit_code == 0);
    const auto payload = nlohmann::json::parse(result.out);
    CHECK(payload["count"] == 10);
    CHECK(payload["weight_target"] == 6);
    CHECK(payload["vertices_verified"] == true);
    CHECK(payload["rows"].size() == 3);
    CHECK(payload["eliminated_rows"].size() == 4);

    const auto svg_path = std::filesystem::temp_directory_path() / "hjps_cli_triangle.svg";
    const Run plotted =
        run_cli({"polytope", "--n", "3", "--r", "2", "--plot", svg_path.string()});
    REQUIRE(plotted.exit_code == 0);
    std::ifstream svg(svg_path);
    std::string content((std::istreambuf_iterator<char>(svg)), std::istreambuf_iterator<char>());
    CHECK(content.rfind("<svg", 0) == 0);
    CHECK(content.find("lattice points: 10") != std::string::npos);

    const auto svg1_path = std::filesystem::temp_directory_path() / "hjps_cli_t1.svg";
    REQUIRE(run_cli({"polytope", "--n", "3", "--r", "1", "--plot", svg1_path.string()}).exit_code ==
            0);
    std::ifstream svg1(svg1_path);
    std::string content1((std::istreambuf_iterator<char>(svg1)), std::istreambuf_iterator<char>());
    CHECK(content1.find("lattice points: 4") != std::string::npos);

    const auto svg4_path = std::filesystem::temp_directory_path() / "hjps_cli_t4.svg";
    const Run plotted4 =
        run_cli({"polytope", "--n", "4", "--r", "2", "--plot", svg4_path.string()});
    CHECK(plotted4.exit_code == 0);
    std::ifstream svg4(svg4_path);
    std::string content4((std::istreambuf_iterator<char>(svg4)), std::istreambuf_iterator<char>());
    CHECK(content4.find("<line") != std::string::npos);
    // No wireframe edge may project to a point.
    std::size_t pos = 0;
    while ((pos = content4.find("<line", pos)) != std::string::npos) {
        const std::size_t end = content4.find("/>", pos);
        const std::string line = content4.substr(pos, end - pos);
        auto attr = [&line](const std::string& name) {
            const std::size_t at = line.find(name + "=\"") + name.size() + 2;
            return line.substr(at, line.find('"', at) - at);
        };
        CHECK((attr("x1") != attr("x2") || attr("y1") != attr("y2")));
        pos = end;
    }

    CHECK(run_cli({"polytope", "--n", "5", "--r", "1", "--plot", "/tmp/nope.svg"}).exit_code == 2);
}

TEST_CASE("payloads round-trip and reruns are identical") {
    const std::vector<std::vector<std::string>> invocations = {
        {"basis", "--n", "3", "--r", "2", "--json", "--orbits"},
        {"count", "--n", "4", "--r", "1", "--method", "compositions"},
        {"poincare", "--max-r", "6"},
        {"polytope", "--n", "4", "--r", "4"},
        {"dual", "--gamma", "1/2", "--samples", "12", "--seed", "9"},
    };
    for (const auto& args : invocations) {
        const Run first = run_cli(args);
        const Run second = run_cli(args);
        REQUIRE(first.exit_code == 0);
        CHECK(first.out == second.out);
        const auto payload = nlohmann::json::parse(first.out);
        CHECK(payload.dump(2) + "\n" == first.out);
    }
}

TEST_CASE("usage errors") {
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"basis", "--n", "3"}).exit_code == 2);        // missing --r
    CHECK(run_cli({"basis", "--n", "3", "--r", "0"}).exit_code == 2);
    CHECK(run_cli({"--help"}).exit_code == 0);
}
