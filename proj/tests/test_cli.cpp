#include "kseq/cli.hpp"
#include "kseq/error.hpp"
#include "kseq/matrix.hpp"
#include "kseq/numseq.hpp"
#include "kseq/seqgen.hpp"
#include "kseq/serialize.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace kseq;
using nlohmann::ordered_json;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) result.push_back(line);
    return result;
}

} // namespace

TEST_CASE("term") {
    CHECK(run({"term", "--family", "vdl-kseq", "-k", "3", "-i", "2", "-n", "5"}).out == "t2^3 + t3^2\n");
    CHECK(run({"term", "--family", "vdl", "-k", "3", "-n", "2"}).out == "0\n");
    CHECK(run({"term", "--family", "perrin-kseq", "-i", "1", "-n", "-2"}).out == "-t2^3/t3^2 + 3\n");
    CHECK(run({"term", "--family", "padovan", "-n", "8"}).out == "5\n");

    const Result json = run({"term", "--family", "kso-kv", "-k", "3", "-i", "2", "-n", "4", "--format", "json"});
    CHECK(json.status == 0);
    CHECK(json.out.rfind("{\"value\":\"2\"", 0) == 0);
    const auto j = ordered_json::parse(json.out);
    CHECK(j["family"] == "kso-kv");
    CHECK(j["i"] == 2);
}

TEST_CASE("term json round-trips the polynomial") {
    const Result r = run({"term", "--family", "perrin-kseq", "-k", "4", "-i", "3", "-n", "5", "--format", "json"});
    REQUIRE(r.status == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(scaled_from_json(j["poly"], 4) == perrin_kseq_poly(4, 3, 5));
    CHECK(test::parse(4, j["value"].get<std::string>()) == perrin_kseq_poly(4, 3, 5));
}

TEST_CASE("large indices use the matrix-power route") {
    const Result r = run({"term", "--family", "gokv", "-k", "3", "-n", "1000"});
    CHECK(r.out == gokv(3, 1000).get_str() + "\n");
    CHECK(run({"term", "--family", "kso-kr", "-k", "5", "-i", "2", "-n", "300"}).out ==
          kso_kr(5, 2, 300).get_str() + "\n");
}

TEST_CASE("usage errors exit 2 without output") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"term"},
             {"term", "--family", "nope", "-n", "1"},
             {"term", "--family", "fib", "-i", "1", "-n", "1"},
             {"term", "--family", "vdl-kseq", "-n", "1"},
             {"term", "--family", "padovan", "-k", "4", "-n", "1"},
             {"term", "--family", "vdl", "-k", "2", "-n", "1"},
             {"term", "--family", "vdl-kseq", "-i", "1", "-n", "-9"},
             {"term", "--family", "fib", "-n", "1", "--format", "csv"},
             {"table", "--family", "fib", "--from", "5", "--to", "2"},
             {"matrix", "--window", "base", "-n", "2"},
             {"matrix", "--window", "a1", "-n", "-1"},
             {"binet", "--t", "0,x,1"},
             {"binet", "--t", "0,1"},
             {"verify", "--id", "thm-0.0"},
             {"verify", "--profile", "slow"},
             {"frobnicate"},
         }) {
        CAPTURE(args.size() > 0 ? args[0] : std::string("<none>"));
        const Result r = run(args);
        CHECK(r.status == 2);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("help exits 0") {
    const Result r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("table layouts") {
    const Result plain = run({"table", "--family", "vdl-kseq", "-k", "3", "--to", "7"});
    const auto rows = lines(plain.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0].rfind("n ", 0) == 0);
    CHECK(rows[10].find("t2^3*t3 + t3^3") != std::string::npos);
    CHECK(rows[10].find("t2^4 + 3*t2*t3^2") != std::string::npos);

    const Result json = run({"table", "--family", "kso-kv", "-k", "3", "-i", "2", "--from", "-2", "--to", "4", "--format", "json"});
    std::vector<std::string> values;
    for (const auto& line : lines(json.out)) {
        const auto j = ordered_json::parse(line);
        CHECK(j["k"] == 3);
        CHECK(j["i"] == 2);
        values.push_back(j["value"]);
    }
    CHECK(values == std::vector<std::string>{"0", "1", "0", "1", "1", "1", "2"});

    const Result csv = run({"table", "--family", "gokr", "--from", "-2", "--to", "7", "--format", "csv"});
    const auto csv_rows = lines(csv.out);
    REQUIRE(csv_rows.size() == 11);
    CHECK(csv_rows[0] == "family,k,i,n,value");
    CHECK(csv_rows[1] == "gokr,3,,-2,1");
    CHECK(csv_rows[10] == "gokr,3,,7,7");

    const Result single = run({"table", "--family", "perrin", "--to", "3", "--format", "json"});
    CHECK(ordered_json::parse(lines(single.out)[0])["i"].is_null());
}

TEST_CASE("matrix windows") {
    CHECK(run({"matrix", "--window", "vdl", "-k", "3", "-n", "4"}).out == vdl_window(3, 4).to_string());
    CHECK(run({"matrix", "--window", "base", "-k", "3"}).out == perrin_base(3).to_string());
    CHECK(run({"matrix", "--window", "a1", "-k", "4", "-n", "10"}).out == fast_window(4, 10).to_string());

    for (const std::string window : {"vdl", "perrin", "companion", "base"}) {
        std::vector<std::string> args{"matrix", "--window", window, "-k", "3", "--format", "json"};
        if (window != "base") args.insert(args.end(), {"-n", "-2"});
        const Result r = run(args);
        REQUIRE(r.status == 0);
        const PolyMatrix m = matrix_from_json(ordered_json::parse(r.out));
        if (window == "vdl") CHECK(m == vdl_window(3, -2));
        if (window == "perrin") CHECK(m == perrin_window(3, -2));
        if (window == "companion") CHECK(m == mat_power(companion(3, CompanionVariant::full), -2));
        if (window == "base") CHECK(m == perrin_base(3));
    }
}

TEST_CASE("json schemas round-trip") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        const ScaledPoly p(test::random_poly(4, rng), static_cast<std::uint32_t>(trial % 3));
        const auto j = ordered_json::parse(to_json(p).dump());
        CHECK(scaled_from_json(j, 4) == p);
        CHECK(poly_from_json(to_json(p.numerator()), 4) == p.numerator());
    }
    const auto j = to_json(perrin_base(3));
    CHECK(j["denom_exp"] == 2);
    CHECK(matrix_from_json(j) == perrin_base(3));

    CHECK_THROWS_AS(poly_from_json(ordered_json::parse(R"({"terms":[{"exp":[1],"coef":"2"}]})"), 3), Error);
    CHECK_THROWS_AS(poly_from_json(ordered_json::parse(R"({"terms":[{"exp":[1,0,0],"coef":"x"}]})"), 3), Error);
    CHECK_THROWS_AS(matrix_from_json(ordered_json::parse(R"({"k":2,"rows":[]})")), Error);
}

TEST_CASE("binet") {
    const Result r = run({"binet", "-k", "3", "--t", "0,1,1", "--nmax", "20"});
    CHECK(r.status == 0);
    CHECK(lines(r.out).back() == "PASS");

    const Result json = run({"binet", "-k", "4", "--t", "0,1,1,1", "--nmax", "15", "--format", "json"});
    const auto j = ordered_json::parse(json.out);
    CHECK(j["pass"] == true);
    CHECK(j["per_n"].size() == 16);

    CHECK(run({"binet", "-k", "3", "--t", "0,2,1", "--nmax", "30", "--tol", "1e-300"}).status == 1);
    CHECK(run({"binet", "-k", "2", "--t", "2,-1"}).status == 2);
}

TEST_CASE("verify") {
    const Result quick = run({"verify", "--profile", "quick"});
    CHECK(quick.status == 0);
    CHECK(lines(quick.out).back() == "19/19 identities passed");

    const Result one = run({"verify", "--id", "thm-2.12", "--format", "json"});
    CHECK(one.status == 0);
    const auto j = ordered_json::parse(one.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["id"] == "thm-2.12");
    CHECK(j[0]["pass"] == true);

    const auto path = std::filesystem::temp_directory_path() / "kseq_verify_report.json";
    const Result file = run({"verify", "--id", "cor-3.7", "--format", "json", "--output", path.string()});
    CHECK(file.status == 0);
    CHECK(file.out.empty());
    std::ifstream in(path);
    CHECK(ordered_json::parse(in)[0]["id"] == "cor-3.7");
    std::filesystem::remove(path);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"table", "--family", "perrin-kseq", "-k", "4", "--to", "12", "--format", "json"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("format default comes from the environment") {
    ::setenv("KSEQ_FORMAT", "json", 1);
    const Result r = run({"term", "--family", "gokr", "-n", "9"});
    ::setenv("KSEQ_FORMAT", "xml", 1);
    const Result bad = run({"term", "--family", "gokr", "-n", "9"});
    const Result explicit_flag = run({"term", "--family", "gokr", "-n", "9", "--format", "plain"});
    ::unsetenv("KSEQ_FORMAT");
    CHECK(ordered_json::parse(r.out)["value"] == "12");
    CHECK(bad.status == 2);
    CHECK(explicit_flag.out == "12\n");
}
