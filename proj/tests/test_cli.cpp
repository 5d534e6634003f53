#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "output.hpp"

using dpsi::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

std::vector<std::string> field(const std::string& csv, std::size_t column) {
    std::vector<std::string> out;
    auto ls = lines(csv);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        std::istringstream is(ls[i]);
        std::string cell;
        for (std::size_t c = 0; c <= column; ++c) std::getline(is, cell, ',');
        out.push_back(cell);
    }
    return out;
}

}  // namespace

TEST_CASE("table1 golden output") {
    const auto r = invoke({"table1", "--t-min", "3", "--t-max", "7"});
    CHECK(r.code == 0);
    const std::string expected =
        "t,n1,p_n1,mantissa,exponent10,margin\n"
        "3,10,29,6.46969323,9,0.0158083074304\n"
        "4,24,89,2.37687418963,34,0.000943467666129\n"
        "5,79,401,4.07864370687,163,0.000118448150584\n"
        "6,509,3637,5.79727230461,1551,7.48470044143e-06\n"
        "7,10596,111751,2.47733980971,48337,6.53243426019e-08\n";
    CHECK(r.out == expected);
}

TEST_CASE("table1 grows a small sieve, honors the cap and floor mode") {
    const auto grown = invoke({"table1", "--t-min", "7", "--t-max", "7", "--sieve-limit", "100"});
    CHECK(grown.code == 0);
    CHECK(field(grown.out, 1) == std::vector<std::string>{"10596"});

    const auto capped = invoke({"table1", "--t-min", "7", "--t-max", "7", "--sieve-cap", "50000"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("--sieve-cap") != std::string::npos);

    const auto floored = invoke({"table1", "--t-min", "3", "--t-max", "3", "--floor-n0"});
    CHECK(floored.code == 0);
    CHECK(std::stoul(field(floored.out, 1).at(0)) >= 2263);
}

TEST_CASE("usage errors exit 64") {
    CHECK(invoke({"table1", "--t-min", "1"}).code == 64);
    CHECK(invoke({"table1", "--t-min", "7", "--t-max", "3"}).code == 64);
    CHECK(invoke({"robin-scan", "--from", "2", "--to", "10"}).code == 64);
    CHECK(invoke({"robin-scan", "--from", "20", "--to", "10"}).code == 64);
    CHECK(invoke({"ratio", "--t", "2", "--n-max", "1"}).code == 64);
    CHECK(invoke({"champions"}).code == 64);
    CHECK(invoke({}).code == 64);
    CHECK(invoke({"no-such-command"}).code == 64);
    CHECK(invoke({"table1", "--format", "xml"}).code == 64);
}

TEST_CASE("champions") {
    const auto weak = invoke({"champions", "--limit", "12", "--t", "2", "--weak"});
    CHECK(weak.code == 0);
    CHECK(field(weak.out, 0) == std::vector<std::string>{"1", "2", "4", "6", "12"});
    CHECK(lines(weak.out).at(3) == "4,3/2,1.5");

    const auto one = invoke({"champions", "--limit", "1", "--t", "5"});
    CHECK(field(one.out, 0) == std::vector<std::string>{"1"});

    const auto strict = invoke({"champions", "--limit", "100000", "--t", "2"});
    CHECK(field(strict.out, 0) == std::vector<std::string>{"1", "2", "6", "30", "210", "2310", "30030"});
}

TEST_CASE("robin-scan exit codes") {
    const auto above = invoke({"robin-scan", "--from", "5041", "--to", "300000"});
    CHECK(above.code == 0);
    CHECK(lines(above.out).size() == 1);  // header only

    const auto below = invoke({"robin-scan", "--from", "3", "--to", "5040"});
    CHECK(below.code == 0);
    const auto n = field(below.out, 0);
    CHECK(n.size() == 26);
    CHECK(n.back() == "5040");
    CHECK(lines(below.out).back().rfind("5040,19344,", 0) == 0);
}

TEST_CASE("ratio curve") {
    const auto r = invoke({"ratio", "--t", "2", "--n-max", "10000", "--every", "1000"});
    CHECK(r.code == 0);
    const auto dev = field(r.out, 4);
    CHECK(std::fabs(std::stod(dev.back())) < 0.005);
    CHECK(field(r.out, 0).front() == "2");
    CHECK(field(r.out, 0).back() == "10000");

    const auto r7 = invoke({"ratio", "--t", "7", "--n-max", "10596", "--every", "5000"});
    CHECK(std::stod(field(r7.out, 2).back()) < 1.78107);
}

TEST_CASE("verify-bounds") {
    const auto small = invoke({"verify-bounds", "--n-max", "2262", "--samples", "20"});
    CHECK(small.code == 0);
    CHECK(field(small.out, 0) == std::vector<std::string>{"rs", "us", "robmod", "fonda"});
    CHECK(field(small.out, 1) == std::vector<std::string>{"PASS", "PASS", "SKIPPED", "SKIPPED"});

    const auto full = invoke({"verify-bounds", "--n-max", "5000", "--t-max", "10", "--samples", "50"});
    CHECK(full.code == 0);
    CHECK(field(full.out, 1) == std::vector<std::string>{"PASS", "PASS", "PASS", "PASS"});
    // us suite: t in [2,10] x n in [2,5000]
    CHECK(field(full.out, 2).at(1) == std::to_string(9 * 4999));
}

TEST_CASE("admissible-t") {
    const auto r = invoke({"admissible-t", "--n", "9", "10", "100", "1000", "10000"});
    CHECK(r.code == 0);
    CHECK(field(r.out, 2) == std::vector<std::string>{"2", "3", "5", "6", "6"});
    const auto none = invoke({"admissible-t", "--n", "4", "--format", "json"});
    const auto js = nlohmann::json::parse(none.out);
    CHECK(js.at(0).at("admissible_t").is_null());
}

TEST_CASE("json output and --output file") {
    const auto r = invoke({"table1", "--t-min", "3", "--t-max", "4", "--format", "json"});
    CHECK(r.code == 0);
    const auto js = nlohmann::json::parse(r.out);
    REQUIRE(js.size() == 2);
    CHECK(js[0]["t"] == 3);
    CHECK(js[0]["n1"] == 10);
    CHECK(js[1]["exponent10"] == 34);

    const std::string path = "dpsi_cli_test_output.csv";
    const auto w = invoke({"champions", "--limit", "12", "--t", "2", "--weak", "--output", path});
    CHECK(w.code == 0);
    CHECK(w.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == invoke({"champions", "--limit", "12", "--t", "2", "--weak"}).out);
    std::remove(path.c_str());
}

TEST_CASE("identical invocations are byte-identical") {
    const std::vector<std::string> args{"ratio", "--t", "3", "--n-max", "3000", "--every", "7"};
    CHECK(invoke(args).out == invoke(args).out);
    const std::vector<std::string> vb{"verify-bounds", "--n-max", "3000", "--samples", "30", "--format", "json"};
    CHECK(invoke(vb).out == invoke(vb).out);
}

TEST_CASE("csv quoting and float formatting") {
    using namespace dpsi::cli;
    Table t{{"a", "b"}, {{std::string("x,y"), 0.1}, {std::string("say \"hi\""), Cell{}}}};
    std::ostringstream os;
    write_csv(t, os);
    CHECK(os.str() == "a,b\n\"x,y\",0.1\n\"say \"\"hi\"\"\",\n");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(6.53243426019e-08) == "6.53243426019e-08");
}
