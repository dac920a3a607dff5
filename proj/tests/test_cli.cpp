#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include <cmath>
#include <filesystem>
#include <functional>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ecs/cli.hpp"

using namespace rext;
using namespace rext::cli;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "rext");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

size_t error_position(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("no ParseError thrown");
    return 0;
}

}  // namespace

TEST_CASE("partition parsing") {
    CHECK(parse_partition("5,5,4,2,2") == Partition({5, 5, 4, 2, 2}));
    CHECK(parse_partition("") == Partition());
    CHECK(parse_partition("3") == Partition({3}));
    CHECK(error_position([] { parse_partition("2,,2"); }) == 2);
    CHECK(error_position([] { parse_partition("2,3"); }) == 2);
    CHECK(error_position([] { parse_partition("2,-1"); }) == 2);
    CHECK(error_position([] { parse_partition("2,2,"); }) == 3);
    CHECK(error_position([] { parse_partition("2;2"); }) == 1);
    CHECK(error_position([] { parse_partition("99999999999"); }) == 0);
}

TEST_CASE("index set parsing") {
    CHECK(parse_index_set("-1,2,3") == IndexSet({-1, 2, 3}));
    CHECK(parse_index_set("3,2") == IndexSet({2, 3}));
    CHECK(parse_index_set("") == IndexSet());
    CHECK(error_position([] { parse_index_set("1,2,1"); }) == 4);
    CHECK(error_position([] { parse_index_set("1,a"); }) == 2);
}

TEST_CASE("alpha and time grid parsing") {
    CHECK(parse_alphas("4,8,16") == std::vector<double>{4, 8, 16});
    CHECK(parse_alphas("0.5") == std::vector<double>{0.5});
    CHECK(error_position([] { parse_alphas("4,-1"); }) == 2);
    CHECK(error_position([] { parse_alphas("4,,8"); }) == 2);
    CHECK(error_position([] { parse_alphas("x"); }) == 0);

    const auto t = parse_time_grid("0:pi:201");
    REQUIRE(t.size() == 201);
    CHECK(t.front() == 0.0);
    CHECK(t.back() == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    CHECK(t[100] == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    const auto u = parse_time_grid("pi/2:2pi:4");
    CHECK(u.front() == doctest::Approx(std::numbers::pi / 2));
    CHECK(u.back() == doctest::Approx(2 * std::numbers::pi));
    CHECK(parse_time_grid("-1:1e0:3") == std::vector<double>{-1, 0, 1});
    CHECK(error_position([] { parse_time_grid("0:1"); }) == 3);
    CHECK(error_position([] { parse_time_grid("0:1:1"); }) == 4);
    CHECK(error_position([] { parse_time_grid("0:1:x"); }) == 4);
    CHECK(error_position([] { parse_time_grid("0:p:5"); }) == 2);
}

TEST_CASE("diagram selection") {
    CHECK(select_diagram(std::string("2,2"), std::nullopt) == maya_from_partition(Partition({2, 2})));
    CHECK(select_diagram(std::nullopt, std::string("2,3")) == MayaDiagram::from_index_set({2, 3}));
    CHECK_THROWS_AS(select_diagram(std::nullopt, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(select_diagram(std::string("1"), std::string("1")), std::invalid_argument);
}

TEST_CASE("maya command") {
    const Result text = run_cli({"maya", "--index-set", "2,3"});
    CHECK(text.code == 0);
    CHECK(text.out.find("partition: (2,2)") != std::string::npos);
    CHECK(text.out.find("sigma: 2") != std::string::npos);
    CHECK(text.out.find("critical_degrees: {4,5,6,7,8}") != std::string::npos);

    const Result json = run_cli({"maya", "--partition", "2,2", "--format", "json"});
    REQUIRE(json.code == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j.at("q_c") == 4);
    CHECK(j.at("d_lambda") == "2");
    CHECK(j.at("regular") == true);
    CHECK(j.at("hooklengths") == nlohmann::json::parse("[[3,2],[2,1]]"));
}

TEST_CASE("extension command") {
    const Result r = run_cli({"extension", "--index-set", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("potential: x^2 + 4 + 32*x^2/(4*x^4 + 3) - 384*x^2/(4*x^4 + 3)^2") != std::string::npos);
    CHECK(r.out.find("q=4 order=4 kernel={0,1,6,7}") != std::string::npos);
    CHECK(r.err.empty());
    const Result singular = run_cli({"extension", "--partition", "2"});
    CHECK(singular.code == 0);
    CHECK(singular.err.find("warning") != std::string::npos);
}

TEST_CASE("verify command") {
    const Result r = run_cli({"verify", "--partition", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS annihilator-q4") != std::string::npos);
    CHECK(r.out.find("PASS annihilator-q5") != std::string::npos);

    const Result neg = run_cli({"verify", "--partition", "2,2", "--q", "3", "--expect-fail"});
    CHECK(neg.code == 0);
    CHECK(neg.out.find("PASS annihilator-q3-negative-control") != std::string::npos);

    const Result wrong = run_cli({"verify", "--partition", "2,2", "--q", "3"});
    CHECK(wrong.code == 1);

    const Result json = run_cli({"verify", "--partition", "", "--format", "json"});
    REQUIRE(json.code == 0);
    CHECK(nlohmann::json::parse(json.out).at("passed") == true);

    CHECK(run_cli({"verify", "--partition", "2,2", "--expect-fail"}).code == 2);
}

TEST_CASE("uncertainty command writes one CSV per alpha") {
    const auto dir = std::filesystem::temp_directory_path() / "rext_cli_test";
    std::filesystem::create_directories(dir);
    const std::string prefix = (dir / "u").string();
    const Result r = run_cli({"uncertainty", "--partition", "", "--alpha", "2,3", "--t", "0:pi:5", "--out", prefix});
    REQUIRE(r.code == 0);
    for (const char* a : {"2", "3"}) {
        const std::string csv = slurp(prefix + "_alpha" + a + ".csv");
        std::istringstream is(csv);
        std::string line;
        std::getline(is, line);
        CHECK(line == "t,var_x,var_p,product,alpha,lambda");
        int rows = 0;
        while (std::getline(is, line)) {
            ++rows;
            const double product = std::stod(line.substr(line.find(',', line.find(',', line.find(',') + 1) + 1) + 1));
            CHECK(std::abs(product - 0.25) < 1e-9);
        }
        CHECK(rows == 5);
    }
    // identical reruns produce identical files
    const std::string first = slurp(prefix + "_alpha2.csv");
    REQUIRE(run_cli({"uncertainty", "--partition", "", "--alpha", "2", "--t", "0:pi:5", "--out", prefix}).code == 0);
    CHECK(slurp(prefix + "_alpha2.csv") == first);
    std::filesystem::remove_all(dir);
}

TEST_CASE("errors exit with status 2") {
    const Result singular = run_cli({"uncertainty", "--partition", "2", "--t", "0:1:2", "--out", "unused"});
    CHECK(singular.code == 2);
    CHECK(singular.err.find("not Krein-Adler regular") != std::string::npos);
    const Result bad = run_cli({"maya", "--partition", "2,3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("position 2") != std::string::npos);
    CHECK(run_cli({"maya"}).code == 2);
    CHECK(run_cli({}).code != 0);
    CHECK(run_cli({"maya", "--partition", "1", "--format", "xml"}).code != 0);
}
