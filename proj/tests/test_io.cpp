#include <filesystem>
#include <random>

#include "doctest.h"
#include "lefschetz/build.hpp"
#include "lefschetz/catalog.hpp"
#include "lefschetz/expression.hpp"
#include "lefschetz/io.hpp"
#include "lefschetz/schubert.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

BuildResult build(const std::string& text) { return evaluate(parse_build_file(text)); }

BuildError::Kind build_error_kind(const std::string& text) {
    try {
        build(text);
    } catch (const BuildError& e) {
        return e.kind();
    }
    FAIL("no BuildError for " << text);
    return BuildError::Kind::syntax;
}

std::string build_error_message(const std::string& text) {
    try {
        build(text);
    } catch (const BuildError& e) {
        return e.what();
    }
    return "";
}

FormatError::Kind format_error_kind(const std::string& text) {
    try {
        read_algebra_string(text);
    } catch (const FormatError& e) {
        return e.kind();
    }
    FAIL("no FormatError");
    return FormatError::Kind::malformed;
}

const char* example1_build = R"({
  "name": "example1",
  "blowup": {
    "Y": {"P": {"n": 5, "var": "c"}},
    "Z": {"catalog": "CxP1-even"},
    "pullback_generators": {"c": "a + 3*b"},
    "chern_N": ["4*a + 18*b", "54*a*b", "0"]
  }
})";

// Example 2 with the pullback given as matrices, one per degree of Y.
const char* example2_build = R"({
  "name": "example2",
  "blowup": {
    "Y": {"product": [{"P": {"n": 3, "var": "y1"}}, {"P": {"n": 3, "var": "y2"}}]},
    "Z": {"catalog": "P1xP1xP1"},
    "pullback": [
      [[1]],
      [[1, 0], [1, 1], [0, 1]],
      [[2, 1, 0], [0, 1, 0], [0, 1, 2]],
      [[0, 2, 2, 0]],
      [], [], []
    ],
    "chern_N": ["2*z1 + 6*z2 + 2*z3", "8*z1*z2 + 4*z1*z3 + 8*z2*z3", "8*z1*z2*z3"]
  }
})";

}  // namespace

TEST_CASE("expressions") {
    const Algebra x = catalog::example1().algebra;
    CHECK(parse_element(x, "e") == Element::named(x, "e^1"));
    CHECK(parse_element(x, "10*c - e") == Rational(10) * Element::named(x, "c") - Element::named(x, "e^1"));
    CHECK(parse_element(x, "(c - e)^2") == parse_element(x, "c^2 - 2*c*e + e^2"));
    CHECK(parse_element(x, "-1/2*e^1*a").coords() == (Rational(-1, 2) * Element::named(x, "e^1*a")).coords());
    CHECK(parse_element(x, "3") == Rational(3) * Element::unit(x));
    CHECK(parse_element(x, "0", 3) == Element::zero(x, 3));
    CHECK(parse_element(x, "2^3*c") == Rational(8) * Element::named(x, "c"));

    const Algebra gr = schubert::grassmannian(2, 5);
    CHECK(parse_element(gr, "s[1]*s[1]") == parse_element(gr, "s[2] + s[1,1]"));

    CHECK_THROWS_AS(parse_element(x, "c + c^2"), ExpressionError);
    CHECK_THROWS_AS(parse_element(x, "q"), ExpressionError);
    CHECK_THROWS_AS(parse_element(x, "(c"), ExpressionError);
    CHECK_THROWS_AS(parse_element(x, "c +"), ExpressionError);
    CHECK_THROWS_AS(parse_element(x, "c", 2), ExpressionError);
    CHECK_THROWS_AS(parse_element(x, "1 + c"), ExpressionError);
    CHECK_THROWS_AS(parse_element(x, "1/0*c"), ExpressionError);
}

TEST_CASE("to_string output parses back to the same element") {
    std::mt19937 rng(23);
    for (const auto& name : catalog::names()) {
        const Algebra a = catalog::lookup(name).algebra;
        for (int k = 0; k <= a->top_degree(); ++k) {
            const Element x = oracle::random_element(rng, a, k);
            CAPTURE(to_string(x));
            CHECK(parse_element(a, to_string(x), k) == x);
        }
    }
}

TEST_CASE("algebra files round-trip field for field") {
    CHECK(*read_algebra_string(write_algebra_string(*projective_space(3))) == *projective_space(3));
    for (const auto& name : catalog::names()) {
        const Algebra a = catalog::lookup(name).algebra;
        CAPTURE(name);
        const Algebra back = read_algebra_string(write_algebra_string(*a));
        CHECK(*back == *a);
        CHECK(write_algebra_string(*back) == write_algebra_string(*a));
    }

    const auto path = std::filesystem::temp_directory_path() / "lefschetz_test_roundtrip.alg.json";
    const Algebra x = catalog::example1().algebra;
    write_algebra(*x, path);
    CHECK(*read_algebra(path) == *x);
    std::filesystem::remove(path);
}

TEST_CASE("algebra file errors") {
    const std::string good = write_algebra_string(*catalog::example1().algebra);

    CHECK(format_error_kind(good.substr(0, good.size() / 2)) == FormatError::Kind::malformed);
    CHECK(format_error_kind("{}") == FormatError::Kind::malformed);

    std::string wrong_version = good;
    wrong_version.replace(wrong_version.find("\"version\": 1"), 12, "\"version\": 2");
    CHECK(format_error_kind(wrong_version) == FormatError::Kind::version_mismatch);

    std::string tampered = good;
    tampered.replace(tampered.find("\"-6\""), 4, "\"-7\"");
    CHECK(format_error_kind(tampered) == FormatError::Kind::checksum);

    auto j = nlohmann::json::parse(good);
    j["integration"][0] = "1/x";
    try {
        algebra_from_json(j);
        FAIL("accepted a malformed rational");
    } catch (const FormatError& e) {
        CHECK(e.kind() == FormatError::Kind::malformed_rational);
    }
    j = nlohmann::json::parse(good);
    j["products"][0][0] = 99;
    CHECK_THROWS_AS(algebra_from_json(j), FormatError);
}

TEST_CASE("build files reproduce the catalog") {
    CHECK(*build(example1_build).algebra == *catalog::example1().algebra);

    const BuildResult gr = build(R"({"Gr": [2, 5]})");
    CHECK(*gr.algebra == *schubert::grassmannian(2, 5));
    REQUIRE(gr.omega);
    CHECK(to_string(*gr.omega) == "s[1]");

    const auto ex3 = build(R"({"name": "example3", "proj_bundle": {"base": {"Gr": [2, 5]}, "chern": ["s[1]", "s[2]", "s[3]"]}})");
    CHECK(*ex3.algebra == *catalog::example3().algebra);

    const auto ex2 = build(example2_build);
    CHECK(*ex2.algebra == *catalog::example2().algebra);

    const auto prod = build(R"({"product": [{"P": 1}, {"P": 2}]})");
    CHECK(prod.algebra->dims() == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(prod.algebra->labels(1) == std::vector<std::string>{"h1", "h2"});
    REQUIRE(prod.omega);
    CHECK(to_string(*prod.omega) == "h1 + h2");

    const std::string inline_alg = R"({"algebra": )" + algebra_to_json(*projective_space(2)).dump() + "}";
    CHECK(*build(inline_alg).algebra == *projective_space(2));
}

TEST_CASE("build file errors") {
    CHECK(build_error_kind(R"({"P": -1})") == BuildError::Kind::type);
    CHECK(build_error_kind(R"({"Gr": [3, 3]})") == BuildError::Kind::type);
    CHECK(build_error_kind(R"({"Q": 1})") == BuildError::Kind::type);
    CHECK(build_error_kind(R"({"P": 1, "Gr": [1, 2]})") == BuildError::Kind::type);
    CHECK(build_error_kind(R"({"product": [{"P": 1}]})") == BuildError::Kind::type);
    CHECK(build_error_kind(R"({"catalog": "nope"})") == BuildError::Kind::type);
    CHECK(build_error_kind(R"({"P": 1.5})") == BuildError::Kind::type);

    // A chern class of the wrong degree, with its location.
    const std::string bad_chern = R"({"proj_bundle": {"base": {"Gr": [2, 5]}, "chern": ["s[2]", "s[2]", "s[3]"]}})";
    CHECK(build_error_kind(bad_chern) == BuildError::Kind::type);
    CHECK(build_error_message(bad_chern).find("/proj_bundle/chern/0") != std::string::npos);

    // Self-intersection mismatch: c_3(N) must equal pullback(push(1)) = 8*z1*z2*z3.
    std::string wrong = example2_build;
    wrong.replace(wrong.find("\"8*z1*z2*z3\""), 12, "\"16*z1*z2*z3\"");
    CHECK(build_error_message(wrong).find("c_3") != std::string::npos);
    // c_3 of degree 1.
    std::string wrong_degree = example1_build;
    wrong_degree.replace(wrong_degree.find("\"0\"]"), 3, "\"a\"");
    CHECK(build_error_kind(wrong_degree) == BuildError::Kind::type);
    // Pullback matrices of the wrong shape.
    CHECK(build_error_kind(R"({"blowup": {"Y": {"P": 2}, "Z": {"P": 0}, "pullback": [[[1]], [[1]], []], "chern_N": ["0", "0"]}})") ==
          BuildError::Kind::type);

    const std::string syntax = "{\n  \"P\": 3,\n  \"name\" \"x\"\n}";
    CHECK(build_error_kind(syntax) == BuildError::Kind::syntax);
    CHECK(build_error_message(syntax).find("line 3, column 12") != std::string::npos);
    CHECK(build_error_kind("") == BuildError::Kind::syntax);
}
