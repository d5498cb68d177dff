#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

using namespace malcev;
using namespace malcev::testing;

namespace {

std::string file_text(const std::string& name)
{
    std::ifstream in(fixture(name));
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

io::json parse(const std::string& text) { return io::json::parse(text); }

} // namespace

TEST_CASE("algebra fixtures round-trip byte for byte", "[io]")
{
    for (const char* name : {"malcev4", "premalcev4", "sl2", "malcev4_ad"}) {
        INFO(name);
        std::string file = std::string(name) + ".alg.json";
        CHECK(io::format(io::algebra_to_json(load_algebra(name))) == file_text(file));
    }
}

TEST_CASE("map fixtures round-trip byte for byte", "[io]")
{
    for (const char* name : {"coadjoint_family1", "coadjoint_family2", "coadjoint_family3",
                             "coadjoint_family3_corrected", "coadjoint_T", "sl2_v_family1", "sl2_v_family2"}) {
        INFO(name);
        CHECK(io::format(io::map_to_json(load_map(name))) == file_text(std::string(name) + ".map.json"));
    }
}

TEST_CASE("tensor and form fixtures round-trip byte for byte", "[io]")
{
    CHECK(io::format(io::tensor_to_json(load_tensor("skew_solution"))) == file_text("skew_solution.r.json"));
    for (const char* name : {"symplectic_family", "symplectic_c1", "sl2_killing"}) {
        INFO(name);
        CHECK(io::format(io::form_to_json(load_form(name))) == file_text(std::string(name) + ".form.json"));
    }
}

TEST_CASE("representation fixture round-trips with its algebra reference", "[io]")
{
    auto doc = io::rep_to_json(load_sl2_rep());
    CHECK_FALSE(doc.contains("algebra"));
    doc["algebra"] = "sl2";
    CHECK(io::format(doc) == file_text("sl2_v.rep.json"));
}

TEST_CASE("bimodules round-trip through JSON", "[io]")
{
    auto P = load_algebra("premalcev4");
    for (const auto& B : {regular_bimodule(P), dual_bimodule(regular_bimodule(P))}) {
        auto doc = io::bimodule_to_json(B);
        auto back = io::bimodule_from_json(parse(io::format(doc)), P, "bimodule");
        CHECK(back.left == B.left);
        CHECK(back.right == B.right);
        CHECK(back.space_names == B.space_names);
    }
}

TEST_CASE("Laurent coefficients survive a round trip", "[io]")
{
    Rng rng(71);
    Ring ring{std::vector<std::string>{"a", "k"}};
    for (int t = 0; t < 30; ++t) {
        Matrix M(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                M(i, j) = laurent(rng, ring);
        auto doc = io::map_to_json(M);
        doc["ring"] = io::ring_to_json(ring);
        auto back = io::map_from_json(parse(io::format(doc)), "map");
        CHECK(back == M);
        CHECK(io::format(io::map_to_json(back)) == io::format(io::map_to_json(M)));
    }
}

TEST_CASE("random algebras round-trip", "[io][property]")
{
    Rng rng(72);
    for (int t = 0; t < 30; ++t) {
        auto A = t % 2 ? random_anticommutative(rng, 4) : random_general(rng, 3);
        auto back = io::algebra_from_json(parse(io::format(io::algebra_to_json(A))), "algebra");
        CHECK(back == A);
    }
}

TEST_CASE("anticommutative tables are validated on load", "[io]")
{
    auto doc = parse(file_text("malcev4.alg.json"));
    auto square = doc;
    square["table"].push_back({1, 1, 0, "3"});
    CHECK_THROWS_WITH(io::algebra_from_json(square, "t"), Catch::Matchers::ContainsSubstring("nonzero square e2e2"));
    auto lower = doc;
    lower["table"].push_back({2, 1, 3, "1"});
    CHECK_THROWS_WITH(io::algebra_from_json(lower, "t"), Catch::Matchers::ContainsSubstring("only entries with i < j"));
    auto zero_square = doc;
    zero_square["table"].push_back({1, 1, 0, "0"});
    CHECK(io::algebra_from_json(zero_square, "t") == load_algebra("malcev4"));
}

TEST_CASE("schema errors name the offending field", "[io]")
{
    auto doc = parse(file_text("malcev4.alg.json"));
    auto missing = doc;
    missing.erase("kind");
    CHECK_THROWS_AS(io::algebra_from_json(missing, "t"), input_error);
    auto kind = doc;
    kind["kind"] = "lie";
    CHECK_THROWS_WITH(io::algebra_from_json(kind, "t"), Catch::Matchers::ContainsSubstring("t/kind"));
    auto range = doc;
    range["table"].push_back({0, 1, 9, "1"});
    CHECK_THROWS_AS(io::algebra_from_json(range, "t"), input_error);
    auto coeff = doc;
    coeff["table"][0][3] = "2*q";
    CHECK_THROWS_AS(io::algebra_from_json(coeff, "t"), input_error);
    auto map = parse(file_text("coadjoint_T.map.json"));
    map["convention"] = "rows-are-images";
    CHECK_THROWS_WITH(io::map_from_json(map, "m"), Catch::Matchers::ContainsSubstring("columns-are-images"));
    CHECK_THROWS_AS(io::read_json(fixture("missing.alg.json")), input_error);
}

TEST_CASE("tensor shape must match the algebra", "[io]")
{
    auto doc = parse(file_text("skew_solution.r.json"));
    CHECK_THROWS_AS(io::tensor_from_json(doc, load_algebra("sl2"), "r"), input_error);
    CHECK_THROWS_AS(io::form_from_json(doc, load_algebra("sl2"), "r"), input_error);
}

TEST_CASE("formatting is stable", "[io]")
{
    auto doc = io::algebra_to_json(load_algebra("malcev4"));
    CHECK(io::format(doc) == io::format(parse(io::format(doc))));
    CHECK(io::format(io::json::array()) == "[]\n");
    CHECK(io::format(io::json{{"b", 1}, {"a", {1, 2}}}) == "{\n  \"a\": [1, 2],\n  \"b\": 1\n}\n");
}
