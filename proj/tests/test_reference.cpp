#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "knotfam/reference.hpp"
#include "knotfam/survey.hpp"
#include "oracles.hpp"

using namespace knotfam;

namespace {

std::string fixture(const std::string& name) { return std::string(KNOTFAM_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("bundled reference data loads and carries the expected determinants") {
    auto refs = load_reference(KNOTFAM_DATA);
    CHECK(refs.size() == 13);
    std::map<std::string, i64> want{{"3_1", 3},     {"4_1", 5},      {"8_16", 35},     {"8_17", 37},  {"9_32", 59},
                                    {"9_33", 61},   {"10_83", 83},   {"10_86", 85},    {"10_88", 101}, {"10_89", 99},
                                    {"11a_54", 139}, {"12a_1010", 195}, {"P(3,5,7)", 71}};
    for (auto& e : refs) {
        INFO(e.name);
        REQUIRE(want.count(e.name));
        CHECK(determinant(e.diagram) == want[e.name]);
        CHECK(expected_determinant(e.name) == want[e.name]);
        CHECK(components(e.diagram).count == 1);
        CHECK_FALSE(e.source.empty());
        if (e.diagram.crossing_count() <= 14) CHECK(oracle::det_from_bracket(e.diagram.crossings) == want[e.name]);
    }
    CHECK(find_entry(refs, "8_16").diagram.crossing_count() == 8);
    CHECK(find_entry(refs, "P(3,5,7)").diagram.crossing_count() == 15);
    CHECK_THROWS_AS(find_entry(refs, "5_1"), ReferenceError);
    CHECK_FALSE(expected_determinant("5_1").has_value());
}

TEST_CASE("bad reference files") {
    CHECK_THROWS_AS(load_reference(fixture("malformed.json")), ReferenceError);
    CHECK_THROWS_AS(load_reference(fixture("bad_determinant.json")), ReferenceError);
    CHECK_THROWS_AS(load_reference(fixture("does_not_exist.json")), ReferenceError);
    CHECK_THROWS_AS(parse_reference(nlohmann::json::object()), ReferenceError);
    CHECK_THROWS_AS(parse_reference(nlohmann::json::parse(R"([{"name": "3_1"}])")), ReferenceError);
    CHECK_THROWS_AS(parse_reference(nlohmann::json::parse(
                        R"([{"name": "mystery", "diagram": {"arc_count": 6, "crossings": [[1,5,2,4],[3,1,4,6],[5,3,6,2]]}}])")),
                    ReferenceError);
}

TEST_CASE("table rows") {
    auto& rows = table_rows();
    CHECK(rows.size() == 10);
    std::set<std::string> names;
    for (auto& r : rows) {
        names.insert(r.knot);
        CHECK(r.gluing.left.p == 2);
        CHECK(r.gluing.right.p == 2);
    }
    CHECK(names.size() == 10);
}

TEST_CASE("verify_row on the bundled data and on a corrupted entry") {
    auto refs = load_reference(KNOTFAM_DATA);
    auto v = verify_row(table_rows()[0], find_entry(refs, "8_16"));
    CHECK(v.pass);
    CHECK(v.message.find("not a proof") != std::string::npos);
    auto j = verdict_json(v);
    CHECK(j["knot"] == "8_16");
    CHECK(j["determinant"] == 35);
    CHECK(j["pass"] == true);

    auto bad = load_reference(fixture("corrupted.json"));
    auto w = verify_row(table_rows()[0], find_entry(bad, "8_16"));
    CHECK_FALSE(w.pass);
    CHECK_FALSE(w.jones_match);
    CHECK(w.message == "mismatch: jones, alexander");
    // a wrong row against a right entry
    auto x = verify_row(table_rows()[0], find_entry(refs, "8_17"));
    CHECK_FALSE(x.pass);
    CHECK(x.message.find("determinant") != std::string::npos);
}

TEST_CASE("survey grid") {
    CHECK(coprime_pairs(7, 7).size() == 22);
    CHECK(coprime_pairs(3, 5).size() == 5);
    auto g = survey_grid(7, 7, 7, 7, true);
    CHECK(g.size() == 968);
    CHECK(survey_grid(7, 7, 7, 7, false).size() == 484);
    std::set<std::array<i64, 4>> seen;
    for (auto& x : g) {
        CHECK(std::gcd(x.left.p, x.left.q) == 1);
        CHECK(std::gcd(x.right.p, std::abs(x.right.q)) == 1);
        seen.insert({x.left.p, x.left.q, x.right.p, x.right.q});
    }
    CHECK(seen.size() == g.size());
}

TEST_CASE("survey cells") {
    auto c = survey_cell({{2, 3}, {2, 3}});
    CHECK(c.pass());
    CHECK(c.determinant == 35);
    CHECK(c.components == 1);
    CHECK(c.dihedral == 17);
    CHECK(c.presentation_factors == std::vector<i64>{1, 35});
    CHECK(c.goeritz_factors == std::vector<i64>{35});
    CHECK(c.alternating_crossings + 2 == c.initial_crossings);
    auto j = cell_json(c);
    CHECK(j["determinant"] == 35);
    CHECK(j["checks"]["alternating"] == true);
    CHECK(j["pass"] == true);
    CHECK(j["predicted_instanton_rank"] == 35);

    auto l = survey_cell({{3, 5}, {3, 5}});
    CHECK(l.pass());
    CHECK(l.components == 2);
    CHECK(l.determinant == 224);
    CHECK(l.dihedral == -1);

    auto deg = survey_cell({{1, 1}, {1, 1}});
    CHECK(deg.degenerate);
    CHECK(deg.pass());
}
