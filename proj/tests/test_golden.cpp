#include "doctest.h"

#include "preproj/verify.hpp"

#include <fstream>
#include <sstream>

using namespace preproj;

namespace {

std::string slurp(const std::string& name)
{
    std::ifstream in(std::string(PREPROJ_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("JSON and TSV outputs carry the same table")
{
    auto rows = rows_from_json(slurp("classify_a3.json"));
    CHECK(rows.size() == 24);
    CHECK(to_tsv(rows) == slurp("classify_a3.tsv"));
    CHECK(to_json("A3", 1009, rows) == slurp("classify_a3.json"));
}

TEST_CASE("golden tables match a fresh classification")
{
    for (int n : {1, 2, 3}) {
        CAPTURE(n);
        Setting s = make_setting(preprojective_algebra(DynkinType{DynkinFamily::A, n}));
        CHECK(to_tsv(table_rows(s, classify_all(s, 1))) == slurp("classify_a" + std::to_string(n) + ".tsv"));
    }
}

TEST_CASE("class strings")
{
    Setting s = make_setting(preprojective_algebra(DynkinType{DynkinFamily::A, 3}));
    CHECK(parse_class(s, "mod(A)") == s.everything());
    CHECK(parse_class(s, "{0}").empty());
    CHECK(parse_class(s, "add(S2)").ids.size() == 1);
    CHECK(parse_class(s, "gen(P1⊕M12⊕S1)").ids.size() == 3);
    auto gp2 = parse_class(s, "gen(P2)");
    for (const char* n : {"P2", "W", "S2"})
        CHECK(gp2.contains(*s.registry.id_of_name(n)));
    CHECK_FALSE(gp2.contains(*s.registry.id_of_name("S1")));
    CHECK(parse_class(s, "gen(M12⊕M21)").ids.size() == 4);
    CHECK(normalize_class(s, "add(W⊕P1)") == "add(P1⊕W)");
    CHECK_THROWS_AS(parse_class(s, "add(Q7)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class(s, "sum(P1)"), std::invalid_argument);
}

TEST_CASE("golden data files")
{
    auto table = a3_golden_table();
    CHECK(table.size() == 24);
    CHECK(table.front().sigma4 == "1");
    CHECK(table.back().wide == "add(S2⊕S3⊕M32⊕M23)");
    auto wides = nakayama33_golden_wides();
    CHECK(wides.size() == 7);
    CHECK(wides[3] == std::vector<std::string>{"P1", "P2", "S1", "P2/rad^2(P2)"});
}

TEST_CASE("suite registry")
{
    CHECK(suite_names().size() == 8);
    CHECK_THROWS_AS(run_suite("nope", VerifyConfig{}), UnknownSuite);
    VerifyConfig cfg;
    cfg.type = DynkinType{DynkinFamily::A, 2};
    auto rep = run_suite("cy2", cfg);
    CHECK(rep.passed());
    CHECK(rep.render().find("cy2: 4/4 checks passed") != std::string::npos);
}
