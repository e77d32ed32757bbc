#include "doctest.h"

#include "preproj/classify.hpp"

#include <map>
#include <set>

using namespace preproj;

namespace {

AlgebraPtr pi(int n, Scalar p = PrimeField::kDefaultCharacteristic)
{
    return preprojective_algebra(DynkinType{DynkinFamily::A, n}, PrimeField(p));
}

const Setting& a3()
{
    static const Setting s = make_setting(pi(3));
    return s;
}

const std::vector<ClassificationRecord>& a3_records()
{
    static const auto r = classify_all(a3());
    return r;
}

Subcat named(const Setting& s, std::initializer_list<const char*> names)
{
    std::vector<std::size_t> ids;
    for (const char* n : names)
        ids.push_back(*s.registry.id_of_name(n));
    return make_subcat(ids);
}

const ClassificationRecord& by_label(const std::string& label)
{
    for (const auto& r : a3_records())
        if (r.sigma4 == label)
            return r;
    throw std::runtime_error("no record " + label);
}

}  // namespace

TEST_CASE("record counts")
{
    for (int n : {1, 2, 3}) {
        CAPTURE(n);
        auto s = make_setting(pi(n));
        auto recs = classify_all(s, 2);
        CHECK(recs.size() == s.weyl->order());
        std::set<Subcat> wides;
        for (const auto& r : recs)
            wides.insert(r.wide);
        CHECK(wides.size() == recs.size());
    }
    auto s = make_setting(pi(1));
    auto recs = classify_all(s);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].wide == s.everything());
    CHECK(recs[1].wide.empty());
}

TEST_CASE("torsion classes of A3")
{
    const auto& s = a3();
    const auto& g = *s.weyl;
    CHECK(torsion_class(s, g.identity()).members == s.everything());
    CHECK(torsion_class(s, g.longest_element()).members.empty());
    CHECK(torsion_class(s, g.from_word({3, 2, 3})).members == gen_class(s, share(s.registry.sum(named(s, {"P1", "M12", "S1"}).ids))));
    CHECK(by_label("(14)").torsion == named(s, {"S2"}));
    CHECK(by_label("(13)(24)").torsion == named(s, {"S1", "S3"}));
}

TEST_CASE("wide subcategories of A3")
{
    const auto& s = a3();
    CHECK(by_label("1").wide == s.everything());
    CHECK(by_label("(12)").wide == named(s, {"P1", "S1", "W", "M23"}));
    CHECK(by_label("(1342)").wide == named(s, {"M"}));
    CHECK(by_label("(13)").wide == named(s, {"P1"}));
    CHECK(by_label("(14)(23)").wide.empty());
    for (const auto& r : a3_records()) {
        CAPTURE(word_to_string(r.w.word));
        CHECK(r.wide.subset_of(r.torsion));
    }
}

TEST_CASE("left approximations")
{
    const auto& s = a3();
    auto p1 = s.registry.module(*s.registry.id_of_name("P1"));
    auto ap = minimal_left_approx(s, p1, named(s, {"P1", "S1"}));
    CHECK(ap.target == std::vector<std::size_t>{*s.registry.id_of_name("P1")});
    CHECK(is_isomorphism(ap.map));
    CHECK(ap.cokernel->is_zero());

    ap = minimal_left_approx(s, p1, Subcat{});
    CHECK(ap.target.empty());
    CHECK(ap.cokernel->is_zero());

    // A -> T0 for the class of (13) has T1 with Hom(T1, P1) = 0
    auto reg = share(regular_module(s.algebra));
    auto ap13 = minimal_left_approx(s, reg, by_label("(13)").torsion);
    for (std::size_t t : summand_ids(s, ap13.cokernel))
        CHECK(s.homs[t][*s.registry.id_of_name("P1")].empty());
}

TEST_CASE("Morita tags and v")
{
    const auto& g = *a3().weyl;
    const std::map<std::string, std::string> tags{{"1", "A3"},      {"(12)", "A2"}, {"(13)", "K"},
                                                  {"(23)", "K×K"},  {"(14)(23)", "0"}};
    for (const auto& [label, tag] : tags)
        CHECK(by_label(label).tag == tag);
    const auto& id = by_label("1");
    CHECK(id.u == g.longest_element());
    CHECK(id.v == g.longest_element());
    CHECK(by_label("(14)(23)").v == g.identity());
    CHECK(by_label("(12)").quotient_tag == "A2");
    for (const auto& r : a3_records()) {
        CAPTURE(word_to_string(r.w.word));
        CHECK(r.length_additive);
        CHECK(r.v_idempotent);
        CHECK(r.v_ideal_dim == r.v_ideal_square_dim);
        CHECK(r.quotient_tag == r.tag);
    }
}

TEST_CASE("homological embeddings")
{
    CHECK(theorem_b_word(3, true) == Word{3, 2, 3});
    CHECK(theorem_b_word(3, false) == Word{2, 1, 2});
    CHECK(theorem_b_word(2, true) == Word{2});
    CHECK(theorem_b_word(2, false) == Word{1});
    CHECK(theorem_b_word(4, true) == Word{4, 3, 4, 2, 3, 4});

    const auto& s = a3();
    auto hom = homological_list(s, a3_records());
    std::set<std::string> labels;
    for (const auto& r : hom)
        labels.insert(*r.sigma4);
    CHECK(labels == std::set<std::string>{"1", "(13)", "(24)", "(14)(23)"});
    CHECK_FALSE(is_homological(s, named(s, {"S2"})));
    CHECK(is_homological(s, Subcat{}));
    CHECK(is_homological(s, s.everything()));

    auto s2 = make_setting(pi(2));
    auto hom2 = homological_list(s2, classify_all(s2));
    REQUIRE(hom2.size() == 4);
    const auto& g2 = *s2.weyl;
    for (const auto& r : hom2) {
        if (r.w == g2.from_word({1}))
            CHECK(r.wide == Subcat{{s2.projective_ids[1]}});
        if (r.w == g2.from_word({2}))
            CHECK(r.wide == Subcat{{s2.projective_ids[0]}});
    }

    auto s1 = make_setting(pi(1));
    CHECK(homological_list(s1, classify_all(s1)).size() == 2);
}

TEST_CASE("smallest torsion class")
{
    const auto& s = a3();
    const auto& g = *s.weyl;
    auto p1 = s.registry.module(*s.registry.id_of_name("P1"));
    CHECK(smallest_torsion_class_containing(s, a3_records(), p1) == g.from_word({3, 2, 3}));
    CHECK(smallest_torsion_class_containing(s, a3_records(), share(regular_module(s.algebra))) == g.identity());
    CHECK(smallest_torsion_class_containing(s, a3_records(), share(zero_module(s.algebra))) == g.longest_element());
}

TEST_CASE("idempotent ideals and self-injective quotients")
{
    const auto& s = a3();
    for (const auto& w : s.weyl->elements()) {
        CAPTURE(word_to_string(w.word));
        auto i = ideal_for_word(s.algebra, w.word);
        CHECK(is_idempotent_ideal(i) == is_self_injective(quotient_algebra(i)));
    }
}

TEST_CASE("Tachikawa and stratifying ideals")
{
    for (int n : {1, 2, 3}) {
        auto s = make_setting(pi(n));
        CHECK(tachikawa_check(s, 6).passed());
        CHECK(stratifying_scan(s.algebra).nontrivial().empty());
    }
    auto n33 = make_setting(nakayama_algebra(3, 3));
    auto rep = tachikawa_check(n33, 12);
    CHECK(rep.passed());
    CHECK(rep.rows.size() == 6);
    CHECK(stratifying_scan(n33.algebra).nontrivial().empty());
    // a quotient by a vertex is projective over a semisimple algebra
    auto k2 = truncated_path_algebra(quiver_from_edges(2, {}), 1);
    CHECK(stratifying_scan(k2).nontrivial().size() == 2);
}

TEST_CASE("Nakayama algebras")
{
    CHECK_THROWS_AS(nakayama_algebra(3, 4), UnsupportedInput);
    CHECK_THROWS_AS(nakayama_algebra(1, 1), UnsupportedInput);
    auto s = make_setting(nakayama_algebra(3, 3, PrimeField(2)));
    CHECK(s.registry.size() == 9);
    CHECK_FALSE(s.weyl.has_value());
    CHECK_THROWS_AS(classify_all(s), UnsupportedInput);

    auto wides = wide_enumerate_brute(s);
    std::set<Subcat> found(wides.begin(), wides.end());
    CHECK(found.count(Subcat{}) == 1);
    CHECK(found.count(s.everything()) == 1);
    std::set<Subcat> homological;
    for (const auto& w : wides)
        if (!w.empty() && is_homological(s, w))
            homological.insert(w);
    std::set<Subcat> expected{named(s, {"P1"}),
                              named(s, {"P2"}),
                              named(s, {"P3"}),
                              named(s, {"P1", "P2", "S1", "P2/rad^2(P2)"}),
                              named(s, {"P1", "P3", "S3", "P1/rad^2(P1)"}),
                              named(s, {"P2", "P3", "S2", "P3/rad^2(P3)"}),
                              s.everything()};
    CHECK(homological == expected);

    BruteOptions small;
    small.max_registry = 4;
    CHECK_THROWS_AS(wide_enumerate_brute(s, small), ConfigurationError);
}

TEST_CASE("brute wide enumeration agrees with the Weyl classification on A2")
{
    auto s = make_setting(pi(2, 2));
    auto wides = wide_enumerate_brute(s);
    std::set<Subcat> brute(wides.begin(), wides.end());
    std::set<Subcat> weyl;
    for (const auto& r : classify_all(s))
        weyl.insert(r.wide);
    CHECK(brute == weyl);
}

TEST_CASE("cross-characteristic classification")
{
    auto rows = to_tsv(table_rows(a3(), a3_records()));
    for (Scalar p : {2u, 3u}) {
        CAPTURE(p);
        auto s = make_setting(pi(3, p));
        CHECK(to_tsv(table_rows(s, classify_all(s))) == rows);
    }
}

TEST_CASE("serialization")
{
    auto rows = table_rows(a3(), a3_records());
    auto tsv = to_tsv(rows);
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 25);
    auto json = to_json("A3", 1009, rows);
    auto back = rows_from_json(json);
    CHECK(to_tsv(back) == tsv);
    CHECK(rows.front().sigma4 == "1");
    CHECK(rows.front().word == "e");
    CHECK(rows.back().torsion == "{0}");
    CHECK(render_torsion(a3(), by_label("(14)")) == "add(S2)");
}
