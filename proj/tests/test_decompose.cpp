#include "doctest.h"

#include "preproj/registry.hpp"

#include <set>

using namespace preproj;

namespace {

AlgebraPtr pi(int n, Scalar p = PrimeField::kDefaultCharacteristic)
{
    return preprojective_algebra(DynkinType{DynkinFamily::A, n}, PrimeField(p));
}

AlgebraPtr nakayama33() { return truncated_path_algebra(cyclic_quiver(3), 3, PrimeField(), "Nakayama(3,3)"); }

std::size_t count_iso(const std::vector<ModulePtr>& parts, const Representation& x)
{
    std::size_t k = 0;
    for (const auto& p : parts)
        k += is_isomorphic(*p, x) ? 1 : 0;
    return k;
}

}  // namespace

TEST_CASE("minimal polynomial")
{
    PrimeField f;
    Matrix d(f, 3, 3);
    d.at(0, 0) = 1;
    d.at(1, 1) = 1;
    d.at(2, 2) = 2;
    CHECK(minimal_polynomial(d) == Vec{2, f.neg(3), 1});
    Matrix nil(f, 3, 3);
    nil.at(0, 1) = 1;
    nil.at(1, 2) = 1;
    CHECK(minimal_polynomial(nil) == Vec{0, 0, 0, 1});
    CHECK(minimal_polynomial(Matrix::identity(f, 4)) == Vec{f.neg(1), 1});
}

TEST_CASE("radical of endomorphism algebras in several characteristics")
{
    for (Scalar p : {2u, 3u, 5u, 1009u}) {
        CAPTURE(p);
        auto a = pi(3, p);
        auto s1 = simple_module(a, 1);
        auto p2 = projective_module(a, 2);
        CHECK(semisimple_dim(s1) == 1);
        CHECK(semisimple_dim(p2) == 1);
        CHECK(end_algebra(share(p2)).dim() == 2);
        CHECK(semisimple_dim(power(s1, 3)) == 9);
        CHECK(semisimple_dim(power(p2, 2)) == 4);
        CHECK(semisimple_dim(direct_sum(p2, simple_module(a, 2))) == 2);
        CHECK(semisimple_dim(direct_sum(power(s1, 2), power(p2, 3))) == 13);
    }
}

TEST_CASE("decomposition into indecomposables")
{
    for (Scalar p : {2u, 3u, 1009u}) {
        CAPTURE(p);
        auto a = pi(3, p);
        auto p1 = projective_module(a, 1);
        auto p2 = projective_module(a, 2);
        auto s1 = simple_module(a, 1);
        auto s2 = simple_module(a, 2);

        auto parts = decompose(share(power(p1, 2)));
        REQUIRE(parts.size() == 2);
        CHECK(count_iso(parts, p1) == 2);

        parts = decompose(share(direct_sum(s1, s2)));
        REQUIRE(parts.size() == 2);
        CHECK(count_iso(parts, s1) == 1);
        CHECK(count_iso(parts, s2) == 1);

        auto big = direct_sum({p2, s1, p1, s1, p2, s2});
        parts = decompose(share(big));
        CHECK(parts.size() == 6);
        CHECK(count_iso(parts, p2) == 2);
        CHECK(count_iso(parts, s1) == 2);
        for (const auto& q : parts) {
            CHECK(is_valid_module(*q));
            CHECK(is_indecomposable(*q));
        }

        // rad P2 has a single neighbour in the AR quiver
        parts = decompose(radical(share(p2)).source);
        CHECK(parts.size() == 1);
        CHECK(parts.front()->dims == std::vector<std::size_t>{1, 1, 1});

        // P2 / soc P2 has top S2 and socle S1 + S3
        auto w = cokernel(socle(share(p2))).target;
        CHECK(is_indecomposable(*w));
        CHECK(socle_vector(*w) == std::vector<std::size_t>{1, 0, 1});

        // the regular module is the sum of the three projectives
        parts = decompose(share(regular_module(a)));
        CHECK(parts.size() == 3);
    }
}

TEST_CASE("isomorphism tests")
{
    auto a = pi(3);
    auto p1 = projective_module(a, 1);
    auto s1 = simple_module(a, 1);
    auto s2 = simple_module(a, 2);
    CHECK(is_isomorphic(p1, p1));
    CHECK_FALSE(is_isomorphic(s1, s2));
    CHECK(is_isomorphic(direct_sum(p1, s1), direct_sum(s1, p1)));
    CHECK_FALSE(is_isomorphic(direct_sum(p1, s1), projective_module(a, 3)));
    CHECK(is_isomorphic(dual(dual(p1)), p1));
    // P1 and P3 share a dimension vector
    CHECK_FALSE(is_isomorphic(p1, projective_module(a, 3)));
    CHECK(is_isomorphic(regular_module(a), direct_sum({p1, projective_module(a, 2), projective_module(a, 3)})));
}

TEST_CASE("indecomposable registries")
{
    SUBCASE("A1")
    {
        auto r = all_indecomposables(pi(1));
        CHECK(r.size() == 1);
    }
    SUBCASE("A2")
    {
        auto r = all_indecomposables(pi(2));
        CHECK(r.size() == 4);
    }
    SUBCASE("A3")
    {
        auto r = all_indecomposables(pi(3));
        REQUIRE(r.size() == 12);
        std::set<std::string> names(r.names().begin(), r.names().end());
        CHECK(names == std::set<std::string>{"P1", "P2", "P3", "S1", "S2", "S3", "M12", "M21", "M23", "M32", "M",
                                             "W"});
        for (std::size_t i = 0; i < r.size(); ++i) {
            CHECK(is_indecomposable(*r.module(i)));
            for (std::size_t j = i + 1; j < r.size(); ++j)
                CHECK_FALSE(is_isomorphic(*r.module(i), *r.module(j)));
        }
        CHECK(r.name(*r.find(simple_module(r.algebra(), 2))) == "S2");
        auto p2 = share(projective_module(r.algebra(), 2));
        CHECK(r.name(*r.find(*radical(p2).source)) == "M");
        CHECK(r.name(*r.find(*cokernel(socle(p2)).target)) == "W");
        auto p3 = share(projective_module(r.algebra(), 3));
        CHECK(r.name(*r.find(*radical(p3).source)) == "M21");
        CHECK(r.name(*r.find(*cokernel(socle(p3)).target)) == "M32");
        CHECK_FALSE(r.insert(share(simple_module(r.algebra(), 1))).second);
    }
    SUBCASE("Nakayama (3,3)")
    {
        auto r = all_indecomposables(nakayama33());
        CHECK(r.size() == 9);
        std::set<std::string> names(r.names().begin(), r.names().end());
        CHECK(names.count("P1/rad^2(P1)") == 1);
        CHECK(names.count("S3") == 1);
    }
}

TEST_CASE("registry caps")
{
    RegistryCaps caps;
    caps.max_modules = 5;
    CHECK_THROWS_AS(all_indecomposables(pi(3), caps), RegistryOverflow);
}

TEST_CASE("tau is the cosyzygy on A3")
{
    auto r = all_indecomposables(pi(3));
    // AR translates read off the AR quiver
    const std::vector<std::pair<std::string, std::string>> tau{
        {"M", "S2"},   {"S3", "M12"}, {"S1", "M32"}, {"W", "M"},     {"M21", "S3"},
        {"M23", "S1"}, {"S2", "W"},   {"M12", "M23"}, {"M32", "M21"}};
    for (const auto& [x, tx] : tau) {
        CAPTURE(x);
        auto m = r.module(*r.id_of_name(x));
        CHECK(r.name(*r.find(cosyzygy(*m))) == tx);
    }
}

TEST_CASE("gen, sub and trace")
{
    auto a = pi(3);
    auto s1 = simple_module(a, 1);
    auto s2 = simple_module(a, 2);
    auto reg = regular_module(a);
    CHECK(in_gen(reg, s1));
    CHECK(in_gen(reg, projective_module(a, 2)));
    CHECK_FALSE(in_gen(s1, s2));
    CHECK(in_gen(projective_module(a, 1), s1));
    CHECK(in_sub(simple_module(a, 3), projective_module(a, 1)));
    CHECK_FALSE(in_sub(s1, projective_module(a, 1)));
    auto tr = trace_in(share(projective_module(a, 2)), share(projective_module(a, 1)));
    CHECK(tr.source->dims == std::vector<std::size_t>{0, 1, 1});
}

TEST_CASE("self-injective and weakly symmetric")
{
    auto a = pi(3);
    CHECK(is_self_injective(a));
    CHECK_FALSE(is_weakly_symmetric(a));
    CHECK(is_self_injective(quotient_algebra(unit_ideal(a))));
    auto n22 = truncated_path_algebra(cyclic_quiver(2), 2);
    CHECK(is_self_injective(n22));
    auto n33 = nakayama33();
    CHECK(is_self_injective(n33));
    CHECK_FALSE(is_weakly_symmetric(n33));
    CHECK(is_weakly_symmetric(truncated_path_algebra(cyclic_quiver(3), 4)));
}

TEST_CASE("registry closure is exhaustive on A2 over F_2")
{
    auto a = pi(2, 2);
    auto r = all_indecomposables(a);
    REQUIRE(r.size() == 4);
    PrimeField f(2);
    std::size_t modules = 0;
    std::set<std::size_t> seen;
    for (std::size_t d1 = 0; d1 <= 2; ++d1)
        for (std::size_t d2 = 0; d2 <= 2; ++d2) {
            const std::size_t entries = 2 * d1 * d2;
            for (std::size_t bits = 0; bits < (std::size_t{1} << entries); ++bits) {
                Representation x{a, Side::Left, {d1, d2}, {}};
                for (int arrow = 0; arrow < a->quiver().arrow_count(); ++arrow) {
                    const auto& ar = a->quiver().arrows[arrow];
                    x.action.emplace_back(f, x.dim(ar.target), x.dim(ar.source));
                }
                std::size_t k = 0;
                for (auto& m : x.action)
                    for (std::size_t i = 0; i < m.rows(); ++i)
                        for (std::size_t j = 0; j < m.cols(); ++j)
                            m.at(i, j) = (bits >> k++) & 1;
                if (!is_valid_module(x))
                    continue;
                ++modules;
                for (const auto& [id, mult] : r.decompose_ids(share(x)))
                    seen.insert(id);
            }
        }
    CHECK(modules > 0);
    CHECK(seen.size() == 4);
}
