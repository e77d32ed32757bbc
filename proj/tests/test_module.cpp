#include "doctest.h"

#include "preproj/ideal.hpp"
#include "preproj/module.hpp"

#include <random>

using namespace preproj;

namespace {

AlgebraPtr pi(int n) { return preprojective_algebra(DynkinType{DynkinFamily::A, n}); }

std::vector<Representation> sample_modules(const AlgebraPtr& a)
{
    std::vector<Representation> out;
    for (int v = 1; v <= a->vertex_count(); ++v) {
        out.push_back(simple_module(a, v));
        out.push_back(projective_module(a, v));
        auto p = share(projective_module(a, v));
        out.push_back(*radical(p).source);
        out.push_back(*top(share(*radical(p).source)).target);
    }
    return out;
}

// A random combination of a Hom basis is an isomorphism with high probability
// whenever one exists.
bool looks_isomorphic(const Representation& x, const Representation& y)
{
    if (x.dims != y.dims)
        return false;
    auto homs = hom_basis(x, y);
    if (homs.empty())
        return x.is_zero();
    std::mt19937 rng(7);
    for (int attempt = 0; attempt < 4; ++attempt) {
        Morphism f = scale(homs[0], 1 + rng() % 1000);
        for (std::size_t k = 1; k < homs.size(); ++k)
            f = add(f, scale(homs[k], rng() % 1009));
        if (is_isomorphism(f))
            return true;
    }
    return false;
}

TwoSidedIdeal arrow_ideal(const AlgebraPtr& a)
{
    std::vector<AlgebraElement> gens;
    for (int arrow : a->live_arrows())
        for (std::size_t b = 0; b < a->dim(); ++b)
            if (a->basis(b).path == std::vector<int>{arrow})
                gens.push_back(a->basis_element(b));
    return two_sided_closure(a, gens);
}

}  // namespace

TEST_CASE("standard modules satisfy the relations")
{
    for (int n = 1; n <= 4; ++n) {
        auto a = pi(n);
        CHECK(is_valid_module(regular_module(a)));
        CHECK(is_valid_module(regular_module(a, Side::Right)));
        for (int v = 1; v <= n; ++v)
            for (Side s : {Side::Left, Side::Right}) {
                CHECK(is_valid_module(simple_module(a, v, s)));
                CHECK(is_valid_module(projective_module(a, v, s)));
                CHECK(is_valid_module(injective_module(a, v, s)));
            }
    }
    auto nak = truncated_path_algebra(cyclic_quiver(3), 3);
    for (int v = 1; v <= 3; ++v) {
        CHECK(is_valid_module(projective_module(nak, v)));
        CHECK(projective_module(nak, v).total_dim() == 3);
    }
}

TEST_CASE("a broken representation is rejected")
{
    auto a = pi(2);
    Representation x = projective_module(a, 1);
    for (auto& m : x.action)
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m.at(r, c) = 1;
    CHECK_FALSE(is_valid_module(x));
}

TEST_CASE("projective dimension vectors in type A3")
{
    auto a = pi(3);
    CHECK(projective_module(a, 1).dims == std::vector<std::size_t>{1, 1, 1});
    CHECK(projective_module(a, 2).dims == std::vector<std::size_t>{1, 2, 1});
    CHECK(projective_module(a, 3).dims == std::vector<std::size_t>{1, 1, 1});
    CHECK(regular_module(a).total_dim() == 10);
    CHECK(top_vector(projective_module(a, 1)) == std::vector<std::size_t>{1, 0, 0});
    CHECK(socle_vector(projective_module(a, 1)) == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("Hom from a projective reads off a vertex")
{
    for (int n = 2; n <= 3; ++n) {
        auto a = pi(n);
        for (const auto& x : sample_modules(a))
            for (int v = 1; v <= n; ++v)
                CHECK(hom_dim(projective_module(a, v), x) == x.dim(v));
        for (int v = 1; v <= n; ++v)
            for (int w = 1; w <= n; ++w)
                CHECK(hom_dim(projective_module(a, v), projective_module(a, w)) == a->dim_between(v, w));
    }
}

TEST_CASE("every Hom basis element commutes")
{
    auto a = pi(3);
    auto mods = sample_modules(a);
    for (const auto& x : mods)
        for (const auto& y : mods)
            for (const auto& f : hom_basis(x, y))
                CHECK(commutes(f));
}

TEST_CASE("kernel, image and cokernel")
{
    auto a = pi(3);
    auto mods = sample_modules(a);
    for (const auto& x : mods)
        for (const auto& y : mods)
            for (const auto& f : hom_basis(x, y)) {
                auto k = kernel(f);
                auto im = image(f);
                auto c = cokernel(f);
                CHECK(is_valid_module(*k.source));
                CHECK(is_valid_module(*im.source));
                CHECK(is_valid_module(*c.target));
                CHECK(commutes(k));
                CHECK(commutes(c));
                CHECK(is_injective(k));
                CHECK(is_surjective(c));
                CHECK(is_zero(compose(f, k)));
                CHECK(is_zero(compose(c, f)));
                CHECK(k.source->total_dim() + im.source->total_dim() == x.total_dim());
                CHECK(im.source->total_dim() + c.target->total_dim() == y.total_dim());
            }
}

TEST_CASE("duality and injectives")
{
    auto a = pi(3);
    for (const auto& x : sample_modules(a)) {
        auto dd = dual(dual(x));
        CHECK(dd.dims == x.dims);
        CHECK(dd.action == x.action);
    }
    // self-injective with Nakayama permutation i -> 4 - i
    for (int v = 1; v <= 3; ++v) {
        CHECK(looks_isomorphic(injective_module(a, v), projective_module(a, 4 - v)));
        CHECK(looks_isomorphic(nakayama(projective_module(a, v)), injective_module(a, v)));
        CHECK(looks_isomorphic(nakayama(simple_module(a, v)), simple_module(a, 4 - v)));
    }
    auto env = injective_envelope(share(simple_module(a, 2)));
    CHECK(is_injective(env));
    CHECK(commutes(env));
    CHECK(env.target->dims == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("projective covers and syzygies")
{
    auto a = pi(3);
    for (const auto& x : sample_modules(a)) {
        auto cover = projective_cover(share(x));
        CHECK(is_surjective(cover));
        CHECK(commutes(cover));
        CHECK(top_vector(*cover.source) == top_vector(x));
        CHECK(is_valid_module(syzygy(x)));
        CHECK(is_valid_module(cosyzygy(x)));
        auto omega = syzygy(x);
        if (omega.is_zero())
            CHECK(cosyzygy(omega).is_zero());
        else
            CHECK(looks_isomorphic(cosyzygy(omega), x));
    }
    auto s1 = simple_module(a, 1);
    CHECK(syzygy(s1).dims == std::vector<std::size_t>{0, 1, 1});
    CHECK(syzygy(projective_module(a, 2)).is_zero());
}

TEST_CASE("Omega has period dividing 6 and nu is Omega^-3 on simples")
{
    for (int n = 2; n <= 3; ++n) {
        auto a = pi(n);
        for (int v = 1; v <= n; ++v) {
            auto s = simple_module(a, v);
            CHECK(looks_isomorphic(syzygy_power(s, 6), s));
            CHECK(looks_isomorphic(nakayama(s), syzygy_power(s, -3)));
            CHECK(looks_isomorphic(syzygy_power(s, 3), syzygy_power(s, -3)));
        }
    }
}

TEST_CASE("Ext agrees between the resolution and the stable category")
{
    for (int n = 2; n <= 3; ++n) {
        auto a = pi(n);
        auto mods = sample_modules(a);
        for (const auto& x : mods)
            for (const auto& y : mods)
                for (int i = 1; i <= (n == 2 ? 6 : 3); ++i)
                    CHECK(ext_dim(x, y, i) == ext_dim_stable(x, y, i));
    }
}

TEST_CASE("Ext between simples and the 2-CY symmetry")
{
    auto a = pi(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const std::size_t arrows = (i - j == 1 || j - i == 1) ? 1 : 0;
            CHECK(ext_dim(simple_module(a, i), simple_module(a, j), 1) == arrows);
            CHECK(ext_dim(simple_module(a, i), simple_module(a, j), 0) == (i == j ? 1u : 0u));
        }
    auto mods = sample_modules(a);
    for (const auto& x : mods)
        for (const auto& y : mods) {
            CHECK(ext_dim(x, y, 1) == ext_dim(y, x, 1));
            CHECK(ext_dim(x, y, 2) == stable_hom_dim(y, x));
        }
}

TEST_CASE("Tor of quotients by ideals")
{
    auto a = pi(3);
    auto rad = arrow_ideal(a);
    auto rad2 = ideal_product(rad, rad);
    CHECK(rad.dim() == 7);
    auto m = quotient_by_ideal(rad, Side::Right);
    auto n = quotient_by_ideal(rad, Side::Left);
    CHECK(is_valid_module(m));
    CHECK(is_valid_module(n));
    CHECK(tor_dim(m, n, 0) == a->dim() - rad.dim());
    CHECK(tor_dim(m, n, 1) == rad.dim() - rad2.dim());
    for (int v = 1; v <= 3; ++v) {
        auto iv = idempotent_ideal(a, v);
        auto r = quotient_by_ideal(iv, Side::Right);
        auto l = quotient_by_ideal(iv, Side::Left);
        CHECK(module_of_ideal(iv).total_dim() == iv.dim());
        CHECK(r.total_dim() == a->dim() - iv.dim());
        CHECK(tor_dim(r, l, 1) == iv.dim() - ideal_product(iv, iv).dim());
    }
}

TEST_CASE("Tor is dual to Ext")
{
    auto a = pi(3);
    auto mods = sample_modules(a);
    for (std::size_t k = 0; k < mods.size(); k += 2)
        for (const auto& y : mods)
            for (int i = 0; i <= 2; ++i) {
                auto m = dual(mods[k]);
                CHECK(tor_dim(m, y, i) == ext_dim(y, mods[k], i));
            }
}

TEST_CASE("side mismatches throw")
{
    auto a = pi(2);
    CHECK_THROWS_AS(hom_dim(simple_module(a, 1), simple_module(a, 1, Side::Right)), SideMismatch);
    CHECK_THROWS_AS(tor_dim(simple_module(a, 1), simple_module(a, 1), 0), SideMismatch);
}
