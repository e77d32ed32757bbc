#include "doctest.h"

#include "preproj/field.hpp"

#include <algorithm>
#include <random>

using namespace preproj;

namespace {

Matrix random_matrix(PrimeField f, std::size_t r, std::size_t c, std::mt19937& rng, int zero_bias = 0)
{
    Matrix m(f, r, c);
    std::uniform_int_distribution<Scalar> d(0, f.characteristic() - 1);
    std::uniform_int_distribution<int> z(0, 9);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = z(rng) < zero_bias ? 0 : d(rng);
    return m;
}

// Leibniz determinant mod p, independent of elimination.
Scalar det_leibniz(const PrimeField& f, const std::vector<std::vector<Scalar>>& a)
{
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    Scalar total = 0;
    do {
        Scalar term = 1;
        for (std::size_t i = 0; i < n; ++i)
            term = f.mul(term, a[i][perm[i]]);
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Largest k such that some k×k minor is nonzero.
std::size_t minor_rank(const Matrix& m)
{
    const std::size_t r = m.rows(), c = m.cols();
    std::size_t best = 0;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        bool found = false;
        for (unsigned rs = 0; rs < (1u << r) && !found; ++rs) {
            if (static_cast<std::size_t>(__builtin_popcount(rs)) != k)
                continue;
            for (unsigned cs = 0; cs < (1u << c) && !found; ++cs) {
                if (static_cast<std::size_t>(__builtin_popcount(cs)) != k)
                    continue;
                std::vector<std::vector<Scalar>> sub;
                for (std::size_t i = 0; i < r; ++i) {
                    if (!(rs >> i & 1))
                        continue;
                    sub.emplace_back();
                    for (std::size_t j = 0; j < c; ++j)
                        if (cs >> j & 1)
                            sub.back().push_back(m.at(i, j));
                }
                found = det_leibniz(m.field(), sub) != 0;
            }
        }
        if (!found)
            break;
        best = k;
    }
    return best;
}

}  // namespace

TEST_CASE("prime field arithmetic")
{
    PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.mul(3, 5) == 1);
    for (Scalar a = 1; a < 7; ++a)
        CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.from_int(-1) == 6);
    CHECK_THROWS_AS(PrimeField(8), ConfigurationError);
    CHECK(PrimeField().characteristic() == 1009);
}

TEST_CASE("rref trivial cases")
{
    PrimeField f;
    auto id = rref(Matrix::identity(f, 2));
    CHECK(id.reduced == Matrix::identity(f, 2));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});
    auto z = rref(Matrix(f, 3, 2));
    CHECK(z.reduced.is_zero());
    CHECK(z.pivots.empty());
    CHECK(rank(Matrix(f, 0, 4)) == 0);
    CHECK(rank(Matrix(f, 4, 0)) == 0);
}

TEST_CASE("rank agrees with the minor-rank oracle")
{
    PrimeField f(101);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = random_matrix(f, 5, 5, rng, trial % 8);
        if (trial % 5 == 0) {
            for (std::size_t j = 0; j < 5; ++j)
                m.at(4, j) = f.add(m.at(0, j), f.mul(3, m.at(1, j)));
        }
        CHECK(rank(m) == minor_rank(m));
    }
}

TEST_CASE("kernel basis")
{
    PrimeField f;
    CHECK(kernel_basis(Matrix::identity(f, 3)).dim() == 0);
    CHECK(kernel_basis(Matrix(f, 3, 3)).dim() == 3);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(f, 1 + trial % 5, 1 + (trial * 7) % 6, rng, trial % 9);
        Subspace k = kernel_basis(m);
        CHECK(k.dim() + rank(m) == m.cols());
        for (std::size_t i = 0; i < k.dim(); ++i) {
            Vec r = m.apply(k.basis_vector(i));
            CHECK(std::all_of(r.begin(), r.end(), [](Scalar x) { return x == 0; }));
        }
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("solve")
{
    PrimeField f;
    Vec b{3, 1, 4};
    auto x = solve(Matrix::identity(f, 3), b);
    REQUIRE(x);
    CHECK(*x == b);
    CHECK_FALSE(solve(Matrix(f, 3, 3), b));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = random_matrix(f, 4, 6, rng, trial % 6);
        Vec x0(6);
        for (auto& v : x0)
            v = rng() % f.characteristic();
        Vec rhs = a.apply(x0);
        auto sol = solve(a, rhs);
        REQUIRE(sol);
        CHECK(a.apply(*sol) == rhs);
    }
}

TEST_CASE("subspace sum and intersection")
{
    PrimeField f(13);
    std::mt19937 rng(8);
    Subspace zero(f, 5);
    for (int trial = 0; trial < 30; ++trial) {
        Subspace u = Subspace::from_matrix_rows(random_matrix(f, 1 + trial % 4, 5, rng, trial % 7));
        Subspace v = Subspace::from_matrix_rows(random_matrix(f, 1 + trial % 3, 5, rng, trial % 5));
        CHECK(subspace_sum(u, zero) == u);
        CHECK(subspace_intersect(u, u) == u);
        Subspace s = subspace_sum(u, v);
        Subspace i = subspace_intersect(u, v);
        CHECK(u.dim() + v.dim() == s.dim() + i.dim());
        for (std::size_t k = 0; k < i.dim(); ++k) {
            CHECK(u.contains(i.basis_vector(k)));
            CHECK(v.contains(i.basis_vector(k)));
        }
    }
    CHECK_THROWS_AS(subspace_sum(Subspace(f, 3), Subspace(f, 4)), DimensionMismatch);
}

TEST_CASE("subspace equality ignores spanning-set order")
{
    PrimeField f(5);
    std::vector<Vec> gens{{1, 2, 0, 3}, {0, 1, 1, 1}, {1, 3, 1, 4}};
    Subspace a = Subspace::span(f, 4, gens);
    std::reverse(gens.begin(), gens.end());
    Subspace b = Subspace::span(f, 4, gens);
    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(a == a);
}

TEST_CASE("inverse")
{
    PrimeField f(11);
    Matrix m = Matrix::from_rows(f, 2, {{1, 2}, {3, 4}});
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(f, 2));
    CHECK_FALSE(inverse(Matrix::from_rows(f, 2, {{1, 2}, {2, 4}})));
}
