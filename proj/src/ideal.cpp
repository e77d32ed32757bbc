#include "preproj/ideal.hpp"

#include <algorithm>

namespace preproj {

namespace {

void require_same(const TwoSidedIdeal& i, const TwoSidedIdeal& j)
{
    if (i.algebra != j.algebra)
        throw std::invalid_argument("ideals belong to different algebras");
}

// x·a and a·x for an arrow a, as dense vectors.
Vec left_by_arrow(const GradedAlgebra& a, int arrow, const Vec& x)
{
    const PrimeField& f = a.field();
    Vec out(a.dim(), 0);
    for (std::size_t j = 0; j < a.dim(); ++j)
        if (x[j] != 0)
            for (const auto& [k, c] : a.left_arrow(arrow, j))
                out[k] = f.add(out[k], f.mul(x[j], c));
    return out;
}

Vec right_by_arrow(const GradedAlgebra& a, int arrow, const Vec& x)
{
    const PrimeField& f = a.field();
    Vec out(a.dim(), 0);
    for (std::size_t j = 0; j < a.dim(); ++j)
        if (x[j] != 0)
            for (const auto& [k, c] : a.right_arrow(arrow, j))
                out[k] = f.add(out[k], f.mul(x[j], c));
    return out;
}

Vec idempotent_project(const GradedAlgebra& a, const Vec& x, int target, int source)
{
    Vec out(a.dim(), 0);
    for (std::size_t j = 0; j < a.dim(); ++j)
        if ((target == 0 || a.basis(j).target == target) && (source == 0 || a.basis(j).source == source))
            out[j] = x[j];
    return out;
}

}  // namespace

TwoSidedIdeal zero_ideal(const AlgebraPtr& a) { return {a, Subspace(a->field(), a->dim())}; }

TwoSidedIdeal unit_ideal(const AlgebraPtr& a) { return {a, Subspace::full(a->field(), a->dim())}; }

TwoSidedIdeal two_sided_closure(const AlgebraPtr& a, const std::vector<AlgebraElement>& generators)
{
    const PrimeField& f = a->field();
    // Split generators into e_t x e_s components so the closure only needs arrows.
    std::vector<Vec> pending;
    for (const auto& g : generators)
        for (int t = 1; t <= a->vertex_count(); ++t)
            for (int s = 1; s <= a->vertex_count(); ++s) {
                Vec c = idempotent_project(*a, g, t, s);
                if (std::any_of(c.begin(), c.end(), [](Scalar x) { return x != 0; }))
                    pending.push_back(std::move(c));
            }
    Subspace span(f, a->dim());
    std::vector<Vec> accepted;
    while (!pending.empty()) {
        Vec v = std::move(pending.back());
        pending.pop_back();
        if (span.contains(v))
            continue;
        accepted.push_back(v);
        span = Subspace::span(f, a->dim(), accepted);
        for (int arrow = 0; arrow < a->quiver().arrow_count(); ++arrow) {
            pending.push_back(left_by_arrow(*a, arrow, v));
            pending.push_back(right_by_arrow(*a, arrow, v));
        }
    }
    return {a, span};
}

TwoSidedIdeal idempotent_ideal(const AlgebraPtr& a, int vertex)
{
    if (vertex < 1 || vertex > a->vertex_count())
        throw std::out_of_range("vertex index out of range");
    std::vector<int> others;
    for (int v = 1; v <= a->vertex_count(); ++v)
        if (v != vertex)
            others.push_back(v);
    return vertex_ideal(a, others);
}

TwoSidedIdeal vertex_ideal(const AlgebraPtr& a, std::span<const int> vertices)
{
    Vec e(a->dim(), 0);
    for (int v : vertices) {
        if (v < 1 || v > a->vertex_count())
            throw std::out_of_range("vertex index out of range");
        if (a->idempotent(v) >= 0)
            e[a->idempotent(v)] = 1;
    }
    return two_sided_closure(a, {e});
}

TwoSidedIdeal ideal_product(const TwoSidedIdeal& i, const TwoSidedIdeal& j)
{
    require_same(i, j);
    const GradedAlgebra& a = *i.algebra;
    const PrimeField& f = a.field();
    std::vector<Vec> prods;
    for (std::size_t x = 0; x < i.dim(); ++x) {
        Vec xv = i.space.basis_vector(x);
        for (std::size_t y = 0; y < j.dim(); ++y) {
            Vec p = a.multiply(xv, j.space.basis_vector(y));
            if (std::any_of(p.begin(), p.end(), [](Scalar s) { return s != 0; }))
                prods.push_back(std::move(p));
        }
    }
    return {i.algebra, Subspace::span(f, a.dim(), prods)};
}

TwoSidedIdeal ideal_for_word(const AlgebraPtr& a, std::span<const int> word)
{
    TwoSidedIdeal acc = unit_ideal(a);
    for (int v : word) {
        acc = ideal_product(acc, idempotent_ideal(a, v));
        if (acc.dim() == 0)
            break;
    }
    return acc;
}

bool is_idempotent_ideal(const TwoSidedIdeal& i) { return ideal_product(i, i) == i; }

bool is_two_sided(const TwoSidedIdeal& i)
{
    const GradedAlgebra& a = *i.algebra;
    for (std::size_t x = 0; x < i.dim(); ++x) {
        Vec xv = i.space.basis_vector(x);
        for (std::size_t b = 0; b < a.dim(); ++b) {
            Vec e = a.basis_element(b);
            if (!i.space.contains(a.multiply(xv, e)) || !i.space.contains(a.multiply(e, xv)))
                return false;
        }
    }
    return true;
}

AlgebraPtr quotient_algebra(const TwoSidedIdeal& i)
{
    const GradedAlgebra& a = *i.algebra;
    const auto keep = i.space.non_pivots();
    std::vector<int> new_index(a.dim(), -1);
    for (std::size_t k = 0; k < keep.size(); ++k)
        new_index[keep[k]] = static_cast<int>(k);

    auto reduce = [&](const SparseVec& v) {
        Vec dense(a.dim(), 0);
        for (const auto& [k, c] : v)
            dense[k] = c;
        Vec r = i.space.reduce(dense);
        SparseVec out;
        for (std::size_t k = 0; k < keep.size(); ++k)
            if (r[keep[k]] != 0)
                out.emplace_back(static_cast<int>(k), r[keep[k]]);
        return out;
    };

    GradedAlgebra::Parts parts{a.quiver(), a.field(), a.name() + "/I", {}, {}, {}, {}};
    for (std::size_t k : keep)
        parts.basis.push_back(a.basis(k));
    const int m = a.quiver().arrow_count();
    const std::size_t dim = keep.size();
    parts.left_arrow.assign(m, std::vector<SparseVec>(dim));
    parts.right_arrow.assign(m, std::vector<SparseVec>(dim));
    for (int arrow = 0; arrow < m; ++arrow)
        for (std::size_t k = 0; k < dim; ++k) {
            parts.left_arrow[arrow][k] = reduce(a.left_arrow(arrow, keep[k]));
            parts.right_arrow[arrow][k] = reduce(a.right_arrow(arrow, keep[k]));
        }
    parts.products.assign(dim * dim, {});
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y)
            parts.products[x * dim + y] = reduce(a.product(keep[x], keep[y]));
    return GradedAlgebra::assemble(std::move(parts));
}

}  // namespace preproj
