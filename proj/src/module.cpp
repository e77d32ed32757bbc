#include "preproj/module.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace preproj {

namespace {

using Components = std::vector<std::vector<std::size_t>>;

// Module spanned by the algebra basis elements accepted by `keep`, graded by
// target (left) or source (right). The selection must be closed under the action.
Representation basis_module(const AlgebraPtr& a, Side side, const std::function<bool(const BasisElement&)>& keep,
                            Components* comps_out = nullptr)
{
    const int n = a->vertex_count();
    Components comps(n);
    std::vector<int> local(a->dim(), -1);
    for (std::size_t b = 0; b < a->dim(); ++b) {
        const auto& be = a->basis(b);
        if (!keep(be))
            continue;
        int w = side == Side::Left ? be.target : be.source;
        local[b] = static_cast<int>(comps[w - 1].size());
        comps[w - 1].push_back(b);
    }
    Representation x;
    x.algebra = a;
    x.side = side;
    for (const auto& c : comps)
        x.dims.push_back(c.size());
    for (int arrow = 0; arrow < a->quiver().arrow_count(); ++arrow) {
        const int u = x.from(arrow), w = x.to(arrow);
        Matrix m(a->field(), x.dim(w), x.dim(u));
        for (std::size_t col = 0; col < comps[u - 1].size(); ++col) {
            const std::size_t b = comps[u - 1][col];
            const SparseVec& img = side == Side::Left ? a->left_arrow(arrow, b) : a->right_arrow(arrow, b);
            for (const auto& [k, c] : img) {
                if (local[k] < 0)
                    throw std::logic_error("basis selection is not a submodule");
                m.at(local[k], col) = c;
            }
        }
        x.action.push_back(std::move(m));
    }
    if (comps_out)
        *comps_out = std::move(comps);
    return x;
}

Components projective_components(const AlgebraPtr& a, int v, Side side)
{
    Components comps;
    basis_module(a, side, [&](const BasisElement& b) { return (side == Side::Left ? b.source : b.target) == v; },
                 &comps);
    return comps;
}

std::vector<Matrix> zero_maps(const Representation& x, const Representation& y)
{
    std::vector<Matrix> maps;
    for (int v = 1; v <= x.vertex_count(); ++v)
        maps.emplace_back(x.field(), y.dim(v), x.dim(v));
    return maps;
}

// Vertex-wise subspaces given by the row spaces of per-vertex column sets.
VertexSubspaces column_spaces(const std::vector<Matrix>& maps)
{
    VertexSubspaces out;
    for (const auto& m : maps)
        out.push_back(Subspace::from_matrix_rows(m.transpose()));
    return out;
}

Morphism make_morphism(const ModulePtr& x, const ModulePtr& y, std::vector<Matrix> maps)
{
    return Morphism{x, y, std::move(maps)};
}

Matrix kron_identity(const Matrix& f, std::size_t k)
{
    Matrix out(f.field(), f.rows() * k, f.cols() * k);
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c)
            if (f.at(r, c) != 0)
                for (std::size_t j = 0; j < k; ++j)
                    out.at(r * k + j, c * k + j) = f.at(r, c);
    return out;
}

}  // namespace

std::size_t Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

std::size_t Representation::offset(int v) const
{
    return std::accumulate(dims.begin(), dims.begin() + (v - 1), std::size_t{0});
}

int Representation::from(int arrow) const
{
    const Arrow& a = algebra->quiver().arrows[arrow];
    return side == Side::Left ? a.source : a.target;
}

int Representation::to(int arrow) const
{
    const Arrow& a = algebra->quiver().arrows[arrow];
    return side == Side::Left ? a.target : a.source;
}

Matrix Morphism::total() const
{
    Matrix m(source->field(), target->total_dim(), source->total_dim());
    for (int v = 1; v <= source->vertex_count(); ++v)
        m.set_block(target->offset(v), source->offset(v), maps[v - 1]);
    return m;
}

ModulePtr share(Representation x) { return std::make_shared<const Representation>(std::move(x)); }

Representation zero_module(const AlgebraPtr& a, Side side)
{
    return basis_module(a, side, [](const BasisElement&) { return false; });
}

Representation simple_module(const AlgebraPtr& a, int vertex, Side side)
{
    if (vertex < 1 || vertex > a->vertex_count())
        throw std::out_of_range("vertex index out of range");
    Representation x = zero_module(a, side);
    x.dims[vertex - 1] = 1;
    for (int arrow = 0; arrow < a->quiver().arrow_count(); ++arrow)
        x.action[arrow] = Matrix(a->field(), x.dim(x.to(arrow)), x.dim(x.from(arrow)));
    return x;
}

Representation projective_module(const AlgebraPtr& a, int vertex, Side side)
{
    if (vertex < 1 || vertex > a->vertex_count())
        throw std::out_of_range("vertex index out of range");
    return basis_module(a, side,
                        [&](const BasisElement& b) { return (side == Side::Left ? b.source : b.target) == vertex; });
}

Representation injective_module(const AlgebraPtr& a, int vertex, Side side)
{
    return dual(projective_module(a, vertex, other_side(side)));
}

Representation regular_module(const AlgebraPtr& a, Side side)
{
    return basis_module(a, side, [](const BasisElement&) { return true; });
}

namespace {

VertexSubspaces ideal_in_regular(const TwoSidedIdeal& i, Side side, const Components& comps)
{
    const GradedAlgebra& a = *i.algebra;
    VertexSubspaces out;
    for (int w = 1; w <= a.vertex_count(); ++w) {
        std::vector<Vec> rows;
        for (std::size_t k = 0; k < i.dim(); ++k) {
            Vec full = i.space.basis_vector(k);
            Vec local(comps[w - 1].size(), 0);
            bool nonzero = false;
            for (std::size_t c = 0; c < local.size(); ++c) {
                local[c] = full[comps[w - 1][c]];
                nonzero = nonzero || local[c] != 0;
            }
            if (nonzero)
                rows.push_back(std::move(local));
        }
        out.push_back(Subspace::span(a.field(), comps[w - 1].size(), rows));
    }
    (void)side;
    return out;
}

}  // namespace

Representation module_of_ideal(const TwoSidedIdeal& i, Side side)
{
    Components comps;
    auto reg = share(basis_module(i.algebra, side, [](const BasisElement&) { return true; }, &comps));
    return *submodule(reg, ideal_in_regular(i, side, comps)).source;
}

Representation quotient_by_ideal(const TwoSidedIdeal& i, Side side)
{
    Components comps;
    auto reg = share(basis_module(i.algebra, side, [](const BasisElement&) { return true; }, &comps));
    return *quotient(reg, ideal_in_regular(i, side, comps)).target;
}

Matrix basis_action(const Representation& x, std::size_t b)
{
    const BasisElement& be = x.algebra->basis(b);
    const int from = x.side == Side::Left ? be.source : be.target;
    Matrix m = Matrix::identity(x.field(), x.dim(from));
    if (x.side == Side::Left) {
        for (int arrow : be.path)
            m = x.action[arrow] * m;
    } else {
        for (auto it = be.path.rbegin(); it != be.path.rend(); ++it)
            m = x.action[*it] * m;
    }
    return m;
}

bool is_valid_module(const Representation& x)
{
    const GradedAlgebra& a = *x.algebra;
    if (static_cast<int>(x.dims.size()) != a.vertex_count() ||
        static_cast<int>(x.action.size()) != a.quiver().arrow_count())
        return false;
    for (int arrow = 0; arrow < a.quiver().arrow_count(); ++arrow)
        if (x.action[arrow].rows() != x.dim(x.to(arrow)) || x.action[arrow].cols() != x.dim(x.from(arrow)))
            return false;
    std::vector<Matrix> acts;
    for (std::size_t b = 0; b < a.dim(); ++b)
        acts.push_back(basis_action(x, b));
    for (int v = 1; v <= a.vertex_count(); ++v)
        if (a.idempotent(v) < 0 && x.dim(v) != 0)
            return false;
    for (int arrow = 0; arrow < a.quiver().arrow_count(); ++arrow) {
        const int u = x.from(arrow), w = x.to(arrow);
        for (std::size_t b = 0; b < a.dim(); ++b) {
            const BasisElement& be = a.basis(b);
            // b must end where the arrow starts: left a·b, right b·a
            const int b_end = x.side == Side::Left ? be.target : be.source;
            const int b_start = x.side == Side::Left ? be.source : be.target;
            if (b_end != u)
                continue;
            const SparseVec& prod = x.side == Side::Left ? a.left_arrow(arrow, b) : a.right_arrow(arrow, b);
            Matrix lhs = x.action[arrow] * acts[b];
            Matrix rhs(x.field(), x.dim(w), x.dim(b_start));
            for (const auto& [k, c] : prod)
                rhs = rhs + acts[k].scaled(c);
            if (!(lhs == rhs))
                return false;
        }
    }
    return true;
}

Representation direct_sum(const std::vector<Representation>& parts)
{
    if (parts.empty())
        throw std::invalid_argument("direct sum of an empty list needs an algebra");
    Representation x = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k)
        x = direct_sum(x, parts[k]);
    return x;
}

Representation direct_sum(const Representation& x, const Representation& y)
{
    require_compatible(x, y);
    Representation s;
    s.algebra = x.algebra;
    s.side = x.side;
    for (int v = 1; v <= x.vertex_count(); ++v)
        s.dims.push_back(x.dim(v) + y.dim(v));
    for (std::size_t arrow = 0; arrow < x.action.size(); ++arrow) {
        const int u = x.from(static_cast<int>(arrow)), w = x.to(static_cast<int>(arrow));
        Matrix m(x.field(), s.dim(w), s.dim(u));
        m.set_block(0, 0, x.action[arrow]);
        m.set_block(x.dim(w), x.dim(u), y.action[arrow]);
        s.action.push_back(std::move(m));
    }
    return s;
}

Representation power(const Representation& x, std::size_t k)
{
    Representation s = zero_module(x.algebra, x.side);
    for (std::size_t i = 0; i < k; ++i)
        s = direct_sum(s, x);
    return s;
}

void require_compatible(const Representation& x, const Representation& y)
{
    if (x.algebra != y.algebra)
        throw std::invalid_argument("modules over different algebras");
    if (x.side != y.side)
        throw SideMismatch("left and right modules mixed");
}

std::vector<Morphism> hom_basis(const ModulePtr& x, const ModulePtr& y)
{
    require_compatible(*x, *y);
    const int n = x->vertex_count();
    const PrimeField& f = x->field();
    std::vector<std::size_t> var_off(n + 1, 0);
    for (int v = 1; v <= n; ++v)
        var_off[v] = var_off[v - 1] + y->dim(v) * x->dim(v);
    const std::size_t vars = var_off[n];
    // variable for entry (r, c) of F_v
    auto var = [&](int v, std::size_t r, std::size_t c) { return var_off[v - 1] + r * x->dim(v) + c; };

    std::vector<Vec> eqs;
    for (int arrow = 0; arrow < static_cast<int>(x->action.size()); ++arrow) {
        const int u = x->from(arrow), w = x->to(arrow);
        const Matrix& xa = x->action[arrow];
        const Matrix& ya = y->action[arrow];
        // F_w X_a - Y_a F_u = 0, entry (r, c), r < dim y_w, c < dim x_u
        for (std::size_t r = 0; r < y->dim(w); ++r)
            for (std::size_t c = 0; c < x->dim(u); ++c) {
                Vec eq(vars, 0);
                bool any = false;
                for (std::size_t k = 0; k < x->dim(w); ++k)
                    if (xa.at(k, c) != 0) {
                        auto& e = eq[var(w, r, k)];
                        e = f.add(e, xa.at(k, c));
                        any = true;
                    }
                for (std::size_t k = 0; k < y->dim(u); ++k)
                    if (ya.at(r, k) != 0) {
                        auto& e = eq[var(u, k, c)];
                        e = f.sub(e, ya.at(r, k));
                        any = true;
                    }
                if (any)
                    eqs.push_back(std::move(eq));
            }
    }
    Subspace sol = eqs.empty() ? Subspace::full(f, vars) : kernel_basis(Matrix::from_rows(f, vars, eqs));
    std::vector<Morphism> out;
    for (std::size_t k = 0; k < sol.dim(); ++k) {
        Vec s = sol.basis_vector(k);
        std::vector<Matrix> maps;
        for (int v = 1; v <= n; ++v) {
            Matrix m(f, y->dim(v), x->dim(v));
            for (std::size_t r = 0; r < y->dim(v); ++r)
                for (std::size_t c = 0; c < x->dim(v); ++c)
                    m.at(r, c) = s[var(v, r, c)];
            maps.push_back(std::move(m));
        }
        out.push_back(make_morphism(x, y, std::move(maps)));
    }
    return out;
}

std::vector<Morphism> hom_basis(const Representation& x, const Representation& y)
{
    return hom_basis(share(x), share(y));
}

std::size_t hom_dim(const Representation& x, const Representation& y) { return hom_basis(x, y).size(); }

Morphism zero_morphism(const ModulePtr& x, const ModulePtr& y) { return make_morphism(x, y, zero_maps(*x, *y)); }

Morphism identity_morphism(const ModulePtr& x)
{
    std::vector<Matrix> maps;
    for (int v = 1; v <= x->vertex_count(); ++v)
        maps.push_back(Matrix::identity(x->field(), x->dim(v)));
    return make_morphism(x, x, std::move(maps));
}

Morphism compose(const Morphism& g, const Morphism& f)
{
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < f.maps.size(); ++v) {
        if (g.maps[v].cols() != f.maps[v].rows())
            throw DimensionMismatch("morphisms are not composable");
        maps.push_back(g.maps[v] * f.maps[v]);
    }
    return make_morphism(f.source, g.target, std::move(maps));
}

Morphism add(const Morphism& f, const Morphism& g)
{
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < f.maps.size(); ++v)
        maps.push_back(f.maps[v] + g.maps[v]);
    return make_morphism(f.source, f.target, std::move(maps));
}

Morphism scale(const Morphism& f, Scalar c)
{
    std::vector<Matrix> maps;
    for (const auto& m : f.maps)
        maps.push_back(m.scaled(c));
    return make_morphism(f.source, f.target, std::move(maps));
}

bool is_zero(const Morphism& f)
{
    return std::all_of(f.maps.begin(), f.maps.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool is_injective(const Morphism& f)
{
    for (const auto& m : f.maps)
        if (rank(m) != m.cols())
            return false;
    return true;
}

bool is_surjective(const Morphism& f)
{
    for (const auto& m : f.maps)
        if (rank(m) != m.rows())
            return false;
    return true;
}

bool is_isomorphism(const Morphism& f) { return is_injective(f) && is_surjective(f); }

bool commutes(const Morphism& f)
{
    const auto& x = *f.source;
    const auto& y = *f.target;
    for (int arrow = 0; arrow < static_cast<int>(x.action.size()); ++arrow) {
        const int u = x.from(arrow), w = x.to(arrow);
        if (!(f.maps[w - 1] * x.action[arrow] == y.action[arrow] * f.maps[u - 1]))
            return false;
    }
    return true;
}

Vec flatten(const Morphism& f)
{
    Vec out;
    for (const auto& m : f.maps)
        out.insert(out.end(), m.data().begin(), m.data().end());
    return out;
}

Morphism submodule(const ModulePtr& x, const VertexSubspaces& sub)
{
    const PrimeField& f = x->field();
    Representation s;
    s.algebra = x->algebra;
    s.side = x->side;
    for (const auto& sp : sub)
        s.dims.push_back(sp.dim());
    for (int arrow = 0; arrow < static_cast<int>(x->action.size()); ++arrow) {
        const int u = x->from(arrow), w = x->to(arrow);
        Matrix m(f, s.dim(w), s.dim(u));
        for (std::size_t k = 0; k < s.dim(u); ++k) {
            Vec img = x->action[arrow].apply(sub[u - 1].basis_vector(k));
            auto coords = sub[w - 1].coordinates(img);
            if (!coords)
                throw std::logic_error("subspaces are not closed under the action");
            for (std::size_t r = 0; r < s.dim(w); ++r)
                m.at(r, k) = (*coords)[r];
        }
        s.action.push_back(std::move(m));
    }
    std::vector<Matrix> incl;
    for (int v = 1; v <= x->vertex_count(); ++v)
        incl.push_back(sub[v - 1].basis().transpose());
    for (int v = 1; v <= x->vertex_count(); ++v)
        if (incl[v - 1].rows() != x->dim(v))
            incl[v - 1] = Matrix(f, x->dim(v), sub[v - 1].dim());
    return make_morphism(share(std::move(s)), x, std::move(incl));
}

Morphism quotient(const ModulePtr& x, const VertexSubspaces& sub)
{
    const PrimeField& f = x->field();
    const int n = x->vertex_count();
    std::vector<std::vector<std::size_t>> keep(n);
    for (int v = 1; v <= n; ++v)
        keep[v - 1] = sub[v - 1].non_pivots();
    auto project = [&](int v, std::span<const Scalar> vec) {
        Vec r = sub[v - 1].reduce(vec);
        Vec out(keep[v - 1].size());
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = r[keep[v - 1][k]];
        return out;
    };
    Representation q;
    q.algebra = x->algebra;
    q.side = x->side;
    for (const auto& k : keep)
        q.dims.push_back(k.size());
    for (int arrow = 0; arrow < static_cast<int>(x->action.size()); ++arrow) {
        const int u = x->from(arrow), w = x->to(arrow);
        Matrix m(f, q.dim(w), q.dim(u));
        for (std::size_t k = 0; k < q.dim(u); ++k) {
            Vec e(x->dim(u), 0);
            e[keep[u - 1][k]] = 1;
            Vec img = project(w, x->action[arrow].apply(e));
            for (std::size_t r = 0; r < q.dim(w); ++r)
                m.at(r, k) = img[r];
        }
        q.action.push_back(std::move(m));
    }
    std::vector<Matrix> proj;
    for (int v = 1; v <= n; ++v) {
        Matrix m(f, q.dim(v), x->dim(v));
        for (std::size_t c = 0; c < x->dim(v); ++c) {
            Vec e(x->dim(v), 0);
            e[c] = 1;
            Vec img = project(v, e);
            for (std::size_t r = 0; r < q.dim(v); ++r)
                m.at(r, c) = img[r];
        }
        proj.push_back(std::move(m));
    }
    return make_morphism(x, share(std::move(q)), std::move(proj));
}

VertexSubspaces submodule_closure(const Representation& x, VertexSubspaces gens)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (int arrow = 0; arrow < static_cast<int>(x.action.size()); ++arrow) {
            const int u = x.from(arrow), w = x.to(arrow);
            if (gens[u - 1].dim() == 0)
                continue;
            Matrix img = x.action[arrow] * gens[u - 1].basis().transpose();
            Subspace s = subspace_sum(gens[w - 1], Subspace::from_matrix_rows(img.transpose()));
            if (s.dim() != gens[w - 1].dim()) {
                gens[w - 1] = std::move(s);
                changed = true;
            }
        }
    }
    return gens;
}

Morphism kernel(const Morphism& f)
{
    VertexSubspaces k;
    for (const auto& m : f.maps)
        k.push_back(kernel_basis(m));
    return submodule(f.source, k);
}

Morphism cokernel(const Morphism& f) { return quotient(f.target, column_spaces(f.maps)); }

Morphism image(const Morphism& f) { return submodule(f.target, column_spaces(f.maps)); }

namespace {

VertexSubspaces radical_spaces(const Representation& x)
{
    VertexSubspaces rad;
    for (int v = 1; v <= x.vertex_count(); ++v)
        rad.emplace_back(x.field(), x.dim(v));
    for (int arrow = 0; arrow < static_cast<int>(x.action.size()); ++arrow) {
        const int w = x.to(arrow);
        rad[w - 1] = subspace_sum(rad[w - 1], Subspace::from_matrix_rows(x.action[arrow].transpose()));
    }
    return rad;
}

VertexSubspaces socle_spaces(const Representation& x)
{
    VertexSubspaces soc;
    for (int v = 1; v <= x.vertex_count(); ++v) {
        std::vector<Vec> rows;
        for (int arrow = 0; arrow < static_cast<int>(x.action.size()); ++arrow)
            if (x.from(arrow) == v)
                for (std::size_t r = 0; r < x.action[arrow].rows(); ++r)
                    rows.push_back(x.action[arrow].row_vec(r));
        soc.push_back(rows.empty() ? Subspace::full(x.field(), x.dim(v))
                                   : kernel_basis(Matrix::from_rows(x.field(), x.dim(v), rows)));
    }
    return soc;
}

}  // namespace

Morphism radical(const ModulePtr& x) { return submodule(x, radical_spaces(*x)); }

Morphism top(const ModulePtr& x) { return quotient(x, radical_spaces(*x)); }

Morphism socle(const ModulePtr& x) { return submodule(x, socle_spaces(*x)); }

std::vector<std::size_t> top_vector(const Representation& x)
{
    std::vector<std::size_t> out;
    auto rad = radical_spaces(x);
    for (int v = 1; v <= x.vertex_count(); ++v)
        out.push_back(x.dim(v) - rad[v - 1].dim());
    return out;
}

std::vector<std::size_t> socle_vector(const Representation& x)
{
    std::vector<std::size_t> out;
    for (const auto& s : socle_spaces(x))
        out.push_back(s.dim());
    return out;
}

Morphism projective_cover(const ModulePtr& x)
{
    const AlgebraPtr& a = x->algebra;
    const PrimeField& f = x->field();
    const int n = x->vertex_count();
    auto rad = radical_spaces(*x);
    Representation p = zero_module(a, x->side);
    struct Generator {
        int vertex;
        Vec element;
    };
    std::vector<Generator> gens;
    for (int v = 1; v <= n; ++v)
        for (std::size_t c : rad[v - 1].non_pivots()) {
            Vec e(x->dim(v), 0);
            e[c] = 1;
            gens.push_back({v, e});
        }
    std::vector<Matrix> maps;
    std::vector<std::vector<Vec>> columns(n);  // per vertex, images of P basis in order
    for (const auto& g : gens) {
        Components comps = projective_components(a, g.vertex, x->side);
        p = direct_sum(p, projective_module(a, g.vertex, x->side));
        for (int w = 1; w <= n; ++w)
            for (std::size_t b : comps[w - 1])
                columns[w - 1].push_back(basis_action(*x, b).apply(g.element));
    }
    for (int w = 1; w <= n; ++w) {
        Matrix m(f, x->dim(w), p.dim(w));
        for (std::size_t c = 0; c < columns[w - 1].size(); ++c)
            for (std::size_t r = 0; r < x->dim(w); ++r)
                m.at(r, c) = columns[w - 1][c][r];
        maps.push_back(std::move(m));
    }
    return make_morphism(share(std::move(p)), x, std::move(maps));
}

Morphism injective_envelope(const ModulePtr& x)
{
    Morphism cover = projective_cover(share(dual(*x)));
    Morphism env = dual(cover);
    env.source = x;
    return env;
}

Representation syzygy(const Representation& x) { return *kernel(projective_cover(share(x))).source; }

Representation cosyzygy(const Representation& x) { return *cokernel(injective_envelope(share(x))).target; }

Representation syzygy_power(const Representation& x, int k)
{
    Representation y = x;
    for (int i = 0; i < k; ++i)
        y = syzygy(y);
    for (int i = 0; i > k; --i)
        y = cosyzygy(y);
    return y;
}

Representation dual(const Representation& x)
{
    Representation d;
    d.algebra = x.algebra;
    d.side = other_side(x.side);
    d.dims = x.dims;
    for (const auto& m : x.action)
        d.action.push_back(m.transpose());
    return d;
}

Morphism dual(const Morphism& f)
{
    std::vector<Matrix> maps;
    for (const auto& m : f.maps)
        maps.push_back(m.transpose());
    return make_morphism(share(dual(*f.target)), share(dual(*f.source)), std::move(maps));
}

Representation nakayama(const Representation& x)
{
    const AlgebraPtr& a = x.algebra;
    const PrimeField& f = a->field();
    const int n = a->vertex_count();
    auto xp = share(x);
    std::vector<ModulePtr> proj;
    std::vector<Components> comps;
    std::vector<std::vector<Morphism>> homs;
    std::vector<Subspace> spaces;
    for (int v = 1; v <= n; ++v) {
        comps.push_back(projective_components(a, v, x.side));
        proj.push_back(share(projective_module(a, v, x.side)));
        homs.push_back(hom_basis(xp, proj.back()));
        std::vector<Vec> rows;
        for (const auto& h : homs.back())
            rows.push_back(flatten(h));
        std::size_t ambient = 0;
        for (int w = 1; w <= n; ++w)
            ambient += proj.back()->dim(w) * x.dim(w);
        spaces.push_back(Subspace::span(f, ambient, rows));
    }
    // Hom(x, A) on the other side: component v is Hom(x, P_v), and an arrow
    // acts by multiplying the projective from the free side.
    Representation h;
    h.algebra = a;
    h.side = other_side(x.side);
    for (int v = 1; v <= n; ++v)
        h.dims.push_back(homs[v - 1].size());
    for (int arrow = 0; arrow < a->quiver().arrow_count(); ++arrow) {
        const int u = h.from(arrow), w = h.to(arrow);
        // r: P_u -> P_w, b ↦ b·a (x left) or a·b (x right)
        std::vector<int> local_w(a->dim(), -1);
        for (int z = 1; z <= n; ++z)
            for (std::size_t c = 0; c < comps[w - 1][z - 1].size(); ++c)
                local_w[comps[w - 1][z - 1][c]] = static_cast<int>(c);
        std::vector<Matrix> rmaps;
        for (int z = 1; z <= n; ++z) {
            Matrix m(f, proj[w - 1]->dim(z), proj[u - 1]->dim(z));
            for (std::size_t c = 0; c < comps[u - 1][z - 1].size(); ++c) {
                const std::size_t b = comps[u - 1][z - 1][c];
                const SparseVec& img = x.side == Side::Left ? a->right_arrow(arrow, b) : a->left_arrow(arrow, b);
                for (const auto& [k, coef] : img)
                    m.at(local_w[k], c) = coef;
            }
            rmaps.push_back(std::move(m));
        }
        Morphism r = make_morphism(proj[u - 1], proj[w - 1], std::move(rmaps));
        Matrix act(f, h.dim(w), h.dim(u));
        for (std::size_t k = 0; k < homs[u - 1].size(); ++k) {
            auto coords = spaces[w - 1].coordinates(flatten(compose(r, homs[u - 1][k])));
            if (!coords)
                throw std::logic_error("Nakayama functor: composite left the hom space");
            // hom_basis rows are the echelon basis, so coordinates index them directly
            for (std::size_t i = 0; i < h.dim(w); ++i)
                act.at(i, k) = (*coords)[i];
        }
        h.action.push_back(std::move(act));
    }
    return dual(h);
}

std::size_t stable_hom_dim(const Representation& x, const Representation& y)
{
    auto xp = share(x);
    auto yp = share(y);
    auto homs = hom_basis(xp, yp);
    if (homs.empty())
        return 0;
    Morphism cover = projective_cover(yp);
    std::vector<Vec> rows;
    for (const auto& g : hom_basis(xp, cover.source))
        rows.push_back(flatten(compose(cover, g)));
    std::size_t ambient = flatten(homs.front()).size();
    return homs.size() - Subspace::span(x.field(), ambient, rows).dim();
}

std::vector<Morphism> projective_resolution(const Representation& x, int length)
{
    std::vector<Morphism> out;
    Morphism d0 = projective_cover(share(x));
    out.push_back(d0);
    Morphism prev = d0;
    for (int k = 1; k <= length; ++k) {
        Morphism incl = kernel(prev);
        Morphism cover = projective_cover(incl.source);
        Morphism dk = compose(incl, cover);
        out.push_back(dk);
        prev = dk;
    }
    return out;
}

namespace {

std::size_t precompose_rank(const std::vector<Morphism>& homs, const Morphism& d)
{
    if (homs.empty())
        return 0;
    std::vector<Vec> rows;
    for (const auto& h : homs)
        rows.push_back(flatten(compose(h, d)));
    std::size_t ambient = rows.front().size();
    if (ambient == 0)
        return 0;
    return rank(Matrix::from_rows(d.source->field(), ambient, rows));
}

}  // namespace

std::size_t ext_dim(const Representation& x, const Representation& y, int i)
{
    if (i < 0)
        throw std::invalid_argument("negative Ext degree");
    require_compatible(x, y);
    if (i == 0)
        return hom_dim(x, y);
    auto res = projective_resolution(x, i + 1);
    auto yp = share(y);
    // Hom(P_{i-1}, y) -> Hom(P_i, y) -> Hom(P_{i+1}, y)
    auto hi = hom_basis(res[i].source, yp);
    auto him1 = hom_basis(res[i - 1].source, yp);
    std::size_t r_out = precompose_rank(hi, res[i + 1]);
    std::size_t r_in = i >= 1 ? precompose_rank(him1, res[i]) : 0;
    return hi.size() - r_out - r_in;
}

std::size_t ext_dim_stable(const Representation& x, const Representation& y, int i)
{
    if (i < 0)
        throw std::invalid_argument("negative Ext degree");
    if (i == 0)
        return hom_dim(x, y);
    return stable_hom_dim(syzygy_power(x, i), y);
}

namespace {

struct TensorSpace {
    std::size_t ambient = 0;
    std::vector<std::size_t> offset;  // offset[v-1]
    Subspace relations;
};

TensorSpace tensor_space(const Representation& m, const Representation& n)
{
    const PrimeField& f = m.field();
    const int verts = m.vertex_count();
    TensorSpace t;
    for (int v = 1; v <= verts; ++v) {
        t.offset.push_back(t.ambient);
        t.ambient += m.dim(v) * n.dim(v);
    }
    auto idx = [&](int v, std::size_t i, std::size_t j) { return t.offset[v - 1] + i * n.dim(v) + j; };
    std::vector<Vec> rows;
    const auto& arrows = m.algebra->quiver().arrows;
    for (const auto& a : arrows) {
        const int s = a.source, tt = a.target;
        const Matrix& ma = m.action[a.id];  // M e_t -> M e_s
        const Matrix& na = n.action[a.id];  // e_s N -> e_t N
        for (std::size_t i = 0; i < m.dim(tt); ++i)
            for (std::size_t j = 0; j < n.dim(s); ++j) {
                Vec r(t.ambient, 0);
                for (std::size_t k = 0; k < m.dim(s); ++k)
                    if (ma.at(k, i) != 0)
                        r[idx(s, k, j)] = f.add(r[idx(s, k, j)], ma.at(k, i));
                for (std::size_t k = 0; k < n.dim(tt); ++k)
                    if (na.at(k, j) != 0)
                        r[idx(tt, i, k)] = f.sub(r[idx(tt, i, k)], na.at(k, j));
                rows.push_back(std::move(r));
            }
    }
    t.relations = Subspace::span(f, t.ambient, rows);
    return t;
}

// (f ⊗ id_N) on the ambient spaces.
Matrix tensor_map(const Morphism& g, const Representation& n, const TensorSpace& src, const TensorSpace& dst)
{
    Matrix out(n.field(), dst.ambient, src.ambient);
    for (int v = 1; v <= n.vertex_count(); ++v)
        out.set_block(dst.offset[v - 1], src.offset[v - 1], kron_identity(g.maps[v - 1], n.dim(v)));
    return out;
}

}  // namespace

std::size_t tor_dim(const Representation& m, const Representation& n, int i)
{
    if (m.side != Side::Right || n.side != Side::Left)
        throw SideMismatch("Tor needs a right module and a left module");
    if (m.algebra != n.algebra)
        throw std::invalid_argument("modules over different algebras");
    if (i < 0)
        throw std::invalid_argument("negative Tor degree");
    if (i == 0) {
        TensorSpace t = tensor_space(m, n);
        return t.ambient - t.relations.dim();
    }
    const PrimeField& f = m.field();
    auto res = projective_resolution(m, i + 1);
    TensorSpace ti = tensor_space(*res[i].source, n);
    TensorSpace tim1 = tensor_space(*res[i - 1].source, n);
    TensorSpace tip1 = tensor_space(*res[i + 1].source, n);
    Matrix phi = tensor_map(res[i], n, ti, tim1);
    // rank of V_i -> V_{i-1} / R_{i-1}
    auto keep = tim1.relations.non_pivots();
    Matrix reduced(f, keep.size(), ti.ambient);
    for (std::size_t c = 0; c < ti.ambient; ++c) {
        Vec col = tim1.relations.reduce(phi.col_vec(c));
        for (std::size_t r = 0; r < keep.size(); ++r)
            reduced.at(r, c) = col[keep[r]];
    }
    const std::size_t r = rank(reduced);
    Matrix psi = tensor_map(res[i + 1], n, tip1, ti);
    Subspace im = subspace_sum(Subspace::from_matrix_rows(psi.transpose()), ti.relations);
    return ti.ambient - r - im.dim();
}

std::string dump_module(const Representation& x)
{
    std::ostringstream os;
    os << "module " << (x.side == Side::Left ? "left" : "right") << " dims=";
    for (std::size_t k = 0; k < x.dims.size(); ++k)
        os << (k ? "," : "") << x.dims[k];
    os << "\n";
    for (std::size_t a = 0; a < x.action.size(); ++a) {
        const Matrix& m = x.action[a];
        os << "arrow " << a << " " << x.from(static_cast<int>(a)) << "->" << x.to(static_cast<int>(a)) << " "
           << m.rows() << "x" << m.cols() << "\n";
        for (std::size_t r = 0; r < m.rows(); ++r) {
            os << " ";
            for (std::size_t c = 0; c < m.cols(); ++c)
                os << " " << m.at(r, c);
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace preproj
