#include "preproj/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace preproj {

namespace {

void axpy(const PrimeField& f, Vec& acc, const SparseVec& v, Scalar c)
{
    if (c == 0)
        return;
    for (const auto& [i, x] : v)
        acc[i] = f.add(acc[i], f.mul(c, x));
}

SparseVec to_sparse(const Vec& v)
{
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            out.emplace_back(static_cast<int>(i), v[i]);
    return out;
}

// Relations for degree d in terms of formal coordinates (arrow, basis index of degree d-1).
struct DegreeContext {
    int degree;
    const std::vector<BasisElement>& basis;
    const std::vector<std::size_t>& offsets;
    const std::vector<std::vector<SparseVec>>& left;
    std::function<int(int arrow, std::size_t b)> coord;  // -1 if not composable
    std::size_t coord_count;
};

using RelationFn = std::function<std::vector<SparseVec>(const DegreeContext&)>;

AlgebraPtr build_graded(const Quiver& q, PrimeField f, std::string name, int degree_bound,
                        const RelationFn& relations)
{
    q.validate();
    const int n = q.vertex_count;
    const int m = q.arrow_count();
    std::vector<BasisElement> basis;
    std::vector<std::size_t> offsets{0};
    std::vector<std::vector<SparseVec>> left(m);

    for (int v = 1; v <= n; ++v)
        basis.push_back({0, v, v, {}});
    offsets.push_back(basis.size());

    for (int d = 1;; ++d) {
        if (d > degree_bound)
            throw UnsupportedInput("graded construction exceeded degree bound " + std::to_string(degree_bound) +
                                   "; the quiver is probably not Dynkin");
        const std::size_t prev_begin = offsets[d - 1], prev_end = offsets[d];
        for (auto& row : left)
            row.resize(prev_end);

        // formal coordinates (a, b) with b of degree d-1 and s(a) = t(b)
        std::vector<std::pair<int, std::size_t>> coords;
        std::vector<std::vector<int>> coord_index(prev_end - prev_begin, std::vector<int>(m, -1));
        for (std::size_t b = prev_begin; b < prev_end; ++b)
            for (int a = 0; a < m; ++a)
                if (q.arrows[a].source == basis[b].target) {
                    coord_index[b - prev_begin][a] = static_cast<int>(coords.size());
                    coords.emplace_back(a, b);
                }
        auto path_of = [&](std::size_t k) {
            std::vector<int> p = basis[coords[k].second].path;
            p.push_back(coords[k].first);
            return p;
        };

        DegreeContext ctx{d, basis, offsets, left,
                          [&](int a, std::size_t b) {
                              if (b < prev_begin || b >= prev_end)
                                  return -1;
                              return coord_index[b - prev_begin][a];
                          },
                          coords.size()};
        std::vector<SparseVec> rels = relations(ctx);

        // Column order: lexicographically largest paths first, so they become pivots.
        std::vector<std::size_t> order(coords.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::vector<int>> paths(coords.size());
        for (std::size_t k = 0; k < coords.size(); ++k)
            paths[k] = path_of(k);
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return paths[x] > paths[y]; });
        std::vector<std::size_t> column_of(coords.size());
        for (std::size_t c = 0; c < order.size(); ++c)
            column_of[order[c]] = c;

        Matrix rel(f, rels.size(), coords.size());
        for (std::size_t r = 0; r < rels.size(); ++r)
            for (const auto& [k, x] : rels[r])
                rel.at(r, column_of[k]) = f.add(rel.at(r, column_of[k]), x);
        Rref red = rref(std::move(rel));
        std::vector<int> pivot_row(coords.size(), -1);
        for (std::size_t i = 0; i < red.pivots.size(); ++i)
            pivot_row[red.pivots[i]] = static_cast<int>(i);

        std::vector<std::size_t> survivors;  // coordinate ids
        for (std::size_t c = 0; c < coords.size(); ++c)
            if (pivot_row[c] < 0)
                survivors.push_back(order[c]);
        std::sort(survivors.begin(), survivors.end(), [&](std::size_t x, std::size_t y) { return paths[x] < paths[y]; });

        const std::size_t new_begin = basis.size();
        std::vector<int> new_index(coords.size(), -1);
        for (std::size_t k : survivors) {
            new_index[k] = static_cast<int>(basis.size());
            const auto& [a, b] = coords[k];
            basis.push_back({d, basis[b].source, q.arrows[a].target, paths[k]});
        }

        for (std::size_t k = 0; k < coords.size(); ++k) {
            const auto& [a, b] = coords[k];
            SparseVec nf;
            if (new_index[k] >= 0) {
                nf.emplace_back(new_index[k], 1);
            } else {
                const std::size_t c = column_of[k];
                auto row = red.reduced.row(static_cast<std::size_t>(pivot_row[c]));
                for (std::size_t c2 = c + 1; c2 < coords.size(); ++c2)
                    if (row[c2] != 0 && pivot_row[c2] < 0)
                        nf.emplace_back(new_index[order[c2]], f.neg(row[c2]));
                std::sort(nf.begin(), nf.end());
            }
            left[a][b] = std::move(nf);
        }
        offsets.push_back(basis.size());
        if (basis.size() == new_begin)
            break;
    }
    for (auto& row : left)
        row.resize(basis.size());

    GradedAlgebra::Parts parts{q, f, std::move(name), std::move(basis), std::move(left), {}, {}};
    return GradedAlgebra::assemble(std::move(parts));
}

}  // namespace

std::size_t GradedAlgebra::degree_begin(int d) const
{
    if (d < 0)
        return 0;
    if (static_cast<std::size_t>(d) >= degree_offsets_.size())
        return dim();
    return degree_offsets_[d];
}

AlgebraPtr GradedAlgebra::assemble(Parts parts)
{
    std::shared_ptr<GradedAlgebra> a(new GradedAlgebra());
    a->quiver_ = std::move(parts.quiver);
    a->field_ = parts.field;
    a->name_ = std::move(parts.name);
    a->basis_ = std::move(parts.basis);
    a->left_arrow_ = std::move(parts.left_arrow);
    const std::size_t dim = a->basis_.size();
    const PrimeField& f = a->field_;
    const int m = a->quiver_.arrow_count();

    for (std::size_t i = 1; i < dim; ++i)
        if (a->basis_[i].degree < a->basis_[i - 1].degree)
            throw std::logic_error("basis must be sorted by degree");
    int top = dim == 0 ? -1 : a->basis_.back().degree;
    a->degree_offsets_.assign(static_cast<std::size_t>(top + 2), dim);
    for (std::size_t i = dim; i-- > 0;)
        a->degree_offsets_[a->basis_[i].degree] = i;
    for (int d = top; d >= 0; --d)
        if (a->degree_offsets_[d] > a->degree_offsets_[d + 1])
            a->degree_offsets_[d] = a->degree_offsets_[d + 1];

    a->idempotent_.assign(a->quiver_.vertex_count + 1, -1);
    for (std::size_t i = 0; i < dim; ++i)
        if (a->basis_[i].degree == 0)
            a->idempotent_[a->basis_[i].source] = static_cast<int>(i);

    // b · y for basis b, evaluated arrow by arrow along b's path.
    auto left_mult_basis = [&](std::size_t b, const Vec& y) {
        const BasisElement& be = a->basis_[b];
        Vec cur(dim, 0);
        if (be.path.empty()) {
            for (std::size_t j = 0; j < dim; ++j)
                if (y[j] != 0 && a->basis_[j].target == be.source)
                    cur[j] = y[j];
            return cur;
        }
        cur = y;
        for (int arrow : be.path) {
            Vec next(dim, 0);
            for (std::size_t j = 0; j < dim; ++j)
                if (cur[j] != 0)
                    axpy(f, next, a->left_arrow_[arrow][j], cur[j]);
            cur = std::move(next);
        }
        return cur;
    };

    if (parts.products.empty()) {
        a->products_.assign(dim * dim, {});
        for (std::size_t j = 0; j < dim; ++j) {
            Vec ej(dim, 0);
            ej[j] = 1;
            for (std::size_t i = 0; i < dim; ++i) {
                if (a->basis_[i].source != a->basis_[j].target)
                    continue;
                a->products_[i * dim + j] = to_sparse(left_mult_basis(i, ej));
            }
        }
    } else {
        a->products_ = std::move(parts.products);
    }

    if (parts.right_arrow.empty()) {
        a->right_arrow_.assign(m, std::vector<SparseVec>(dim));
        for (int arrow = 0; arrow < m; ++arrow) {
            int idx = -1;
            for (std::size_t i = a->degree_begin(1); i < a->degree_begin(2); ++i)
                if (a->basis_[i].path.size() == 1 && a->basis_[i].path[0] == arrow)
                    idx = static_cast<int>(i);
            if (idx < 0)
                continue;
            for (std::size_t b = 0; b < dim; ++b)
                a->right_arrow_[arrow][b] = a->products_[b * dim + idx];
        }
    } else {
        a->right_arrow_ = std::move(parts.right_arrow);
    }
    return a;
}

AlgebraElement GradedAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const
{
    if (x.size() != dim() || y.size() != dim())
        throw DimensionMismatch("algebra element length differs from algebra dimension");
    Vec out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (y[j] != 0)
                axpy(field_, out, product(i, j), field_.mul(x[i], y[j]));
    }
    return out;
}

AlgebraElement GradedAlgebra::unit() const
{
    Vec u(dim(), 0);
    for (int v = 1; v <= vertex_count(); ++v)
        if (idempotent_[v] >= 0)
            u[idempotent_[v]] = 1;
    return u;
}

AlgebraElement GradedAlgebra::basis_element(std::size_t i) const
{
    Vec e(dim(), 0);
    e.at(i) = 1;
    return e;
}

std::size_t GradedAlgebra::dim_between(int target, int source) const
{
    return static_cast<std::size_t>(std::count_if(basis_.begin(), basis_.end(), [&](const BasisElement& b) {
        return b.target == target && b.source == source;
    }));
}

std::vector<int> GradedAlgebra::live_arrows() const
{
    std::vector<int> out;
    for (std::size_t i = degree_begin(1); i < degree_begin(2); ++i)
        if (basis_[i].path.size() == 1)
            out.push_back(basis_[i].path[0]);
    std::sort(out.begin(), out.end());
    return out;
}

AlgebraPtr preprojective_algebra(const Quiver& q, PrimeField f, int degree_bound)
{
    if (q.has_star())
        throw InvalidType("pass the undoubled quiver");
    auto comps = dynkin_components(q);
    if (!comps)
        throw UnsupportedInput("underlying graph is not Dynkin; the preprojective algebra is infinite-dimensional");
    Quiver d = double_quiver(q);
    const int m = q.arrow_count();
    std::string name;
    for (const auto& t : *comps)
        name += (name.empty() ? "" : "x") + t.name();

    RelationFn rel = [&d, m, &f](const DegreeContext& ctx) {
        std::vector<SparseVec> out;
        if (ctx.degree < 2)
            return out;
        const std::size_t begin = ctx.offsets[ctx.degree - 2], end = ctx.offsets[ctx.degree - 1];
        for (std::size_t b = begin; b < end; ++b) {
            const int v = ctx.basis[b].target;
            std::map<int, Scalar> acc;
            auto add_term = [&](int outer, int inner, Scalar sign) {
                for (const auto& [b2, c] : ctx.left[inner][b]) {
                    int k = ctx.coord(outer, static_cast<std::size_t>(b2));
                    if (k < 0)
                        continue;
                    acc[k] = f.add(acc[k], f.mul(sign, c));
                }
            };
            for (int a = 0; a < m; ++a) {
                const Arrow& arr = d.arrows[a];
                if (arr.target == v)  // α α*: first α*, then α
                    add_term(a, a + m, 1);
                if (arr.source == v)  // α* α: first α, then α*
                    add_term(a + m, a, f.neg(1));
            }
            SparseVec sv;
            for (auto [k, c] : acc)
                if (c != 0)
                    sv.emplace_back(k, c);
            if (!sv.empty())
                out.push_back(std::move(sv));
        }
        return out;
    };
    return build_graded(d, f, name, degree_bound, rel);
}

AlgebraPtr preprojective_algebra(DynkinType t, PrimeField f) { return preprojective_algebra(dynkin_quiver(t), f); }

AlgebraPtr truncated_path_algebra(const Quiver& q, int h, PrimeField f, std::string name)
{
    if (h < 1)
        throw UnsupportedInput("truncation length must be positive");
    RelationFn rel = [h](const DegreeContext& ctx) {
        std::vector<SparseVec> out;
        if (ctx.degree >= h)
            for (std::size_t k = 0; k < ctx.coord_count; ++k)
                out.push_back({{static_cast<int>(k), 1}});
        return out;
    };
    if (name.empty())
        name = "KQ/R^" + std::to_string(h);
    return build_graded(q, f, std::move(name), h + 1, rel);
}

AlgebraPtr opposite_algebra(const GradedAlgebra& a)
{
    const std::size_t dim = a.dim();
    GradedAlgebra::Parts parts{a.quiver().opposite(), a.field(), a.name() + "^op", {}, {}, {}, {}};
    for (const auto& b : a.basis()) {
        BasisElement o = b;
        std::swap(o.source, o.target);
        std::reverse(o.path.begin(), o.path.end());
        parts.basis.push_back(std::move(o));
    }
    const int m = a.quiver().arrow_count();
    parts.left_arrow.assign(m, std::vector<SparseVec>(dim));
    parts.right_arrow.assign(m, std::vector<SparseVec>(dim));
    for (int arrow = 0; arrow < m; ++arrow)
        for (std::size_t b = 0; b < dim; ++b) {
            parts.left_arrow[arrow][b] = a.right_arrow(arrow, b);
            parts.right_arrow[arrow][b] = a.left_arrow(arrow, b);
        }
    parts.products.assign(dim * dim, {});
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            parts.products[i * dim + j] = a.product(j, i);
    return GradedAlgebra::assemble(std::move(parts));
}

Matrix star_anti_automorphism(const GradedAlgebra& a)
{
    const Quiver& q = a.quiver();
    if (!q.has_star())
        throw InvalidType("algebra quiver has no star involution");
    const std::size_t dim = a.dim();
    const PrimeField& f = a.field();
    Matrix phi(f, dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
        const BasisElement& be = a.basis(b);
        Vec cur(dim, 0);
        int start = a.idempotent(be.target);
        if (start < 0)
            continue;
        cur[start] = 1;
        for (auto it = be.path.rbegin(); it != be.path.rend(); ++it) {
            int s = (*q.star)[*it];
            Vec next(dim, 0);
            for (std::size_t j = 0; j < dim; ++j)
                if (cur[j] != 0)
                    axpy(f, next, a.left_arrow(s, j), cur[j]);
            cur = std::move(next);
        }
        for (std::size_t j = 0; j < dim; ++j)
            phi.at(j, b) = cur[j];
    }
    return phi;
}

DimensionSummary dimension_summary(const GradedAlgebra& a)
{
    DimensionSummary s;
    s.total = a.dim();
    const int n = a.vertex_count();
    s.cartan.assign(n, std::vector<std::size_t>(n, 0));
    for (const auto& b : a.basis()) {
        if (static_cast<std::size_t>(b.degree) >= s.per_degree.size())
            s.per_degree.resize(b.degree + 1, 0);
        ++s.per_degree[b.degree];
        ++s.cartan[b.target - 1][b.source - 1];
    }
    return s;
}

std::string dump_algebra(const GradedAlgebra& a)
{
    std::ostringstream os;
    os << "algebra " << a.name() << " p=" << a.field().characteristic() << " vertices=" << a.vertex_count()
       << " dim=" << a.dim() << "\n";
    for (const auto& arr : a.quiver().arrows)
        os << "arrow " << arr.id << " " << arr.source << "->" << arr.target << "\n";
    int deg = -1;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto& b = a.basis(i);
        if (b.degree != deg) {
            deg = b.degree;
            os << "degree " << deg << "\n";
        }
        os << "  b" << i << " " << b.source << "->" << b.target << " [";
        for (std::size_t k = 0; k < b.path.size(); ++k)
            os << (k ? "," : "") << b.path[k];
        os << "]\n";
    }
    os << "products\n";
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const auto& p = a.product(i, j);
            if (p.empty())
                continue;
            os << "  b" << i << "*b" << j << " =";
            for (const auto& [k, c] : p)
                os << " " << c << "*b" << k;
            os << "\n";
        }
    return os.str();
}

AlgebraPtr corner_algebra(const AlgebraPtr& a, const std::vector<int>& vertices)
{
    std::vector<int> relabel(a->vertex_count() + 1, 0);
    for (std::size_t k = 0; k < vertices.size(); ++k)
        relabel[vertices[k]] = static_cast<int>(k) + 1;
    const auto live = a->live_arrows();
    std::vector<int> arrow_map(a->quiver().arrow_count(), -1);
    Quiver q;
    q.vertex_count = static_cast<int>(vertices.size());
    for (int arrow : live) {
        const Arrow& ar = a->quiver().arrows[arrow];
        if (relabel[ar.source] && relabel[ar.target]) {
            arrow_map[arrow] = q.arrow_count();
            q.arrows.push_back({q.arrow_count(), relabel[ar.source], relabel[ar.target]});
        }
    }
    if (a->quiver().star) {
        std::vector<int> star(q.arrows.size(), -1);
        bool ok = true;
        for (int arrow : live)
            if (arrow_map[arrow] >= 0) {
                int s = (*a->quiver().star)[arrow];
                if (arrow_map[s] < 0)
                    ok = false;
                else
                    star[arrow_map[arrow]] = arrow_map[s];
            }
        if (ok)
            q.star = std::move(star);
    }
    std::vector<int> new_index(a->dim(), -1);
    GradedAlgebra::Parts parts{q, a->field(), a->name() + "|corner", {}, {}, {}, {}};
    for (std::size_t i = 0; i < a->dim(); ++i) {
        const auto& b = a->basis(i);
        if (!relabel[b.source] || !relabel[b.target])
            continue;
        BasisElement nb{b.degree, relabel[b.source], relabel[b.target], {}};
        for (int arrow : b.path) {
            if (arrow_map[arrow] < 0)
                throw UnsupportedInput("corner algebra basis path leaves the vertex set");
            nb.path.push_back(arrow_map[arrow]);
        }
        new_index[i] = static_cast<int>(parts.basis.size());
        parts.basis.push_back(std::move(nb));
    }
    auto restrict = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& [k, c] : v) {
            if (new_index[k] < 0)
                throw UnsupportedInput("corner algebra is not closed under multiplication");
            out.emplace_back(new_index[k], c);
        }
        return out;
    };
    const std::size_t dim = parts.basis.size();
    parts.left_arrow.assign(q.arrows.size(), std::vector<SparseVec>(dim));
    parts.right_arrow.assign(q.arrows.size(), std::vector<SparseVec>(dim));
    for (int arrow = 0; arrow < a->quiver().arrow_count(); ++arrow) {
        if (arrow_map[arrow] < 0)
            continue;
        for (std::size_t i = 0; i < a->dim(); ++i)
            if (new_index[i] >= 0) {
                parts.left_arrow[arrow_map[arrow]][new_index[i]] = restrict(a->left_arrow(arrow, i));
                parts.right_arrow[arrow_map[arrow]][new_index[i]] = restrict(a->right_arrow(arrow, i));
            }
    }
    parts.products.assign(dim * dim, {});
    for (std::size_t i = 0; i < a->dim(); ++i)
        for (std::size_t j = 0; j < a->dim(); ++j)
            if (new_index[i] >= 0 && new_index[j] >= 0)
                parts.products[new_index[i] * dim + new_index[j]] = restrict(a->product(i, j));
    return GradedAlgebra::assemble(std::move(parts));
}

namespace {

using Cartan = std::vector<std::vector<std::size_t>>;

bool cartan_equivalent(const Cartan& x, const Cartan& y)
{
    const std::size_t k = x.size();
    if (y.size() != k)
        return false;
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool same = true;
        for (std::size_t i = 0; i < k && same; ++i)
            for (std::size_t j = 0; j < k && same; ++j)
                same = x[i][j] == y[perm[i]][perm[j]];
        if (same)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

const Cartan& reference_cartan(DynkinType t, PrimeField f)
{
    static std::mutex mu;
    static std::map<std::pair<std::string, Scalar>, Cartan> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(t.name(), f.characteristic());
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, dimension_summary(*preprojective_algebra(t, f)).cartan).first;
    return it->second;
}

std::string tag_single_block(const Cartan& c, PrimeField f)
{
    const int k = static_cast<int>(c.size());
    if (k == 1 && c[0][0] == 1)
        return "K";
    std::vector<DynkinType> candidates;
    if (k >= 2)
        candidates.push_back({DynkinFamily::A, k});
    if (k >= 4)
        candidates.push_back({DynkinFamily::D, k});
    if (k >= 6 && k <= 8)
        candidates.push_back({DynkinFamily::E, k});
    std::size_t total = 0;
    for (const auto& row : c)
        total += std::accumulate(row.begin(), row.end(), std::size_t{0});
    for (const auto& t : candidates) {
        const Cartan& ref = reference_cartan(t, f);
        std::size_t ref_total = 0;
        for (const auto& row : ref)
            ref_total += std::accumulate(row.begin(), row.end(), std::size_t{0});
        if (ref_total == total && cartan_equivalent(c, ref))
            return t.name();
    }
    return "unrecognized";
}

std::vector<std::vector<int>> cartan_components(const Cartan& c)
{
    const int k = static_cast<int>(c.size());
    std::vector<int> comp(k, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < k; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t idx = 0; idx < members.size(); ++idx)
            for (int t = 0; t < k; ++t)
                if (comp[t] < 0 && (c[members[idx]][t] + c[t][members[idx]]) > 0) {
                    comp[t] = comp[s];
                    members.push_back(t);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace

std::string morita_tag_from_cartan(const Cartan& cartan, PrimeField f)
{
    if (cartan.empty())
        return "0";
    std::string out;
    for (const auto& members : cartan_components(cartan)) {
        Cartan sub(members.size(), std::vector<std::size_t>(members.size()));
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j)
                sub[i][j] = cartan[members[i]][members[j]];
        if (!out.empty())
            out += "×";
        out += tag_single_block(sub, f);
    }
    return out;
}

std::vector<Block> block_decompose(const AlgebraPtr& a)
{
    std::vector<int> alive;
    for (int v = 1; v <= a->vertex_count(); ++v)
        if (a->idempotent(v) >= 0)
            alive.push_back(v);
    Cartan c(alive.size(), std::vector<std::size_t>(alive.size()));
    for (std::size_t i = 0; i < alive.size(); ++i)
        for (std::size_t j = 0; j < alive.size(); ++j)
            c[i][j] = a->dim_between(alive[i], alive[j]);
    std::vector<Block> out;
    for (const auto& members : cartan_components(c)) {
        std::vector<int> verts;
        Cartan sub(members.size(), std::vector<std::size_t>(members.size()));
        for (std::size_t i = 0; i < members.size(); ++i) {
            verts.push_back(alive[members[i]]);
            for (std::size_t j = 0; j < members.size(); ++j)
                sub[i][j] = c[members[i]][members[j]];
        }
        out.push_back({corner_algebra(a, verts), verts, tag_single_block(sub, a->field())});
    }
    return out;
}

std::string morita_tag(const AlgebraPtr& a)
{
    auto blocks = block_decompose(a);
    if (blocks.empty())
        return "0";
    std::string out;
    for (const auto& b : blocks)
        out += (out.empty() ? "" : "×") + b.tag;
    return out;
}

}  // namespace preproj
