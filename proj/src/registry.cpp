#include "preproj/registry.hpp"

#include "preproj/a3_names.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace preproj {

namespace {

std::vector<std::size_t> parse_counts(const std::string& s)
{
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stoul(tok));
    return out;
}

bool has_iso(const ModulePtr& x, const ModulePtr& y)
{
    for (const auto& h : hom_basis(x, y))
        if (is_isomorphism(h))
            return true;
    return false;
}

}  // namespace

IndecRegistry::IndecRegistry(AlgebraPtr a, Side side) : algebra_(std::move(a)), side_(side) {}

std::optional<std::size_t> IndecRegistry::id_of_name(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::optional<std::size_t> IndecRegistry::find(const Representation& x) const
{
    auto it = by_dims_.find(x.dims);
    if (it == by_dims_.end())
        return std::nullopt;
    auto xp = share(x);
    for (std::size_t id : it->second)
        if (has_iso(xp, modules_[id]))
            return id;
    return std::nullopt;
}

std::pair<std::size_t, bool> IndecRegistry::insert(const ModulePtr& x)
{
    if (auto id = find(*x))
        return {*id, false};
    if (frozen_)
        throw std::logic_error("registry is frozen; unknown indecomposable encountered");
    const std::size_t id = modules_.size();
    modules_.push_back(x);
    names_.push_back("X" + std::to_string(id));
    by_dims_[x->dims].push_back(id);
    return {id, true};
}

namespace {

Multiset to_multiset(std::vector<std::size_t> ids)
{
    std::sort(ids.begin(), ids.end());
    Multiset out;
    for (std::size_t id : ids) {
        if (!out.empty() && out.back().first == id)
            ++out.back().second;
        else
            out.push_back({id, 1});
    }
    return out;
}

}  // namespace

Multiset IndecRegistry::absorb(const ModulePtr& x)
{
    std::vector<std::size_t> ids;
    for (const auto& s : decompose(x))
        ids.push_back(insert(s).first);
    return to_multiset(std::move(ids));
}

Multiset IndecRegistry::decompose_ids(const ModulePtr& x) const
{
    std::vector<std::size_t> ids;
    for (const auto& s : decompose(x)) {
        auto id = find(*s);
        if (!id)
            throw std::logic_error("summand is not in the registry");
        ids.push_back(*id);
    }
    return to_multiset(std::move(ids));
}

void IndecRegistry::set_names(std::vector<std::string> names)
{
    if (names.size() != modules_.size())
        throw std::invalid_argument("name list does not match the registry");
    names_ = std::move(names);
}

Representation IndecRegistry::sum(const Multiset& m) const
{
    Representation out = zero_module(algebra_, side_);
    for (const auto& [id, k] : m)
        out = direct_sum(out, power(*modules_[id], k));
    return out;
}

Representation IndecRegistry::sum(const std::vector<std::size_t>& ids) const
{
    Representation out = zero_module(algebra_, side_);
    for (std::size_t id : ids)
        out = direct_sum(out, *modules_[id]);
    return out;
}

IndecRegistry all_indecomposables(const AlgebraPtr& a, RegistryCaps caps)
{
    IndecRegistry r(a);
    auto take = [&](const Representation& x) {
        auto xp = share(x);
        for (const auto& s : decompose(xp)) {
            if (s->total_dim() > caps.max_dim)
                throw RegistryOverflow("indecomposable of dimension " + std::to_string(s->total_dim()) +
                                       " exceeds the cap; the algebra may be representation-infinite");
            r.insert(s);
            if (r.size() > caps.max_modules)
                throw RegistryOverflow("more than " + std::to_string(caps.max_modules) +
                                       " indecomposables; the algebra may be representation-infinite");
        }
    };
    for (int v = 1; v <= a->vertex_count(); ++v)
        if (a->idempotent(v) >= 0)
            take(projective_module(a, v));
    for (int v = 1; v <= a->vertex_count(); ++v)
        if (a->idempotent(v) >= 0)
            take(simple_module(a, v));
    for (int v = 1; v <= a->vertex_count(); ++v)
        if (a->idempotent(v) >= 0)
            take(injective_module(a, v));

    std::size_t processed = 0;
    std::size_t pairs_done = 0;  // all pairs among ids < pairs_done are handled
    while (processed < r.size() || pairs_done < r.size()) {
        while (processed < r.size()) {
            ModulePtr m = r.module(processed++);
            take(*radical(m).source);
            take(*top(m).target);
            take(*socle(m).source);
            take(*cokernel(socle(m)).target);
            take(syzygy(*m));
            take(cosyzygy(*m));
            take(nakayama(*m));
        }
        const std::size_t n = r.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i < pairs_done && j < pairs_done)
                    continue;
                for (const auto& f : hom_basis(r.module(i), r.module(j))) {
                    take(*kernel(f).source);
                    take(*cokernel(f).target);
                    take(*image(f).source);
                }
            }
        pairs_done = n;
    }
    r.set_names(default_names(r));
    r.freeze();
    return r;
}

const std::vector<NamedShape>& a3_name_table()
{
    static const std::vector<NamedShape> table = [] {
        std::vector<NamedShape> out;
        std::stringstream ss(generated::kA3NamesTsv);
        std::string line;
        std::getline(ss, line);  // header
        while (std::getline(ss, line)) {
            if (line.empty())
                continue;
            std::stringstream ls(line);
            std::string name, dims, top;
            std::getline(ls, name, '\t');
            std::getline(ls, dims, '\t');
            std::getline(ls, top, '\t');
            out.push_back({name, parse_counts(dims), parse_counts(top)});
        }
        return out;
    }();
    return table;
}

std::vector<std::string> default_names(const IndecRegistry& r)
{
    const std::size_t n = r.size();
    std::vector<std::string> generic;
    for (std::size_t id = 0; id < n; ++id)
        generic.push_back("X" + std::to_string(id));
    const auto& a = *r.algebra();
    if (r.side() == Side::Left) {
        for (int v = 1; v <= a.vertex_count(); ++v) {
            if (a.idempotent(v) < 0)
                continue;
            if (auto id = r.find(simple_module(r.algebra(), v)))
                generic[*id] = "S" + std::to_string(v);
            if (auto id = r.find(projective_module(r.algebra(), v)))
                generic[*id] = "P" + std::to_string(v);
        }
    }

    if (a.name() == "A3" && r.side() == Side::Left) {
        std::vector<std::string> out;
        for (std::size_t id = 0; id < n; ++id) {
            const auto& m = *r.module(id);
            auto tv = top_vector(m);
            for (const auto& s : a3_name_table())
                if (s.dims == m.dims && s.top == tv)
                    out.push_back(s.name);
            if (out.size() != id + 1)
                return generic;
        }
        auto sorted = out;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return generic;
        return out;
    }

    if (a.name().rfind("Nakayama", 0) == 0 && r.side() == Side::Left) {
        std::size_t h = 0;
        for (std::size_t id = 0; id < n; ++id)
            h = std::max(h, r.module(id)->total_dim());
        std::vector<std::string> out;
        for (std::size_t id = 0; id < n; ++id) {
            const auto& m = *r.module(id);
            auto tv = top_vector(m);
            if (std::accumulate(tv.begin(), tv.end(), std::size_t{0}) != 1)
                return generic;
            const std::string p = "P" + std::to_string(std::find(tv.begin(), tv.end(), 1) - tv.begin() + 1);
            const std::size_t len = m.total_dim();
            if (len == h)
                out.push_back(p);
            else if (len == 1)
                out.push_back("S" + p.substr(1));
            else
                out.push_back(p + "/rad^" + std::to_string(len) + "(" + p + ")");
        }
        return out;
    }
    return generic;
}

Morphism trace_in(const ModulePtr& x, const ModulePtr& y)
{
    VertexSubspaces spaces;
    for (int v = 1; v <= y->vertex_count(); ++v)
        spaces.emplace_back(y->field(), y->dim(v));
    for (const auto& f : hom_basis(x, y))
        for (int v = 1; v <= y->vertex_count(); ++v)
            spaces[v - 1] = subspace_sum(spaces[v - 1], Subspace::from_matrix_rows(f.maps[v - 1].transpose()));
    return submodule(y, spaces);
}

bool in_gen(const Representation& x, const Representation& y)
{
    return trace_in(share(x), share(y)).source->dims == y.dims;
}

bool in_sub(const Representation& x, const Representation& y) { return in_gen(dual(y), dual(x)); }

bool is_self_injective(const AlgebraPtr& a)
{
    for (int v = 1; v <= a->vertex_count(); ++v) {
        if (a->idempotent(v) < 0)
            continue;
        auto p = share(projective_module(a, v));
        if (injective_envelope(p).target->dims != p->dims)
            return false;
    }
    return true;
}

bool is_weakly_symmetric(const AlgebraPtr& a)
{
    for (int v = 1; v <= a->vertex_count(); ++v) {
        if (a->idempotent(v) < 0)
            continue;
        auto p = projective_module(a, v);
        if (top_vector(p) != socle_vector(p))
            return false;
    }
    return true;
}

}  // namespace preproj
