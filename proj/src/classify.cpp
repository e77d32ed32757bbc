#include "preproj/classify.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace preproj {

namespace {

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error)
                    error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

std::size_t rank_of(const PrimeField& f, std::size_t ambient, const std::vector<Vec>& rows)
{
    if (rows.empty() || ambient == 0)
        return 0;
    return Subspace::span(f, ambient, rows).dim();
}

// Morphism x -> ⊕ targets with the given components, as a map into the direct sum.
Morphism stack_components(const ModulePtr& x, const std::vector<ModulePtr>& targets,
                          const std::vector<Morphism>& comps)
{
    Representation sum = zero_module(x->algebra, x->side);
    for (const auto& t : targets)
        sum = direct_sum(sum, *t);
    auto sp = share(std::move(sum));
    std::vector<Matrix> maps;
    for (int v = 1; v <= x->vertex_count(); ++v) {
        Matrix m(x->field(), sp->dim(v), x->dim(v));
        std::size_t row = 0;
        for (std::size_t k = 0; k < comps.size(); ++k) {
            m.set_block(row, 0, comps[k].maps[v - 1]);
            row += targets[k]->dim(v);
        }
        maps.push_back(std::move(m));
    }
    return Morphism{x, sp, std::move(maps)};
}

std::vector<Vec> enumerate_coefficients(std::size_t d, Scalar p, std::size_t cap)
{
    std::size_t total = 1;
    for (std::size_t k = 0; k < d; ++k) {
        total *= p;
        if (total > cap)
            throw ConfigurationError("exhaustive enumeration of a " + std::to_string(d) +
                                     "-dimensional space over F_" + std::to_string(p) + " exceeds the cap");
    }
    std::vector<Vec> out;
    Vec c(d, 0);
    for (std::size_t i = 0; i < total; ++i) {
        out.push_back(c);
        for (std::size_t k = 0; k < d; ++k) {
            if (++c[k] < p)
                break;
            c[k] = 0;
        }
    }
    return out;
}

Morphism combine(const ModulePtr& x, const ModulePtr& y, const std::vector<Morphism>& basis, const Vec& c)
{
    Morphism f = zero_morphism(x, y);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (c[k] != 0)
            f = add(f, scale(basis[k], c[k]));
    return f;
}

}  // namespace

bool Subcat::contains(std::size_t id) const { return std::binary_search(ids.begin(), ids.end(), id); }

bool Subcat::subset_of(const Subcat& o) const
{
    return std::includes(o.ids.begin(), o.ids.end(), ids.begin(), ids.end());
}

Subcat make_subcat(std::vector<std::size_t> ids)
{
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return Subcat{std::move(ids)};
}

Subcat Setting::everything() const
{
    std::vector<std::size_t> ids(registry.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        ids[i] = i;
    return Subcat{ids};
}

bool Setting::is_projective(std::size_t id) const
{
    return std::find(projective_ids.begin(), projective_ids.end(), id) != projective_ids.end();
}

Setting make_setting(const AlgebraPtr& a, RegistryCaps caps)
{
    Setting s{a, all_indecomposables(a, caps), std::nullopt, {}, {}};
    if (a->quiver().has_star() && dynkin_components(a->quiver()))
        s.weyl.emplace(a->quiver());
    for (int v = 1; v <= a->vertex_count(); ++v)
        if (a->idempotent(v) >= 0)
            s.projective_ids.push_back(*s.registry.find(projective_module(a, v)));
    const std::size_t n = s.registry.size();
    s.homs.assign(n, std::vector<std::vector<Morphism>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s.homs[i][j] = hom_basis(s.registry.module(i), s.registry.module(j));
    return s;
}

AlgebraPtr nakayama_algebra(int n, int h, PrimeField f)
{
    if (n < 2 || h < 1 || h % n != 0)
        throw UnsupportedInput("the self-injective Nakayama algebra needs n > 1 dividing h");
    return truncated_path_algebra(cyclic_quiver(n), h, f,
                                  "Nakayama(" + std::to_string(n) + "," + std::to_string(h) + ")");
}

std::vector<std::size_t> summand_ids(const Setting& s, const ModulePtr& x)
{
    std::vector<std::size_t> out;
    for (const auto& [id, k] : s.registry.decompose_ids(x))
        out.push_back(id);
    return out;
}

Subcat gen_class(const Setting& s, const ModulePtr& x)
{
    if (x->is_zero())
        return {};
    std::vector<std::size_t> ids;
    for (std::size_t y = 0; y < s.registry.size(); ++y)
        if (trace_in(x, s.registry.module(y)).source->dims == s.registry.module(y)->dims)
            ids.push_back(y);
    return Subcat{ids};
}

TorsionData torsion_class(const Setting& s, const WeylElement& w)
{
    TorsionData t;
    t.ideal = ideal_for_word(s.algebra, w.word);
    t.ideal_module = share(module_of_ideal(t.ideal));
    t.generators = summand_ids(s, t.ideal_module);
    t.members = gen_class(s, t.ideal_module);
    return t;
}

Approximation minimal_left_approx(const Setting& s, const ModulePtr& x, const Subcat& c)
{
    const PrimeField& f = x->field();
    std::vector<std::size_t> comp_id;
    std::vector<Morphism> comp_map;
    for (std::size_t id : c.ids)
        for (auto& h : hom_basis(x, s.registry.module(id))) {
            comp_id.push_back(id);
            comp_map.push_back(std::move(h));
        }
    const std::size_t m = comp_id.size();
    // For each z in c: dim Hom(x, z), and per component the maps g∘φ_j, g: X_j -> z.
    std::vector<std::size_t> need;
    std::vector<std::size_t> ambient;
    std::vector<std::vector<std::vector<Vec>>> through(c.ids.size(), std::vector<std::vector<Vec>>(m));
    for (std::size_t zi = 0; zi < c.ids.size(); ++zi) {
        const auto& z = s.registry.module(c.ids[zi]);
        need.push_back(hom_basis(x, z).size());
        std::size_t amb = 0;
        for (int v = 1; v <= x->vertex_count(); ++v)
            amb += x->dim(v) * z->dim(v);
        ambient.push_back(amb);
        for (std::size_t j = 0; j < m; ++j)
            for (const auto& g : s.homs[comp_id[j]][c.ids[zi]])
                through[zi][j].push_back(flatten(compose(g, comp_map[j])));
    }
    std::vector<bool> keep(m, true);
    auto works = [&] {
        for (std::size_t zi = 0; zi < c.ids.size(); ++zi) {
            std::vector<Vec> rows;
            for (std::size_t j = 0; j < m; ++j)
                if (keep[j])
                    rows.insert(rows.end(), through[zi][j].begin(), through[zi][j].end());
            if (rank_of(f, ambient[zi], rows) != need[zi])
                return false;
        }
        return true;
    };
    if (!works())
        throw InternalInconsistency("universal map is not an approximation");
    for (std::size_t j = 0; j < m; ++j) {
        keep[j] = false;
        if (!works())
            keep[j] = true;
    }

    Approximation out;
    std::vector<ModulePtr> targets;
    for (std::size_t j = 0; j < m; ++j)
        if (keep[j]) {
            out.target.push_back(comp_id[j]);
            out.components.push_back(comp_map[j]);
            targets.push_back(s.registry.module(comp_id[j]));
        }
    out.map = stack_components(x, targets, out.components);
    out.cokernel = cokernel(out.map).target;

    // left minimality: every h with h∘φ = 0 lies in rad End(T0)
    if (!out.target.empty()) {
        EndAlgebra e = end_algebra(out.map.target);
        if (e.dim() > 0) {
            std::vector<Vec> rows;
            for (const auto& h : e.basis)
                rows.push_back(flatten(compose(h, out.map)));
            const std::size_t amb = rows.front().size();
            Subspace rad = end_radical(e);
            if (amb > 0) {
                Subspace killed = kernel_basis(Matrix::from_rows(f, amb, rows).transpose());
                for (std::size_t k = 0; k < killed.dim(); ++k)
                    if (!rad.contains(killed.basis_vector(k)))
                        throw InternalInconsistency("greedy approximation is not left minimal");
            } else if (rad.dim() != e.dim()) {
                throw InternalInconsistency("greedy approximation is not left minimal");
            }
        }
    }
    return out;
}

WideData wide_from_weyl(const Setting& s, const Subcat& torsion)
{
    WideData d;
    d.approx = minimal_left_approx(s, share(regular_module(s.algebra)), torsion);
    d.t1 = summand_ids(s, d.approx.cokernel);
    std::vector<std::size_t> ids;
    for (std::size_t y : torsion.ids) {
        bool orthogonal = true;
        for (std::size_t t : d.t1)
            orthogonal = orthogonal && s.homs[t][y].empty();
        if (orthogonal)
            ids.push_back(y);
    }
    d.members = Subcat{ids};
    return d;
}

EpiTarget epi_target(const Setting& s, const Subcat& wide)
{
    EpiTarget e;
    Approximation ap = minimal_left_approx(s, share(regular_module(s.algebra)), wide);
    e.summands = make_subcat(ap.target).ids;
    const std::size_t k = e.summands.size();
    e.cartan.assign(k, std::vector<std::size_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            e.cartan[i][j] = s.homs[e.summands[j]][e.summands[i]].size();
    e.tag = morita_tag_from_cartan(e.cartan, s.algebra->field());
    return e;
}

bool is_homological(const Setting& s, const Subcat& wide, const EpiTarget& epi)
{
    bool projective = std::all_of(epi.summands.begin(), epi.summands.end(),
                                  [&](std::size_t id) { return s.is_projective(id); });
    bool syzygy_closed = true;
    for (std::size_t id : wide.ids) {
        auto omega = share(syzygy(*s.registry.module(id)));
        for (std::size_t t : summand_ids(s, omega))
            syzygy_closed = syzygy_closed && wide.contains(t);
    }
    if (projective != syzygy_closed)
        throw InternalInconsistency("the two homological criteria disagree on " + render_wide(s, wide));
    return projective;
}

bool is_homological(const Setting& s, const Subcat& wide) { return is_homological(s, wide, epi_target(s, wide)); }

bool TachikawaReport::passed() const
{
    return std::all_of(rows.begin(), rows.end(), [](const TachikawaRow& r) { return r.ext_degree && r.period; });
}

TachikawaReport tachikawa_check(const Setting& s, int bound)
{
    TachikawaReport rep;
    for (std::size_t id = 0; id < s.registry.size(); ++id) {
        if (s.is_projective(id))
            continue;
        TachikawaRow row{id, std::nullopt, std::nullopt};
        const Representation& m = *s.registry.module(id);
        Representation omega = m;
        for (int d = 1; d <= bound; ++d) {
            omega = syzygy(omega);
            if (!row.ext_degree && stable_hom_dim(omega, m) > 0)
                row.ext_degree = d;
            if (!row.period && is_isomorphic(omega, m))
                row.period = d;
            if (row.ext_degree && row.period)
                break;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

std::pair<WeylElement, WeylElement> find_uv(const Setting& s, const WeylElement& w, const Subcat& gen_t1,
                                            const std::vector<Subcat>& torsion_by_index)
{
    const auto& g = *s.weyl;
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < torsion_by_index.size(); ++i)
        if (torsion_by_index[i] == gen_t1) {
            if (found)
                throw InternalInconsistency("two Weyl elements share a torsion class");
            found = i;
        }
    if (!found)
        throw InternalInconsistency("gen(T1) is not of the form gen(I_u)");
    const WeylElement& u = g.elements()[*found];
    return {u, g.multiply(g.inverse(w), u)};
}

std::vector<ClassificationRecord> classify_all(const Setting& s, unsigned threads)
{
    if (!s.weyl)
        throw UnsupportedInput("classification needs a preprojective algebra of Dynkin type");
    const WeylGroup& g = *s.weyl;
    const auto& elems = g.elements();
    const std::size_t n = elems.size();
    std::vector<TorsionData> torsion(n);
    parallel_for(n, threads, [&](std::size_t i) { torsion[i] = torsion_class(s, elems[i]); });
    std::vector<Subcat> torsion_by_index;
    for (const auto& t : torsion)
        torsion_by_index.push_back(t.members);

    std::vector<ClassificationRecord> records(n);
    parallel_for(n, threads, [&](std::size_t i) {
        ClassificationRecord& r = records[i];
        r.w = elems[i];
        r.ideal_dim = torsion[i].ideal.dim();
        r.torsion_generators = torsion[i].generators;
        r.torsion = torsion[i].members;
        WideData wd = wide_from_weyl(s, r.torsion);
        r.t0 = wd.approx.target;
        r.t1 = wd.t1;
        r.wide = wd.members;
        auto [u, v] = find_uv(s, r.w, gen_class(s, wd.approx.cokernel), torsion_by_index);
        r.u = u;
        r.v = v;
        r.length_additive = u.length() == r.w.length() + v.length();
        TwoSidedIdeal iv = ideal_for_word(s.algebra, v.word);
        r.v_ideal_dim = iv.dim();
        r.v_ideal_square_dim = ideal_product(iv, iv).dim();
        r.v_idempotent = is_idempotent_ideal(iv);
        r.quotient_tag = morita_tag(quotient_algebra(iv));
        EpiTarget epi = epi_target(s, r.wide);
        r.epi_summands = epi.summands;
        r.tag = epi.tag;
        r.homological = is_homological(s, r.wide, epi);
        if (g.is_type_a3())
            r.sigma4 = sigma4_label(g, r.w);
    });

    std::vector<Subcat> wides;
    for (const auto& r : records)
        wides.push_back(r.wide);
    std::sort(wides.begin(), wides.end());
    if (std::adjacent_find(wides.begin(), wides.end()) != wides.end())
        throw TheoremViolation("two Weyl elements give the same wide subcategory");
    return records;
}

Word theorem_b_word(int n, bool first)
{
    // first:  s_n (s_{n-1} s_n) ... (s_2 ... s_n)
    // second: s_{n-1} (s_{n-2} s_{n-1}) ... (s_1 ... s_{n-1})
    const int hi = first ? n : n - 1;
    const int lo = first ? 2 : 1;
    Word w;
    for (int start = hi; start >= lo; --start)
        for (int k = start; k <= hi; ++k)
            w.push_back(k);
    return w;
}

std::vector<ClassificationRecord> homological_list(const Setting& s, const std::vector<ClassificationRecord>& records)
{
    std::vector<ClassificationRecord> out;
    for (const auto& r : records)
        if (r.homological)
            out.push_back(r);
    const WeylGroup& g = *s.weyl;
    const auto& ident = g.identity();
    const auto& longest = g.longest_element();
    const std::string name = s.algebra->name();
    const bool type_a = name.size() >= 2 && name[0] == 'A' &&
                        std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (!type_a)
        return out;
    const int n = g.rank();
    std::vector<ClassificationRecord> nontrivial;
    for (const auto& r : out)
        if (!(r.w == ident) && !(r.w == longest))
            nontrivial.push_back(r);
    if (n == 1) {
        if (!nontrivial.empty())
            throw TheoremViolation("a local algebra has a nontrivial homological embedding");
        return out;
    }
    if (nontrivial.size() != 2)
        throw TheoremViolation("expected exactly two nontrivial homological embeddings, found " +
                               std::to_string(nontrivial.size()));
    const WeylElement w1 = g.from_word(theorem_b_word(n, true));
    const WeylElement wn = g.from_word(theorem_b_word(n, false));
    for (const auto& r : nontrivial) {
        if (r.w == w1 && r.wide == Subcat{{s.projective_ids.front()}})
            continue;
        if (r.w == wn && r.wide == Subcat{{s.projective_ids.back()}})
            continue;
        throw TheoremViolation("homological record " + word_to_string(r.w.word) + " does not match the prediction");
    }
    return out;
}

WeylElement smallest_torsion_class_containing(const Setting& s, const std::vector<ClassificationRecord>& records,
                                              const ModulePtr& x)
{
    Subcat need = make_subcat(x->is_zero() ? std::vector<std::size_t>{} : summand_ids(s, x));
    std::vector<const ClassificationRecord*> holders;
    for (const auto& r : records)
        if (need.subset_of(r.torsion))
            holders.push_back(&r);
    const ClassificationRecord* best = nullptr;
    for (const auto* r : holders) {
        bool minimum = std::all_of(holders.begin(), holders.end(),
                                   [&](const ClassificationRecord* o) { return r->torsion.subset_of(o->torsion); });
        if (minimum) {
            if (best)
                throw TheoremViolation("two torsion classes are both minimal");
            best = r;
        }
    }
    if (!best)
        throw TheoremViolation("no smallest torsion class contains the module");
    return best->w;
}

std::vector<StratifyingRow> StratifyingReport::nontrivial() const
{
    std::vector<StratifyingRow> out;
    for (const auto& r : rows)
        if (r.quotient_projective && r.ideal_dim != 0 && r.ideal_dim != algebra_dim)
            out.push_back(r);
    return out;
}

StratifyingReport stratifying_scan(const AlgebraPtr& a)
{
    StratifyingReport rep;
    rep.algebra_dim = a->dim();
    std::vector<int> live;
    for (int v = 1; v <= a->vertex_count(); ++v)
        if (a->idempotent(v) >= 0)
            live.push_back(v);
    for (std::size_t mask = 0; mask < (std::size_t{1} << live.size()); ++mask) {
        StratifyingRow row;
        for (std::size_t k = 0; k < live.size(); ++k)
            if (mask & (std::size_t{1} << k))
                row.vertices.push_back(live[k]);
        TwoSidedIdeal i = vertex_ideal(a, row.vertices);
        row.ideal_dim = i.dim();
        row.quotient_projective = syzygy(quotient_by_ideal(i)).is_zero();
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<Subcat> wide_enumerate_brute(const Setting& s, BruteOptions opt)
{
    const std::size_t n = s.registry.size();
    if (n > opt.max_registry || n > 30)
        throw ConfigurationError("registry has " + std::to_string(n) + " classes; brute-force enumeration refuses");
    const Scalar p = s.algebra->field().characteristic();
    using Mask = std::uint32_t;

    // multisets of ids with 1..multiplicity elements
    std::vector<std::vector<std::size_t>> multisets;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!cur.empty())
            multisets.push_back(cur);
        if (cur.size() == opt.multiplicity)
            return;
        for (std::size_t id = start; id < n; ++id) {
            cur.push_back(id);
            self(self, id);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::vector<ModulePtr> sums;
    std::vector<Mask> support;
    for (const auto& ms : multisets) {
        sums.push_back(share(s.registry.sum(ms)));
        Mask m = 0;
        for (std::size_t id : ms)
            m |= Mask{1} << id;
        support.push_back(m);
    }
    auto mask_of = [&](const ModulePtr& x) {
        Mask m = 0;
        if (!x->is_zero())
            for (std::size_t id : summand_ids(s, x))
                m |= Mask{1} << id;
        return m;
    };

    std::map<Mask, Mask> required;
    std::mutex mu;
    const std::size_t k = sums.size();
    parallel_for(k * k, 0, [&](std::size_t idx) {
        const std::size_t i = idx / k, j = idx % k;
        const ModulePtr& x = sums[i];
        const ModulePtr& y = sums[j];
        Mask need = 0;
        auto homs = hom_basis(x, y);
        for (const auto& c : enumerate_coefficients(homs.size(), p, opt.max_enumeration)) {
            Morphism f = combine(x, y, homs, c);
            need |= mask_of(kernel(f).source) | mask_of(cokernel(f).target);
        }
        // extensions 0 -> y -> E -> x -> 0 as pushouts along Ω x -> P(x)
        Morphism incl = kernel(projective_cover(x));
        const ModulePtr& omega = incl.source;
        auto ext_maps = hom_basis(omega, y);
        for (const auto& c : enumerate_coefficients(ext_maps.size(), p, opt.max_enumeration)) {
            Morphism g = scale(combine(omega, y, ext_maps, c), s.algebra->field().neg(1));
            Morphism into = stack_components(omega, {incl.target, y}, {incl, g});
            need |= mask_of(cokernel(into).target);
        }
        std::lock_guard<std::mutex> lock(mu);
        required[support[i] | support[j]] |= need;
    });

    std::vector<Subcat> out;
    for (Mask sub = 0; sub < (Mask{1} << n); ++sub) {
        bool ok = true;
        for (const auto& [supp, need] : required)
            if ((supp & ~sub) == 0 && (need & ~sub) != 0) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        std::vector<std::size_t> ids;
        for (std::size_t id = 0; id < n; ++id)
            if (sub & (Mask{1} << id))
                ids.push_back(id);
        out.push_back(Subcat{ids});
    }
    std::sort(out.begin(), out.end(), [](const Subcat& a, const Subcat& b) {
        if (a.ids.size() != b.ids.size())
            return a.ids.size() < b.ids.size();
        return a.ids < b.ids;
    });
    return out;
}

std::string render_sum(const Setting& s, const std::vector<std::size_t>& ids)
{
    std::string out;
    for (std::size_t id : make_subcat(ids).ids)
        out += (out.empty() ? "" : "⊕") + s.registry.name(id);
    return out;
}

std::string render_torsion(const Setting& s, const ClassificationRecord& r)
{
    if (r.torsion == s.everything())
        return "mod(A)";
    if (r.torsion.empty())
        return "{0}";
    bool semisimple = std::all_of(r.torsion_generators.begin(), r.torsion_generators.end(),
                                  [&](std::size_t id) { return s.registry.module(id)->total_dim() == 1; });
    if (semisimple)
        return "add(" + render_sum(s, r.torsion_generators) + ")";
    return "gen(" + render_sum(s, r.torsion_generators) + ")";
}

std::string render_wide(const Setting& s, const Subcat& wide)
{
    if (wide == s.everything())
        return "mod(A)";
    if (wide.empty())
        return "{0}";
    return "add(" + render_sum(s, wide.ids) + ")";
}

std::vector<TableRow> table_rows(const Setting& s, const std::vector<ClassificationRecord>& records)
{
    std::vector<TableRow> rows;
    for (const auto& r : records) {
        TableRow t;
        t.sigma4 = r.sigma4.value_or("-");
        t.word = r.w.word.empty() ? "e" : word_to_string(r.w.word);
        t.ideal_dim = r.ideal_dim;
        t.torsion = render_torsion(s, r);
        t.wide = render_wide(s, r.wide);
        t.v = r.v.word.empty() ? "e" : word_to_string(r.v.word);
        t.tag = r.tag;
        t.homological = r.homological;
        rows.push_back(std::move(t));
    }
    return rows;
}

std::string to_tsv(const std::vector<TableRow>& rows)
{
    std::ostringstream os;
    os << "sigma4\tword\tdim_I\ttorsion\twide\tv\tmorita\thomological\n";
    for (const auto& r : rows)
        os << r.sigma4 << '\t' << r.word << '\t' << r.ideal_dim << '\t' << r.torsion << '\t' << r.wide << '\t' << r.v
           << '\t' << r.tag << '\t' << (r.homological ? "yes" : "no") << '\n';
    return os.str();
}

std::string to_json(const std::string& algebra, Scalar field_char, const std::vector<TableRow>& rows)
{
    nlohmann::ordered_json j;
    j["algebra"] = algebra;
    j["field_char"] = field_char;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json rec;
        rec["sigma4"] = r.sigma4;
        rec["word"] = r.word;
        rec["dim_I"] = r.ideal_dim;
        rec["torsion"] = r.torsion;
        rec["wide"] = r.wide;
        rec["v"] = r.v;
        rec["morita"] = r.tag;
        rec["homological"] = r.homological;
        j["records"].push_back(std::move(rec));
    }
    return j.dump(2) + "\n";
}

std::vector<TableRow> rows_from_json(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    std::vector<TableRow> rows;
    for (const auto& rec : j.at("records")) {
        TableRow t;
        t.sigma4 = rec.at("sigma4").get<std::string>();
        t.word = rec.at("word").get<std::string>();
        t.ideal_dim = rec.at("dim_I").get<std::size_t>();
        t.torsion = rec.at("torsion").get<std::string>();
        t.wide = rec.at("wide").get<std::string>();
        t.v = rec.at("v").get<std::string>();
        t.tag = rec.at("morita").get<std::string>();
        t.homological = rec.at("homological").get<bool>();
        rows.push_back(std::move(t));
    }
    return rows;
}

}  // namespace preproj
