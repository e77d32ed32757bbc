#include "preproj/verify.hpp"

#include "preproj/golden.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace preproj {

namespace {

std::vector<std::vector<std::string>> read_tsv(const char* text)
{
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    std::getline(ss, line);  // header
    while (std::getline(ss, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string f;
        while (std::getline(ls, f, '\t'))
            fields.push_back(f);
        rows.push_back(std::move(fields));
    }
    return rows;
}

std::vector<std::string> split_sum(const std::string& s)
{
    static const std::string sep = "⊕";
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos)
            break;
        start = pos + sep.size();
    }
    return out;
}

std::vector<std::size_t> ids_of(const Setting& s, const std::vector<std::string>& names)
{
    std::vector<std::size_t> ids;
    for (const auto& n : names) {
        auto id = s.registry.id_of_name(n);
        if (!id)
            throw std::invalid_argument("unknown module name " + n);
        ids.push_back(*id);
    }
    return ids;
}

Check make_check(std::string name, bool ok, std::string detail = "")
{
    return Check{std::move(name), ok, std::move(detail)};
}

AlgebraPtr type_a(int n, Scalar p) { return preprojective_algebra(DynkinType{DynkinFamily::A, n}, PrimeField(p)); }

std::vector<AlgebraPtr> preprojectives(const VerifyConfig& cfg, std::initializer_list<int> ranks)
{
    std::vector<AlgebraPtr> out;
    if (cfg.type) {
        out.push_back(preprojective_algebra(*cfg.type, PrimeField(cfg.p)));
        return out;
    }
    for (int n : ranks)
        out.push_back(type_a(n, cfg.p));
    return out;
}

// Runs fn, turning a thrown error into a failed check.
void guarded(std::vector<Check>& checks, const std::string& name, const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const std::exception& e) {
        checks.push_back(make_check(name, false, e.what()));
    }
}

std::vector<std::size_t> nonprojective_ids(const Setting& s)
{
    std::vector<std::size_t> out;
    for (std::size_t id = 0; id < s.registry.size(); ++id)
        if (!s.is_projective(id))
            out.push_back(id);
    return out;
}

}  // namespace

bool SuiteReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string SuiteReport::render() const
{
    std::ostringstream os;
    std::size_t ok = 0;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty())
            os << ": " << c.detail;
        os << '\n';
        ok += c.passed ? 1 : 0;
    }
    os << suite << ": " << ok << "/" << checks.size() << " checks passed\n";
    return os.str();
}

std::vector<GoldenRow> a3_golden_table()
{
    std::vector<GoldenRow> out;
    for (const auto& f : read_tsv(generated::kA3TableTsv))
        out.push_back({f.at(0), f.at(1), f.at(2), f.at(3)});
    return out;
}

std::vector<std::vector<std::string>> nakayama33_golden_wides()
{
    std::vector<std::vector<std::string>> out;
    for (const auto& f : read_tsv(generated::kNakayama33WidesTsv)) {
        std::vector<std::string> names;
        std::stringstream ss(f.at(0));
        std::string n;
        while (std::getline(ss, n, ','))
            names.push_back(n);
        out.push_back(std::move(names));
    }
    return out;
}

Subcat parse_class(const Setting& s, const std::string& text)
{
    if (text == "mod(A)")
        return s.everything();
    if (text == "{0}")
        return {};
    if (text.size() < 6 || text.back() != ')' || (text.rfind("add(", 0) != 0 && text.rfind("gen(", 0) != 0))
        throw std::invalid_argument("cannot parse class " + text);
    auto ids = ids_of(s, split_sum(text.substr(4, text.size() - 5)));
    if (text[0] == 'a')
        return make_subcat(ids);
    return gen_class(s, share(s.registry.sum(ids)));
}

std::string normalize_class(const Setting& s, const std::string& text)
{
    if (text == "mod(A)" || text == "{0}")
        return text;
    return text.substr(0, 4) + render_sum(s, ids_of(s, split_sum(text.substr(4, text.size() - 5)))) + ")";
}

SuiteReport suite_table44(const VerifyConfig& cfg)
{
    SuiteReport rep{"table44", {}};
    guarded(rep.checks, "classification of A3", [&] {
        Setting s = make_setting(type_a(3, cfg.p));
        auto records = classify_all(s, cfg.threads);
        auto golden = a3_golden_table();
        rep.checks.push_back(make_check("24 records", records.size() == 24 && golden.size() == 24,
                                        std::to_string(records.size()) + " records, " +
                                            std::to_string(golden.size()) + " golden rows"));
        std::map<std::string, const ClassificationRecord*> by_label;
        for (const auto& r : records)
            if (r.sigma4)
                by_label[*r.sigma4] = &r;
        rep.checks.push_back(make_check("distinct permutation labels", by_label.size() == records.size()));
        for (const auto& g : golden) {
            auto it = by_label.find(g.sigma4);
            if (it == by_label.end()) {
                rep.checks.push_back(make_check("row " + g.sigma4, false, "no record with this label"));
                continue;
            }
            const auto& r = *it->second;
            std::vector<std::string> bad;
            if (!(r.torsion == parse_class(s, g.torsion)))
                bad.push_back("torsion class " + render_torsion(s, r) + " vs " + g.torsion);
            if (!(r.wide == parse_class(s, g.wide)))
                bad.push_back("wide " + render_wide(s, r.wide) + " vs " + g.wide);
            if (r.tag != g.tag)
                bad.push_back("Morita " + r.tag + " vs " + g.tag);
            if (normalize_class(s, g.torsion) != render_torsion(s, r) || normalize_class(s, g.wide) != render_wide(s, r.wide))
                bad.push_back("rendering " + render_torsion(s, r) + " | " + render_wide(s, r.wide));
            std::string detail;
            for (const auto& b : bad)
                detail += (detail.empty() ? "" : "; ") + b;
            rep.checks.push_back(make_check("row " + g.sigma4 + " (" + (r.w.word.empty() ? "e" : word_to_string(r.w.word)) + ")",
                                            bad.empty(), detail));
        }
    });
    return rep;
}

SuiteReport suite_theorem_a(const VerifyConfig& cfg)
{
    SuiteReport rep{"theoremA", {}};
    for (const auto& a : preprojectives(cfg, {2, 3})) {
        const std::string tag = a->name();
        guarded(rep.checks, tag + " classification", [&] {
            Setting s = make_setting(a);
            auto records = classify_all(s, cfg.threads);
            rep.checks.push_back(make_check(tag + " one record per Weyl element", records.size() == s.weyl->order(),
                                            std::to_string(records.size()) + " records"));
            std::set<Subcat> wides;
            for (const auto& r : records)
                wides.insert(r.wide);
            rep.checks.push_back(make_check(tag + " wide subcategories pairwise distinct", wides.size() == records.size()));
            auto count = [&](auto pred) {
                return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), pred));
            };
            auto all = [&](const std::string& name, auto pred) {
                std::size_t k = count(pred);
                rep.checks.push_back(make_check(tag + " " + name, k == records.size(),
                                                std::to_string(k) + "/" + std::to_string(records.size())));
            };
            all("wide inside torsion class", [](const ClassificationRecord& r) { return r.wide.subset_of(r.torsion); });
            all("l(wv) = l(w) + l(v)", [](const ClassificationRecord& r) { return r.length_additive; });
            all("I_v idempotent", [](const ClassificationRecord& r) { return r.v_idempotent; });
            all("dim I_v = dim I_v^2", [](const ClassificationRecord& r) { return r.v_ideal_dim == r.v_ideal_square_dim; });
            all("Morita tag of A/I_v matches", [](const ClassificationRecord& r) { return r.quotient_tag == r.tag; });
            all("quotient-closed wides come from idempotent quotients", [&](const ClassificationRecord& r) {
                for (std::size_t x : r.wide.ids)
                    if (!gen_class(s, s.registry.module(x)).subset_of(r.wide))
                        return true;
                return r.v_idempotent && r.quotient_tag == r.tag;
            });
            std::size_t disagreements = 0;
            for (const auto& r : records) {
                try {
                    is_homological(s, r.wide);
                } catch (const InternalInconsistency&) {
                    ++disagreements;
                }
            }
            rep.checks.push_back(make_check(tag + " homological criteria agree", disagreements == 0,
                                            std::to_string(disagreements) + " disagreements"));
        });
    }
    return rep;
}

std::vector<Check> corner_dimension_checks(const AlgebraPtr& a)
{
    std::vector<Check> out;
    for (int v = 1; v <= a->vertex_count(); ++v) {
        std::size_t d = a->dim_between(v, v);
        out.push_back(make_check(a->name() + " dim e" + std::to_string(v) + "Ae" + std::to_string(v) + " >= 2", d >= 2,
                                 "dim " + std::to_string(d)));
    }
    return out;
}

SuiteReport suite_theorem_b(const VerifyConfig& cfg)
{
    SuiteReport rep{"theoremB", {}};
    if (cfg.type && cfg.type->family != DynkinFamily::A) {
        auto checks = corner_dimension_checks(preprojective_algebra(*cfg.type, PrimeField(cfg.p)));
        rep.checks.insert(rep.checks.end(), checks.begin(), checks.end());
        return rep;
    }
    for (const auto& a : preprojectives(cfg, {1, 2, 3})) {
        const std::string tag = a->name();
        guarded(rep.checks, tag + " homological embeddings", [&] {
            Setting s = make_setting(a);
            auto records = classify_all(s, cfg.threads);
            const auto& g = *s.weyl;
            auto hom = homological_list(s, records);
            std::vector<const ClassificationRecord*> nontrivial;
            for (const auto& r : hom)
                if (!(r.w == g.identity()) && !(r.w == g.longest_element()))
                    nontrivial.push_back(&r);
            const int n = g.rank();
            const std::size_t expected = n == 1 ? 0 : 2;
            rep.checks.push_back(make_check(tag + " nontrivial homological embeddings", nontrivial.size() == expected,
                                            std::to_string(nontrivial.size()) + " found, " + std::to_string(expected) +
                                                " expected"));
            if (n < 2)
                return;
            auto find = [&](const Word& w) -> const ClassificationRecord* {
                for (const auto* r : nontrivial)
                    if (r->w == g.from_word(w))
                        return r;
                return nullptr;
            };
            const Word w1 = theorem_b_word(n, true);
            const Word wn = theorem_b_word(n, false);
            const auto* r1 = find(w1);
            const auto* rn = find(wn);
            rep.checks.push_back(make_check(tag + " " + word_to_string(w1) + " gives add(P1)",
                                            r1 && r1->wide == Subcat{{s.projective_ids.front()}},
                                            r1 ? render_wide(s, r1->wide) : "not homological"));
            rep.checks.push_back(make_check(tag + " " + word_to_string(wn) + " gives add(P" + std::to_string(n) + ")",
                                            rn && rn->wide == Subcat{{s.projective_ids.back()}},
                                            rn ? render_wide(s, rn->wide) : "not homological"));
        });
    }
    if (!cfg.type) {
        auto checks = corner_dimension_checks(preprojective_algebra(DynkinType{DynkinFamily::D, 4}, PrimeField(cfg.p)));
        rep.checks.insert(rep.checks.end(), checks.begin(), checks.end());
    }
    return rep;
}

SuiteReport suite_tachikawa(const VerifyConfig& cfg)
{
    SuiteReport rep{"tachikawa", {}};
    std::vector<AlgebraPtr> algebras;
    if (cfg.nakayama)
        algebras.push_back(nakayama_algebra(cfg.nakayama->first, cfg.nakayama->second, PrimeField(cfg.p)));
    else if (cfg.type)
        algebras = preprojectives(cfg, {});
    else
        algebras = {type_a(2, cfg.p), type_a(3, cfg.p), nakayama_algebra(3, 3, PrimeField(cfg.p))};
    for (const auto& a : algebras) {
        guarded(rep.checks, a->name() + " Tachikawa", [&] {
            Setting s = make_setting(a);
            auto t = tachikawa_check(s, cfg.ext_bound);
            for (const auto& row : t.rows) {
                std::string detail = "Ext^d nonzero at d = " + (row.ext_degree ? std::to_string(*row.ext_degree) : "none") +
                                     ", Omega-period " + (row.period ? std::to_string(*row.period) : "none");
                bool ok = row.ext_degree && row.period && *row.ext_degree <= *row.period;
                rep.checks.push_back(make_check(a->name() + " " + s.registry.name(row.id), ok, detail));
            }
            if (t.rows.empty())
                rep.checks.push_back(make_check(a->name() + " no nonprojective indecomposables", true));
        });
    }
    return rep;
}

SuiteReport suite_stratifying(const VerifyConfig& cfg)
{
    SuiteReport rep{"stratifying", {}};
    std::vector<AlgebraPtr> algebras;
    if (cfg.nakayama)
        algebras.push_back(nakayama_algebra(cfg.nakayama->first, cfg.nakayama->second, PrimeField(cfg.p)));
    else if (cfg.type)
        algebras = preprojectives(cfg, {});
    else
        algebras = {type_a(1, cfg.p), type_a(3, cfg.p), nakayama_algebra(3, 3, PrimeField(cfg.p))};
    for (const auto& a : algebras) {
        auto scan = stratifying_scan(a);
        auto bad = scan.nontrivial();
        std::string detail;
        for (const auto& r : bad) {
            detail += detail.empty() ? "e = " : ", ";
            for (int v : r.vertices)
                detail += "e" + std::to_string(v);
        }
        rep.checks.push_back(make_check(a->name() + " only trivial stratifying ideals", bad.empty(),
                                        bad.empty() ? std::to_string(scan.rows.size()) + " idempotents scanned" : detail));
    }
    return rep;
}

SuiteReport suite_nakayama(const VerifyConfig& cfg)
{
    SuiteReport rep{"nakayama", {}};
    const int n = cfg.nakayama ? cfg.nakayama->first : 3;
    const int h = cfg.nakayama ? cfg.nakayama->second : 3;
    const Scalar brute_p = cfg.p <= 3 ? cfg.p : 2;
    const std::string tag = "Nakayama(" + std::to_string(n) + "," + std::to_string(h) + ")";
    guarded(rep.checks, tag, [&] {
        Setting main = make_setting(nakayama_algebra(n, h, PrimeField(cfg.p)));
        const std::size_t classes = static_cast<std::size_t>(n * h);
        rep.checks.push_back(make_check(tag + " indecomposables", main.registry.size() == classes,
                                        std::to_string(main.registry.size()) + " found, " + std::to_string(classes) +
                                            " expected"));
        Setting s = make_setting(nakayama_algebra(n, h, PrimeField(brute_p)));
        BruteOptions opt;
        opt.max_registry = cfg.max_registry;
        auto wides = wide_enumerate_brute(s, opt);
        std::set<Subcat> all(wides.begin(), wides.end());
        rep.checks.push_back(make_check(tag + " 0 and mod(A) are wide", all.count(Subcat{}) && all.count(s.everything()),
                                        std::to_string(wides.size()) + " wide subcategories over F_" +
                                            std::to_string(brute_p)));
        std::set<Subcat> homological;
        for (const auto& w : wides)
            if (!w.empty() && is_homological(s, w))
                homological.insert(w);
        std::string listing;
        for (const auto& w : homological)
            listing += (listing.empty() ? "" : ", ") + render_wide(s, w);
        if (n == h) {
            const std::size_t expected = (std::size_t{1} << n) - 1;
            rep.checks.push_back(make_check(tag + " nonzero homological wides", homological.size() == expected,
                                            std::to_string(homological.size()) + " found, " + std::to_string(expected) +
                                                " expected: " + listing));
        } else {
            rep.checks.push_back(make_check(tag + " nonzero homological wides", true,
                                            std::to_string(homological.size()) + ": " + listing));
        }
        if (n == 3 && h == 3) {
            std::set<Subcat> golden;
            for (const auto& names : nakayama33_golden_wides())
                golden.insert(names == std::vector<std::string>{"mod(A)"} ? s.everything() : make_subcat(ids_of(s, names)));
            rep.checks.push_back(make_check(tag + " homological wides equal the golden list", golden == homological));
        }
    });
    return rep;
}

SuiteReport suite_cy2(const VerifyConfig& cfg)
{
    SuiteReport rep{"cy2", {}};
    for (const auto& a : preprojectives(cfg, {2, 3})) {
        const std::string tag = a->name();
        guarded(rep.checks, tag + " stable category", [&] {
            Setting s = make_setting(a);
            auto nonproj = nonprojective_ids(s);
            std::size_t nu = 0, period = 0, tau = 0;
            for (std::size_t id : nonproj) {
                const auto& m = *s.registry.module(id);
                nu += is_isomorphic(nakayama(m), syzygy_power(m, -3)) ? 1 : 0;
                period += is_isomorphic(syzygy_power(m, 6), m) ? 1 : 0;
                // τ = Ω²ν on a self-injective algebra
                tau += is_isomorphic(syzygy_power(nakayama(m), 2), cosyzygy(m)) ? 1 : 0;
            }
            const std::string of = "/" + std::to_string(nonproj.size());
            rep.checks.push_back(make_check(tag + " nu = Omega^-3", nu == nonproj.size(), std::to_string(nu) + of));
            rep.checks.push_back(make_check(tag + " Omega^6 = id", period == nonproj.size(), std::to_string(period) + of));
            rep.checks.push_back(make_check(tag + " tau = Omega^-1", tau == nonproj.size(), std::to_string(tau) + of));
            std::size_t symmetric = 0, pairs = 0;
            for (std::size_t i = 0; i < s.registry.size(); ++i)
                for (std::size_t j = i; j < s.registry.size(); ++j) {
                    ++pairs;
                    const auto& x = *s.registry.module(i);
                    const auto& y = *s.registry.module(j);
                    symmetric += ext_dim(x, y, 1) == ext_dim(y, x, 1) ? 1 : 0;
                }
            rep.checks.push_back(make_check(tag + " dim Ext^1(M,N) = dim Ext^1(N,M)", symmetric == pairs,
                                            std::to_string(symmetric) + "/" + std::to_string(pairs) + " pairs"));
        });
    }
    return rep;
}

std::vector<Check> reduced_word_checks(const Setting& s)
{
    const auto& g = *s.weyl;
    std::size_t ok = 0, words = 0;
    std::string bad;
    for (const auto& w : g.elements()) {
        auto ref = ideal_for_word(s.algebra, w.word);
        for (const auto& word : g.all_reduced_words(w)) {
            ++words;
            if (ideal_for_word(s.algebra, word) == ref)
                ++ok;
            else if (bad.empty())
                bad = "; first mismatch " + word_to_string(word);
        }
    }
    return {make_check(s.algebra->name() + " reduced words give one ideal", ok == words,
                       std::to_string(ok) + "/" + std::to_string(words) + " words over " + std::to_string(g.order()) +
                           " elements" + bad)};
}

std::vector<Check> tor_idempotency_checks(const Setting& s)
{
    const auto& g = *s.weyl;
    std::size_t tor_ok = 0, bic_ok = 0;
    for (const auto& v : g.elements()) {
        auto i = ideal_for_word(s.algebra, v.word);
        std::size_t defect = i.dim() - ideal_product(i, i).dim();
        std::size_t tor = tor_dim(quotient_by_ideal(i, Side::Right), quotient_by_ideal(i, Side::Left), 1);
        tor_ok += tor == defect ? 1 : 0;
        bic_ok += is_idempotent_ideal(i) == is_self_injective(quotient_algebra(i)) ? 1 : 0;
    }
    const std::string of = "/" + std::to_string(g.order());
    const std::string tag = s.algebra->name();
    return {make_check(tag + " dim Tor_1(A/I_v, A/I_v) = dim I_v - dim I_v^2", tor_ok == g.order(),
                       std::to_string(tor_ok) + of),
            make_check(tag + " I_v idempotent iff A/I_v self-injective", bic_ok == g.order(), std::to_string(bic_ok) + of)};
}

SuiteReport suite_ideals(const VerifyConfig& cfg)
{
    SuiteReport rep{"ideals", {}};
    for (const auto& a : preprojectives(cfg, {3})) {
        guarded(rep.checks, a->name() + " ideals", [&] {
            Setting s = make_setting(a);
            for (auto& c : reduced_word_checks(s))
                rep.checks.push_back(std::move(c));
            for (auto& c : tor_idempotency_checks(s))
                rep.checks.push_back(std::move(c));
        });
    }
    return rep;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"table44",     "theoremA", "theoremB", "tachikawa",
                                                "stratifying", "nakayama", "cy2",      "ideals"};
    return names;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg)
{
    if (name == "table44")
        return suite_table44(cfg);
    if (name == "theoremA")
        return suite_theorem_a(cfg);
    if (name == "theoremB")
        return suite_theorem_b(cfg);
    if (name == "tachikawa")
        return suite_tachikawa(cfg);
    if (name == "stratifying")
        return suite_stratifying(cfg);
    if (name == "nakayama")
        return suite_nakayama(cfg);
    if (name == "cy2")
        return suite_cy2(cfg);
    if (name == "ideals")
        return suite_ideals(cfg);
    throw UnknownSuite("unknown suite " + name);
}

}  // namespace preproj
