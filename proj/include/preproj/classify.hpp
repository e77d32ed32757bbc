#pragma once

#include "preproj/registry.hpp"
#include "preproj/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace preproj {

class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A full additive subcategory, given by the registry ids of its indecomposables.
struct Subcat {
    std::vector<std::size_t> ids;  // sorted, distinct

    bool contains(std::size_t id) const;
    bool empty() const { return ids.empty(); }
    bool subset_of(const Subcat& o) const;
    bool operator==(const Subcat& o) const = default;
    auto operator<=>(const Subcat& o) const = default;
};

Subcat make_subcat(std::vector<std::size_t> ids);

/// Frozen data shared by all classification steps: the algebra, its
/// indecomposables, Hom bases between them and (for preprojective algebras)
/// the Weyl group.
struct Setting {
    AlgebraPtr algebra;
    IndecRegistry registry;
    std::optional<WeylGroup> weyl;
    std::vector<std::size_t> projective_ids;          // id of P_v, vertex order
    std::vector<std::vector<std::vector<Morphism>>> homs;  // homs[i][j] = Hom(X_i, X_j)

    Subcat everything() const;
    bool is_projective(std::size_t id) const;
};

Setting make_setting(const AlgebraPtr& a, RegistryCaps caps = {});

AlgebraPtr nakayama_algebra(int n, int h, PrimeField f = PrimeField());

/// Distinct ids of the indecomposable summands.
std::vector<std::size_t> summand_ids(const Setting& s, const ModulePtr& x);
/// { y : y ∈ gen(x) }.
Subcat gen_class(const Setting& s, const ModulePtr& x);

struct TorsionData {
    TwoSidedIdeal ideal;
    ModulePtr ideal_module;
    std::vector<std::size_t> generators;  // summands of I_w
    Subcat members;
};

TorsionData torsion_class(const Setting& s, const WeylElement& w);

struct Approximation {
    std::vector<std::size_t> target;  // ids with repetition, in summand order
    std::vector<Morphism> components; // x -> X_{target[k]}
    Morphism map;                     // x -> ⊕ X_{target[k]}
    ModulePtr cokernel;
};

/// Minimal left add(c)-approximation of x.
Approximation minimal_left_approx(const Setting& s, const ModulePtr& x, const Subcat& c);

struct WideData {
    Approximation approx;  // A -> T0
    std::vector<std::size_t> t1;
    Subcat members;
};

WideData wide_from_weyl(const Setting& s, const Subcat& torsion);

struct EpiTarget {
    std::vector<std::size_t> summands;  // basic version of C
    std::vector<std::vector<std::size_t>> cartan;  // dim Hom(C_j, C_i), the Cartan matrix of End(C)^op
    std::string tag;
};

EpiTarget epi_target(const Setting& s, const Subcat& wide);

/// C projective, and wide closed under syzygies. Both criteria are
/// computed; a disagreement throws InternalInconsistency.
bool is_homological(const Setting& s, const Subcat& wide, const EpiTarget& epi);
bool is_homological(const Setting& s, const Subcat& wide);

struct TachikawaRow {
    std::size_t id;
    std::optional<int> ext_degree;  // least d with Ext^d(M, M) != 0
    std::optional<int> period;      // least k with Ω^k(M) ≅ M
};

struct TachikawaReport {
    std::vector<TachikawaRow> rows;
    bool passed() const;
};

TachikawaReport tachikawa_check(const Setting& s, int bound);

struct ClassificationRecord {
    WeylElement w;
    std::size_t ideal_dim = 0;
    std::vector<std::size_t> torsion_generators;
    Subcat torsion;
    std::vector<std::size_t> t0;
    std::vector<std::size_t> t1;
    Subcat wide;
    WeylElement u;
    WeylElement v;
    std::size_t v_ideal_dim = 0;
    std::size_t v_ideal_square_dim = 0;
    bool length_additive = false;
    bool v_idempotent = false;
    std::string quotient_tag;  // tag of A / I_v
    std::vector<std::size_t> epi_summands;
    std::string tag;
    bool homological = false;
    std::optional<std::string> sigma4;
};

/// One record per Weyl element, sorted by length then shortlex word. Uses up to
/// `threads` workers (0 = hardware concurrency).
std::vector<ClassificationRecord> classify_all(const Setting& s, unsigned threads = 0);

/// (u, v) with gen(T1) = gen(I_u) and v = w⁻¹u.
std::pair<WeylElement, WeylElement> find_uv(const Setting& s, const WeylElement& w, const Subcat& gen_t1,
                                            const std::vector<Subcat>& torsion_by_index);

/// The homological records, checked against the two nontrivial elements
/// s_n(s_{n-1}s_n)...(s_2...s_n) ↦ add(P_1) and s_{n-1}(s_{n-2}s_{n-1})...(s_1...s_{n-1}) ↦ add(P_n)
/// in type A_n.
std::vector<ClassificationRecord> homological_list(const Setting& s, const std::vector<ClassificationRecord>& records);

/// s_n(s_{n-1}s_n)...(s_2...s_n) when `first` is true, else s_{n-1}(s_{n-2}s_{n-1})...(s_1...s_{n-1}).
Word theorem_b_word(int n, bool first);

WeylElement smallest_torsion_class_containing(const Setting& s, const std::vector<ClassificationRecord>& records,
                                              const ModulePtr& x);

struct StratifyingRow {
    std::vector<int> vertices;  // e = Σ e_v
    std::size_t ideal_dim = 0;
    bool quotient_projective = false;
};

struct StratifyingReport {
    std::vector<StratifyingRow> rows;
    std::size_t algebra_dim = 0;
    /// Stratifying ideals other than 0 and A.
    std::vector<StratifyingRow> nontrivial() const;
};

StratifyingReport stratifying_scan(const AlgebraPtr& a);

struct BruteOptions {
    std::size_t max_registry = 16;
    std::size_t multiplicity = 2;    // summands per side of a morphism or extension
    std::size_t max_enumeration = 1u << 16;  // cap on p^dim for exhaustive Hom/Ext enumeration
};

/// All subsets of the registry closed under kernels, cokernels and extensions,
/// tested on every morphism and every extension class between direct sums of at
/// most `multiplicity` members (exhaustively over the prime field).
std::vector<Subcat> wide_enumerate_brute(const Setting& s, BruteOptions opt = {});

// rendering

std::string render_sum(const Setting& s, const std::vector<std::size_t>& ids);
std::string render_torsion(const Setting& s, const ClassificationRecord& r);
std::string render_wide(const Setting& s, const Subcat& wide);

struct TableRow {
    std::string sigma4;
    std::string word;
    std::size_t ideal_dim = 0;
    std::string torsion;
    std::string wide;
    std::string v;
    std::string tag;
    bool homological = false;
};

std::vector<TableRow> table_rows(const Setting& s, const std::vector<ClassificationRecord>& records);
std::string to_tsv(const std::vector<TableRow>& rows);
std::string to_json(const std::string& algebra, Scalar field_char, const std::vector<TableRow>& rows);
std::vector<TableRow> rows_from_json(const std::string& text);

}  // namespace preproj
