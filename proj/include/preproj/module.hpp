#pragma once

#include "preproj/algebra.hpp"
#include "preproj/ideal.hpp"

#include <memory>
#include <string>
#include <vector>

namespace preproj {

enum class Side { Left, Right };

inline Side other_side(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// A finite-dimensional module given by one vector space per vertex and one
/// matrix per arrow of the algebra's quiver. For left modules the matrix of an
/// arrow a maps the space at s(a) to the space at t(a); for right modules it
/// maps t(a) to s(a).
struct Representation {
    AlgebraPtr algebra;
    Side side = Side::Left;
    std::vector<std::size_t> dims;  // dims[v-1]
    std::vector<Matrix> action;     // action[arrow]

    int vertex_count() const { return static_cast<int>(dims.size()); }
    std::size_t dim(int v) const { return dims[v - 1]; }
    std::size_t total_dim() const;
    std::size_t offset(int v) const;
    bool is_zero() const { return total_dim() == 0; }
    /// Vertex an arrow acts from / to, depending on the side.
    int from(int arrow) const;
    int to(int arrow) const;
    const PrimeField& field() const { return algebra->field(); }
};

using ModulePtr = std::shared_ptr<const Representation>;

/// Vertex-wise linear maps commuting with the arrow actions.
struct Morphism {
    ModulePtr source;
    ModulePtr target;
    std::vector<Matrix> maps;  // maps[v-1]: target.dim(v) x source.dim(v)

    /// Block-diagonal matrix on total coordinates.
    Matrix total() const;
};

class SideMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

ModulePtr share(Representation x);

Representation zero_module(const AlgebraPtr& a, Side side = Side::Left);
Representation simple_module(const AlgebraPtr& a, int vertex, Side side = Side::Left);
/// Ae_i (left) or e_iA (right).
Representation projective_module(const AlgebraPtr& a, int vertex, Side side = Side::Left);
/// D(e_iA) (left) or D(Ae_i) (right).
Representation injective_module(const AlgebraPtr& a, int vertex, Side side = Side::Left);
Representation regular_module(const AlgebraPtr& a, Side side = Side::Left);
/// The ideal as a left (or right) submodule of A.
Representation module_of_ideal(const TwoSidedIdeal& i, Side side = Side::Left);
/// A/I as a left (or right) A-module.
Representation quotient_by_ideal(const TwoSidedIdeal& i, Side side = Side::Left);

/// Matrix of the action of basis element b, mapping the space at its source
/// (left) or target (right) vertex to the other endpoint.
Matrix basis_action(const Representation& x, std::size_t b);
/// Checks the module axioms against the algebra's structure constants.
bool is_valid_module(const Representation& x);

Representation direct_sum(const std::vector<Representation>& parts);
Representation direct_sum(const Representation& x, const Representation& y);
Representation power(const Representation& x, std::size_t k);

/// Checks that x and y are modules over the same algebra on the same side.
void require_compatible(const Representation& x, const Representation& y);

std::vector<Morphism> hom_basis(const ModulePtr& x, const ModulePtr& y);
std::vector<Morphism> hom_basis(const Representation& x, const Representation& y);
std::size_t hom_dim(const Representation& x, const Representation& y);
Morphism zero_morphism(const ModulePtr& x, const ModulePtr& y);
Morphism identity_morphism(const ModulePtr& x);
Morphism compose(const Morphism& g, const Morphism& f);  // g ∘ f
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, Scalar c);
bool is_zero(const Morphism& f);
bool is_injective(const Morphism& f);
bool is_surjective(const Morphism& f);
bool is_isomorphism(const Morphism& f);
bool commutes(const Morphism& f);
/// Flattened coordinates (vertex by vertex, row-major) of the maps.
Vec flatten(const Morphism& f);

/// Per-vertex subspaces of x given as row spaces.
using VertexSubspaces = std::vector<Subspace>;

/// Inclusion of the submodule spanned vertex-wise by `sub` (must be closed).
Morphism submodule(const ModulePtr& x, const VertexSubspaces& sub);
/// Projection onto x / sub.
Morphism quotient(const ModulePtr& x, const VertexSubspaces& sub);
/// Smallest submodule containing the given per-vertex subspaces.
VertexSubspaces submodule_closure(const Representation& x, VertexSubspaces gens);

Morphism kernel(const Morphism& f);    // ker f -> source
Morphism cokernel(const Morphism& f);  // target -> coker f
Morphism image(const Morphism& f);     // im f -> target

Morphism radical(const ModulePtr& x);  // rad x -> x
Morphism top(const ModulePtr& x);      // x -> x / rad x
Morphism socle(const ModulePtr& x);    // soc x -> x
/// Multiplicities of the simples in top(x) / soc(x).
std::vector<std::size_t> top_vector(const Representation& x);
std::vector<std::size_t> socle_vector(const Representation& x);

Morphism projective_cover(const ModulePtr& x);   // P(x) -> x
Morphism injective_envelope(const ModulePtr& x); // x -> I(x)
Representation syzygy(const Representation& x);
Representation cosyzygy(const Representation& x);
Representation syzygy_power(const Representation& x, int k);  // negative k uses cosyzygies

/// Vector-space dual, a module on the other side.
Representation dual(const Representation& x);
Morphism dual(const Morphism& f);
/// ν(x) = D Hom_A(x, A).
Representation nakayama(const Representation& x);

/// dim Hom(x, y) minus the maps factoring through a projective.
std::size_t stable_hom_dim(const Representation& x, const Representation& y);
/// Minimal projective resolution: differentials d_k : P_k -> P_{k-1} for
/// k = 1..length, with d_0 the cover P_0 -> x.
std::vector<Morphism> projective_resolution(const Representation& x, int length);
/// Ext^i via the Hom complex of a minimal projective resolution.
std::size_t ext_dim(const Representation& x, const Representation& y, int i);
/// Ext^i as stable Hom(Ω^i x, y), valid over self-injective algebras.
std::size_t ext_dim_stable(const Representation& x, const Representation& y, int i);
/// Tor_i(m, n) for a right module m and a left module n.
std::size_t tor_dim(const Representation& m, const Representation& n, int i);

std::string dump_module(const Representation& x);

}  // namespace preproj
