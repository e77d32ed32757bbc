#pragma once

#include "preproj/field.hpp"
#include "preproj/quiver.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace preproj {

/// Sparse coordinate vector, sorted by index.
using SparseVec = std::vector<std::pair<int, Scalar>>;
using AlgebraElement = Vec;

/// A basis element e_target · b · e_source represented by a path. The path
/// lists arrow ids in traversal order (the first arrow is applied first); the
/// empty path is the idempotent of `source` (== `target`).
struct BasisElement {
    int degree = 0;
    int source = 0;
    int target = 0;
    std::vector<int> path;
};

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Finite-dimensional quotient of a path algebra, graded by path length, given
/// by a monomial basis and structure constants. Multiplication is composition:
/// x·y means "first y, then x", so left modules are representations whose
/// arrow matrices map source to target.
class GradedAlgebra {
public:
    const Quiver& quiver() const { return quiver_; }
    const PrimeField& field() const { return field_; }
    const std::string& name() const { return name_; }
    int vertex_count() const { return quiver_.vertex_count; }
    std::size_t dim() const { return basis_.size(); }
    int max_degree() const { return degree_offsets_.size() < 2 ? -1 : static_cast<int>(degree_offsets_.size()) - 2; }

    const BasisElement& basis(std::size_t i) const { return basis_[i]; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    /// Basis indices of degree d occupy [degree_begin(d), degree_begin(d+1)).
    std::size_t degree_begin(int d) const;

    /// Basis index of e_v, or -1 when e_v is zero.
    int idempotent(int v) const { return idempotent_[v]; }
    /// a·b for arrow a and basis element b.
    const SparseVec& left_arrow(int arrow, std::size_t b) const { return left_arrow_[arrow][b]; }
    /// b·a for arrow a and basis element b.
    const SparseVec& right_arrow(int arrow, std::size_t b) const { return right_arrow_[arrow][b]; }
    /// b_i · b_j.
    const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }

    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement unit() const;
    AlgebraElement basis_element(std::size_t i) const;

    /// dim e_target A e_source.
    std::size_t dim_between(int target, int source) const;
    /// Arrows that are nonzero in the algebra.
    std::vector<int> live_arrows() const;

    /// Internal constructor used by the factory functions.
    struct Parts {
        Quiver quiver;
        PrimeField field;
        std::string name;
        std::vector<BasisElement> basis;
        std::vector<std::vector<SparseVec>> left_arrow;
        std::vector<std::vector<SparseVec>> right_arrow;
        std::vector<SparseVec> products;  // empty => derived from left_arrow
    };
    static AlgebraPtr assemble(Parts parts);

private:
    GradedAlgebra() = default;

    Quiver quiver_;
    PrimeField field_;
    std::string name_;
    std::vector<BasisElement> basis_;
    std::vector<std::size_t> degree_offsets_;
    std::vector<int> idempotent_;
    std::vector<std::vector<SparseVec>> left_arrow_;
    std::vector<std::vector<SparseVec>> right_arrow_;
    std::vector<SparseVec> products_;
};

inline constexpr int kDefaultDegreeBound = 64;

/// KQ̄/(Σ αα* − α*α) for a quiver whose underlying graph is Dynkin. `q` must
/// not already be doubled.
AlgebraPtr preprojective_algebra(const Quiver& q, PrimeField f = PrimeField(),
                                 int degree_bound = kDefaultDegreeBound);
AlgebraPtr preprojective_algebra(DynkinType t, PrimeField f = PrimeField());

/// KQ/R^h: all paths of length >= h are zero.
AlgebraPtr truncated_path_algebra(const Quiver& q, int h, PrimeField f = PrimeField(),
                                  std::string name = {});

AlgebraPtr opposite_algebra(const GradedAlgebra& a);

/// Anti-automorphism α ↦ α*, α* ↦ α of a preprojective algebra as a matrix on
/// basis coordinates (column j is the image of basis element j).
Matrix star_anti_automorphism(const GradedAlgebra& a);

/// Total dimension, per-degree dimensions, and e_i A e_j dimensions.
struct DimensionSummary {
    std::size_t total = 0;
    std::vector<std::size_t> per_degree;
    std::vector<std::vector<std::size_t>> cartan;  // cartan[t-1][s-1] = dim e_t A e_s
};
DimensionSummary dimension_summary(const GradedAlgebra& a);

/// Deterministic text dump: per-degree basis paths then nonzero structure constants.
std::string dump_algebra(const GradedAlgebra& a);

struct Block {
    AlgebraPtr algebra;
    std::vector<int> vertices;  // vertices of the parent algebra
    std::string tag;
};

/// Splits along connected components of the quiver of nonzero vertices and
/// arrows, tagging each block against freshly built preprojective algebras.
std::vector<Block> block_decompose(const AlgebraPtr& a);
/// "0" for the zero algebra, otherwise block tags joined with "×".
std::string morita_tag(const AlgebraPtr& a);

/// Tag of a basic algebra from its Cartan matrix (entry [i][j] = dim Hom(P_i, P_j)).
std::string morita_tag_from_cartan(const std::vector<std::vector<std::size_t>>& cartan, PrimeField f);

/// Restriction to the span of basis elements with both endpoints in `vertices`
/// (eAe for e the sum of those idempotents), vertices renumbered 1..k.
AlgebraPtr corner_algebra(const AlgebraPtr& a, const std::vector<int>& vertices);

}  // namespace preproj
