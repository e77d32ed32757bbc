#pragma once

#include "preproj/module.hpp"

#include <vector>

namespace preproj {

/// End(x) as a span of vertex-wise matrices, with structure constants for
/// composition in the Hom basis.
struct EndAlgebra {
    ModulePtr module;
    std::vector<Morphism> basis;
    std::vector<Matrix> totals;  // block-diagonal matrices of the basis
    /// product[i][j] = coordinates of basis[i] ∘ basis[j]
    std::vector<std::vector<Vec>> product;

    std::size_t dim() const { return basis.size(); }
    Matrix total_of(const Vec& coords) const;
};

EndAlgebra end_algebra(const ModulePtr& x);

/// Jacobson radical of End(x) as a subspace of basis coordinates. Uses the
/// generalized trace functionals g_i(a) = (Tr(ã^{p^i}) mod p^{i+1}) / p^i,
/// i = 0..⌊log_p n⌋, which reduce to the trace form when p > n.
Subspace end_radical(const EndAlgebra& e);

/// dim End(x) / rad End(x).
std::size_t semisimple_dim(const Representation& x);
bool is_indecomposable(const Representation& x);

/// Indecomposable summands of x (as submodules, in splitting order). Throws
/// ConfigurationError if x has a summand that is indecomposable but not
/// absolutely indecomposable over the prime field.
std::vector<ModulePtr> decompose(const ModulePtr& x);

bool is_isomorphic(const Representation& x, const Representation& y);

/// Minimal polynomial of a square matrix, coefficients from degree 0 upwards
/// (monic).
Vec minimal_polynomial(const Matrix& m);

}  // namespace preproj
