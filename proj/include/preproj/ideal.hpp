#pragma once

#include "preproj/algebra.hpp"

#include <span>
#include <vector>

namespace preproj {

/// A two-sided ideal stored as a subspace of the algebra's basis coordinates.
struct TwoSidedIdeal {
    AlgebraPtr algebra;
    Subspace space;

    std::size_t dim() const { return space.dim(); }
    bool operator==(const TwoSidedIdeal& o) const { return algebra == o.algebra && space == o.space; }
};

TwoSidedIdeal zero_ideal(const AlgebraPtr& a);
TwoSidedIdeal unit_ideal(const AlgebraPtr& a);

/// Smallest two-sided ideal containing the given elements.
TwoSidedIdeal two_sided_closure(const AlgebraPtr& a, const std::vector<AlgebraElement>& generators);

/// I_i = A(1 - e_i)A.
TwoSidedIdeal idempotent_ideal(const AlgebraPtr& a, int vertex);
/// AeA for e the sum of e_v over `vertices`.
TwoSidedIdeal vertex_ideal(const AlgebraPtr& a, std::span<const int> vertices);

TwoSidedIdeal ideal_product(const TwoSidedIdeal& i, const TwoSidedIdeal& j);
/// I_{w_1} I_{w_2} ... ; the empty word gives A.
TwoSidedIdeal ideal_for_word(const AlgebraPtr& a, std::span<const int> word);

bool is_idempotent_ideal(const TwoSidedIdeal& i);
/// Membership test of x·b and b·x for every ideal basis vector x and algebra basis element b.
bool is_two_sided(const TwoSidedIdeal& i);

AlgebraPtr quotient_algebra(const TwoSidedIdeal& i);

}  // namespace preproj
