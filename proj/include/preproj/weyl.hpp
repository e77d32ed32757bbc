#pragma once

#include "preproj/quiver.hpp"

#include <map>
#include <string>
#include <vector>

namespace preproj {

using Word = std::vector<int>;
using IntMatrix = std::vector<std::vector<long long>>;

/// An element of the Weyl group: its matrix in the reflection representation
/// on the root lattice, a shortlex-minimal reduced word and its length.
struct WeylElement {
    IntMatrix matrix;
    Word word;

    int length() const { return static_cast<int>(word.size()); }
    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
};

class WeylGroup {
public:
    /// Weyl group of the underlying graph of `q` (arrows and their stars are
    /// treated as undirected edges).
    explicit WeylGroup(const Quiver& q);

    int rank() const { return n_; }
    const IntMatrix& cartan() const { return cartan_; }
    bool is_type_a3() const;

    WeylElement identity() const;
    WeylElement from_word(const Word& w) const;
    WeylElement multiply(const WeylElement& x, const WeylElement& y) const;
    WeylElement inverse(const WeylElement& x) const;
    bool is_reduced(const Word& w) const;

    /// All elements sorted by (length, shortlex word).
    const std::vector<WeylElement>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    const WeylElement& longest_element() const { return elements_.back(); }

    /// Canonical element (with its shortlex word) equal to `x`.
    const WeylElement& canonical(const IntMatrix& m) const;
    std::size_t index_of(const WeylElement& x) const;

    std::vector<Word> all_reduced_words(const WeylElement& w) const;

    /// Number of positive roots sent to negative roots.
    int inversion_count(const WeylElement& w) const;
    /// Positive roots in simple-root coordinates.
    const std::vector<std::vector<long long>>& positive_roots() const { return roots_; }

private:
    IntMatrix apply_generator(const IntMatrix& m, int i) const;  // m · s_i

    int n_ = 0;
    IntMatrix cartan_;
    std::vector<IntMatrix> gens_;
    std::vector<WeylElement> elements_;
    std::map<IntMatrix, std::size_t> index_;
    std::vector<std::vector<long long>> roots_;
};

/// Image of w under s_1 ↦ (34), s_2 ↦ (23), s_3 ↦ (12) in cycle notation,
/// e.g. "(13)", "(14)(23)"; the identity is "1".
std::string sigma4_label(const WeylGroup& g, const WeylElement& w);
/// The permutation of {1,2,3,4} as an image table p[1..4] (p[0] unused).
std::vector<int> sigma4_permutation(const WeylGroup& g, const WeylElement& w);
std::string cycle_notation(const std::vector<int>& perm);

std::string word_to_string(const Word& w);
/// Parses "3,2,3"; the empty string is the empty word.
Word parse_word(const std::string& s);

}  // namespace preproj
