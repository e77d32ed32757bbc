#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace preproj {

class InvalidType : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Arrow {
    int id;
    int source;  // 1-based vertex
    int target;
};

enum class DynkinFamily { A, D, E };

struct DynkinType {
    DynkinFamily family;
    int rank;

    std::string name() const;  // "A3", "D4", ...
    bool operator==(const DynkinType&) const = default;
};

std::optional<DynkinType> parse_dynkin_type(char family, int rank);

/// Vertices are 1..n. Arrow ids are 0-based and dense. When `star` is set it is
/// a fixed-point-free involution on arrow ids pairing α with α*.
struct Quiver {
    int vertex_count = 0;
    std::vector<Arrow> arrows;
    std::optional<std::vector<int>> star;

    int arrow_count() const { return static_cast<int>(arrows.size()); }
    bool has_star() const { return star.has_value(); }
    /// Arrows reversed; the involution (if any) is kept.
    Quiver opposite() const;
    void validate() const;
};

Quiver quiver_from_edges(int n, const std::vector<std::pair<int, int>>& arrows);

/// Default orientations: A_n is 1→2→…→n; D_n is the chain 1…n-2 with n-1, n
/// attached to n-2; E_n is the chain 1…n-1 with n attached to 3. Arrows point
/// toward the branch vertex.
Quiver dynkin_quiver(DynkinType type);
Quiver dynkin_quiver(char family, int rank);

/// Adds α*: j→i for every α: i→j. Original arrows keep their ids 0..m-1, α* gets id m+id(α).
Quiver double_quiver(const Quiver& q);

/// Dynkin type of each connected component of the underlying graph; nullopt
/// when some component is not a simply-laced Dynkin graph.
std::optional<std::vector<DynkinType>> dynkin_components(const Quiver& q);

/// Oriented cycle 1→2→…→n→1.
Quiver cyclic_quiver(int n);

}  // namespace preproj
