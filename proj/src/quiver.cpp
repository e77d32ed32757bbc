#include "preproj/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace preproj {

std::string DynkinType::name() const
{
    const char* f = family == DynkinFamily::A ? "A" : family == DynkinFamily::D ? "D" : "E";
    return f + std::to_string(rank);
}

std::optional<DynkinType> parse_dynkin_type(char family, int rank)
{
    switch (family) {
    case 'A':
    case 'a':
        if (rank >= 1)
            return DynkinType{DynkinFamily::A, rank};
        break;
    case 'D':
    case 'd':
        if (rank >= 4)
            return DynkinType{DynkinFamily::D, rank};
        break;
    case 'E':
    case 'e':
        if (rank >= 6 && rank <= 8)
            return DynkinType{DynkinFamily::E, rank};
        break;
    default:
        break;
    }
    return std::nullopt;
}

Quiver Quiver::opposite() const
{
    Quiver q = *this;
    for (auto& a : q.arrows)
        std::swap(a.source, a.target);
    return q;
}

void Quiver::validate() const
{
    if (vertex_count < 0)
        throw InvalidType("negative vertex count");
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const Arrow& a = arrows[k];
        if (a.id != static_cast<int>(k))
            throw InvalidType("arrow ids must be dense and ordered");
        if (a.source < 1 || a.source > vertex_count || a.target < 1 || a.target > vertex_count)
            throw InvalidType("arrow endpoint out of range");
    }
    if (star) {
        const auto& s = *star;
        if (s.size() != arrows.size())
            throw InvalidType("star involution has wrong length");
        for (std::size_t k = 0; k < s.size(); ++k) {
            int j = s[k];
            if (j < 0 || j >= arrow_count() || j == static_cast<int>(k) || s[j] != static_cast<int>(k))
                throw InvalidType("star is not a fixed-point-free involution");
            if (arrows[j].source != arrows[k].target || arrows[j].target != arrows[k].source)
                throw InvalidType("star does not reverse arrows");
        }
    }
}

Quiver quiver_from_edges(int n, const std::vector<std::pair<int, int>>& arrows)
{
    Quiver q;
    q.vertex_count = n;
    for (const auto& [s, t] : arrows)
        q.arrows.push_back({static_cast<int>(q.arrows.size()), s, t});
    q.validate();
    return q;
}

Quiver dynkin_quiver(DynkinType type)
{
    const int n = type.rank;
    std::vector<std::pair<int, int>> edges;
    switch (type.family) {
    case DynkinFamily::A:
        if (n < 1)
            throw InvalidType("A_n needs n >= 1");
        for (int i = 1; i < n; ++i)
            edges.emplace_back(i, i + 1);
        break;
    case DynkinFamily::D:
        if (n < 4)
            throw InvalidType("D_n needs n >= 4");
        for (int i = 1; i < n - 2; ++i)
            edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 1, n - 2);
        edges.emplace_back(n, n - 2);
        break;
    case DynkinFamily::E:
        if (n < 6 || n > 8)
            throw InvalidType("E_n needs 6 <= n <= 8");
        edges.emplace_back(1, 2);
        edges.emplace_back(2, 3);
        for (int i = 4; i < n; ++i)
            edges.emplace_back(i, i - 1);
        edges.emplace_back(n, 3);
        break;
    }
    return quiver_from_edges(n, edges);
}

Quiver dynkin_quiver(char family, int rank)
{
    auto t = parse_dynkin_type(family, rank);
    if (!t)
        throw InvalidType(std::string("unsupported Dynkin type ") + family + std::to_string(rank));
    return dynkin_quiver(*t);
}

Quiver double_quiver(const Quiver& q)
{
    if (q.has_star())
        throw InvalidType("quiver is already doubled");
    q.validate();
    Quiver d;
    d.vertex_count = q.vertex_count;
    const int m = q.arrow_count();
    d.arrows = q.arrows;
    std::vector<int> star(2 * m);
    for (int k = 0; k < m; ++k) {
        d.arrows.push_back({m + k, q.arrows[k].target, q.arrows[k].source});
        star[k] = m + k;
        star[m + k] = k;
    }
    d.star = std::move(star);
    d.validate();
    return d;
}

namespace {

std::optional<DynkinType> classify_tree(int size, const std::vector<std::vector<int>>& adj,
                                        const std::vector<int>& comp)
{
    int branch = -1;
    for (int v : comp) {
        int deg = static_cast<int>(adj[v].size());
        if (deg > 3)
            return std::nullopt;
        if (deg == 3) {
            if (branch != -1)
                return std::nullopt;
            branch = v;
        }
    }
    if (branch == -1)
        return DynkinType{DynkinFamily::A, size};
    std::vector<int> arms;
    for (int start : adj[branch]) {
        int len = 1, prev = branch, cur = start;
        while (true) {
            int next = -1;
            for (int w : adj[cur])
                if (w != prev)
                    next = w;
            if (next == -1)
                break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
        return DynkinType{DynkinFamily::D, size};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4)
        return DynkinType{DynkinFamily::E, size};
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<DynkinType>> dynkin_components(const Quiver& q)
{
    const int n = q.vertex_count;
    std::vector<std::vector<int>> adj(n + 1);
    std::set<std::pair<int, int>> edges;
    for (const auto& a : q.arrows) {
        if (q.star && a.id > (*q.star)[a.id])
            continue;
        if (a.source == a.target)
            return std::nullopt;
        auto e = std::minmax(a.source, a.target);
        if (!edges.insert(e).second)
            return std::nullopt;  // multiple edges
        adj[a.source].push_back(a.target);
        adj[a.target].push_back(a.source);
    }
    std::vector<int> seen(n + 1, 0);
    std::vector<DynkinType> out;
    for (int v = 1; v <= n; ++v) {
        if (seen[v])
            continue;
        std::vector<int> comp{v};
        seen[v] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (int w : adj[comp[k]])
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::size_t edge_count = 0;
        for (int u : comp)
            edge_count += adj[u].size();
        edge_count /= 2;
        if (edge_count + 1 != comp.size())
            return std::nullopt;  // cycle
        auto t = classify_tree(static_cast<int>(comp.size()), adj, comp);
        if (!t)
            return std::nullopt;
        out.push_back(*t);
    }
    return out;
}

Quiver cyclic_quiver(int n)
{
    if (n < 1)
        throw InvalidType("cyclic quiver needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        edges.emplace_back(i, i % n + 1);
    return quiver_from_edges(n, edges);
}

}  // namespace preproj
