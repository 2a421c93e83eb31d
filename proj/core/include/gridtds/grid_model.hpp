#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridtds/vertex_set.hpp"

namespace gridtds {

/// Dimensions of G_{n,m} = P_n x P_m: n columns, m rows.
struct GridSpec {
    int n = 1;
    int m = 1;

    bool valid() const { return n >= 1 && m >= 1; }
    std::size_t vertex_count() const { return static_cast<std::size_t>(n) * static_cast<std::size_t>(m); }
    std::size_t horizontal_edge_count() const { return static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(m); }
    std::size_t vertical_edge_count() const { return static_cast<std::size_t>(n) * static_cast<std::size_t>(m - 1); }
    std::size_t edge_count() const { return horizontal_edge_count() + vertical_edge_count(); }
    GridSpec transposed() const { return {m, n}; }

    friend bool operator==(const GridSpec &, const GridSpec &) = default;
};

/// Vertex x_{ij}; 1-based column i and row j.
struct Vertex {
    int i = 1;
    int j = 1;

    friend auto operator<=>(const Vertex &, const Vertex &) = default;
};

enum class EdgeKind : std::uint8_t { Horizontal, Vertical };

/// Horizontal(i,j) joins x_{ij} and x_{(i+1)j}; Vertical(i,j) joins x_{ij} and x_{i(j+1)}.
/// The defaulted ordering is the canonical one: kind, then i, then j.
struct Edge {
    EdgeKind kind = EdgeKind::Horizontal;
    int i = 1;
    int j = 1;

    static Edge horizontal(int i, int j) { return {EdgeKind::Horizontal, i, j}; }
    static Edge vertical(int i, int j) { return {EdgeKind::Vertical, i, j}; }

    Vertex first() const { return {i, j}; }
    Vertex second() const { return kind == EdgeKind::Horizontal ? Vertex{i + 1, j} : Vertex{i, j + 1}; }

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

bool in_grid(const GridSpec & spec, Vertex v);
bool in_grid(const GridSpec & spec, const Edge & e);

/// Column-major cell index; matches the (i, j) lexicographic order.
inline std::size_t cell_index(const GridSpec & spec, Vertex v)
{
    return static_cast<std::size_t>(v.i - 1) * static_cast<std::size_t>(spec.m) + static_cast<std::size_t>(v.j - 1);
}
inline Vertex vertex_at(const GridSpec & spec, std::size_t cell)
{
    return {static_cast<int>(cell / static_cast<std::size_t>(spec.m)) + 1, static_cast<int>(cell % static_cast<std::size_t>(spec.m)) + 1};
}

/// Position of an edge in the canonical order; all horizontal edges precede vertical ones.
std::size_t edge_index(const GridSpec & spec, const Edge & e);
Edge edge_at(const GridSpec & spec, std::size_t index);

std::string to_string(Vertex v);
std::string to_string(const Edge & e);
Vertex parse_vertex(std::string_view text);
Edge parse_edge(std::string_view text);

Vertex transpose(Vertex v);
Edge transpose(const Edge & e);

VertexSet make_vertex_set(const GridSpec & spec, std::span<const Vertex> vertices);
std::vector<Vertex> to_vertices(const GridSpec & spec, const VertexSet & set);

/// A grid with removed edges and deleted vertices, both kept as masks over the
/// full grid so coordinates stay stable. Immutable once built.
class GridGraph {
public:
    explicit GridGraph(GridSpec spec);

    const GridSpec & spec() const { return spec_; }

    bool is_live(Vertex v) const { return in_grid(spec_, v) && !deleted_.contains(cell_index(spec_, v)); }
    bool is_live_cell(std::size_t cell) const { return !deleted_.contains(cell); }

    /// True iff e is a valid edge of the spec, not removed, and both endpoints are live.
    bool has_edge(const Edge & e) const;
    /// Index-based variant of has_edge for solver inner loops; index must be valid.
    bool edge_present(std::size_t index) const;
    bool is_removed(std::size_t index) const { return removed_[index] != 0; }

    std::vector<Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;

    std::size_t live_count() const { return spec_.vertex_count() - deleted_.size(); }
    const VertexSet & deleted_mask() const { return deleted_; }
    VertexSet live_set() const;

    std::vector<Edge> removed_edges() const;
    std::vector<Vertex> deleted_vertices() const;
    std::vector<Edge> present_edges() const;

    bool is_clean() const { return removed_count_ == 0 && deleted_.empty(); }

    friend GridGraph remove_edges(const GridGraph & g, std::span<const Edge> edges);
    friend GridGraph delete_vertices(const GridGraph & g, std::span<const Vertex> vertices);

private:
    GridSpec spec_;
    std::vector<std::uint8_t> removed_;
    std::size_t removed_count_ = 0;
    VertexSet deleted_;
};

/// Full grid G_{n,m}. Throws InvalidInput for n < 1 or m < 1.
GridGraph build_grid(GridSpec spec);

/// Throws EdgeNotPresent if any edge is invalid, already removed, incident to a
/// deleted vertex, or repeated in the request.
GridGraph remove_edges(const GridGraph & g, std::span<const Edge> edges);

/// Throws InvalidVertex for out-of-range, already deleted, or repeated vertices.
/// Removed edges incident to a deleted vertex are absorbed into the deletion.
GridGraph delete_vertices(const GridGraph & g, std::span<const Vertex> vertices);

/// Live vertices of column Y_i. Throws InvalidColumn when i is outside [1, n].
std::vector<Vertex> column(const GridGraph & g, int i);

bool has_isolated_vertex(const GridGraph & g);

/// The same graph with i and j swapped (G_{n,m} becomes G_{m,n}).
GridGraph transpose(const GridGraph & g);

/// Element of the automorphism group of the clean grid. Reflections are
/// applied first, then the optional transpose.
struct SymmetryMap {
    bool flip_i = false;
    bool flip_j = false;
    bool transpose = false;

    bool is_identity() const { return !flip_i && !flip_j && !transpose; }
    friend bool operator==(const SymmetryMap &, const SymmetryMap &) = default;
};

/// All automorphisms of build_grid(spec), identity first. 4 maps, or 8 when n == m.
std::vector<SymmetryMap> symmetries(const GridSpec & spec);

/// Throws InvalidSymmetry if map.transpose is set and n != m.
Vertex apply(const GridSpec & spec, const SymmetryMap & map, Vertex v);
Edge apply(const GridSpec & spec, const SymmetryMap & map, const Edge & e);

} // namespace gridtds
