#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "tricyclic/digraph.hpp"

namespace tricyclic {

/// The graph obtained by forgetting arc directions. Antiparallel arcs collapse to one edge.
class UnderlyingGraph {
public:
    explicit UnderlyingGraph(const Digraph& g);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
    bool adjacent(Vertex u, Vertex v) const;
    /// Edges as (smaller, larger) pairs, sorted.
    std::vector<Arc> edges() const;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

UnderlyingGraph underlying(const Digraph& g);

/// Connected components of the underlying graph after deleting `removed` (a mask over the
/// vertices; may be empty). Each component is sorted; components are ordered by smallest member.
std::vector<std::vector<Vertex>> components_without(const UnderlyingGraph& ug, const std::vector<bool>& removed);

/// Strong components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> strong_components(const Digraph& g);
bool is_strongly_connected(const Digraph& g);

/// Blocks (maximal 2-connected pieces, bridges included) of the underlying graph, each
/// sorted, ordered lexicographically. Isolated vertices form no block.
std::vector<std::vector<Vertex>> blocks(const UnderlyingGraph& ug);
std::vector<Vertex> cut_vertices(const UnderlyingGraph& ug);

namespace unbreakable_witness {
struct TooSmall {};
/// No directed path from `from` to `to`.
struct NotStronglyConnected {
    Vertex from;
    Vertex to;
};
struct CutVertex {
    Vertex vertex;
};
}  // namespace unbreakable_witness

struct UnbreakableResult {
    bool unbreakable = false;
    std::variant<std::monostate, unbreakable_witness::TooSmall, unbreakable_witness::NotStronglyConnected,
                 unbreakable_witness::CutVertex>
        witness;
    explicit operator bool() const { return unbreakable; }
};

/// Strongly connected, at least three vertices, and an underlying graph without cut vertex.
UnbreakableResult is_unbreakable(const Digraph& g);

/// True iff g minus any single vertex is strongly connected. Throws TooSmall if |g| < 3.
bool is_strongly_2connected(const Digraph& g);

/// A path of the underlying graph with, per edge, whether its arc points towards the far end.
struct AwayPath {
    std::vector<Vertex> vertices;
    std::vector<bool> toward;
    int away_count = 0;
    std::size_t hops() const { return toward.size(); }
};

/// Path of g - x from `a` to `b` minimising the number of edges directed away from the
/// b-end, then the number of edges. An antiparallel pair is traversed at no cost.
/// Throws NoPath if a and b are separated, std::invalid_argument on overlapping sets.
AwayPath min_away_path(const Digraph& g, std::span<const Vertex> x, std::span<const Vertex> a,
                       std::span<const Vertex> b);

/// Number of components with more than one vertex in the underlying graph minus {u, v}.
int activity_of_pair(const UnderlyingGraph& ug, Vertex u, Vertex v);

}  // namespace tricyclic
