#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tricyclic/errors.hpp"

namespace tricyclic {

using Vertex = std::int32_t;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
    Arc reversed() const { return {head, tail}; }
};

/// A directed cycle as its vertex sequence v0 -> v1 -> ... -> v(k-1) -> v0.
using Cycle = std::vector<Vertex>;

/// Rotates a cycle so that it starts at its smallest vertex.
Cycle canonical_cycle(Cycle cycle);

/// Loop-free directed graph without parallel arcs; antiparallel pairs are allowed.
///
/// Vertices are the dense ids 0..n-1. Arcs are kept sorted by (tail, head) and the
/// adjacency lists are sorted ascending, so every scan over a Digraph is deterministic.
/// Labels are optional; an unlabeled vertex reads back as its decimal id.
class Digraph {
public:
    Digraph() = default;

    /// Throws InvalidDigraph on a loop, a duplicate arc, an out-of-range endpoint, or a
    /// label vector that is not empty, not of size n, or not injective.
    Digraph(std::size_t vertex_count, std::vector<Arc> arcs, std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return out_offset_.empty() ? 0 : out_offset_.size() - 1; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    bool empty() const noexcept { return vertex_count() == 0; }

    std::span<const Arc> arcs() const noexcept { return arcs_; }
    std::span<const Vertex> out(Vertex v) const;
    std::span<const Vertex> in(Vertex v) const;
    std::size_t out_degree(Vertex v) const { return out(v).size(); }
    std::size_t in_degree(Vertex v) const { return in(v).size(); }

    bool has_arc(Vertex tail, Vertex head) const;
    bool has_arc(Arc a) const { return has_arc(a.tail, a.head); }
    /// Position of `a` in arcs(), or arc_count() when absent.
    std::size_t arc_index(Arc a) const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    std::string label(Vertex v) const;
    std::vector<std::string> resolved_labels() const;
    std::optional<Vertex> find_label(std::string_view label) const;

    /// Subdigraph induced on `vertices` (sorted, distinct). New id i is vertices[i];
    /// labels are carried over explicitly.
    Digraph induced(std::span<const Vertex> vertices) const;
    /// Same vertex set, arcs for which `keep` is false are dropped.
    Digraph filter_arcs(const std::vector<bool>& keep) const;
    Digraph reversed() const;

    friend bool operator==(const Digraph& a, const Digraph& b);

private:
    std::vector<Arc> arcs_;
    std::vector<Vertex> out_heads_;
    std::vector<std::size_t> out_offset_;
    std::vector<Vertex> in_tails_;
    std::vector<std::size_t> in_offset_;
    std::vector<std::string> labels_;
};

/// True iff `cycle` is a directed cycle of g: distinct vertices, length >= 2, all arcs present.
bool is_directed_cycle(const Digraph& g, std::span<const Vertex> cycle);

/// Parses the edge-list format: one "tail head" pair per line, '#' comments and blank
/// lines ignored, ids assigned by first appearance.
Digraph parse_edge_list(std::string_view text);

/// Canonical edge list: arcs sorted by (tail id, head id), labels resolved, LF endings.
std::string serialize_edge_list(const Digraph& g);

Digraph read_edge_list_file(const std::string& path);

}  // namespace tricyclic
