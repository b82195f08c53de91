#pragma once

#include <span>
#include <vector>

#include "tricyclic/digraph.hpp"

namespace tricyclic {

/// A subdigraph of some ambient digraph: vertex mask plus arc mask indexed like g.arcs().
struct Subdigraph {
    std::vector<bool> vertices;
    std::vector<bool> arcs;

    static Subdigraph empty_of(const Digraph& g);
    /// The directed cycle `cycle` of g as a subdigraph.
    static Subdigraph of_cycle(const Digraph& g, std::span<const Vertex> cycle);
    void add_path(const Digraph& g, std::span<const Vertex> path);
    std::size_t vertex_count() const;
    std::size_t arc_count() const;
};

/// Directed path p1 -> ... -> pm with both ends in the host and nothing else in it.
/// A closed ear has p1 == pm; it only arises for hosts of graphs with a cut vertex.
struct Ear {
    std::vector<Vertex> vertices;
    bool closed = false;

    std::size_t length() const { return vertices.size() - 1; }
    std::span<const Vertex> internal() const {
        return std::span<const Vertex>(vertices).subspan(1, vertices.size() - 2);
    }
};

/// Shortest open ear of `host` in g; ties go to the lexicographically least vertex sequence.
/// Throws HostEqualsG when host is all of g and NoEar when no open ear exists.
Ear find_ear(const Digraph& g, const Subdigraph& host);

struct EarDecomposition {
    Cycle initial;
    std::vector<Ear> ears;
};

/// Initial cycle: the shortest (then lex-least) directed cycle through vertex 0. Ears are
/// added shortest-first; a closed ear is used only when no open ear exists.
/// Throws NotStronglyConnected.
EarDecomposition ear_decomposition(const Digraph& g);

/// Replays a decomposition into the subdigraph it covers.
Subdigraph replay_ears(const Digraph& g, const EarDecomposition& d);

}  // namespace tricyclic
