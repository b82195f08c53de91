#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tricyclic/digraph.hpp"
#include "tricyclic/rings.hpp"

namespace tricyclic {

/// u has out-degree one or v has in-degree one. Throws ArcNotPresent.
bool is_special_edge(const Digraph& g, Arc arc);

struct EdgeSum {
    Digraph graph;
    /// Old id -> id in `graph`, for each operand.
    std::vector<Vertex> left_map;
    std::vector<Vertex> right_map;
};

/// Identifies a1 of g1 with a2 of g2. The result keeps g1's ids and appends the other vertices
/// of g2 in id order. Labels of g2 that collide get "'" appended. Throws NotSpecial(side).
EdgeSum special_edge_sum_with_maps(const Digraph& g1, Arc a1, const Digraph& g2, Arc a2);
Digraph special_edge_sum(const Digraph& g1, Arc a1, const Digraph& g2, Arc a2);

struct Split {
    Digraph left;
    Digraph right;
    /// Sorted vertex sets of g inducing the two pieces; piece id i is vertices[i].
    std::vector<Vertex> left_vertices;
    std::vector<Vertex> right_vertices;
};

/// Splits g at the cutset {u, v} of its underlying graph. Components holding an out-neighbour
/// of u go left, the rest right; when one side would be empty the first component is peeled
/// off on its own. Both pieces must contain the arc, be unbreakable and have it special.
/// Throws SplitInvalid otherwise, ArcNotPresent if the arc is missing.
Split split_at(const Digraph& g, Arc arc);

/// Binary tree of special edge sums over 3-pinched leaves.
struct DecompositionTree {
    struct Leaf {
        Digraph graph;
        LRing ring;
    };
    struct Sum {
        std::shared_ptr<const DecompositionTree> left;
        std::shared_ptr<const DecompositionTree> right;
        /// The identified arc, in this node's ids.
        Arc arc;
        /// Child id -> this node's id; both are strictly increasing.
        std::vector<Vertex> left_map;
        std::vector<Vertex> right_map;
    };

    std::variant<Leaf, Sum> node;
    std::size_t vertex_count = 0;

    bool is_leaf() const { return std::holds_alternative<Leaf>(node); }
    std::size_t leaf_count() const;
    std::size_t depth() const;
};

/// Why a block could not be decomposed. `piece` is the offending subdigraph and `map` sends
/// its ids to the ids of the digraph handed to try_decompose.
struct BlockFailure {
    enum class Kind { NotRingable, NoCutset, NonAdjacentCutset, SplitInvalid };
    Kind kind;
    Digraph piece;
    std::vector<Vertex> map;
    std::string reason;
    /// For NotRingable: the offending cycle, in the caller's ids.
    Cycle cycle;
};

const char* to_string(BlockFailure::Kind kind);

/// Recursive decomposition of an unbreakable digraph: pinched pieces become leaves, others
/// are split at their lexicographically least 2-cutset.
std::variant<DecompositionTree, BlockFailure> try_decompose(const Digraph& g);

/// As try_decompose but for digraphs known to be 3-cyclic. Throws NotUnbreakable, or
/// NotThreeCyclic carrying a certificate (see certificate.hpp).
DecompositionTree decompose(const Digraph& g);

/// Folds the sums bottom-up; reproduces ids and labels of the decomposed digraph.
/// Throws NotSpecial when an identified arc is not special in a child.
Digraph recompose(const DecompositionTree& t);

/// Checks every structural property of a tree read back from storage: leaf rings valid and
/// pinched, maps increasing and covering, identified arcs present and special on both sides,
/// children strictly smaller. Returns an empty string when valid, otherwise the first problem.
std::string check_tree(const DecompositionTree& t);

}  // namespace tricyclic
