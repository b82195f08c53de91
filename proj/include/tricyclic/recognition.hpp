#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tricyclic/certificate.hpp"
#include "tricyclic/digraph.hpp"
#include "tricyclic/oracle.hpp"

namespace tricyclic {

/// Decides whether every directed cycle has length three. Positive answers carry a
/// decomposition per block; negative ones an explicit cycle where one can be found. The
/// cycle oracle only runs on a failing block, so `max_cycles` matters only for rejections.
Certificate recognize_three_cyclic(const Digraph& g, std::size_t max_cycles = kDefaultMaxCycles);

/// Smallest hub with a rim, shortest rim for that hub. The rim starts at its smallest vertex
/// and continues towards the smaller of that vertex's two rim neighbours.
std::optional<certificate::Diwheel> find_diwheel(const Digraph& g);

/// The four 8-vertex branchers. Vertex order x, y, a1, a2, a3, b1, b2, b3.
/// Variants 3 and 4 are variants 1 and 2 with every arc reversed.
const Digraph& brancher_pattern(int variant);

/// First variant (1..4) with an arc-preserving injective embedding; the embedding is the
/// lexicographically least one.
std::optional<certificate::Brancher> find_brancher(const Digraph& g);

/// Non-singleton components of the underlying graph minus the arc's ends. Throws ArcNotPresent.
int edge_activity(const Digraph& g, Arc arc);

struct ActivityMax {
    int activity = 0;
    Arc arc{};
};
/// Largest activity over all arcs; the first arc attaining it. Zero for arcless digraphs.
ActivityMax max_activity(const Digraph& g);

struct DiwheelFreeReport {
    bool no_diwheel = false;
    std::optional<certificate::Diwheel> diwheel;
    bool ring_pairs_are_trees = false;
    /// First pair (i, i+1 mod 3) of ring parts whose union does not induce a tree.
    std::optional<int> failing_pair;
    bool peel_order_exists = false;
    std::string peel_failure;
    bool edge_count_is_2n_minus_3 = false;
    std::size_t arc_count = 0;

    bool agree() const {
        return no_diwheel == ring_pairs_are_trees && no_diwheel == peel_order_exists &&
               no_diwheel == edge_count_is_2n_minus_3;
    }
};

/// Evaluates the four equivalent descriptions of diwheel-freeness independently. Throws
/// HypothesisViolated unless g is unbreakable and 3-cyclic.
DiwheelFreeReport diwheel_free_report(const Digraph& g);

/// Violations of the local structure every unbreakable, 3-cyclic, diwheel-free digraph has:
/// connected neighbourhoods, tricycle partners of an arc separated by its ends, and exactly
/// two vertices of a tricycle reaching each component outside it, joined by a unique
/// tricycle. Returns human-readable descriptions; empty when none.
std::vector<std::string> structural_violations(const Digraph& g);

/// All directed triangles, each as (a, b, c) with a -> b -> c -> a and a smallest.
std::vector<std::array<Vertex, 3>> tricycles(const Digraph& g);

}  // namespace tricyclic
