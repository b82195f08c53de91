#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tricyclic/builder.hpp"
#include "tricyclic/certificate.hpp"
#include "tricyclic/digraph.hpp"
#include "tricyclic/recognition.hpp"
#include "tricyclic/rings.hpp"

namespace tricyclic {

using Radius = boost::rational<std::int64_t>;

struct Placement {
    /// 1, 2 or 3: the ring part holding the vertex, plus one.
    int ray = 1;
    Radius radius{1};
    friend bool operator==(const Placement&, const Placement&) = default;
};

/// Vertices on three rays at 120 degrees, arcs inside the sectors from ray i to ray i+1.
struct AnnularDrawing {
    LRing ring;
    /// Indexed by vertex id.
    std::vector<Placement> placement;
    friend bool operator==(const AnnularDrawing&, const AnnularDrawing&) = default;
};

struct AnnularVerdict {
    bool annular = false;
    bool three_cyclic = false;
    bool diwheel_free = false;
    std::optional<certificate::Diwheel> diwheel;
    ActivityMax max_activity;
    bool brancher_free = false;
    std::optional<certificate::Brancher> brancher;
    /// The characterisation by branchers gives the same answer.
    bool brancher_agrees = false;
    /// Empty when annular; otherwise "not_three_cyclic", "diwheel" or "activity".
    std::string reason;
    explicit operator bool() const { return annular; }
};

/// 3-cyclic, diwheel-free and every arc of activity at most two. The brancher test is run
/// as well and recorded in `brancher_agrees`. Throws NotUnbreakable.
AnnularVerdict is_three_annular(const Digraph& g);

/// Builds a drawing without consulting activities. Tricycles of an annular drawing are
/// nested, and each vertex lies on a contiguous run of them, so consecutive tricycles share an
/// arc and exactly one vertex leaves the run at every step. From each possible innermost
/// tricycle the rest of that order is forced; radii are ranks of first appearance per ray.
/// Throws NotAnnular when no start works, NotUnbreakable for unsuitable input.
AnnularDrawing synthesize_drawing(const Digraph& g);

struct DrawingCheck {
    bool valid = false;
    std::string violation;
    /// For crossings: the two offending arcs.
    std::optional<std::pair<Arc, Arc>> crossing;
    explicit operator bool() const { return valid; }
};

/// Ring valid for g, placement covering every vertex on the ray of its part, positive radii
/// distinct per ray, every arc from ray i to ray i+1, and no two arcs of a sector with four
/// distinct ends whose tail order differs from their head order.
DrawingCheck validate_drawing(const Digraph& g, const AnnularDrawing& d);

/// SVG 1.1 rendering; identical input gives identical bytes.
std::string render_svg(const Digraph& g, const AnnularDrawing& d);
/// Throws IoError when the file cannot be written.
void export_svg(const Digraph& g, const AnnularDrawing& d, const std::string& path);

struct ParentTree {
    Vertex root = 0;
    /// parent[root] == -1.
    std::vector<Vertex> parent;
    /// Removing the leaves leaves a path (or nothing).
    bool caterpillar = false;
    /// Some path starting at the root contains every vertex of degree at least two.
    bool rooted_caterpillar = false;
};

/// Added vertices hang off their step's pivot. For the base (a, b, c): the first step's
/// neighbour r is the root, its pivot p is r's child, and the third base vertex is p's child;
/// with no steps the tree is the path a - b - c rooted at a. Throws InvalidScript.
ParentTree parent_tree(const BuildScript& s);

}  // namespace tricyclic
