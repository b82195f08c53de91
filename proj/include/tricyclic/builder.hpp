#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tricyclic/digraph.hpp"

namespace tricyclic {

struct BuildStep {
    /// Has in- and out-degree one when the step runs.
    Vertex pivot;
    /// One of the pivot's two neighbours.
    Vertex neighbour;
    /// New vertices, each completing a tricycle with the pivot-neighbour arc.
    std::vector<Vertex> additions;

    friend bool operator==(const BuildStep&, const BuildStep&) = default;
};

/// Safe-building recipe. base is a tricycle a -> b -> c -> a; every vertex id 0..n-1 appears
/// exactly once among the base and the additions.
struct BuildScript {
    std::array<Vertex, 3> base{};
    std::vector<BuildStep> steps;
    /// Optional labels for the replayed digraph, indexed by id.
    std::vector<std::string> labels;

    std::size_t vertex_count() const;
    friend bool operator==(const BuildScript&, const BuildScript&) = default;
};

/// Throws InvalidScript for a malformed base or id set, InvalidStep for a step whose pivot
/// does not have degree two or whose neighbour is not adjacent.
Digraph replay(const BuildScript& s);

struct PeripheralEdge {
    /// The arc between t1 and t2, in its direction in g.
    Arc arc;
    /// Vertex of the chosen tricycle with no neighbour in the remainder.
    Vertex t3;
    /// Singleton components of the underlying graph minus the arc's ends, outside the remainder.
    std::vector<Vertex> fan;
    /// The unique component with more than one vertex; empty when every component is a singleton.
    std::vector<Vertex> remainder;
};

/// Picks a tricycle T and a component B of the underlying graph minus V(T) with |B| maximal
/// (first such pair in tricycle order) and reads off the peripheral arc. Throws TooSmall
/// when |g| < 4 and HypothesisViolated when the expected structure is absent.
PeripheralEdge find_peripheral_edge(const Digraph& g);

/// Peels peripheral fans until a tricycle remains. Throws HypothesisViolated naming the
/// property that failed (not unbreakable, not 3-cyclic, missing degree-two pivot, ...).
BuildScript extract_build_script(const Digraph& g);

/// Deterministic pseudo-random stream. Only the raw 64-bit engine output is used, so the
/// sequence is identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

/// Random safe-building script on n >= 3 vertices. Pivots are uniform among degree-two
/// vertices, the neighbour uniform among its two, and fan sizes geometric with mean 1.5
/// (P(k) = 2/3 * (1/3)^(k-1)) truncated to the remaining budget.
BuildScript random_build_script(std::uint64_t seed, std::size_t n);
Digraph random_safely_buildable(std::uint64_t seed, std::size_t n);

/// One random 3-pinched piece on `size` >= 3 vertices: pinch vertex 0, parts A2 and A3
/// joined by a random connected bipartite digraph A2 -> A3, arcs 0 -> A2 and A3 -> 0.
Digraph random_pinched_piece(Rng& rng, std::size_t size);

/// `pieces` random pinched pieces glued one after another by special edge sums at uniformly
/// chosen special arcs.
Digraph random_pinched_sum(std::uint64_t seed, std::size_t pieces, std::size_t piece_size);

}  // namespace tricyclic
