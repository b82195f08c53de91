#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tricyclic/digraph.hpp"

namespace tricyclic {

/// Ordered partition (A1, ..., Al) with every arc going from some Ai to A(i+1 mod l).
/// Canonical form: each part sorted, parts[0] holds the smallest vertex id.
struct LRing {
    int l = 3;
    std::vector<std::vector<Vertex>> parts;

    /// 0-based part index of every vertex.
    std::vector<int> part_of(std::size_t vertex_count) const;
    std::size_t smallest_part() const;
    friend bool operator==(const LRing&, const LRing&) = default;
};

/// Raised when a digraph has a directed cycle of length not divisible by l.
class NotRingable : public Error {
public:
    NotRingable(Cycle cycle, int l)
        : Error("directed cycle of length " + std::to_string(cycle.size()) + " is not a multiple of " +
                std::to_string(l)),
          cycle_(std::move(cycle)) {}
    const Cycle& cycle() const noexcept { return cycle_; }

private:
    Cycle cycle_;
};

/// Closed walk through the conflicting arc together with a directed cycle peeled from it
/// whose length is not a multiple of l.
struct RingConflict {
    std::vector<Vertex> walk;
    Cycle cycle;
};

/// Breadth-first labels mod l from the smallest vertex. Throws NotStronglyConnected
/// (also for the empty digraph) and std::invalid_argument for l < 2.
std::variant<LRing, RingConflict> compute_lring(const Digraph& g, int l);

/// Same labelling but started from `root`; the result is rotated to canonical form.
std::variant<LRing, RingConflict> compute_lring_from(const Digraph& g, int l, Vertex root);

bool is_pinched(const LRing& ring);

/// The unique ring when it is pinched, otherwise nullopt. Throws NotRingable when no ring exists.
std::optional<LRing> find_pinched_ring(const Digraph& g, int l);

/// Parts disjoint, covering, nonempty, and every arc advances by one part.
bool is_valid_ring(const Digraph& g, const LRing& ring);

}  // namespace tricyclic
