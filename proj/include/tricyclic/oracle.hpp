#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tricyclic/digraph.hpp"

namespace tricyclic {

inline constexpr std::size_t kDefaultMaxCycles = 1'000'000;

/// Calls `visit` on every directed cycle of g, each rotated to start at its smallest vertex.
/// Order: by smallest vertex, then depth-first with ascending neighbours. Returning false
/// from `visit` stops the walk. Throws CycleBudgetExceeded once more than `max_count`
/// cycles have been produced.
void for_each_cycle(const Digraph& g, const std::function<bool(const Cycle&)>& visit,
                    std::size_t max_count = kDefaultMaxCycles);

std::vector<Cycle> enumerate_cycles(const Digraph& g, std::size_t max_count = kDefaultMaxCycles);

struct CyclicVerdict {
    bool holds = false;
    /// Shortest cycle whose length is not l (first found among the shortest).
    std::optional<Cycle> witness;
    explicit operator bool() const { return holds; }
};

/// Every directed cycle has length exactly l. Acyclic digraphs qualify.
CyclicVerdict oracle_is_l_cyclic(const Digraph& g, int l, std::size_t max_count = kDefaultMaxCycles);

/// Decides whether "every directed cycle sums to 1" has a rational solution by comparing
/// the integer rank of the cycle/arc incidence matrix with that of its augmented matrix.
bool oracle_is_weightable(const Digraph& g, std::size_t max_count = kDefaultMaxCycles);

}  // namespace tricyclic
