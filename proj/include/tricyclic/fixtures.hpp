#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tricyclic/digraph.hpp"

namespace tricyclic::fixtures {

/// Tricycle 1 -> 2 -> 3 -> 1.
Digraph t3();
/// a -> b -> a.
Digraph c2();
/// Directed cycle 1 -> ... -> 6 -> 1.
Digraph c6();
/// Diwheel with hub h and rim 1, 2, 3, 4.
Digraph w4();
/// Brancher variant 1..4, vertex order x, y, a1, a2, a3, b1, b2, b3.
Digraph brancher(int variant);
/// v1..vk with both arcs between cyclically consecutive vertices; k >= 2.
Digraph double_cycle(int k);
/// x -> y and y -> wi -> x for i = 1..k.
Digraph fan(int k);
/// Two copies of fan(2) glued along (y, w1) and (x', y').
Digraph glue6();
/// Every ordered pair of distinct vertices 1..n.
Digraph complete(int n);
/// Two copies of w4() glued along (h, 1) and (2', h'); not pinched.
Digraph double_wheel();

/// Named lookup: T3, C2, C6, W4, B1..B4, DC<k>, FAN<k> (also FAN_<k>), GLUE6, K<n>,
/// DOUBLE_WHEEL.
std::optional<Digraph> by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace tricyclic::fixtures
