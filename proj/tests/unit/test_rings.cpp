#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tricyclic/fixtures.hpp"
#include "tricyclic/rings.hpp"
#include "util.hpp"

using namespace tricyclic;
using testutil::ids;

namespace {

std::vector<std::vector<Vertex>> parts(const Digraph& g, const std::vector<std::vector<std::string>>& names) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& p : names) {
        auto v = ids(g, p);
        std::sort(v.begin(), v.end());
        out.push_back(v);
    }
    return out;
}

bool same_up_to_rotation(const LRing& a, const LRing& b) {
    if (a.parts.size() != b.parts.size()) return false;
    for (std::size_t r = 0; r < a.parts.size(); ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < a.parts.size(); ++i)
            if (a.parts[i] != b.parts[(i + r) % b.parts.size()]) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("compute_lring examples") {
    const Digraph t3 = fixtures::t3();
    const auto r1 = std::get<LRing>(compute_lring(t3, 3));
    CHECK(r1.parts == parts(t3, {{"1"}, {"2"}, {"3"}}));

    const Digraph c6 = fixtures::c6();
    const auto r2 = std::get<LRing>(compute_lring(c6, 3));
    CHECK(r2.parts == parts(c6, {{"1", "4"}, {"2", "5"}, {"3", "6"}}));

    const Digraph dc3 = fixtures::double_cycle(3);
    const auto r3 = compute_lring(dc3, 3);
    REQUIRE(std::holds_alternative<RingConflict>(r3));
    const auto& conflict = std::get<RingConflict>(r3);
    CHECK(conflict.cycle.size() == 2);
    CHECK(is_directed_cycle(dc3, conflict.cycle));

    CHECK_THROWS_AS(compute_lring(parse_edge_list("1 2\n"), 3), NotStronglyConnected);
    CHECK_THROWS_AS(compute_lring(Digraph(), 3), NotStronglyConnected);
    CHECK_THROWS_AS(compute_lring(t3, 1), std::invalid_argument);
}

TEST_CASE("other moduli") {
    const Digraph c6 = fixtures::c6();
    CHECK(std::get<LRing>(compute_lring(c6, 2)).parts.size() == 2);
    CHECK(std::get<LRing>(compute_lring(c6, 6)).parts.size() == 6);
    CHECK(std::holds_alternative<RingConflict>(compute_lring(c6, 4)));
}

TEST_CASE("is_pinched and find_pinched_ring examples") {
    CHECK(is_pinched(std::get<LRing>(compute_lring(fixtures::t3(), 3))));
    CHECK_FALSE(is_pinched(std::get<LRing>(compute_lring(fixtures::c6(), 3))));

    const Digraph fan = fixtures::fan(2);
    const auto rf = std::get<LRing>(compute_lring(fan, 3));
    CHECK(rf.parts == parts(fan, {{"x"}, {"y"}, {"w1", "w2"}}));
    CHECK(is_pinched(rf));

    const Digraph w4 = fixtures::w4();
    const auto rw = find_pinched_ring(w4, 3);
    REQUIRE(rw);
    CHECK(rw->parts == parts(w4, {{"h"}, {"1", "3"}, {"2", "4"}}));

    const Digraph b1 = fixtures::brancher(1);
    const auto rb = find_pinched_ring(b1, 3);
    REQUIRE(rb);
    CHECK(std::find(rb->parts.begin(), rb->parts.end(), ids(b1, {"y"})) != rb->parts.end());

    CHECK_FALSE(find_pinched_ring(fixtures::c6(), 3));
    CHECK_THROWS_AS(find_pinched_ring(fixtures::double_cycle(3), 3), NotRingable);
}

TEST_CASE("rings against brute force assignment") {
    int rings = 0;
    auto check = [&](const Digraph& g) {
        const auto r = compute_lring(g, 3);
        const auto brute = oracle::ring_parts(g);
        CHECK(std::holds_alternative<LRing>(r) == brute.has_value());
        if (const auto* ring = std::get_if<LRing>(&r)) {
            ++rings;
            CHECK(is_valid_ring(g, *ring));
            CHECK(std::find(ring->parts[0].begin(), ring->parts[0].end(), 0) != ring->parts[0].end());
            for (const Cycle& c : oracle::cycles(g)) CHECK(c.size() % 3 == 0);
            const auto part = ring->part_of(g.vertex_count());
            for (std::size_t v = 0; v < g.vertex_count(); ++v) CHECK(part[v] == (*brute)[v]);
        } else {
            const auto& conflict = std::get<RingConflict>(r);
            CHECK(is_directed_cycle(g, conflict.cycle));
            CHECK(conflict.cycle.size() % 3 != 0);
        }
    };
    Rng rng(19);
    for (int i = 0; i < 3000; ++i) {
        const Digraph g = oracle::random_digraph(rng, 2 + rng.below(6), 1, 4);
        if (oracle::strongly_connected(g)) check(g);
    }
    for (const Digraph& g : corpus::mixed(150, 19, 9)) check(g);
    CHECK(rings >= 150);
}

TEST_CASE("ring is unique up to rotation whatever the root") {
    for (const Digraph& g : corpus::mixed(120, 5, 16)) {
        const auto base = std::get<LRing>(compute_lring(g, 3));
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            const auto other = std::get<LRing>(compute_lring_from(g, 3, static_cast<Vertex>(v)));
            CHECK(other == base);
            CHECK(same_up_to_rotation(other, base));
        }
    }
}

TEST_CASE("pinched digraphs are 3-cyclic") {
    int pinched = 0;
    for (const Digraph& g : corpus::pinched(200, 9, 4, 7)) {
        if (const auto r = find_pinched_ring(g, 3)) {
            ++pinched;
            CHECK(oracle::all_cycles_length(g, 3));
        }
    }
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        const Digraph piece = random_pinched_piece(rng, 3 + rng.below(6));
        CHECK(find_pinched_ring(piece, 3).has_value());
        CHECK(oracle::all_cycles_length(piece, 3));
        ++pinched;
    }
    CHECK(pinched > 200);
}

TEST_CASE("is_valid_ring rejects broken rings") {
    const Digraph t3 = fixtures::t3();
    CHECK(is_valid_ring(t3, LRing{3, {{0}, {1}, {2}}}));
    CHECK_FALSE(is_valid_ring(t3, LRing{3, {{0}, {2}, {1}}}));
    CHECK_FALSE(is_valid_ring(t3, LRing{3, {{0}, {1}, {}}}));
    CHECK_FALSE(is_valid_ring(t3, LRing{3, {{0, 1}, {1}, {2}}}));
    CHECK_FALSE(is_valid_ring(t3, LRing{3, {{0}, {1}, {2, 3}}}));
}
