#include <doctest.h>

#include <algorithm>
#include <map>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tricyclic/builder.hpp"
#include "tricyclic/fixtures.hpp"
#include "tricyclic/recognition.hpp"
#include "util.hpp"

using namespace tricyclic;
using testutil::arc;
using testutil::id;
using testutil::labels;

namespace {

// Additions per unordered pivot/neighbour pair; steps on the same pair merged.
std::map<std::pair<Vertex, Vertex>, std::size_t> fan_sizes(const BuildScript& s) {
    std::map<std::pair<Vertex, Vertex>, std::size_t> out;
    for (const BuildStep& st : s.steps)
        out[{std::min(st.pivot, st.neighbour), std::max(st.pivot, st.neighbour)}] += st.additions.size();
    return out;
}

// Each arc lies on the tricycle that created it plus one per vertex later added on it.
std::map<std::pair<Vertex, Vertex>, std::size_t> expected_fan_sizes(const Digraph& g) {
    std::map<std::pair<Vertex, Vertex>, std::size_t> out;
    for (const Arc& a : g.arcs()) {
        std::size_t through = 0;
        for (Vertex w : g.out(a.head))
            if (g.has_arc(w, a.tail)) ++through;
        if (through > 1) out[{std::min(a.tail, a.head), std::max(a.tail, a.head)}] = through - 1;
    }
    return out;
}

}  // namespace

TEST_CASE("replay examples") {
    BuildScript base;
    base.base = {0, 1, 2};
    base.labels = {"1", "2", "3"};
    CHECK(replay(base) == fixtures::t3());

    BuildScript fan = base;
    fan.labels = {"x", "y", "w1", "w2"};
    fan.steps.push_back({0, 1, {3}});
    CHECK(replay(fan) == fixtures::fan(2));

    BuildScript wide;
    wide.base = {0, 1, 2};
    wide.steps.push_back({0, 1, {3, 4, 5}});
    const Digraph w = replay(wide);
    CHECK(w.vertex_count() == 6);
    CHECK(tricycles(w).size() == 4);
    for (const auto& t : tricycles(w)) CHECK(std::find(t.begin(), t.end(), 0) != t.end());
}

TEST_CASE("replay rejects bad scripts") {
    BuildScript dup;
    dup.base = {0, 1, 1};
    CHECK_THROWS_AS(replay(dup), InvalidScript);

    BuildScript gap;
    gap.base = {0, 1, 2};
    gap.steps.push_back({0, 1, {4}});
    CHECK_THROWS_AS(replay(gap), InvalidScript);

    BuildScript busy;
    busy.base = {0, 1, 2};
    busy.steps.push_back({0, 1, {3}});
    busy.steps.push_back({1, 2, {4}});
    try {
        replay(busy);
        FAIL("expected InvalidStep");
    } catch (const InvalidStep& e) {
        CHECK(e.index() == 1);
    }

    BuildScript far;
    far.base = {0, 1, 2};
    far.steps.push_back({0, 1, {3}});
    far.steps.push_back({3, 2, {4}});
    CHECK_THROWS_AS(replay(far), InvalidStep);

    BuildScript empty_step;
    empty_step.base = {0, 1, 2};
    empty_step.steps.push_back({0, 1, {}});
    CHECK_THROWS_AS(replay(empty_step), Error);
}

TEST_CASE("find_peripheral_edge examples") {
    const Digraph fan = fixtures::fan(2);
    const PeripheralEdge p = find_peripheral_edge(fan);
    CHECK(p.arc == arc(fan, "x", "y"));
    CHECK(p.remainder.empty());
    CHECK(labels(fan, p.fan) == std::vector<std::string>{"w1", "w2"});
    CHECK(std::find(p.fan.begin(), p.fan.end(), p.t3) != p.fan.end());

    // The largest component outside a tricycle is {w1, w1', w2'}, left by removing x, y, w2.
    const Digraph glue = fixtures::glue6();
    const PeripheralEdge q = find_peripheral_edge(glue);
    CHECK(q.arc == arc(glue, "x", "y"));
    CHECK(glue.label(q.t3) == "w2");
    CHECK(labels(glue, q.fan) == std::vector<std::string>{"w2"});
    auto rem = labels(glue, q.remainder);
    std::sort(rem.begin(), rem.end());
    CHECK(rem == std::vector<std::string>{"w1", "w1'", "w2'"});

    CHECK_THROWS_AS(find_peripheral_edge(fixtures::t3()), TooSmall);
}

TEST_CASE("peripheral edges on the corpus") {
    for (const Digraph& g : corpus::safe(150, 73, 4, 30)) {
        const PeripheralEdge p = find_peripheral_edge(g);
        CHECK(g.has_arc(p.arc));
        CHECK((g.has_arc(p.arc.head, p.t3) && g.has_arc(p.t3, p.arc.tail)));
        std::vector<bool> alive(g.vertex_count(), true);
        alive[p.arc.tail] = alive[p.arc.head] = false;
        const auto comps = oracle::undirected_components(g, alive);
        std::size_t big = 0;
        for (const auto& c : comps)
            if (c.size() > 1) ++big;
        CHECK(big <= 1);
        CHECK(p.fan.size() + p.remainder.size() + 2 == g.vertex_count());
        for (Vertex x : p.fan) CHECK((g.out_degree(x) == 1 && g.in_degree(x) == 1));
    }
}

TEST_CASE("extract_build_script examples") {
    const BuildScript t3 = extract_build_script(fixtures::t3());
    CHECK(t3.steps.empty());
    CHECK(replay(t3) == fixtures::t3());

    const Digraph fan = fixtures::fan(2);
    const BuildScript f = extract_build_script(fan);
    REQUIRE(f.steps.size() == 1);
    CHECK(f.steps[0].additions.size() == 1);
    CHECK(replay(f) == fan);

    const Digraph glue = fixtures::glue6();
    const BuildScript g = extract_build_script(glue);
    CHECK(g.steps.size() == 2);
    CHECK(replay(g) == glue);

    CHECK_THROWS_AS(extract_build_script(fixtures::w4()), HypothesisViolated);
    CHECK_THROWS_AS(extract_build_script(fixtures::c6()), HypothesisViolated);
}

TEST_CASE("random_safely_buildable examples") {
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        CHECK(oracle::canonical_code(random_safely_buildable(seed, 3)) == oracle::canonical_code(fixtures::t3()));
    const Digraph g = random_safely_buildable(1, 10);
    CHECK(g.vertex_count() == 10);
    CHECK(g.arc_count() == 17);
    CHECK(g == random_safely_buildable(1, 10));
    CHECK(random_build_script(1, 10) == random_build_script(1, 10));
    CHECK_FALSE(random_safely_buildable(1, 12) == random_safely_buildable(2, 12));
}

TEST_CASE("replayed scripts are unbreakable, 3-cyclic and diwheel-free") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 3 + seed % 12;
        const BuildScript s = random_build_script(seed, n);
        const Digraph g = replay(s);
        CHECK(g.vertex_count() == n);
        CHECK(g.arc_count() == 2 * n - 3);
        CHECK(oracle::unbreakable(g));
        CHECK(oracle::all_cycles_length(g, 3));
        CHECK_FALSE(oracle::has_diwheel(g));
    }
}

TEST_CASE("extracting and replaying round trips, fan sizes agree") {
    for (std::uint64_t seed = 100; seed < 400; ++seed) {
        const BuildScript s = random_build_script(seed, 4 + seed % 30);
        const Digraph g = replay(s);
        const BuildScript e = extract_build_script(g);
        CHECK(serialize_edge_list(replay(e)) == serialize_edge_list(g));
        CHECK(fan_sizes(s) == expected_fan_sizes(g));
        CHECK(fan_sizes(e) == expected_fan_sizes(g));
    }
}

TEST_CASE("random_pinched_sum output is 3-cyclic") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Digraph g = random_pinched_sum(seed, 1 + seed % 5, 3 + seed % 6);
        CHECK(oracle::all_cycles_length(g, 3));
        CHECK(oracle::unbreakable(g));
        const auto r = diwheel_free_report(g);
        CHECK(r.agree());
        CHECK(r.no_diwheel == !oracle::has_diwheel(g));
    }
    CHECK(random_pinched_sum(3, 3, 5) == random_pinched_sum(3, 3, 5));
    Rng rng(1);
    const Digraph piece = random_pinched_piece(rng, 4);
    CHECK(piece.vertex_count() == 4);
    CHECK(oracle::canonical_code(random_pinched_sum(1, 1, 3)) == oracle::canonical_code(fixtures::t3()));
}
