#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tricyclic/fixtures.hpp"
#include "tricyclic/oracle.hpp"
#include "tricyclic/weighting.hpp"
#include "util.hpp"

using namespace tricyclic;
using testutil::arc;
using testutil::id;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

// Independent cycle-sum check straight off the backtracking enumeration.
bool sums_to_one(const Digraph& g, const Weighting& w) {
    for (const Cycle& c : oracle::cycles(g)) {
        Rational s = 0;
        for (std::size_t i = 0; i < c.size(); ++i) s += w.at({c[i], c[(i + 1) % c.size()]});
        if (s != 1) return false;
    }
    return true;
}

std::vector<long long> incidence(const Digraph& g, const Cycle& c) {
    std::vector<long long> row(g.arc_count(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) row[g.arc_index({c[i], c[(i + 1) % c.size()]})] = 1;
    return row;
}

Digraph dc3_with_pendant() {
    return parse_edge_list("v1 v2\nv2 v1\nv2 v3\nv3 v2\nv3 v1\nv1 v3\nv1 p\np q\nq v1\n");
}

}  // namespace

TEST_CASE("Weighting container") {
    const Digraph t3 = fixtures::t3();
    Weighting w = Weighting::constant(t3, q(1, 3));
    CHECK(w.values.size() == 3);
    CHECK(w.at(arc(t3, "1", "2")) == q(1, 3));
    CHECK(w.find(arc(t3, "2", "1")) == nullptr);
    CHECK_THROWS_AS(w.at(arc(t3, "2", "1")), NotAWeighting);
    CHECK_FALSE(w.is_integral());
    CHECK(Weighting::from_vector(t3, {q(1), q(0), q(0)}).is_zero_one());
    CHECK_FALSE(Weighting::from_vector(t3, {q(2), q(0), q(-1)}).is_zero_one());
    CHECK_THROWS_AS(w.aligned(fixtures::c6()), NotAWeighting);
}

TEST_CASE("cycle_basis examples") {
    const Digraph t3 = fixtures::t3();
    const CycleBasis bt = cycle_basis(t3);
    REQUIRE(bt.size() == 1);
    CHECK(bt.cycles[0].cycle.size() == 3);

    const Digraph w4 = fixtures::w4();
    const CycleBasis bw = cycle_basis(w4);
    CHECK(bw.size() == 4);
    for (const auto& c : bw.cycles) {
        CHECK(c.cycle.size() == 3);
        CHECK(std::find(c.cycle.begin(), c.cycle.end(), id(w4, "h")) != c.cycle.end());
    }

    const CycleBasis bc = cycle_basis(fixtures::c6());
    REQUIRE(bc.size() == 1);
    CHECK(bc.cycles[0].cycle.size() == 6);

    CHECK_THROWS_AS(cycle_basis(parse_edge_list("1 2\n2 3\n")), NotStronglyConnected);
    CHECK_THROWS_AS(cycle_basis(t3, {arc(t3, "1", "2")}), NotStronglyConnected);
    CHECK_THROWS_AS(cycle_basis(t3, {arc(t3, "2", "1")}), ArcNotPresent);
}

TEST_CASE("cycle bases are independent, spanning, and isolate marked arcs") {
    Rng rng(90);
    std::vector<Digraph> graphs = corpus::mixed(60, 91, 12);
    for (int i = 0; i < 4000 && graphs.size() < 200; ++i) {
        const Digraph g = oracle::random_digraph(rng, 2 + rng.below(5), 1, 2);
        if (oracle::strongly_connected(g)) graphs.push_back(g);
    }
    std::size_t marked_runs = 0;
    for (const Digraph& g : graphs) {
        const CycleBasis b = cycle_basis(g);
        CHECK(b.size() == g.arc_count() - g.vertex_count() + 1);
        std::vector<std::vector<long long>> rows;
        for (const auto& c : b.cycles) {
            CHECK(is_directed_cycle(g, c.cycle));
            rows.push_back(incidence(g, c.cycle));
        }
        CHECK(oracle::rational_rank(rows) == b.size());
        if (g.vertex_count() <= 6) {
            auto all = rows;
            for (const Cycle& c : oracle::cycles(g)) all.push_back(incidence(g, c));
            CHECK(oracle::rational_rank(all) == b.size());
        }

        // Mark every arc whose removal keeps the rest strongly connected, one at a time.
        for (const Arc& a : g.arcs()) {
            std::vector<bool> keep(g.arc_count(), true);
            keep[g.arc_index(a)] = false;
            if (!oracle::strongly_connected(g.filter_arcs(keep))) continue;
            const CycleBasis m = cycle_basis(g, {a});
            CHECK(m.size() == b.size());
            std::size_t containing = 0;
            for (const auto& c : m.cycles) {
                const auto row = incidence(g, c.cycle);
                if (row[g.arc_index(a)]) ++containing;
            }
            CHECK(containing == 1);
            ++marked_runs;
        }
    }
    CHECK(marked_runs > 100);
}

TEST_CASE("solve_weighting examples") {
    const Digraph c6 = fixtures::c6();
    const auto w = solve_weighting(c6);
    REQUIRE(w);
    CHECK(verify_weighting(c6, *w));
    CHECK(sums_to_one(c6, *w));

    CHECK_FALSE(solve_weighting(fixtures::double_cycle(3)));

    const Digraph glue = fixtures::glue6();
    const auto wg = solve_weighting(glue);
    REQUIRE(wg);
    CHECK(sums_to_one(glue, *wg));
    CHECK(verify_weighting(glue, Weighting::constant(glue, q(1, 3))));

    CHECK_THROWS_AS(solve_weighting(fixtures::complete(6), 100), CycleBudgetExceeded);
}

TEST_CASE("verify_weighting examples") {
    const Digraph t3 = fixtures::t3();
    CHECK(verify_weighting(t3, Weighting::constant(t3, q(1, 3))));
    const WeightCheck zero = verify_weighting(t3, Weighting::constant(t3, q(0)));
    CHECK_FALSE(zero);
    REQUIRE(zero.violation);
    CHECK(zero.violation->size() == 3);
    CHECK(zero.violation_sum == 0);

    const Digraph dc3 = fixtures::double_cycle(3);
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        std::vector<Rational> v;
        for (std::size_t k = 0; k < dc3.arc_count(); ++k) v.push_back(q(static_cast<long>(rng.below(7)) - 3, 2));
        const WeightCheck c = verify_weighting(dc3, Weighting::from_vector(dc3, v));
        CHECK_FALSE(c);
        CHECK(c.violation.has_value());
    }
    CHECK_FALSE(verify_weighting(dc3, Weighting::constant(dc3, q(1, 2))));
    CHECK_THROWS_AS(verify_weighting(dc3, Weighting::constant(t3, q(1, 3))), NotAWeighting);
}

TEST_CASE("3-cyclic digraphs accept the constant one third") {
    for (const Digraph& g : corpus::mixed(100, 14, 16)) {
        CHECK(verify_weighting(g, Weighting::constant(g, q(1, 3))));
        CHECK(solve_weighting(g).has_value());
    }
}

TEST_CASE("shift_potential examples and invariance") {
    const Digraph t3 = fixtures::t3();
    const Weighting s = shift_potential(Weighting::constant(t3, q(1, 3)), id(t3, "2"), q(1, 3));
    CHECK(s.at(arc(t3, "1", "2")) == 0);
    CHECK(s.at(arc(t3, "2", "3")) == q(2, 3));
    CHECK(s.at(arc(t3, "3", "1")) == q(1, 3));
    CHECK(verify_weighting(t3, s));
    CHECK(shift_potential(s, 0, q(0)) == s);

    Rng rng(12);
    std::size_t valid = 0;
    for (int i = 0; i < 1000; ++i) {
        const Digraph g = oracle::random_digraph(rng, 2 + rng.below(5), 1, 2);
        if (g.arc_count() == 0) continue;
        Weighting w;
        if (rng.chance(1, 2)) {
            const auto solved = solve_weighting(g);
            w = solved ? *solved : Weighting::constant(g, q(1, 3));
        } else {
            std::vector<Rational> v;
            for (std::size_t k = 0; k < g.arc_count(); ++k) v.push_back(q(static_cast<long>(rng.below(5)) - 2, 3));
            w = Weighting::from_vector(g, v);
        }
        const Vertex v = static_cast<Vertex>(rng.below(g.vertex_count()));
        const Rational delta = q(static_cast<long>(rng.below(11)) - 5, 1 + static_cast<long>(rng.below(4)));
        const bool before = verify_weighting(g, w).valid;
        const Weighting shifted = shift_potential(w, v, delta);
        CHECK(verify_weighting(g, shifted).valid == before);
        CHECK(sums_to_one(g, shifted) == before);
        if (before) ++valid;
    }
    CHECK(valid > 100);
}

TEST_CASE("integerize examples") {
    const Digraph c6 = fixtures::c6();
    const Weighting ic = integerize(c6, Weighting::constant(c6, q(1, 6)));
    CHECK(ic.is_integral());
    CHECK(verify_weighting(c6, ic));

    const Digraph t3 = fixtures::t3();
    const Weighting it = integerize(t3, Weighting::constant(t3, q(1, 3)));
    std::vector<Rational> v = it.aligned(t3);
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<Rational>{q(0), q(0), q(1)});

    const Weighting one = Weighting::from_vector(t3, {q(1), q(0), q(0)});
    CHECK(integerize(t3, one) == one);

    CHECK_THROWS_AS(integerize(t3, Weighting::constant(t3, q(1, 2))), NotAWeighting);
}

TEST_CASE("to_zero_one examples") {
    const Digraph c6 = fixtures::c6();
    const Weighting in = Weighting::from_vector(c6, {q(2), q(0), q(0), q(0), q(-1), q(0)});
    CHECK(verify_weighting(c6, in));
    const Weighting out = to_zero_one(c6, in);
    CHECK(out == Weighting::from_vector(c6, {q(1), q(0), q(0), q(0), q(0), q(0)}));

    const Digraph t3 = fixtures::t3();
    const Weighting one = Weighting::from_vector(t3, {q(1), q(0), q(0)});
    CHECK(to_zero_one(t3, one) == one);

    const Digraph w4 = fixtures::w4();
    const Weighting zw = to_zero_one(w4, integerize(w4, *solve_weighting(w4)));
    CHECK(zw.is_zero_one());
    CHECK(verify_weighting(w4, zw));
    CHECK(sums_to_one(w4, zw));

    CHECK_THROWS_AS(to_zero_one(t3, Weighting::constant(t3, q(1, 3))), NotAWeighting);
    CHECK_THROWS_AS(to_zero_one(t3, Weighting::from_vector(t3, {q(1), q(1), q(0)})), NotAWeighting);
    const Digraph tail = parse_edge_list("1 2\n2 3\n3 1\n3 4\n");
    try {
        to_zero_one(tail, Weighting::from_vector(tail, {q(1), q(0), q(0), q(5)}));
        FAIL("expected NonCycleArc");
    } catch (const NonCycleArc& e) {
        CHECK(e.arcs() == std::vector<Arc>{arc(tail, "3", "4")});
    }
}

TEST_CASE("pipeline on every weightable digraph with at most three vertices and random ones") {
    auto run = [](const Digraph& g) {
        const auto real = solve_weighting(g);
        CHECK(real.has_value() == oracle_is_weightable(g));
        if (!real) return false;
        CHECK(sums_to_one(g, *real));
        const Weighting integral = integerize(g, *real);
        CHECK(integral.is_integral());
        CHECK(sums_to_one(g, integral));
        const auto z = zero_one_weighting(g);
        REQUIRE(z);
        CHECK(z->is_zero_one());
        CHECK(sums_to_one(g, *z));
        return true;
    };
    std::size_t weightable = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::uint64_t m = 0; m < corpus::labelled_count(n); ++m)
            if (run(oracle::from_mask(n, m))) ++weightable;
    CHECK(weightable > 40);
    Rng rng(66);
    for (int i = 0; i < 150; ++i) run(oracle::random_digraph(rng, 4 + rng.below(3), 1, 3));
}

TEST_CASE("find_weak_double_cycle examples") {
    CHECK_FALSE(find_weak_double_cycle(fixtures::t3()));
    CHECK_FALSE(find_weak_double_cycle(fixtures::double_cycle(2)));
    CHECK(solve_weighting(fixtures::double_cycle(2)).has_value());

    for (int k = 3; k <= 6; ++k) {
        const Digraph dc = fixtures::double_cycle(k);
        CHECK_FALSE(solve_weighting(dc));
        const auto d = find_weak_double_cycle(dc);
        REQUIRE(d);
        CHECK(d->k == static_cast<std::size_t>(k));
        CHECK(d->arcs == oracle::arc_set(dc));
        CHECK(check_weak_double_cycle(dc, *d).empty());
    }

    const Digraph p = dc3_with_pendant();
    const auto d = find_weak_double_cycle(p);
    REQUIRE(d);
    CHECK(d->k == 3);
    std::vector<Arc> expected;
    for (const Arc& a : p.arcs())
        if (p.label(a.tail)[0] == 'v' && p.label(a.head)[0] == 'v') expected.push_back(a);
    CHECK(d->arcs == expected);
    CHECK(check_weak_double_cycle(p, *d).empty());
}

TEST_CASE("weak double-cycle validator") {
    const Digraph dc4 = fixtures::double_cycle(4);
    const auto d = *match_weak_double_cycle(dc4);
    CHECK(check_weak_double_cycle(dc4, d).empty());
    auto fewer = d;
    fewer.arcs.pop_back();
    CHECK_FALSE(check_weak_double_cycle(dc4, fewer).empty());
    auto swapped = d;
    std::swap(swapped.cycles[0], swapped.cycles[1]);
    CHECK_FALSE(check_weak_double_cycle(dc4, swapped).empty());
    auto two = d;
    two.k = 2;
    two.cycles.resize(2);
    two.shared.resize(2);
    CHECK_FALSE(check_weak_double_cycle(dc4, two).empty());

    CHECK_FALSE(match_weak_double_cycle(fixtures::double_cycle(2)));
    CHECK_FALSE(match_weak_double_cycle(fixtures::w4()));
    CHECK(match_weak_double_cycle(fixtures::double_cycle(5)));
}

TEST_CASE("feasibility equals absence of a weak double-cycle on random digraphs") {
    Rng rng(123);
    std::size_t infeasible = 0;
    for (int i = 0; i < 400; ++i) {
        const Digraph g = oracle::random_digraph(rng, 3 + rng.below(4), 1, 2 + rng.below(3));
        const bool feasible = solve_weighting(g).has_value();
        CHECK(feasible == oracle_is_weightable(g));
        const auto d = find_weak_double_cycle(g);
        CHECK(feasible == !d.has_value());
        if (d) {
            ++infeasible;
            CHECK(d->k >= 3);
            CHECK(check_weak_double_cycle(g, *d).empty());
            CHECK_FALSE(oracle_is_weightable(Digraph(g.vertex_count(), d->arcs)));
        }
    }
    CHECK(infeasible > 30);
}
