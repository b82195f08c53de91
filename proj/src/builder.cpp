#include "tricyclic/builder.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tricyclic/certificate.hpp"
#include "tricyclic/connectivity.hpp"
#include "tricyclic/decomposition.hpp"
#include "tricyclic/recognition.hpp"

namespace tricyclic {

std::size_t BuildScript::vertex_count() const {
    std::size_t n = 3;
    for (const auto& s : steps) n += s.additions.size();
    return n;
}

Digraph replay(const BuildScript& s) {
    const std::size_t n = s.vertex_count();
    auto in_range = [&](Vertex v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
    std::vector<bool> present(n, false);
    for (Vertex v : s.base) {
        if (!in_range(v) || present[v]) throw InvalidScript("base must be three distinct ids below the vertex count");
        present[v] = true;
    }
    std::vector<std::vector<Vertex>> out(n), in(n);
    std::vector<Arc> arcs;
    auto add_arc = [&](Vertex a, Vertex b) {
        out[a].push_back(b);
        in[b].push_back(a);
        arcs.push_back({a, b});
    };
    add_arc(s.base[0], s.base[1]);
    add_arc(s.base[1], s.base[2]);
    add_arc(s.base[2], s.base[0]);

    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        const BuildStep& step = s.steps[i];
        const Vertex v = step.pivot, u = step.neighbour;
        if (!in_range(v) || !present[v]) throw InvalidStep(i, "pivot is not yet present");
        if (out[v].size() != 1 || in[v].size() != 1) throw InvalidStep(i, "pivot does not have degree two");
        Arc arc;
        if (out[v][0] == u) arc = {v, u};
        else if (in[v][0] == u) arc = {u, v};
        else throw InvalidStep(i, "neighbour is not adjacent to the pivot");
        if (step.additions.empty()) throw InvalidStep(i, "step adds no vertices");
        for (Vertex w : step.additions) {
            if (!in_range(w)) throw InvalidScript("added vertex id is not below the vertex count");
            if (present[w]) throw InvalidStep(i, "added vertex is not new");
            present[w] = true;
            add_arc(arc.head, w);
            add_arc(w, arc.tail);
        }
    }
    if (!s.labels.empty() && s.labels.size() != n) throw InvalidScript("label count does not match the vertex count");
    return Digraph(n, std::move(arcs), s.labels);
}

PeripheralEdge find_peripheral_edge(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 4) throw TooSmall("a peripheral edge needs at least four vertices");
    const UnderlyingGraph ug(g);
    const auto tris = tricycles(g);
    if (tris.empty()) throw HypothesisViolated("digraph has no tricycle");

    std::array<Vertex, 3> best_t{};
    std::vector<Vertex> best_b;
    for (const auto& t : tris) {
        std::vector<bool> removed(n, false);
        for (Vertex x : t) removed[x] = true;
        for (auto& comp : components_without(ug, removed))
            if (comp.size() > best_b.size()) {
                best_b = std::move(comp);
                best_t = t;
            }
    }

    std::vector<bool> in_b(n, false);
    for (Vertex x : best_b) in_b[x] = true;
    std::vector<Vertex> silent;
    for (Vertex x : best_t) {
        auto nb = ug.neighbours(x);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return in_b[w]; })) silent.push_back(x);
    }
    if (silent.size() != 1)
        throw HypothesisViolated("a tricycle does not have exactly two vertices touching a component");

    PeripheralEdge pe;
    pe.t3 = silent[0];
    // In a -> b -> c -> a the arc between the two remaining vertices follows the cycle.
    int k = static_cast<int>(std::find(best_t.begin(), best_t.end(), pe.t3) - best_t.begin());
    pe.arc = {best_t[(k + 1) % 3], best_t[(k + 2) % 3]};

    std::vector<bool> removed(n, false);
    removed[pe.arc.tail] = removed[pe.arc.head] = true;
    auto comps = components_without(ug, removed);
    if (comps.size() < 2) throw HypothesisViolated("peripheral pair is not a cutset");
    for (auto& comp : comps) {
        if (comp.size() == 1) {
            pe.fan.push_back(comp[0]);
        } else {
            if (!pe.remainder.empty()) throw HypothesisViolated("more than one non-singleton component at the peripheral pair");
            pe.remainder = std::move(comp);
        }
    }
    if (best_b.size() > 1 && pe.remainder != best_b)
        throw HypothesisViolated("maximal component is not a component at the peripheral pair");
    for (Vertex x : pe.fan)
        if (g.out_degree(x) != 1 || g.in_degree(x) != 1 || !g.has_arc(pe.arc.head, x) || !g.has_arc(x, pe.arc.tail))
            throw HypothesisViolated("fan vertex does not complete a tricycle with the peripheral arc");
    return pe;
}

namespace {

BuildScript peel(const Digraph& g) {
    if (!is_unbreakable(g)) throw HypothesisViolated("piece is not unbreakable");
    const std::size_t n = g.vertex_count();
    if (n == 3) {
        if (g.arc_count() != 3) throw HypothesisViolated("three-vertex piece is not a tricycle");
        BuildScript s;
        s.base = {0, g.out(0)[0], g.in(0)[0]};
        return s;
    }
    const PeripheralEdge pe = find_peripheral_edge(g);
    const Vertex tail = pe.arc.tail, head = pe.arc.head;
    if (pe.remainder.empty()) {
        if (pe.fan.size() + 2 != n) throw HypothesisViolated("fan does not cover the digraph");
        BuildScript s;
        s.base = {tail, head, pe.fan[0]};
        if (pe.fan.size() > 1) s.steps.push_back({tail, head, {pe.fan.begin() + 1, pe.fan.end()}});
        return s;
    }

    std::vector<Vertex> kept = pe.remainder;
    kept.push_back(tail);
    kept.push_back(head);
    std::sort(kept.begin(), kept.end());
    const Digraph h = g.induced(kept);
    BuildScript s = peel(h);
    for (Vertex& v : s.base) v = kept[v];
    for (auto& step : s.steps) {
        step.pivot = kept[step.pivot];
        step.neighbour = kept[step.neighbour];
        for (Vertex& w : step.additions) w = kept[w];
    }
    auto degree_two_in_h = [&](Vertex v) {
        const Vertex local = static_cast<Vertex>(std::lower_bound(kept.begin(), kept.end(), v) - kept.begin());
        return h.out_degree(local) == 1 && h.in_degree(local) == 1;
    };
    Vertex pivot, neighbour;
    if (degree_two_in_h(tail)) pivot = tail, neighbour = head;
    else if (degree_two_in_h(head)) pivot = head, neighbour = tail;
    else throw HypothesisViolated("neither end of the peripheral arc has degree two after peeling");
    s.steps.push_back({pivot, neighbour, pe.fan});
    return s;
}

}  // namespace

BuildScript extract_build_script(const Digraph& g) {
    if (!is_unbreakable(g)) throw HypothesisViolated("digraph is not unbreakable");
    if (!is_positive(recognize_three_cyclic(g))) throw HypothesisViolated("digraph is not 3-cyclic");
    BuildScript s;
    try {
        s = peel(g);
    } catch (const TooSmall& e) {
        throw HypothesisViolated(e.what());
    }
    if (g.has_labels()) s.labels = g.resolved_labels();
    Digraph built;
    try {
        built = replay(s);
    } catch (const Error& e) {
        throw HypothesisViolated(std::string("peeled script does not replay: ") + e.what());
    }
    if (!(built == g)) throw HypothesisViolated("peeled script does not rebuild the digraph");
    return s;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Rejection sampling keeps the result exactly uniform.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
}

BuildScript random_build_script(std::uint64_t seed, std::size_t n) {
    if (n < 3) throw std::invalid_argument("safely buildable digraphs have at least three vertices");
    Rng rng(seed);
    BuildScript s;
    s.base = {0, 1, 2};
    std::vector<std::vector<Vertex>> out(n), in(n);
    auto add_arc = [&](Vertex a, Vertex b) {
        out[a].push_back(b);
        in[b].push_back(a);
    };
    add_arc(0, 1);
    add_arc(1, 2);
    add_arc(2, 0);
    Vertex next = 3;
    while (static_cast<std::size_t>(next) < n) {
        std::vector<Vertex> pivots;
        for (Vertex v = 0; v < next; ++v)
            if (out[v].size() == 1 && in[v].size() == 1) pivots.push_back(v);
        const Vertex pivot = pivots[rng.below(pivots.size())];
        const Vertex lo = std::min(out[pivot][0], in[pivot][0]), hi = std::max(out[pivot][0], in[pivot][0]);
        const Vertex neighbour = rng.below(2) == 0 ? lo : hi;
        const Arc arc = out[pivot][0] == neighbour ? Arc{pivot, neighbour} : Arc{neighbour, pivot};
        std::size_t k = 1;
        const std::size_t remaining = n - static_cast<std::size_t>(next);
        while (k < remaining && rng.chance(1, 3)) ++k;
        BuildStep step{pivot, neighbour, {}};
        for (std::size_t i = 0; i < k; ++i) {
            const Vertex w = next++;
            step.additions.push_back(w);
            add_arc(arc.head, w);
            add_arc(w, arc.tail);
        }
        s.steps.push_back(std::move(step));
    }
    return s;
}

Digraph random_safely_buildable(std::uint64_t seed, std::size_t n) { return replay(random_build_script(seed, n)); }

Digraph random_pinched_piece(Rng& rng, std::size_t size) {
    if (size < 3) throw std::invalid_argument("a pinched piece has at least three vertices");
    const std::size_t a2 = 1 + rng.below(size - 2);
    const std::size_t a3 = size - 1 - a2;
    std::vector<Arc> arcs;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < a2; ++i) {
        const Vertex a = static_cast<Vertex>(1 + i);
        arcs.push_back({0, a});
        for (std::size_t j = 0; j < a3; ++j) pairs.emplace_back(a, static_cast<Vertex>(1 + a2 + j));
    }
    for (std::size_t j = 0; j < a3; ++j) arcs.push_back({static_cast<Vertex>(1 + a2 + j), 0});
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);

    // Take pairs in shuffled order while they join two bipartite components, then sprinkle
    // a few of the rest so the piece is not always a tree between A2 and A3.
    std::vector<Vertex> root(size);
    std::iota(root.begin(), root.end(), 0);
    std::function<Vertex(Vertex)> find = [&](Vertex x) { return root[x] == x ? x : root[x] = find(root[x]); };
    std::size_t joins = 0;
    std::vector<bool> taken(pairs.size(), false);
    for (std::size_t i = 0; i < pairs.size() && joins + 2 < size; ++i) {
        Vertex ra = find(pairs[i].first), rb = find(pairs[i].second);
        if (ra == rb) continue;
        root[ra] = rb;
        ++joins;
        taken[i] = true;
    }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (taken[i] || rng.chance(1, 4)) arcs.push_back({pairs[i].first, pairs[i].second});
    return Digraph(size, std::move(arcs));
}

Digraph random_pinched_sum(std::uint64_t seed, std::size_t pieces, std::size_t piece_size) {
    if (pieces < 1) throw std::invalid_argument("at least one piece is needed");
    Rng rng(seed);
    Digraph g = random_pinched_piece(rng, piece_size);
    auto special_arcs = [](const Digraph& d) {
        std::vector<Arc> out;
        for (const Arc& a : d.arcs())
            if (is_special_edge(d, a)) out.push_back(a);
        return out;
    };
    for (std::size_t i = 1; i < pieces; ++i) {
        const Digraph piece = random_pinched_piece(rng, piece_size);
        const auto left = special_arcs(g);
        const auto right = special_arcs(piece);
        const Arc a = left[rng.below(left.size())];
        const Arc b = right[rng.below(right.size())];
        g = special_edge_sum(g, a, piece, b);
    }
    return g;
}

}  // namespace tricyclic
