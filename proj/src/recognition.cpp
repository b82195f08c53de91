#include "tricyclic/recognition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tricyclic/builder.hpp"
#include "tricyclic/connectivity.hpp"
#include "tricyclic/decomposition.hpp"
#include "tricyclic/rings.hpp"

namespace tricyclic {

namespace {

std::vector<Vertex> map_all(const std::vector<Vertex>& map, std::span<const Vertex> xs) {
    std::vector<Vertex> out;
    out.reserve(xs.size());
    for (Vertex x : xs) out.push_back(map[x]);
    return out;
}

// Turns a failing block into a certificate in g's ids, consulting the oracle on the piece.
Certificate reject_block(const BlockFailure& f, const std::vector<Vertex>& block_to_g, std::size_t max_cycles) {
    if (f.kind == BlockFailure::Kind::NotRingable)
        return certificate::NotRingable{canonical_cycle(map_all(block_to_g, f.cycle))};
    auto verdict = oracle_is_l_cyclic(f.piece, 3, max_cycles);
    std::vector<Vertex> piece_to_g = map_all(block_to_g, f.map);
    if (verdict.witness) {
        Cycle c = canonical_cycle(map_all(piece_to_g, *verdict.witness));
        if (c.size() == 2) return certificate::TwoCycle{std::min(c[0], c[1]), std::max(c[0], c[1])};
        return certificate::LongCycle{std::move(c)};
    }
    return certificate::NoValidSplit{std::move(piece_to_g), std::string(to_string(f.kind)) + ": " + f.reason};
}

}  // namespace

Certificate recognize_three_cyclic(const Digraph& g, std::size_t max_cycles) {
    certificate::ThreeCyclic accepted;
    for (const auto& comp : strong_components(g)) {
        if (comp.size() < 2) continue;
        const Digraph sub = g.induced(comp);
        for (const Arc& a : sub.arcs())
            if (a.tail < a.head && sub.has_arc(a.head, a.tail)) return certificate::TwoCycle{comp[a.tail], comp[a.head]};
        for (const auto& block : blocks(underlying(sub))) {
            std::vector<Vertex> in_g = map_all(comp, block);
            const Digraph piece = sub.induced(block);
            auto result = try_decompose(piece);
            if (auto* failure = std::get_if<BlockFailure>(&result)) return reject_block(*failure, in_g, max_cycles);
            accepted.blocks.push_back({std::move(in_g), std::move(std::get<DecompositionTree>(result))});
        }
    }
    std::sort(accepted.blocks.begin(), accepted.blocks.end(),
              [](const auto& a, const auto& b) { return a.vertices < b.vertices; });
    return accepted;
}

DecompositionTree decompose(const Digraph& g) {
    auto result = try_decompose(g);
    if (auto* tree = std::get_if<DecompositionTree>(&result)) return std::move(*tree);
    std::vector<Vertex> identity(g.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    throw NotThreeCyclic(reject_block(std::get<BlockFailure>(result), identity, kDefaultMaxCycles));
}

std::optional<certificate::Diwheel> find_diwheel(const Digraph& g) {
    for (Vertex hub = 0; static_cast<std::size_t>(hub) < g.vertex_count(); ++hub) {
        // Partner graph: out-neighbour copies first, then in-neighbour copies.
        std::vector<Vertex> id(g.out(hub).begin(), g.out(hub).end());
        const std::size_t outs = id.size();
        id.insert(id.end(), g.in(hub).begin(), g.in(hub).end());
        const std::size_t nodes = id.size();
        std::vector<std::vector<std::size_t>> adj(nodes);
        std::size_t edges = 0;
        for (std::size_t i = 0; i < outs; ++i)
            for (std::size_t j = outs; j < nodes; ++j)
                if (id[i] != id[j] && g.has_arc(id[i], id[j])) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                    ++edges;
                }
        std::vector<std::size_t> comp(nodes, nodes);
        std::size_t comps = 0;
        for (std::size_t s = 0; s < nodes; ++s) {
            if (comp[s] != nodes) continue;
            std::vector<std::size_t> stack{s};
            comp[s] = comps;
            while (!stack.empty()) {
                std::size_t x = stack.back();
                stack.pop_back();
                for (std::size_t y : adj[x])
                    if (comp[y] == nodes) {
                        comp[y] = comps;
                        stack.push_back(y);
                    }
            }
            ++comps;
        }
        if (edges + comps <= nodes) continue;  // forest: no cycle at all

        // Nodes by (vertex, copy) so each cycle is found from its smallest vertex.
        std::vector<std::size_t> order(nodes);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return id[a] < id[b]; });
        std::vector<bool> used(g.vertex_count(), false);
        std::vector<std::size_t> path;
        std::function<bool(std::size_t, std::size_t, Vertex)> extend = [&](std::size_t x, std::size_t len,
                                                                           Vertex floor) -> bool {
            if (path.size() == len) {
                return std::find(adj[x].begin(), adj[x].end(), path.front()) != adj[x].end();
            }
            for (std::size_t y : adj[x]) {
                if (id[y] <= floor || used[id[y]]) continue;
                used[id[y]] = true;
                path.push_back(y);
                if (extend(y, len, floor)) return true;
                path.pop_back();
                used[id[y]] = false;
            }
            return false;
        };
        const std::size_t max_len = 2 * std::min(outs, nodes - outs);
        for (std::size_t len = 4; len <= max_len; len += 2) {
            for (std::size_t s : order) {
                path.assign(1, s);
                std::fill(used.begin(), used.end(), false);
                used[id[s]] = true;
                if (!extend(s, len, id[s])) continue;
                std::vector<Vertex> rim;
                for (std::size_t x : path) rim.push_back(id[x]);
                if (rim[1] > rim.back()) std::reverse(rim.begin() + 1, rim.end());
                return certificate::Diwheel{hub, std::move(rim)};
            }
        }
    }
    return std::nullopt;
}

const Digraph& brancher_pattern(int variant) {
    static const std::array<Digraph, 4> patterns = [] {
        const std::vector<std::string> labels{"x", "y", "a1", "a2", "a3", "b1", "b2", "b3"};
        enum { x, y, a1, a2, a3, b1, b2, b3 };
        std::vector<Arc> first{{x, y}};
        for (int i = 0; i < 3; ++i) {
            const Vertex a = a1 + i, b = b1 + i;
            first.insert(first.end(), {{a, x}, {y, a}, {a, b}, {b, y}});
        }
        std::vector<Arc> second{{x, y}};
        for (int i = 0; i < 2; ++i) {
            const Vertex a = a1 + i, b = b1 + i;
            second.insert(second.end(), {{a, x}, {y, a}, {a, b}, {b, y}});
        }
        second.insert(second.end(), {{a3, x}, {y, a3}, {x, b3}, {b3, a3}});
        Digraph d1(8, first, labels), d2(8, second, labels);
        return std::array<Digraph, 4>{d1, d2, d1.reversed(), d2.reversed()};
    }();
    if (variant < 1 || variant > 4) throw std::invalid_argument("brancher variant must be 1..4");
    return patterns[variant - 1];
}

std::optional<certificate::Brancher> find_brancher(const Digraph& g) {
    if (g.vertex_count() < 8) return std::nullopt;
    const std::size_t n = g.vertex_count();
    for (int variant = 1; variant <= 4; ++variant) {
        const Digraph& p = brancher_pattern(variant);
        const std::size_t k = p.vertex_count();
        std::vector<Vertex> map(k, -1);
        std::vector<bool> used(n, false);
        std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
            if (i == k) return true;
            const Vertex pi = static_cast<Vertex>(i);
            for (Vertex c = 0; static_cast<std::size_t>(c) < n; ++c) {
                if (used[c] || g.out_degree(c) < p.out_degree(pi) || g.in_degree(c) < p.in_degree(pi)) continue;
                bool fits = true;
                for (Vertex q : p.out(pi))
                    if (q < pi && !g.has_arc(c, map[q])) fits = false;
                for (Vertex q : p.in(pi))
                    if (q < pi && !g.has_arc(map[q], c)) fits = false;
                if (!fits) continue;
                used[c] = true;
                map[i] = c;
                if (place(i + 1)) return true;
                used[c] = false;
            }
            return false;
        };
        if (place(0)) return certificate::Brancher{variant, map};
    }
    return std::nullopt;
}

int edge_activity(const Digraph& g, Arc arc) {
    if (!g.has_arc(arc)) throw ArcNotPresent("arc is not in the digraph");
    return activity_of_pair(underlying(g), arc.tail, arc.head);
}

ActivityMax max_activity(const Digraph& g) {
    ActivityMax best;
    const UnderlyingGraph ug(g);
    bool first = true;
    for (const Arc& a : g.arcs()) {
        int act = activity_of_pair(ug, a.tail, a.head);
        if (first || act > best.activity) best = {act, a};
        first = false;
    }
    return best;
}

namespace {

bool induces_tree(const UnderlyingGraph& ug, const std::vector<Vertex>& vs) {
    std::vector<bool> removed(ug.vertex_count(), true);
    for (Vertex v : vs) removed[v] = false;
    if (vs.empty()) return false;
    if (components_without(ug, removed).size() != 1) return false;
    std::size_t edges = 0;
    for (Vertex v : vs)
        for (Vertex w : ug.neighbours(v))
            if (!removed[w] && v < w) ++edges;
    return edges + 1 == vs.size();
}

}  // namespace

DiwheelFreeReport diwheel_free_report(const Digraph& g) {
    if (!is_unbreakable(g)) throw HypothesisViolated("digraph is not unbreakable");
    if (!is_positive(recognize_three_cyclic(g))) throw HypothesisViolated("digraph is not 3-cyclic");

    DiwheelFreeReport r;
    r.diwheel = find_diwheel(g);
    r.no_diwheel = !r.diwheel;

    const LRing ring = std::get<LRing>(compute_lring(g, 3));
    const UnderlyingGraph ug(g);
    r.ring_pairs_are_trees = true;
    for (int i = 0; i < 3; ++i) {
        std::vector<Vertex> vs = ring.parts[i];
        vs.insert(vs.end(), ring.parts[(i + 1) % 3].begin(), ring.parts[(i + 1) % 3].end());
        std::sort(vs.begin(), vs.end());
        if (!induces_tree(ug, vs)) {
            r.ring_pairs_are_trees = false;
            r.failing_pair = i;
            break;
        }
    }

    try {
        extract_build_script(g);
        r.peel_order_exists = true;
    } catch (const HypothesisViolated& e) {
        r.peel_failure = e.what();
    }

    r.arc_count = g.arc_count();
    r.edge_count_is_2n_minus_3 = g.arc_count() + 3 == 2 * g.vertex_count();
    return r;
}

std::vector<std::array<Vertex, 3>> tricycles(const Digraph& g) {
    std::vector<std::array<Vertex, 3>> out;
    for (Vertex a = 0; static_cast<std::size_t>(a) < g.vertex_count(); ++a)
        for (Vertex b : g.out(a)) {
            if (b <= a) continue;
            for (Vertex c : g.out(b))
                if (c > a && g.has_arc(c, a)) out.push_back({a, b, c});
        }
    return out;
}

std::vector<std::string> structural_violations(const Digraph& g) {
    std::vector<std::string> out;
    const std::size_t n = g.vertex_count();
    const UnderlyingGraph ug(g);

    for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
        std::vector<bool> removed(n, true);
        for (Vertex w : ug.neighbours(v)) removed[w] = false;
        if (components_without(ug, removed).size() > 1)
            out.push_back("neighbourhood of " + g.label(v) + " is not connected");
    }

    for (const Arc& a : g.arcs()) {
        std::vector<bool> removed(n, false);
        removed[a.tail] = removed[a.head] = true;
        auto comps = components_without(ug, removed);
        std::vector<int> comp_of(n, -1);
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (Vertex x : comps[i]) comp_of[x] = static_cast<int>(i);
        std::vector<int> seen;
        for (Vertex u : g.out(a.head)) {
            if (!g.has_arc(u, a.tail)) continue;
            if (std::find(seen.begin(), seen.end(), comp_of[u]) != seen.end())
                out.push_back("two tricycle partners of " + g.label(a.tail) + "->" + g.label(a.head) +
                              " are joined outside it");
            seen.push_back(comp_of[u]);
        }
    }

    for (const auto& t : tricycles(g)) {
        std::vector<bool> removed(n, false);
        for (Vertex x : t) removed[x] = true;
        for (const auto& comp : components_without(ug, removed)) {
            std::vector<bool> in_comp(n, false);
            for (Vertex x : comp) in_comp[x] = true;
            std::vector<Vertex> touching;
            for (Vertex x : t)
                for (Vertex w : ug.neighbours(x))
                    if (in_comp[w]) {
                        touching.push_back(x);
                        break;
                    }
            const std::string name = "tricycle " + g.label(t[0]) + "," + g.label(t[1]) + "," + g.label(t[2]);
            if (touching.size() != 2) {
                out.push_back(name + " has " + std::to_string(touching.size()) + " vertices touching a component");
                continue;
            }
            Vertex p = touching[0], q = touching[1];
            if (!g.has_arc(p, q)) std::swap(p, q);
            int partners = 0;
            for (Vertex b : comp)
                if (g.has_arc(q, b) && g.has_arc(b, p)) ++partners;
            if (partners != 1)
                out.push_back(name + " has " + std::to_string(partners) + " tricycle partners in a component");
        }
    }
    return out;
}

}  // namespace tricyclic
