#include "tricyclic/ears.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "tricyclic/connectivity.hpp"

namespace tricyclic {

Subdigraph Subdigraph::empty_of(const Digraph& g) {
    return {std::vector<bool>(g.vertex_count(), false), std::vector<bool>(g.arc_count(), false)};
}

Subdigraph Subdigraph::of_cycle(const Digraph& g, std::span<const Vertex> cycle) {
    Subdigraph h = empty_of(g);
    std::vector<Vertex> closed(cycle.begin(), cycle.end());
    closed.push_back(cycle.front());
    h.add_path(g, closed);
    return h;
}

void Subdigraph::add_path(const Digraph& g, std::span<const Vertex> path) {
    for (std::size_t i = 0; i < path.size(); ++i) {
        vertices[path[i]] = true;
        if (i + 1 < path.size()) {
            std::size_t idx = g.arc_index({path[i], path[i + 1]});
            if (idx == g.arc_count()) throw ArcNotPresent("path uses a missing arc");
            arcs[idx] = true;
        }
    }
}

std::size_t Subdigraph::vertex_count() const { return std::count(vertices.begin(), vertices.end(), true); }
std::size_t Subdigraph::arc_count() const { return std::count(arcs.begin(), arcs.end(), true); }

namespace {

bool arc_in(const Digraph& g, const Subdigraph& h, Vertex u, Vertex v) {
    return h.arcs[g.arc_index({u, v})];
}

// Best ear starting at s. BFS over vertices outside the host with ascending neighbours
// reaches each vertex along its lex-least shortest path.
std::optional<Ear> best_ear_from(const Digraph& g, const Subdigraph& h, Vertex s, bool closed) {
    std::optional<Ear> best;
    auto offer = [&](std::vector<Vertex> seq) {
        if (!best || seq.size() < best->vertices.size() ||
            (seq.size() == best->vertices.size() && seq < best->vertices))
            best = Ear{std::move(seq), closed};
    };
    if (!closed)
        for (Vertex t : g.out(s))
            if (h.vertices[t] && !arc_in(g, h, s, t)) offer({s, t});
    if (best) return best;

    const std::size_t n = g.vertex_count();
    std::vector<Vertex> pred(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<Vertex> queue;
    for (Vertex w : g.out(s))
        if (!h.vertices[w] && !seen[w]) {
            seen[w] = true;
            pred[w] = s;
            queue.push(w);
        }
    std::size_t found_len = 0;
    std::vector<int> depth(n, 0);
    for (Vertex w : g.out(s))
        if (!h.vertices[w]) depth[w] = 1;
    while (!queue.empty()) {
        Vertex w = queue.front();
        queue.pop();
        if (found_len && static_cast<std::size_t>(depth[w]) + 1 > found_len) break;
        for (Vertex t : g.out(w)) {
            if (!h.vertices[t]) continue;
            if ((t == s) != closed) continue;
            std::vector<Vertex> seq;
            for (Vertex x = w; x != s; x = pred[x]) seq.push_back(x);
            seq.push_back(s);
            std::reverse(seq.begin(), seq.end());
            seq.push_back(t);
            offer(std::move(seq));
            found_len = depth[w] + 1;
        }
        for (Vertex x : g.out(w))
            if (!h.vertices[x] && !seen[x]) {
                seen[x] = true;
                pred[x] = w;
                depth[x] = depth[w] + 1;
                queue.push(x);
            }
    }
    return best;
}

std::optional<Ear> best_ear(const Digraph& g, const Subdigraph& h, bool closed) {
    std::optional<Ear> best;
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        if (!h.vertices[s]) continue;
        auto e = best_ear_from(g, h, static_cast<Vertex>(s), closed);
        if (!e) continue;
        if (!best || e->vertices.size() < best->vertices.size() ||
            (e->vertices.size() == best->vertices.size() && e->vertices < best->vertices))
            best = std::move(e);
    }
    return best;
}

bool covers(const Digraph& g, const Subdigraph& h) {
    return h.vertex_count() == g.vertex_count() && h.arc_count() == g.arc_count();
}

Cycle shortest_cycle_through(const Digraph& g, Vertex r) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> pred(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<Vertex> queue;
    seen[r] = true;
    queue.push(r);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.out(v)) {
            if (w == r) {
                Cycle c;
                for (Vertex x = v; x != r; x = pred[x]) c.push_back(x);
                c.push_back(r);
                std::reverse(c.begin(), c.end());
                return c;
            }
            if (!seen[w]) {
                seen[w] = true;
                pred[w] = v;
                queue.push(w);
            }
        }
    }
    return {};
}

}  // namespace

Ear find_ear(const Digraph& g, const Subdigraph& host) {
    if (covers(g, host)) throw HostEqualsG("host is the whole digraph");
    auto e = best_ear(g, host, false);
    if (!e) throw NoEar("no ear of the host exists");
    return *e;
}

EarDecomposition ear_decomposition(const Digraph& g) {
    if (g.vertex_count() < 2 || !is_strongly_connected(g))
        throw NotStronglyConnected("ear decomposition needs a strongly connected digraph on at least two vertices");
    EarDecomposition d;
    d.initial = shortest_cycle_through(g, 0);
    Subdigraph h = Subdigraph::of_cycle(g, d.initial);
    while (!covers(g, h)) {
        auto e = best_ear(g, h, false);
        if (!e) e = best_ear(g, h, true);
        h.add_path(g, e->vertices);
        d.ears.push_back(std::move(*e));
    }
    return d;
}

Subdigraph replay_ears(const Digraph& g, const EarDecomposition& d) {
    Subdigraph h = Subdigraph::of_cycle(g, d.initial);
    for (const Ear& e : d.ears) h.add_path(g, e.vertices);
    return h;
}

}  // namespace tricyclic
