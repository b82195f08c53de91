#include "tricyclic/rings.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "tricyclic/connectivity.hpp"

namespace tricyclic {

std::vector<int> LRing::part_of(std::size_t vertex_count) const {
    std::vector<int> out(vertex_count, -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Vertex v : parts[i]) out[v] = static_cast<int>(i);
    return out;
}

std::size_t LRing::smallest_part() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i].size() < parts[best].size()) best = i;
    return best;
}

namespace {

// BFS distances and tree predecessors, along out-arcs (forward) or in-arcs.
void bfs(const Digraph& g, Vertex root, bool forward, std::vector<int>& dist, std::vector<Vertex>& pred) {
    dist.assign(g.vertex_count(), -1);
    pred.assign(g.vertex_count(), -1);
    std::queue<Vertex> queue;
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : forward ? g.out(v) : g.in(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                pred[w] = v;
                queue.push(w);
            }
    }
}

// Splits a closed walk (first vertex repeated at the end) into directed cycles and returns the
// first one whose length is not a multiple of l.
Cycle peel_bad_cycle(const std::vector<Vertex>& walk, int l) {
    std::vector<Vertex> stack;
    std::vector<int> position(*std::max_element(walk.begin(), walk.end()) + 1, -1);
    for (Vertex v : walk) {
        if (position[v] >= 0) {
            Cycle c(stack.begin() + position[v], stack.end());
            for (Vertex x : c) position[x] = -1;
            stack.resize(stack.size() - c.size());
            if (static_cast<int>(c.size()) % l != 0) return canonical_cycle(std::move(c));
        }
        position[v] = static_cast<int>(stack.size());
        stack.push_back(v);
    }
    throw std::logic_error("closed walk of bad length decomposed into good cycles");
}

}  // namespace

std::variant<LRing, RingConflict> compute_lring_from(const Digraph& g, int l, Vertex root) {
    if (l < 2) throw std::invalid_argument("ring modulus must be at least 2");
    if (g.empty() || !is_strongly_connected(g)) throw NotStronglyConnected("rings need a strongly connected digraph");
    std::vector<int> dist, back;
    std::vector<Vertex> pred, back_pred;
    bfs(g, root, true, dist, pred);
    bfs(g, root, false, back, back_pred);

    auto path_to = [&](Vertex v) {  // root -> v along the forward tree
        std::vector<Vertex> p;
        for (Vertex x = v; x >= 0; x = pred[x]) p.push_back(x);
        std::reverse(p.begin(), p.end());
        return p;
    };
    auto path_from = [&](Vertex v) {  // v -> root along the backward tree
        std::vector<Vertex> p;
        for (Vertex x = v; x >= 0; x = back_pred[x]) p.push_back(x);
        return p;
    };

    for (const Arc& a : g.arcs()) {
        if ((dist[a.tail] + 1 - dist[a.head]) % l == 0) continue;
        RingConflict conflict;
        if ((dist[a.tail] + 1 + back[a.head]) % l != 0) {
            conflict.walk = path_to(a.tail);
            auto rest = path_from(a.head);
            conflict.walk.insert(conflict.walk.end(), rest.begin(), rest.end());
        } else {
            conflict.walk = path_to(a.head);
            auto rest = path_from(a.head);
            conflict.walk.insert(conflict.walk.end(), rest.begin() + 1, rest.end());
        }
        conflict.cycle = peel_bad_cycle(conflict.walk, l);
        return conflict;
    }

    const Vertex smallest = 0;
    const int shift = dist[smallest] % l;
    LRing ring;
    ring.l = l;
    ring.parts.assign(l, {});
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        ring.parts[((dist[v] - shift) % l + l) % l].push_back(static_cast<Vertex>(v));
    return ring;
}

std::variant<LRing, RingConflict> compute_lring(const Digraph& g, int l) { return compute_lring_from(g, l, 0); }

bool is_pinched(const LRing& ring) {
    return std::any_of(ring.parts.begin(), ring.parts.end(), [](const auto& p) { return p.size() == 1; });
}

std::optional<LRing> find_pinched_ring(const Digraph& g, int l) {
    auto result = compute_lring(g, l);
    if (auto* conflict = std::get_if<RingConflict>(&result)) throw NotRingable(conflict->cycle, l);
    auto& ring = std::get<LRing>(result);
    if (!is_pinched(ring)) return std::nullopt;
    return std::move(ring);
}

bool is_valid_ring(const Digraph& g, const LRing& ring) {
    if (ring.l < 2 || ring.parts.size() != static_cast<std::size_t>(ring.l)) return false;
    const std::size_t n = g.vertex_count();
    std::vector<int> part(n, -1);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < ring.parts.size(); ++i)
        for (Vertex v : ring.parts[i]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || part[v] >= 0) return false;
            part[v] = static_cast<int>(i);
            ++covered;
        }
    if (covered != n) return false;
    for (const Arc& a : g.arcs())
        if ((part[a.tail] + 1) % ring.l != part[a.head]) return false;
    return true;
}

}  // namespace tricyclic
