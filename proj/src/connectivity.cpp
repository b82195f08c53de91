#include "tricyclic/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace tricyclic {

UnderlyingGraph::UnderlyingGraph(const Digraph& g) : adjacency_(g.vertex_count()) {
    for (const Arc& a : g.arcs()) {
        adjacency_[a.tail].push_back(a.head);
        adjacency_[a.head].push_back(a.tail);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

bool UnderlyingGraph::adjacent(Vertex u, Vertex v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Arc> UnderlyingGraph::edges() const {
    std::vector<Arc> out;
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (static_cast<Vertex>(u) < v) out.push_back({static_cast<Vertex>(u), v});
    return out;
}

UnderlyingGraph underlying(const Digraph& g) { return UnderlyingGraph(g); }

std::vector<std::vector<Vertex>> components_without(const UnderlyingGraph& ug, const std::vector<bool>& removed) {
    const std::size_t n = ug.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s] || (!removed.empty() && removed[s])) continue;
        std::vector<Vertex> comp;
        seen[s] = true;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : ug.neighbours(v)) {
                if (seen[w] || (!removed.empty() && removed[w])) continue;
                seen[w] = true;
                stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::vector<Vertex>> strong_components(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> out;
    int counter = 0;

    std::function<void(Vertex)> visit = [&](Vertex v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (Vertex w : g.out(v)) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<Vertex> comp;
            Vertex w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] < 0) visit(static_cast<Vertex>(v));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

bool is_strongly_connected(const Digraph& g) {
    if (g.empty()) return false;
    const std::size_t n = g.vertex_count();
    auto reach_all = [&](bool forward) {
        std::vector<bool> seen(n, false);
        std::vector<Vertex> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : forward ? g.out(v) : g.in(v)) {
                if (seen[w]) continue;
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
        return count == n;
    };
    return reach_all(true) && reach_all(false);
}

namespace {

struct BlockFinder {
    const UnderlyingGraph& ug;
    std::vector<int> disc, low;
    std::vector<Arc> edge_stack;
    std::vector<std::vector<Vertex>> blocks;
    std::vector<bool> is_cut;
    int timer = 0;

    explicit BlockFinder(const UnderlyingGraph& g)
        : ug(g), disc(g.vertex_count(), -1), low(g.vertex_count(), 0), is_cut(g.vertex_count(), false) {}

    void pop_block(Arc until) {
        std::vector<Vertex> block;
        while (true) {
            Arc e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e.tail);
            block.push_back(e.head);
            if (e == until) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
    }

    void visit(Vertex v, Vertex parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (Vertex w : ug.neighbours(v)) {
            if (disc[w] < 0) {
                ++children;
                edge_stack.push_back({v, w});
                visit(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (parent >= 0) is_cut[v] = true;
                    pop_block({v, w});
                }
            } else if (w != parent && disc[w] < disc[v]) {
                edge_stack.push_back({v, w});
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent < 0 && children > 1) is_cut[v] = true;
    }

    void run() {
        for (std::size_t v = 0; v < ug.vertex_count(); ++v)
            if (disc[v] < 0) visit(static_cast<Vertex>(v), -1);
        std::sort(blocks.begin(), blocks.end());
    }
};

}  // namespace

std::vector<std::vector<Vertex>> blocks(const UnderlyingGraph& ug) {
    BlockFinder finder(ug);
    finder.run();
    return std::move(finder.blocks);
}

std::vector<Vertex> cut_vertices(const UnderlyingGraph& ug) {
    BlockFinder finder(ug);
    finder.run();
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < ug.vertex_count(); ++v)
        if (finder.is_cut[v]) out.push_back(static_cast<Vertex>(v));
    return out;
}

UnbreakableResult is_unbreakable(const Digraph& g) {
    namespace w = unbreakable_witness;
    UnbreakableResult result;
    const std::size_t n = g.vertex_count();
    if (n < 3) {
        result.witness = w::TooSmall{};
        return result;
    }
    // Witness pair: the first vertex not reachable from 0, or the first that cannot reach 0.
    for (bool forward : {true, false}) {
        std::vector<bool> seen(n, false);
        std::vector<Vertex> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex x : forward ? g.out(v) : g.in(v))
                if (!seen[x]) {
                    seen[x] = true;
                    stack.push_back(x);
                }
        }
        for (std::size_t v = 0; v < n; ++v)
            if (!seen[v]) {
                result.witness = forward ? w::NotStronglyConnected{0, static_cast<Vertex>(v)}
                                         : w::NotStronglyConnected{static_cast<Vertex>(v), 0};
                return result;
            }
    }
    auto cuts = cut_vertices(underlying(g));
    if (!cuts.empty()) {
        result.witness = w::CutVertex{cuts.front()};
        return result;
    }
    result.unbreakable = true;
    return result;
}

bool is_strongly_2connected(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 3) throw TooSmall("strong 2-connectivity needs at least three vertices");
    if (!is_strongly_connected(g)) return false;
    std::vector<Vertex> rest;
    for (std::size_t v = 0; v < n; ++v) {
        rest.clear();
        for (std::size_t w = 0; w < n; ++w)
            if (w != v) rest.push_back(static_cast<Vertex>(w));
        if (!is_strongly_connected(g.induced(rest))) return false;
    }
    return true;
}

AwayPath min_away_path(const Digraph& g, std::span<const Vertex> x, std::span<const Vertex> a,
                       std::span<const Vertex> b) {
    const std::size_t n = g.vertex_count();
    enum : char { kFree, kRemoved, kSource, kTarget };
    std::vector<char> role(n, kFree);
    auto mark = [&](std::span<const Vertex> set, char r) {
        for (Vertex v : set) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::invalid_argument("vertex out of range");
            if (role[v] != kFree) throw std::invalid_argument("x, a and b must be pairwise disjoint");
            role[v] = r;
        }
    };
    mark(x, kRemoved);
    mark(a, kSource);
    mark(b, kTarget);
    if (a.empty() || b.empty()) throw std::invalid_argument("a and b must be nonempty");

    const UnderlyingGraph ug(g);
    using Cost = std::pair<int, int>;  // (away edges, hops)
    const Cost kInf{1 << 30, 1 << 30};
    std::vector<Cost> best(n, kInf);
    std::vector<Vertex> pred(n, -1);
    using Entry = std::tuple<int, int, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    for (Vertex s : a) {
        best[s] = {0, 0};
        queue.emplace(0, 0, s);
    }
    Vertex reached = -1;
    while (!queue.empty()) {
        auto [away, hops, v] = queue.top();
        queue.pop();
        if (Cost{away, hops} != best[v]) continue;
        if (role[v] == kTarget) {
            reached = v;
            break;
        }
        for (Vertex w : ug.neighbours(v)) {
            if (role[w] == kRemoved) continue;
            Cost next{away + (g.has_arc(v, w) ? 0 : 1), hops + 1};
            if (next < best[w]) {
                best[w] = next;
                pred[w] = v;
                queue.emplace(next.first, next.second, w);
            }
        }
    }
    if (reached < 0) throw NoPath("a and b are separated in g - x");

    AwayPath path;
    for (Vertex v = reached; v >= 0; v = pred[v]) path.vertices.push_back(v);
    std::reverse(path.vertices.begin(), path.vertices.end());
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        bool toward = g.has_arc(path.vertices[i], path.vertices[i + 1]);
        path.toward.push_back(toward);
        if (!toward) ++path.away_count;
    }
    return path;
}

int activity_of_pair(const UnderlyingGraph& ug, Vertex u, Vertex v) {
    std::vector<bool> removed(ug.vertex_count(), false);
    removed[u] = removed[v] = true;
    int count = 0;
    for (const auto& comp : components_without(ug, removed))
        if (comp.size() > 1) ++count;
    return count;
}

}  // namespace tricyclic
