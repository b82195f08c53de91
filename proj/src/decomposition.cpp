#include "tricyclic/decomposition.hpp"

#include <algorithm>
#include <unordered_set>

#include "tricyclic/connectivity.hpp"

namespace tricyclic {

bool is_special_edge(const Digraph& g, Arc arc) {
    if (!g.has_arc(arc)) throw ArcNotPresent("arc is not in the digraph");
    return g.out_degree(arc.tail) == 1 || g.in_degree(arc.head) == 1;
}

EdgeSum special_edge_sum_with_maps(const Digraph& g1, Arc a1, const Digraph& g2, Arc a2) {
    if (!g1.has_arc(a1) || !is_special_edge(g1, a1)) throw NotSpecial(1, "arc is not special in the first digraph");
    if (!g2.has_arc(a2) || !is_special_edge(g2, a2)) throw NotSpecial(2, "arc is not special in the second digraph");

    EdgeSum sum;
    const std::size_t n1 = g1.vertex_count();
    sum.left_map.resize(n1);
    for (std::size_t v = 0; v < n1; ++v) sum.left_map[v] = static_cast<Vertex>(v);
    sum.right_map.resize(g2.vertex_count());
    Vertex next = static_cast<Vertex>(n1);
    for (std::size_t v = 0; v < g2.vertex_count(); ++v) {
        if (static_cast<Vertex>(v) == a2.tail) sum.right_map[v] = a1.tail;
        else if (static_cast<Vertex>(v) == a2.head) sum.right_map[v] = a1.head;
        else sum.right_map[v] = next++;
    }

    std::vector<Arc> arcs(g1.arcs().begin(), g1.arcs().end());
    for (const Arc& a : g2.arcs()) {
        if (a == a2) continue;
        arcs.push_back({sum.right_map[a.tail], sum.right_map[a.head]});
    }

    std::vector<std::string> labels;
    if (g1.has_labels() || g2.has_labels()) {
        labels = g1.resolved_labels();
        std::unordered_set<std::string> used(labels.begin(), labels.end());
        for (std::size_t v = 0; v < g2.vertex_count(); ++v) {
            if (sum.right_map[v] < static_cast<Vertex>(n1)) continue;
            std::string l = g2.label(static_cast<Vertex>(v));
            while (used.count(l)) l += '\'';
            used.insert(l);
            labels.push_back(l);
        }
    }
    sum.graph = Digraph(static_cast<std::size_t>(next), std::move(arcs), std::move(labels));
    return sum;
}

Digraph special_edge_sum(const Digraph& g1, Arc a1, const Digraph& g2, Arc a2) {
    return special_edge_sum_with_maps(g1, a1, g2, a2).graph;
}

namespace {

Vertex local_id(const std::vector<Vertex>& vertices, Vertex v) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    return static_cast<Vertex>(it - vertices.begin());
}

}  // namespace

Split split_at(const Digraph& g, Arc arc) {
    if (!g.has_arc(arc)) throw ArcNotPresent("split arc is not in the digraph");
    const Vertex u = arc.tail, v = arc.head;
    const UnderlyingGraph ug(g);
    std::vector<bool> removed(g.vertex_count(), false);
    removed[u] = removed[v] = true;
    auto comps = components_without(ug, removed);
    if (comps.size() < 2) throw SplitInvalid("{u, v} is not a cutset of the underlying graph");

    std::vector<bool> out_of_u(g.vertex_count(), false);
    for (Vertex w : g.out(u)) out_of_u[w] = true;
    std::vector<Vertex> left{u, v}, right{u, v};
    std::size_t left_comps = 0;
    for (const auto& c : comps)
        if (std::any_of(c.begin(), c.end(), [&](Vertex w) { return out_of_u[w]; })) ++left_comps;
    if (left_comps == 0 || left_comps == comps.size()) {
        left.insert(left.end(), comps[0].begin(), comps[0].end());
        for (std::size_t i = 1; i < comps.size(); ++i) right.insert(right.end(), comps[i].begin(), comps[i].end());
    } else {
        for (const auto& c : comps) {
            bool to_left = std::any_of(c.begin(), c.end(), [&](Vertex w) { return out_of_u[w]; });
            auto& side = to_left ? left : right;
            side.insert(side.end(), c.begin(), c.end());
        }
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());

    Split s{g.induced(left), g.induced(right), std::move(left), std::move(right)};
    for (int side = 0; side < 2; ++side) {
        const Digraph& piece = side == 0 ? s.left : s.right;
        const auto& vs = side == 0 ? s.left_vertices : s.right_vertices;
        const Arc local{local_id(vs, u), local_id(vs, v)};
        const char* name = side == 0 ? "left" : "right";
        if (!is_special_edge(piece, local))
            throw SplitInvalid(std::string("arc is not special in the ") + name + " piece");
        if (!is_unbreakable(piece)) throw SplitInvalid(std::string("the ") + name + " piece is not unbreakable");
    }
    return s;
}

std::size_t DecompositionTree::leaf_count() const {
    if (is_leaf()) return 1;
    const auto& s = std::get<Sum>(node);
    return s.left->leaf_count() + s.right->leaf_count();
}

std::size_t DecompositionTree::depth() const {
    if (is_leaf()) return 0;
    const auto& s = std::get<Sum>(node);
    return 1 + std::max(s.left->depth(), s.right->depth());
}

const char* to_string(BlockFailure::Kind kind) {
    switch (kind) {
        case BlockFailure::Kind::NotRingable: return "not_ringable";
        case BlockFailure::Kind::NoCutset: return "no_cutset";
        case BlockFailure::Kind::NonAdjacentCutset: return "non_adjacent_cutset";
        case BlockFailure::Kind::SplitInvalid: return "split_invalid";
    }
    return "unknown";
}

namespace {

std::variant<DecompositionTree, BlockFailure> decompose_piece(const Digraph& g, const std::vector<Vertex>& to_root) {
    auto fail = [&](BlockFailure::Kind kind, std::string reason) {
        return BlockFailure{kind, g, to_root, std::move(reason), {}};
    };

    auto ring_result = compute_lring(g, 3);
    if (auto* conflict = std::get_if<RingConflict>(&ring_result)) {
        BlockFailure f = fail(BlockFailure::Kind::NotRingable, "no 3-ring exists");
        for (Vertex x : conflict->cycle) f.cycle.push_back(to_root[x]);
        return f;
    }
    auto& ring = std::get<LRing>(ring_result);
    if (is_pinched(ring)) {
        DecompositionTree leaf{DecompositionTree::Leaf{g, std::move(ring)}, g.vertex_count()};
        return leaf;
    }

    const std::size_t n = g.vertex_count();
    const UnderlyingGraph ug(g);
    std::vector<bool> removed(n, false);
    for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) {
        removed[u] = true;
        for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v) {
            removed[v] = true;
            bool is_cut = components_without(ug, removed).size() >= 2;
            removed[v] = false;
            if (!is_cut) continue;
            if (!ug.adjacent(u, v))
                return fail(BlockFailure::Kind::NonAdjacentCutset,
                            "cutset {" + g.label(u) + ", " + g.label(v) + "} is not adjacent");
            const Arc arc = g.has_arc(u, v) ? Arc{u, v} : Arc{v, u};
            Split split;
            try {
                split = split_at(g, arc);
            } catch (const SplitInvalid& e) {
                return fail(BlockFailure::Kind::SplitInvalid, e.what());
            }
            auto compose = [&](const std::vector<Vertex>& vs) {
                std::vector<Vertex> m;
                for (Vertex x : vs) m.push_back(to_root[x]);
                return m;
            };
            auto left = decompose_piece(split.left, compose(split.left_vertices));
            if (std::holds_alternative<BlockFailure>(left)) return left;
            auto right = decompose_piece(split.right, compose(split.right_vertices));
            if (std::holds_alternative<BlockFailure>(right)) return right;
            DecompositionTree::Sum sum{
                std::make_shared<const DecompositionTree>(std::move(std::get<DecompositionTree>(left))),
                std::make_shared<const DecompositionTree>(std::move(std::get<DecompositionTree>(right))), arc,
                std::move(split.left_vertices), std::move(split.right_vertices)};
            return DecompositionTree{std::move(sum), n};
        }
        removed[u] = false;
    }
    return fail(BlockFailure::Kind::NoCutset, "not pinched and the underlying graph is 3-connected");
}

}  // namespace

std::variant<DecompositionTree, BlockFailure> try_decompose(const Digraph& g) {
    if (!is_unbreakable(g)) throw NotUnbreakable("decomposition needs an unbreakable digraph");
    std::vector<Vertex> identity(g.vertex_count());
    for (std::size_t v = 0; v < identity.size(); ++v) identity[v] = static_cast<Vertex>(v);
    return decompose_piece(g, identity);
}

Digraph recompose(const DecompositionTree& t) {
    if (t.is_leaf()) return std::get<DecompositionTree::Leaf>(t.node).graph;
    const auto& s = std::get<DecompositionTree::Sum>(t.node);
    const Digraph left = recompose(*s.left);
    const Digraph right = recompose(*s.right);
    const Arc left_arc{local_id(s.left_map, s.arc.tail), local_id(s.left_map, s.arc.head)};
    const Arc right_arc{local_id(s.right_map, s.arc.tail), local_id(s.right_map, s.arc.head)};
    if (!left.has_arc(left_arc) || !is_special_edge(left, left_arc))
        throw NotSpecial(1, "identified arc is not special in the left child");
    if (!right.has_arc(right_arc) || !is_special_edge(right, right_arc))
        throw NotSpecial(2, "identified arc is not special in the right child");

    std::vector<Arc> arcs;
    std::vector<std::string> labels(t.vertex_count);
    auto absorb = [&](const Digraph& child, const std::vector<Vertex>& map) {
        for (const Arc& a : child.arcs()) arcs.push_back({map[a.tail], map[a.head]});
        for (std::size_t v = 0; v < child.vertex_count(); ++v) labels[map[v]] = child.label(static_cast<Vertex>(v));
    };
    absorb(left, s.left_map);
    absorb(right, s.right_map);
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return Digraph(t.vertex_count, std::move(arcs), std::move(labels));
}

namespace {

std::string check_node(const DecompositionTree& t, Digraph& out) {
    if (t.is_leaf()) {
        const auto& leaf = std::get<DecompositionTree::Leaf>(t.node);
        if (leaf.graph.vertex_count() != t.vertex_count) return "leaf size does not match its digraph";
        if (leaf.ring.l != 3 || !is_valid_ring(leaf.graph, leaf.ring)) return "leaf ring is not a valid 3-ring";
        if (!is_pinched(leaf.ring)) return "leaf ring is not pinched";
        out = leaf.graph;
        return {};
    }
    const auto& s = std::get<DecompositionTree::Sum>(t.node);
    if (!s.left || !s.right) return "internal node with a missing child";
    Digraph left, right;
    if (auto e = check_node(*s.left, left); !e.empty()) return e;
    if (auto e = check_node(*s.right, right); !e.empty()) return e;
    const std::size_t n = t.vertex_count;
    if (s.left_map.size() != left.vertex_count() || s.right_map.size() != right.vertex_count())
        return "vertex map size does not match child";
    if (left.vertex_count() >= n || right.vertex_count() >= n) return "child is not smaller than its parent";
    std::vector<int> hits(n, 0);
    for (const auto* map : {&s.left_map, &s.right_map}) {
        for (std::size_t i = 0; i < map->size(); ++i) {
            Vertex x = (*map)[i];
            if (x < 0 || static_cast<std::size_t>(x) >= n) return "vertex map leaves the node";
            if (i > 0 && (*map)[i - 1] >= x) return "vertex map is not increasing";
            ++hits[x];
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        const bool shared = static_cast<Vertex>(v) == s.arc.tail || static_cast<Vertex>(v) == s.arc.head;
        if (hits[v] != (shared ? 2 : 1)) return "children must overlap exactly in the identified arc";
    }
    try {
        out = recompose(t);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

std::string check_tree(const DecompositionTree& t) {
    Digraph g;
    return check_node(t, g);
}

}  // namespace tricyclic
