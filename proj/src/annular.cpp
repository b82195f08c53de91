#include "tricyclic/annular.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>

#include "tricyclic/connectivity.hpp"

namespace tricyclic {

AnnularVerdict is_three_annular(const Digraph& g) {
    if (!is_unbreakable(g)) throw NotUnbreakable("annularity is decided for unbreakable digraphs");
    AnnularVerdict v;
    v.three_cyclic = is_positive(recognize_three_cyclic(g));
    if (!v.three_cyclic) {
        v.reason = "not_three_cyclic";
        v.brancher_agrees = true;
        return v;
    }
    v.diwheel = find_diwheel(g);
    v.diwheel_free = !v.diwheel;
    v.max_activity = max_activity(g);
    v.brancher = find_brancher(g);
    v.brancher_free = !v.brancher;
    v.annular = v.diwheel_free && v.max_activity.activity <= 2;
    v.brancher_agrees = v.annular == (v.diwheel_free && v.brancher_free);
    if (!v.diwheel_free) v.reason = "diwheel";
    else if (!v.annular) v.reason = "activity";
    return v;
}

namespace {

using Tri = std::array<Vertex, 3>;

std::pair<Vertex, Vertex> key(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

// Follows the forced order from tricycle `start`, whose vertex `leaving` occurs in no other
// tricycle. Returns the order, or an empty vector when it gets stuck.
std::vector<std::size_t> forced_order(const std::vector<Tri>& tris, const std::vector<int>& count,
                                      const std::map<std::pair<Vertex, Vertex>, std::vector<std::size_t>>& on_pair,
                                      std::size_t start, Vertex leaving) {
    const std::size_t m = tris.size();
    std::vector<int> remaining = count;
    std::vector<bool> placed(m, false);
    std::vector<std::size_t> order;
    auto place = [&](std::size_t t) {
        placed[t] = true;
        order.push_back(t);
        for (Vertex x : tris[t]) --remaining[x];
    };
    place(start);
    std::vector<Vertex> pair;
    for (Vertex x : tris[start])
        if (x != leaving) pair.push_back(x);

    while (order.size() < m) {
        if (pair.size() != 2) return {};
        const Vertex p = pair[0], q = pair[1];
        std::vector<std::size_t> privates, shared;
        for (std::size_t t : on_pair.at(key(p, q))) {
            if (placed[t]) continue;
            Vertex y = -1;
            for (Vertex x : tris[t])
                if (x != p && x != q) y = x;
            if (remaining[y] != count[y]) return {};  // y's run would restart
            (count[y] == 1 ? privates : shared).push_back(t);
        }
        if (privates.empty() && shared.empty()) return {};
        if (shared.size() > 1) return {};
        for (std::size_t t : privates) place(t);
        for (std::size_t t : shared) place(t);
        pair.clear();
        for (Vertex x : tris[order.back()])
            if (remaining[x] > 0) pair.push_back(x);
        std::sort(pair.begin(), pair.end());
    }
    return order;
}

}  // namespace

AnnularDrawing synthesize_drawing(const Digraph& g) {
    if (!is_unbreakable(g)) throw NotUnbreakable("drawings are synthesized for unbreakable digraphs");
    auto ring_result = compute_lring(g, 3);
    if (std::holds_alternative<RingConflict>(ring_result)) throw NotAnnular("digraph is not 3-cyclic");
    const LRing ring = std::get<LRing>(ring_result);

    const std::size_t n = g.vertex_count();
    const std::vector<Tri> tris = tricycles(g);
    std::vector<int> count(n, 0);
    std::map<std::pair<Vertex, Vertex>, std::vector<std::size_t>> on_pair;
    for (std::size_t t = 0; t < tris.size(); ++t)
        for (int i = 0; i < 3; ++i) {
            ++count[tris[t][i]];
            on_pair[key(tris[t][i], tris[t][(i + 1) % 3])].push_back(t);
        }
    for (const Arc& a : g.arcs())
        if (!on_pair.count(key(a.tail, a.head))) throw NotAnnular("some arc lies in no tricycle");

    std::vector<std::size_t> order;
    for (std::size_t s = 0; s < tris.size() && order.empty(); ++s)
        for (Vertex r : tris[s]) {
            if (count[r] != 1) continue;
            order = forced_order(tris, count, on_pair, s, r);
            if (!order.empty()) break;
        }
    if (order.empty()) throw NotAnnular("no nested order of the tricycles exists");

    std::vector<std::size_t> first(n, tris.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex x : tris[order[i]]) first[x] = std::min(first[x], i);
    AnnularDrawing d{ring, std::vector<Placement>(n)};
    for (std::size_t part = 0; part < 3; ++part) {
        std::vector<Vertex> on_ray = ring.parts[part];
        std::stable_sort(on_ray.begin(), on_ray.end(), [&](Vertex a, Vertex b) { return first[a] < first[b]; });
        for (std::size_t i = 0; i < on_ray.size(); ++i)
            d.placement[on_ray[i]] = {static_cast<int>(part) + 1, Radius(static_cast<std::int64_t>(i) + 1)};
    }
    if (auto check = validate_drawing(g, d); !check)
        throw NotAnnular("synthesized drawing fails validation: " + check.violation);
    return d;
}

DrawingCheck validate_drawing(const Digraph& g, const AnnularDrawing& d) {
    DrawingCheck c;
    const std::size_t n = g.vertex_count();
    if (d.ring.l != 3 || !is_valid_ring(g, d.ring)) {
        c.violation = "ring is not a valid 3-ring of the digraph";
        return c;
    }
    if (d.placement.size() != n) {
        c.violation = "placement does not cover exactly the vertices";
        return c;
    }
    const auto part = d.ring.part_of(n);
    std::map<std::pair<int, Radius>, Vertex> taken;
    for (std::size_t v = 0; v < n; ++v) {
        const Placement& p = d.placement[v];
        if (p.ray != part[v] + 1) {
            c.violation = "vertex " + g.label(static_cast<Vertex>(v)) + " is not on the ray of its part";
            return c;
        }
        if (p.radius <= 0) {
            c.violation = "vertex " + g.label(static_cast<Vertex>(v)) + " has a non-positive radius";
            return c;
        }
        if (!taken.emplace(std::pair{p.ray, p.radius}, static_cast<Vertex>(v)).second) {
            c.violation = "two vertices share a position on ray " + std::to_string(p.ray);
            return c;
        }
    }
    const auto arcs = g.arcs();
    for (const Arc& a : arcs)
        if (d.placement[a.head].ray != d.placement[a.tail].ray % 3 + 1) {
            c.violation = "arc does not go to the next ray";
            return c;
        }
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            const Arc a = arcs[i], b = arcs[j];
            if (d.placement[a.tail].ray != d.placement[b.tail].ray) continue;
            if (a.tail == b.tail || a.head == b.head) continue;
            const bool tails = d.placement[a.tail].radius < d.placement[b.tail].radius;
            const bool heads = d.placement[a.head].radius < d.placement[b.head].radius;
            if (tails != heads) {
                c.violation = "arcs " + g.label(a.tail) + "->" + g.label(a.head) + " and " + g.label(b.tail) + "->" +
                              g.label(b.head) + " cross";
                c.crossing = std::pair{a, b};
                return c;
            }
        }
    c.valid = true;
    return c;
}

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    std::string s = buf;
    return s == "-0.000" ? "0.000" : s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Digraph& g, const AnnularDrawing& d) {
    constexpr double size = 480, centre = size / 2, reach = 200;
    double max_radius = 1;
    for (const Placement& p : d.placement) max_radius = std::max(max_radius, boost::rational_cast<double>(p.radius));
    const double unit = reach / (max_radius + 0.5);
    auto angle = [](double ray) { return 2 * std::numbers::pi * ray / 3; };
    auto point = [&](double r, double a) {
        return std::pair{centre + r * std::cos(a), centre - r * std::sin(a)};
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(size) + "\" height=\"" +
           fmt(size) + "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) + "\">\n";
    out += "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int ray = 1; ray <= 3; ++ray) {
        auto [x, y] = point(reach, angle(ray));
        out += "<line x1=\"" + fmt(centre) + "\" y1=\"" + fmt(centre) + "\" x2=\"" + fmt(x) + "\" y2=\"" + fmt(y) +
               "\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";
    }
    const double dot = 4;
    for (const Arc& a : g.arcs()) {
        const Placement& p = d.placement[a.tail];
        const Placement& q = d.placement[a.head];
        const double r1 = boost::rational_cast<double>(p.radius) * unit;
        const double r2 = boost::rational_cast<double>(q.radius) * unit;
        const double a1 = angle(p.ray), a2 = angle(p.ray + 1);
        auto [x1, y1] = point(r1, a1);
        auto [x2, y2] = point(r2, a2);
        auto [cx, cy] = point((r1 + r2) / 2 * 1.15, (a1 + a2) / 2);
        // Stop short of the head dot so the arrow stays visible.
        const double dx = x2 - cx, dy = y2 - cy, len = std::hypot(dx, dy);
        const double ex = len > 0 ? x2 - dx / len * dot : x2, ey = len > 0 ? y2 - dy / len * dot : y2;
        out += "<path d=\"M" + fmt(x1) + "," + fmt(y1) + " Q" + fmt(cx) + "," + fmt(cy) + " " + fmt(ex) + "," +
               fmt(ey) + "\" fill=\"none\" stroke=\"#333\" marker-end=\"url(#head)\"/>\n";
    }
    for (std::size_t v = 0; v < d.placement.size(); ++v) {
        const Placement& p = d.placement[v];
        auto [x, y] = point(boost::rational_cast<double>(p.radius) * unit, angle(p.ray));
        out += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"" + fmt(dot) + "\" fill=\"black\"/>\n";
        out += "<text x=\"" + fmt(x + 6) + "\" y=\"" + fmt(y - 6) + "\" font-family=\"sans-serif\" font-size=\"12\">" +
               escape(g.label(static_cast<Vertex>(v))) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

void export_svg(const Digraph& g, const AnnularDrawing& d, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << render_svg(g, d);
    if (!file) throw IoError("failed writing '" + path + "'");
}

ParentTree parent_tree(const BuildScript& s) {
    try {
        replay(s);
    } catch (const InvalidStep& e) {
        throw InvalidScript(e.what());
    }
    const std::size_t n = s.vertex_count();
    ParentTree t;
    t.parent.assign(n, -1);
    const auto [a, b, c] = s.base;
    if (s.steps.empty()) {
        t.root = a;
        t.parent[b] = a;
        t.parent[c] = b;
    } else {
        const Vertex p = s.steps[0].pivot, r = s.steps[0].neighbour;
        const Vertex third = a != p && a != r ? a : (b != p && b != r ? b : c);
        t.root = r;
        t.parent[p] = r;
        t.parent[third] = p;
    }
    for (const auto& step : s.steps)
        for (Vertex w : step.additions) t.parent[w] = step.pivot;

    std::vector<int> degree(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (t.parent[v] >= 0) {
            ++degree[v];
            ++degree[t.parent[v]];
        }

    // Spine: the tree minus its leaves. A subtree of a tree is a path iff its degrees are <= 2.
    std::vector<int> spine_degree(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (t.parent[v] >= 0 && degree[v] > 1 && degree[t.parent[v]] > 1) {
            ++spine_degree[v];
            ++spine_degree[t.parent[v]];
        }
    t.caterpillar = std::all_of(spine_degree.begin(), spine_degree.end(), [](int x) { return x <= 2; });

    Vertex deepest = t.root;
    std::size_t deepest_depth = 0;
    std::vector<Vertex> branching;
    for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] < 2) continue;
        branching.push_back(static_cast<Vertex>(v));
        std::size_t depth = 0;
        for (Vertex x = static_cast<Vertex>(v); t.parent[x] >= 0; x = t.parent[x]) ++depth;
        if (depth > deepest_depth) deepest_depth = depth, deepest = static_cast<Vertex>(v);
    }
    std::vector<bool> on_path(n, false);
    for (Vertex x = deepest; x >= 0; x = t.parent[x]) on_path[x] = true;
    t.rooted_caterpillar = std::all_of(branching.begin(), branching.end(), [&](Vertex v) { return on_path[v]; });
    return t;
}

}  // namespace tricyclic
