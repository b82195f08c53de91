#include "tricyclic/certificate.hpp"

#include <algorithm>
#include <set>

#include "tricyclic/connectivity.hpp"
#include "tricyclic/recognition.hpp"

namespace tricyclic {

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

bool in_range(const Digraph& g, Vertex v) { return v >= 0 && static_cast<std::size_t>(v) < g.vertex_count(); }

// Blocks of every nontrivial strong component, in g's ids, sorted.
std::vector<std::vector<Vertex>> expected_blocks(const Digraph& g) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& comp : strong_components(g)) {
        if (comp.size() < 2) continue;
        const Digraph sub = g.induced(comp);
        for (const auto& b : blocks(underlying(sub))) {
            std::vector<Vertex> mapped;
            for (Vertex x : b) mapped.push_back(comp[x]);
            out.push_back(std::move(mapped));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string verify_three_cyclic(const Digraph& g, const certificate::ThreeCyclic& c) {
    for (const Arc& a : g.arcs())
        if (g.has_arc(a.head, a.tail)) return "digraph has an antiparallel pair";
    std::vector<std::vector<Vertex>> claimed;
    for (const auto& b : c.blocks) claimed.push_back(b.vertices);
    std::sort(claimed.begin(), claimed.end());
    if (claimed != expected_blocks(g)) return "blocks do not match the strong components of the digraph";
    for (const auto& b : c.blocks) {
        if (auto e = check_tree(b.tree); !e.empty()) return "block tree invalid: " + e;
        const Digraph built = recompose(b.tree);
        const Digraph block = g.induced(b.vertices);
        if (built.vertex_count() != block.vertex_count() ||
            !std::equal(built.arcs().begin(), built.arcs().end(), block.arcs().begin(), block.arcs().end()))
            return "recomposed block differs from the digraph";
    }
    return {};
}

std::string verify_diwheel(const Digraph& g, const certificate::Diwheel& d) {
    const auto& rim = d.rim;
    if (!in_range(g, d.hub)) return "hub out of range";
    if (rim.size() < 4 || rim.size() % 2 != 0) return "rim must have even length at least four";
    std::set<Vertex> seen{d.hub};
    for (Vertex r : rim)
        if (!in_range(g, r) || !seen.insert(r).second) return "rim vertices must be distinct and differ from the hub";
    for (std::size_t i = 0; i < rim.size(); ++i) {
        Vertex a = rim[i], b = rim[(i + 1) % rim.size()];
        bool forward = g.has_arc(d.hub, a) && g.has_arc(a, b) && g.has_arc(b, d.hub);
        bool backward = g.has_arc(d.hub, b) && g.has_arc(b, a) && g.has_arc(a, d.hub);
        if (!forward && !backward) return "rim edge does not form a tricycle with the hub";
    }
    return {};
}

std::string verify_brancher(const Digraph& g, const certificate::Brancher& b) {
    if (b.variant < 1 || b.variant > 4) return "brancher variant must be 1..4";
    const Digraph& p = brancher_pattern(b.variant);
    if (b.map.size() != p.vertex_count()) return "embedding has the wrong size";
    std::set<Vertex> seen;
    for (Vertex v : b.map)
        if (!in_range(g, v) || !seen.insert(v).second) return "embedding is not injective";
    for (const Arc& a : p.arcs())
        if (!g.has_arc(b.map[a.tail], b.map[a.head])) return "embedding misses a pattern arc";
    return {};
}

}  // namespace

const char* kind_name(const Certificate& c) {
    return std::visit(overloaded{
                          [](const certificate::ThreeCyclic&) { return "three_cyclic"; },
                          [](const certificate::LongCycle&) { return "long_cycle"; },
                          [](const certificate::TwoCycle&) { return "two_cycle"; },
                          [](const certificate::NotRingable&) { return "not_ringable"; },
                          [](const certificate::Diwheel&) { return "diwheel"; },
                          [](const certificate::Brancher&) { return "brancher"; },
                          [](const certificate::NoValidSplit&) { return "no_valid_split"; },
                      },
                      c);
}

bool is_positive(const Certificate& c) { return std::holds_alternative<certificate::ThreeCyclic>(c); }

std::string verify_certificate(const Digraph& g, const Certificate& c) {
    return std::visit(
        overloaded{
            [&](const certificate::ThreeCyclic& x) { return verify_three_cyclic(g, x); },
            [&](const certificate::LongCycle& x) -> std::string {
                if (!is_directed_cycle(g, x.cycle)) return "not a directed cycle of the digraph";
                if (x.cycle.size() == 3) return "cycle has length three";
                return {};
            },
            [&](const certificate::TwoCycle& x) -> std::string {
                if (!g.has_arc(x.u, x.v) || !g.has_arc(x.v, x.u)) return "pair is not antiparallel";
                return {};
            },
            [&](const certificate::NotRingable& x) -> std::string {
                if (!is_directed_cycle(g, x.cycle)) return "not a directed cycle of the digraph";
                if (x.cycle.size() % 3 == 0) return "cycle length is a multiple of three";
                return {};
            },
            [&](const certificate::Diwheel& x) { return verify_diwheel(g, x); },
            [&](const certificate::Brancher& x) { return verify_brancher(g, x); },
            [&](const certificate::NoValidSplit&) -> std::string { return "no witness to check"; },
        },
        c);
}

}  // namespace tricyclic
