#include "tricyclic/json_io.hpp"

#include <map>

namespace tricyclic::json {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string(what) + ": " + e.what());
    }
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing key '") + key + "'");
    return j.at(key);
}

Vertex vertex(const Json& j) {
    if (!j.is_number_integer()) throw SchemaError("vertex ids must be integers");
    return j.get<Vertex>();
}

std::vector<Vertex> vertices(const Json& j) {
    if (!j.is_array()) throw SchemaError("expected an array of vertex ids");
    std::vector<Vertex> out;
    for (const auto& x : j) out.push_back(vertex(x));
    return out;
}

Json arc_json(const Arc& a) { return Json::array({a.tail, a.head}); }

Arc arc(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw SchemaError("an arc is a pair [tail, head]");
    return {vertex(j[0]), vertex(j[1])};
}

Json big(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

mpz_class parse_big(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw SchemaError("not an integer: " + j.get<std::string>());
        return z;
    }
    throw SchemaError("expected an integer");
}

}  // namespace

Json from_digraph(const Digraph& g) {
    Json j;
    j["vertices"] = g.vertex_count();
    if (g.has_labels()) j["labels"] = g.resolved_labels();
    Json arcs = Json::array();
    for (const Arc& a : g.arcs()) arcs.push_back(arc_json(a));
    j["arcs"] = std::move(arcs);
    return j;
}

Digraph parse_digraph(const Json& j) {
    return guarded("digraph", [&] {
        const auto n = field(j, "vertices").get<std::size_t>();
        std::vector<Arc> arcs;
        for (const auto& a : field(j, "arcs")) arcs.push_back(arc(a));
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        try {
            return Digraph(n, std::move(arcs), std::move(labels));
        } catch (const InvalidDigraph& e) {
            throw SchemaError(std::string("digraph: ") + e.what());
        }
    });
}

Json from_ring(const LRing& r) {
    Json j;
    j["l"] = r.l;
    j["parts"] = r.parts;
    return j;
}

LRing parse_ring(const Json& j) {
    return guarded("ring", [&] {
        LRing r;
        r.l = field(j, "l").get<int>();
        for (const auto& part : field(j, "parts")) r.parts.push_back(vertices(part));
        return r;
    });
}

Json from_tree(const DecompositionTree& t) {
    Json j;
    if (const auto* leaf = std::get_if<DecompositionTree::Leaf>(&t.node)) {
        j["type"] = "leaf";
        j["graph"] = from_digraph(leaf->graph);
        j["ring"] = from_ring(leaf->ring);
        return j;
    }
    const auto& sum = std::get<DecompositionTree::Sum>(t.node);
    j["type"] = "sum";
    j["vertices"] = t.vertex_count;
    j["arc"] = arc_json(sum.arc);
    j["left_map"] = sum.left_map;
    j["right_map"] = sum.right_map;
    j["left"] = from_tree(*sum.left);
    j["right"] = from_tree(*sum.right);
    return j;
}

DecompositionTree parse_tree(const Json& j) {
    return guarded("tree", [&] {
        const auto type = field(j, "type").get<std::string>();
        DecompositionTree t;
        if (type == "leaf") {
            Digraph g = parse_digraph(field(j, "graph"));
            t.vertex_count = g.vertex_count();
            t.node = DecompositionTree::Leaf{std::move(g), parse_ring(field(j, "ring"))};
        } else if (type == "sum") {
            DecompositionTree::Sum sum;
            sum.left = std::make_shared<const DecompositionTree>(parse_tree(field(j, "left")));
            sum.right = std::make_shared<const DecompositionTree>(parse_tree(field(j, "right")));
            sum.arc = arc(field(j, "arc"));
            sum.left_map = vertices(field(j, "left_map"));
            sum.right_map = vertices(field(j, "right_map"));
            t.vertex_count = field(j, "vertices").get<std::size_t>();
            t.node = std::move(sum);
        } else {
            throw SchemaError("tree node type must be 'leaf' or 'sum'");
        }
        return t;
    });
}

Json from_certificate(const Certificate& c) {
    Json j;
    j["kind"] = kind_name(c);
    std::visit(
        [&](const auto& w) {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, certificate::ThreeCyclic>) {
                Json blocks = Json::array();
                for (const auto& b : w.blocks) {
                    Json jb;
                    jb["vertices"] = b.vertices;
                    jb["tree"] = from_tree(b.tree);
                    blocks.push_back(std::move(jb));
                }
                j["blocks"] = std::move(blocks);
            } else if constexpr (std::is_same_v<T, certificate::LongCycle> ||
                                 std::is_same_v<T, certificate::NotRingable>) {
                j["cycle"] = w.cycle;
            } else if constexpr (std::is_same_v<T, certificate::TwoCycle>) {
                j["u"] = w.u;
                j["v"] = w.v;
            } else if constexpr (std::is_same_v<T, certificate::Diwheel>) {
                j["hub"] = w.hub;
                j["rim"] = w.rim;
            } else if constexpr (std::is_same_v<T, certificate::Brancher>) {
                j["variant"] = w.variant;
                j["map"] = w.map;
            } else {
                j["piece"] = w.piece;
                j["reason"] = w.reason;
            }
        },
        c);
    return j;
}

Certificate parse_certificate(const Json& j) {
    return guarded("certificate", [&]() -> Certificate {
        const auto kind = field(j, "kind").get<std::string>();
        if (kind == "three_cyclic") {
            certificate::ThreeCyclic c;
            for (const auto& b : field(j, "blocks"))
                c.blocks.push_back({vertices(field(b, "vertices")), parse_tree(field(b, "tree"))});
            return c;
        }
        if (kind == "long_cycle") return certificate::LongCycle{vertices(field(j, "cycle"))};
        if (kind == "not_ringable") return certificate::NotRingable{vertices(field(j, "cycle"))};
        if (kind == "two_cycle") return certificate::TwoCycle{vertex(field(j, "u")), vertex(field(j, "v"))};
        if (kind == "diwheel") return certificate::Diwheel{vertex(field(j, "hub")), vertices(field(j, "rim"))};
        if (kind == "brancher") return certificate::Brancher{field(j, "variant").get<int>(), vertices(field(j, "map"))};
        if (kind == "no_valid_split")
            return certificate::NoValidSplit{vertices(field(j, "piece")), field(j, "reason").get<std::string>()};
        throw SchemaError("unknown certificate kind '" + kind + "'");
    });
}

Json from_script(const BuildScript& s) {
    Json j;
    j["base"] = s.base;
    Json steps = Json::array();
    for (const auto& step : s.steps) {
        Json js;
        js["pivot"] = step.pivot;
        js["neighbour"] = step.neighbour;
        js["add"] = step.additions;
        steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    if (!s.labels.empty()) j["labels"] = s.labels;
    return j;
}

BuildScript parse_script(const Json& j) {
    return guarded("script", [&] {
        BuildScript s;
        const auto base = vertices(field(j, "base"));
        if (base.size() != 3) throw SchemaError("script: base must list three vertices");
        std::copy(base.begin(), base.end(), s.base.begin());
        for (const auto& js : field(j, "steps"))
            s.steps.push_back({vertex(field(js, "pivot")), vertex(field(js, "neighbour")), vertices(field(js, "add"))});
        if (j.contains("labels")) s.labels = j.at("labels").get<std::vector<std::string>>();
        return s;
    });
}

Json from_drawing(const AnnularDrawing& d) {
    Json j;
    j["ring"] = from_ring(d.ring);
    Json placement = Json::object();
    for (std::size_t v = 0; v < d.placement.size(); ++v) {
        const Placement& p = d.placement[v];
        placement[std::to_string(v)] = Json::array({p.ray, p.radius.numerator(), p.radius.denominator()});
    }
    j["placement"] = std::move(placement);
    return j;
}

AnnularDrawing parse_drawing(const Json& j) {
    return guarded("drawing", [&] {
        AnnularDrawing d;
        d.ring = parse_ring(field(j, "ring"));
        const Json& placement = field(j, "placement");
        if (!placement.is_object()) throw SchemaError("drawing: placement must be an object");
        std::map<std::size_t, Placement> by_id;
        for (const auto& [key, value] : placement.items()) {
            std::size_t id = 0;
            try {
                std::size_t used = 0;
                id = std::stoul(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw SchemaError("drawing: placement keys must be vertex ids");
            }
            if (!value.is_array() || value.size() != 3) throw SchemaError("drawing: placement is [ray, num, den]");
            const auto den = value[2].get<std::int64_t>();
            if (den <= 0) throw SchemaError("drawing: radius denominator must be positive");
            by_id[id] = {value[0].get<int>(), Radius(value[1].get<std::int64_t>(), den)};
        }
        for (const auto& [id, p] : by_id) {
            if (id != d.placement.size()) throw SchemaError("drawing: placement ids must be 0..n-1");
            d.placement.push_back(p);
        }
        return d;
    });
}

Json from_weighting(const Weighting& w) {
    Json j = Json::array();
    for (const auto& [a, value] : w.values) {
        Json e;
        e["arc"] = arc_json(a);
        e["num"] = big(value.get_num());
        e["den"] = big(value.get_den());
        j.push_back(std::move(e));
    }
    return j;
}

Weighting parse_weighting(const Json& j) {
    return guarded("weighting", [&] {
        if (!j.is_array()) throw SchemaError("weighting: expected an array of entries");
        Weighting w;
        for (const auto& e : j) {
            const mpz_class den = parse_big(field(e, "den"));
            if (den == 0) throw SchemaError("weighting: zero denominator");
            Rational value(parse_big(field(e, "num")), den);
            value.canonicalize();
            w.values.emplace_back(arc(field(e, "arc")), value);
        }
        std::sort(w.values.begin(), w.values.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < w.values.size(); ++i)
            if (w.values[i - 1].first == w.values[i].first) throw SchemaError("weighting: arc listed twice");
        return w;
    });
}

Json from_obstruction(const WeakDoubleCycle& d) {
    Json j;
    j["k"] = d.k;
    j["cycles"] = d.cycles;
    j["shared"] = d.shared;
    Json arcs = Json::array();
    for (const Arc& a : d.arcs) arcs.push_back(arc_json(a));
    j["arcs"] = std::move(arcs);
    return j;
}

WeakDoubleCycle parse_obstruction(const Json& j) {
    return guarded("obstruction", [&] {
        WeakDoubleCycle d;
        d.k = field(j, "k").get<std::size_t>();
        for (const auto& c : field(j, "cycles")) d.cycles.push_back(vertices(c));
        for (const auto& p : field(j, "shared")) d.shared.push_back(vertices(p));
        for (const auto& a : field(j, "arcs")) d.arcs.push_back(arc(a));
        return d;
    });
}

Json envelope(const std::string& kind, const Digraph& g, Json payload) {
    Json j;
    j["artifact"] = kind;
    j["graph"] = from_digraph(g);
    j[kind] = std::move(payload);
    return j;
}

std::string verify_artifact(const Json& j, std::size_t max_cycles) {
    const auto kind = guarded("artifact", [&] { return field(j, "artifact").get<std::string>(); });
    const Digraph g = parse_digraph(field(j, "graph"));
    const Json& payload = field(j, kind.c_str());
    if (kind == "tree") {
        const DecompositionTree t = parse_tree(payload);
        if (auto problem = check_tree(t); !problem.empty()) return problem;
        if (!(recompose(t) == g)) return "tree does not recompose to the digraph";
        return "";
    }
    if (kind == "certificate") return verify_certificate(g, parse_certificate(payload));
    if (kind == "script") {
        try {
            if (!(replay(parse_script(payload)) == g)) return "script does not replay to the digraph";
        } catch (const Error& e) {
            return e.what();
        }
        return "";
    }
    if (kind == "drawing") {
        auto check = validate_drawing(g, parse_drawing(payload));
        return check ? "" : check.violation;
    }
    if (kind == "weighting") {
        const Weighting w = parse_weighting(payload);
        try {
            auto check = verify_weighting(g, w, max_cycles);
            if (!check) return "cycle sum is " + to_string(check.violation_sum) + ", not 1";
        } catch (const NotAWeighting& e) {
            return e.what();
        }
        const std::string stage = j.value("stage", "real");
        if (stage == "integer" && !w.is_integral()) return "weighting is not integer-valued";
        if (stage == "zero_one" && !w.is_zero_one()) return "weighting is not {0,1}-valued";
        return "";
    }
    if (kind == "obstruction") {
        const WeakDoubleCycle d = parse_obstruction(payload);
        if (auto problem = check_weak_double_cycle(g, d); !problem.empty()) return problem;
        std::vector<bool> keep(g.arc_count(), false);
        for (const Arc& a : d.arcs) keep[g.arc_index(a)] = true;
        if (solve_weighting(g.filter_arcs(keep), max_cycles)) return "obstruction is weightable";
        return "";
    }
    return "no validator for artifact '" + kind + "'";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }
}

}  // namespace tricyclic::json
