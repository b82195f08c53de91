#pragma once

#include <json.hpp>

#include <string>

#include "tricyclic/annular.hpp"
#include "tricyclic/builder.hpp"
#include "tricyclic/certificate.hpp"
#include "tricyclic/decomposition.hpp"
#include "tricyclic/digraph.hpp"
#include "tricyclic/rings.hpp"
#include "tricyclic/weighting.hpp"

namespace tricyclic::json {

/// Keys keep insertion order, so equal values always dump to the same bytes.
using Json = nlohmann::ordered_json;

// Every parse_* throws SchemaError on a missing key or a value of the wrong shape.

/// {"vertices": n, "labels": [...], "arcs": [[u, v], ...]}; labels only when present.
Json from_digraph(const Digraph& g);
Digraph parse_digraph(const Json& j);

/// {"l": l, "parts": [[ids], ...]}
Json from_ring(const LRing& r);
LRing parse_ring(const Json& j);

/// Leaves: {"type": "leaf", "graph", "ring"}. Sums: {"type": "sum", "vertices", "arc",
/// "left_map", "right_map", "left", "right"}.
Json from_tree(const DecompositionTree& t);
DecompositionTree parse_tree(const Json& j);

/// {"kind": ..., witness fields}
Json from_certificate(const Certificate& c);
Certificate parse_certificate(const Json& j);

/// {"base": [a, b, c], "steps": [{"pivot", "neighbour", "add"}], "labels"}
Json from_script(const BuildScript& s);
BuildScript parse_script(const Json& j);

/// {"ring", "placement": {"id": [ray, radius_num, radius_den], ...}}
Json from_drawing(const AnnularDrawing& d);
AnnularDrawing parse_drawing(const Json& j);

/// [{"arc": [u, v], "num": p, "den": q}, ...]; numbers too large for 64 bits become strings.
Json from_weighting(const Weighting& w);
Weighting parse_weighting(const Json& j);

/// {"k", "cycles", "shared", "arcs"}
Json from_obstruction(const WeakDoubleCycle& d);
WeakDoubleCycle parse_obstruction(const Json& j);

/// {"artifact": kind, "graph": ..., kind: payload}, the unit `verify` reads back.
Json envelope(const std::string& kind, const Digraph& g, Json payload);

/// Re-checks an envelope with the library's validators: tree, certificate, script, drawing,
/// weighting, obstruction. Empty string when it holds, otherwise the problem found.
std::string verify_artifact(const Json& j, std::size_t max_cycles = kDefaultMaxCycles);

/// Two-space indentation, trailing newline.
std::string dump(const Json& j);
Json parse_text(const std::string& text);

}  // namespace tricyclic::json
