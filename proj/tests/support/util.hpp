#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tricyclic/digraph.hpp"

namespace testutil {

using tricyclic::Arc;
using tricyclic::Digraph;
using tricyclic::Vertex;

/// Id of the vertex labelled `label`; throws when absent.
inline Vertex id(const Digraph& g, const std::string& label) {
    const auto v = g.find_label(label);
    if (!v) throw std::runtime_error("no vertex labelled " + label);
    return *v;
}

inline Arc arc(const Digraph& g, const std::string& tail, const std::string& head) {
    return {id(g, tail), id(g, head)};
}

inline std::vector<Vertex> ids(const Digraph& g, const std::vector<std::string>& labels) {
    std::vector<Vertex> out;
    for (const auto& l : labels) out.push_back(id(g, l));
    return out;
}

inline std::vector<std::string> labels(const Digraph& g, const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    for (Vertex v : vs) out.push_back(g.label(v));
    return out;
}

}  // namespace testutil
