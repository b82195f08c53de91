#include "tricyclic/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace tricyclic {

Cycle canonical_cycle(Cycle cycle) {
    if (!cycle.empty()) {
        auto smallest = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), smallest, cycle.end());
    }
    return cycle;
}

Digraph::Digraph(std::size_t vertex_count, std::vector<Arc> arcs, std::vector<std::string> labels)
    : arcs_(std::move(arcs)), labels_(std::move(labels)) {
    const auto n = static_cast<Vertex>(vertex_count);
    for (const Arc& a : arcs_) {
        if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n)
            throw InvalidDigraph("arc endpoint out of range");
        if (a.tail == a.head) throw InvalidDigraph("loop at vertex " + std::to_string(a.tail));
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
        throw InvalidDigraph("duplicate arc");
    if (!labels_.empty()) {
        if (labels_.size() != vertex_count) throw InvalidDigraph("label count does not match vertex count");
        std::unordered_set<std::string_view> seen;
        for (const auto& l : labels_)
            if (!seen.insert(l).second) throw InvalidDigraph("duplicate label '" + l + "'");
    }

    out_offset_.assign(vertex_count + 1, 0);
    in_offset_.assign(vertex_count + 1, 0);
    for (const Arc& a : arcs_) {
        ++out_offset_[a.tail + 1];
        ++in_offset_[a.head + 1];
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        out_offset_[v + 1] += out_offset_[v];
        in_offset_[v + 1] += in_offset_[v];
    }
    out_heads_.resize(arcs_.size());
    in_tails_.resize(arcs_.size());
    std::vector<std::size_t> in_fill(in_offset_.begin(), in_offset_.end() - 1);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        out_heads_[i] = arcs_[i].head;
        in_tails_[in_fill[arcs_[i].head]++] = arcs_[i].tail;
    }
}

std::span<const Vertex> Digraph::out(Vertex v) const {
    return {out_heads_.data() + out_offset_[v], out_offset_[v + 1] - out_offset_[v]};
}

std::span<const Vertex> Digraph::in(Vertex v) const {
    return {in_tails_.data() + in_offset_[v], in_offset_[v + 1] - in_offset_[v]};
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
    if (tail < 0 || static_cast<std::size_t>(tail) >= vertex_count()) return false;
    auto o = out(tail);
    return std::binary_search(o.begin(), o.end(), head);
}

std::size_t Digraph::arc_index(Arc a) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
    if (it == arcs_.end() || *it != a) return arcs_.size();
    return static_cast<std::size_t>(it - arcs_.begin());
}

std::string Digraph::label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<std::string> Digraph::resolved_labels() const {
    if (!labels_.empty()) return labels_;
    std::vector<std::string> out(vertex_count());
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = std::to_string(v);
    return out;
}

std::optional<Vertex> Digraph::find_label(std::string_view l) const {
    for (std::size_t v = 0; v < vertex_count(); ++v)
        if (label(static_cast<Vertex>(v)) == l) return static_cast<Vertex>(v);
    return std::nullopt;
}

Digraph Digraph::induced(std::span<const Vertex> vertices) const {
    std::vector<Vertex> local(vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
    std::vector<Arc> arcs;
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (Vertex v : vertices) {
        labels.push_back(label(v));
        for (Vertex w : out(v))
            if (local[w] >= 0) arcs.push_back({local[v], local[w]});
    }
    return Digraph(vertices.size(), std::move(arcs), std::move(labels));
}

Digraph Digraph::filter_arcs(const std::vector<bool>& keep) const {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < arcs_.size(); ++i)
        if (keep[i]) arcs.push_back(arcs_[i]);
    return Digraph(vertex_count(), std::move(arcs), labels_);
}

Digraph Digraph::reversed() const {
    std::vector<Arc> arcs;
    arcs.reserve(arcs_.size());
    for (const Arc& a : arcs_) arcs.push_back(a.reversed());
    return Digraph(vertex_count(), std::move(arcs), labels_);
}

bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertex_count() == b.vertex_count() && a.arcs_ == b.arcs_ &&
           a.resolved_labels() == b.resolved_labels();
}

bool is_directed_cycle(const Digraph& g, std::span<const Vertex> cycle) {
    if (cycle.size() < 2) return false;
    std::unordered_set<Vertex> seen;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex v = cycle[i];
        if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count() || !seen.insert(v).second) return false;
        if (!g.has_arc(v, cycle[(i + 1) % cycle.size()])) return false;
    }
    return true;
}

Digraph parse_edge_list(std::string_view text) {
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<Arc> arcs;
    std::vector<std::vector<Vertex>> seen_out;
    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.emplace(token, static_cast<Vertex>(labels.size()));
        if (inserted) {
            labels.push_back(token);
            seen_out.emplace_back();
        }
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::istringstream tokens{std::string(line)};
        std::string first;
        if (!(tokens >> first) || first.front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        std::string second, extra;
        if (!(tokens >> second)) throw ParseError(line_no, "expected 'tail head', got one token");
        if (tokens >> extra && extra.front() != '#')
            throw ParseError(line_no, "expected 'tail head', got extra token '" + extra + "'");
        if (first == second) throw ParseError(line_no, "loop arc at '" + first + "'");
        Vertex t = intern(first);
        Vertex h = intern(second);
        auto& outs = seen_out[t];
        if (std::find(outs.begin(), outs.end(), h) != outs.end())
            throw ParseError(line_no, "duplicate arc " + first + " -> " + second);
        outs.push_back(h);
        arcs.push_back({t, h});
        if (end == text.size()) break;
    }
    const std::size_t n = labels.size();
    return Digraph(n, std::move(arcs), std::move(labels));
}

std::string serialize_edge_list(const Digraph& g) {
    std::string out;
    for (const Arc& a : g.arcs()) {
        out += g.label(a.tail);
        out += ' ';
        out += g.label(a.head);
        out += '\n';
    }
    return out;
}

Digraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
}

}  // namespace tricyclic
