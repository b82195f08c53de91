#include "tricyclic/fixtures.hpp"

#include <charconv>

#include "tricyclic/decomposition.hpp"
#include "tricyclic/recognition.hpp"

namespace tricyclic::fixtures {

Digraph t3() { return parse_edge_list("1 2\n2 3\n3 1\n"); }

Digraph c2() { return parse_edge_list("a b\nb a\n"); }

Digraph c6() { return parse_edge_list("1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n"); }

Digraph w4() { return parse_edge_list("h 1\nh 3\n2 h\n4 h\n1 2\n3 2\n3 4\n1 4\n"); }

Digraph brancher(int variant) { return brancher_pattern(variant); }

Digraph double_cycle(int k) {
    if (k < 2) throw std::invalid_argument("double cycle needs k >= 2");
    if (k == 2) return parse_edge_list("v1 v2\nv2 v1\n");
    std::string text;
    for (int i = 1; i <= k; ++i) {
        const std::string a = "v" + std::to_string(i), b = "v" + std::to_string(i % k + 1);
        text += a + " " + b + "\n" + b + " " + a + "\n";
    }
    return parse_edge_list(text);
}

Digraph fan(int k) {
    if (k < 1) throw std::invalid_argument("fan needs k >= 1");
    std::string text = "x y\n";
    for (int i = 1; i <= k; ++i) {
        const std::string w = "w" + std::to_string(i);
        text += "y " + w + "\n" + w + " x\n";
    }
    return parse_edge_list(text);
}

Digraph glue6() {
    const Digraph f = fan(2);
    const Vertex x = *f.find_label("x"), y = *f.find_label("y"), w1 = *f.find_label("w1");
    return special_edge_sum(f, {y, w1}, f, {x, y});
}

Digraph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete digraph needs n >= 1");
    std::vector<Arc> arcs;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i + 1));
        for (int j = 0; j < n; ++j)
            if (i != j) arcs.push_back({i, j});
    }
    return Digraph(static_cast<std::size_t>(n), arcs, labels);
}

Digraph double_wheel() {
    const Digraph w = w4();
    const Vertex h = *w.find_label("h"), one = *w.find_label("1"), two = *w.find_label("2");
    return special_edge_sum(w, {h, one}, w, {two, h});
}

namespace {

std::optional<int> suffix_number(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) return std::nullopt;
    int k = 0;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return k;
}

}  // namespace

std::optional<Digraph> by_name(std::string_view name) {
    if (name == "T3") return t3();
    if (name == "C2") return c2();
    if (name == "C6") return c6();
    if (name == "W4") return w4();
    if (name == "GLUE6") return glue6();
    if (name == "DOUBLE_WHEEL") return double_wheel();
    if (auto k = suffix_number(name, "B"); k && *k >= 1 && *k <= 4) return brancher(*k);
    if (auto k = suffix_number(name, "DC"); k && *k >= 2) return double_cycle(*k);
    if (auto k = suffix_number(name, "FAN_"); k && *k >= 1) return fan(*k);
    if (auto k = suffix_number(name, "FAN"); k && *k >= 1) return fan(*k);
    if (auto k = suffix_number(name, "K"); k && *k >= 1) return complete(*k);
    return std::nullopt;
}

std::vector<std::string> names() {
    return {"T3", "C2", "C6", "W4", "B1", "B2", "B3", "B4", "DC<k>", "FAN<k>", "GLUE6", "K<n>", "DOUBLE_WHEEL"};
}

}  // namespace tricyclic::fixtures
