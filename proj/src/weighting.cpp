#include "tricyclic/weighting.hpp"

#include <algorithm>
#include <queue>

#include "tricyclic/connectivity.hpp"
#include "tricyclic/ears.hpp"

namespace tricyclic {

Weighting Weighting::constant(const Digraph& g, const Rational& value) {
    Weighting w;
    for (const Arc& a : g.arcs()) w.values.emplace_back(a, value);
    return w;
}

Weighting Weighting::from_vector(const Digraph& g, const std::vector<Rational>& values) {
    Weighting w;
    const auto arcs = g.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) w.values.emplace_back(arcs[i], values.at(i));
    return w;
}

const Rational* Weighting::find(Arc a) const {
    auto it = std::lower_bound(values.begin(), values.end(), a,
                               [](const auto& entry, const Arc& key) { return entry.first < key; });
    return it != values.end() && it->first == a ? &it->second : nullptr;
}

const Rational& Weighting::at(Arc a) const {
    const Rational* r = find(a);
    if (!r) throw NotAWeighting("no weight on arc " + std::to_string(a.tail) + "->" + std::to_string(a.head));
    return *r;
}

Rational& Weighting::at(Arc a) { return const_cast<Rational&>(std::as_const(*this).at(a)); }

bool Weighting::is_integral() const {
    return std::all_of(values.begin(), values.end(), [](const auto& e) { return is_integer(e.second); });
}

bool Weighting::is_zero_one() const {
    return std::all_of(values.begin(), values.end(), [](const auto& e) { return e.second == 0 || e.second == 1; });
}

std::vector<Rational> Weighting::aligned(const Digraph& g) const {
    const auto arcs = g.arcs();
    if (values.size() != arcs.size()) throw NotAWeighting("weighting does not cover exactly the arcs of the digraph");
    std::vector<Rational> out;
    out.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (values[i].first != arcs[i]) throw NotAWeighting("weighting does not cover exactly the arcs of the digraph");
        out.push_back(values[i].second);
    }
    return out;
}

namespace {

std::vector<std::size_t> cycle_arc_indices(const Digraph& g, const Cycle& c) {
    std::vector<std::size_t> idx;
    idx.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) idx.push_back(g.arc_index({c[i], c[(i + 1) % c.size()]}));
    return idx;
}

// Reduced row echelon form of the rows seen so far, last column the right-hand side.
class Eliminator {
public:
    explicit Eliminator(std::size_t columns) : m_(columns) {}

    // False once the system has become inconsistent.
    bool add(const std::vector<std::size_t>& ones) {
        std::vector<Rational> row(m_ + 1);
        for (std::size_t i : ones) row[i] = 1;
        row[m_] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = row[pivots_[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j <= m_; ++j)
                if (rows_[r][j] != 0) row[j] -= c * rows_[r][j];
        }
        std::size_t p = 0;
        while (p < m_ && row[p] == 0) ++p;
        if (p == m_) return row[m_] == 0;
        const Rational lead = row[p];
        for (std::size_t j = p; j <= m_; ++j) row[j] /= lead;
        for (auto& other : rows_) {
            const Rational c = other[p];
            if (c == 0) continue;
            for (std::size_t j = p; j <= m_; ++j)
                if (row[j] != 0) other[j] -= c * row[j];
        }
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
        return true;
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(m_);
        for (std::size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = rows_[r][m_];
        return x;
    }

private:
    std::size_t m_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

bool solve_into(const Digraph& g, Eliminator& e, std::size_t max_cycles) {
    bool consistent = true;
    for_each_cycle(
        g,
        [&](const Cycle& c) {
            consistent = e.add(cycle_arc_indices(g, c));
            return consistent;
        },
        max_cycles);
    return consistent;
}

bool weightable(const Digraph& g, std::size_t max_cycles) {
    Eliminator e(g.arc_count());
    return solve_into(g, e, max_cycles);
}

Rational floor_of(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rational(q);
}

void shift(const Digraph& g, std::vector<Rational>& w, Vertex v, const Rational& delta) {
    for (Vertex u : g.in(v)) w[g.arc_index({u, v})] -= delta;
    for (Vertex x : g.out(v)) w[g.arc_index({v, x})] += delta;
}

std::vector<int> component_index(const Digraph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    const auto comps = strong_components(g);
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (Vertex v : comps[i]) comp[v] = static_cast<int>(i);
    return comp;
}

std::vector<Vertex> path_within(const Digraph& g, const Subdigraph& h, Vertex from, Vertex to) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> pred(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<Vertex> queue;
    seen[from] = true;
    queue.push(from);
    while (!queue.empty() && !seen[to]) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.out(v))
            if (!seen[w] && h.arcs[g.arc_index({v, w})]) {
                seen[w] = true;
                pred[w] = v;
                queue.push(w);
            }
    }
    if (!seen[to]) throw NotStronglyConnected("no closing path inside the built subdigraph");
    std::vector<Vertex> path;
    for (Vertex x = to; x != from; x = pred[x]) path.push_back(x);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

CycleBasis cycle_basis(const Digraph& g, const std::vector<Arc>& marked) {
    CycleBasis basis;
    if (!is_strongly_connected(g)) throw NotStronglyConnected("digraph is not strongly connected");
    std::vector<bool> keep(g.arc_count(), true);
    std::vector<Arc> marks = marked;
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    for (const Arc& a : marks) {
        const std::size_t i = g.arc_index(a);
        if (i == g.arc_count()) throw ArcNotPresent("marked arc is not an arc of the digraph");
        keep[i] = false;
    }
    const Digraph rest = g.filter_arcs(keep);
    if (!is_strongly_connected(rest)) throw NotStronglyConnected("digraph minus the marked arcs is not strongly connected");
    if (g.vertex_count() < 2) return basis;

    const EarDecomposition d = ear_decomposition(rest);
    Subdigraph built = Subdigraph::of_cycle(g, d.initial);
    std::vector<Vertex> closed_initial = d.initial;
    closed_initial.push_back(d.initial.front());
    basis.cycles.push_back({canonical_cycle(d.initial), closed_initial, {d.initial.front()}});

    auto add = [&](const std::vector<Vertex>& ear) {
        const std::vector<Vertex> closing = path_within(g, built, ear.back(), ear.front());
        Cycle c(ear.begin(), ear.end() - 1);
        c.insert(c.end(), closing.begin(), closing.end() - 1);
        basis.cycles.push_back({canonical_cycle(std::move(c)), ear, closing});
    };
    for (const Ear& e : d.ears) {
        add(e.vertices);
        built.add_path(g, e.vertices);
    }
    for (const Arc& a : marks) add({a.tail, a.head});
    return basis;
}

std::optional<Weighting> solve_weighting(const Digraph& g, std::size_t max_cycles) {
    Eliminator e(g.arc_count());
    if (!solve_into(g, e, max_cycles)) return std::nullopt;
    return Weighting::from_vector(g, e.solution());
}

WeightCheck verify_weighting(const Digraph& g, const Weighting& w, std::size_t max_cycles) {
    const std::vector<Rational> values = w.aligned(g);
    WeightCheck check;
    check.valid = true;
    for_each_cycle(
        g,
        [&](const Cycle& c) {
            Rational sum = 0;
            for (std::size_t i : cycle_arc_indices(g, c)) sum += values[i];
            if (sum == 1) return true;
            check.valid = false;
            check.violation = c;
            check.violation_sum = sum;
            return false;
        },
        max_cycles);
    return check;
}

Weighting shift_potential(const Weighting& w, Vertex v, const Rational& delta) {
    Weighting out = w;
    for (auto& [arc, value] : out.values) {
        if (arc.head == v) value -= delta;
        if (arc.tail == v) value += delta;
    }
    return out;
}

Weighting integerize(const Digraph& g, const Weighting& w, std::size_t max_cycles) {
    std::vector<Rational> values = w.aligned(g);
    if (!verify_weighting(g, w, max_cycles)) throw NotAWeighting("input fails a cycle sum");

    // Shifting at the head of an arc by its fractional part makes that arc integral.
    auto settle = [&](Vertex tail, Vertex head) {
        const Rational& x = values[g.arc_index({tail, head})];
        if (!is_integer(x)) shift(g, values, head, x - floor_of(x));
    };
    for (const auto& comp : strong_components(g)) {
        if (comp.size() < 2) continue;
        const Digraph h = g.induced(comp);
        const EarDecomposition d = ear_decomposition(h);
        for (std::size_t i = 0; i + 1 < d.initial.size(); ++i) settle(comp[d.initial[i]], comp[d.initial[i + 1]]);
        for (const Ear& e : d.ears)
            for (std::size_t i = 0; i + 2 < e.vertices.size(); ++i) settle(comp[e.vertices[i]], comp[e.vertices[i + 1]]);
    }
    for (Rational& x : values)
        if (!is_integer(x)) x = floor_of(x);
    return Weighting::from_vector(g, values);
}

Weighting to_zero_one(const Digraph& g, const Weighting& w, std::size_t max_cycles) {
    std::vector<Rational> values = w.aligned(g);
    if (!w.is_integral()) throw NotAWeighting("weighting is not integer-valued");
    const auto comp = component_index(g);
    const auto arcs = g.arcs();
    std::vector<Arc> stray;
    for (const Arc& a : arcs)
        if (comp[a.tail] != comp[a.head]) stray.push_back(a);
    if (!stray.empty()) throw NonCycleArc(stray, std::to_string(stray.size()) + " arc(s) lie on no directed cycle");
    if (!verify_weighting(g, w, max_cycles)) throw NotAWeighting("input fails a cycle sum");

    const std::size_t n = g.vertex_count();
    while (true) {
        auto neg = std::find_if(values.begin(), values.end(), [](const Rational& x) { return x < 0; });
        if (neg == values.end()) break;
        const Arc uv = arcs[neg - values.begin()];
        std::vector<bool> in_x(n, false);
        std::vector<Vertex> stack{uv.head};
        in_x[uv.head] = true;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.out(x))
                if (!in_x[y] && values[g.arc_index({x, y})] <= 0) {
                    in_x[y] = true;
                    stack.push_back(y);
                }
        }
        if (in_x[uv.tail]) throw NotAWeighting("a directed cycle has negative weight");
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if (in_x[arcs[i].tail] && !in_x[arcs[i].head]) values[i] -= 1;
            if (!in_x[arcs[i].tail] && in_x[arcs[i].head]) values[i] += 1;
        }
    }
    Weighting out = Weighting::from_vector(g, values);
    if (!out.is_zero_one()) throw NotAWeighting("an arc ended above one");
    return out;
}

std::optional<Weighting> zero_one_weighting(const Digraph& g, std::size_t max_cycles) {
    const auto real = solve_weighting(g, max_cycles);
    if (!real) return std::nullopt;
    const Weighting integral = integerize(g, *real, max_cycles);
    const auto comp = component_index(g);
    std::vector<bool> keep(g.arc_count());
    for (std::size_t i = 0; i < g.arc_count(); ++i) keep[i] = comp[g.arcs()[i].tail] == comp[g.arcs()[i].head];
    const Digraph core = g.filter_arcs(keep);
    Weighting restricted;
    for (const auto& entry : integral.values)
        if (core.has_arc(entry.first)) restricted.values.push_back(entry);
    const Weighting z = to_zero_one(core, restricted, max_cycles);
    Weighting out = Weighting::constant(g, 0);
    for (const auto& [arc, value] : z.values) out.at(arc) = value;
    return out;
}

namespace {

struct CycleSets {
    Cycle cycle;
    std::vector<bool> vertices;
    std::vector<bool> arcs;
    /// step[i]: index of the arc leaving cycle[i].
    std::vector<std::size_t> step;
};

CycleSets sets_of(const Digraph& g, const Cycle& c) {
    CycleSets s{c, std::vector<bool>(g.vertex_count(), false), std::vector<bool>(g.arc_count(), false),
                cycle_arc_indices(g, c)};
    for (Vertex v : c) s.vertices[v] = true;
    for (std::size_t i : s.step) s.arcs[i] = true;
    return s;
}

bool disjoint(const CycleSets& a, const CycleSets& b) {
    for (Vertex v : a.cycle)
        if (b.vertices[v]) return false;
    return true;
}

// The directed path a and b meet in, or nothing when they do not meet in one.
std::optional<std::vector<Vertex>> meeting_path(const CycleSets& a, const CycleSets& b) {
    const std::size_t len = a.cycle.size();
    std::size_t common = 0, common_arcs = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (b.vertices[a.cycle[i]]) ++common;
        if (b.arcs[a.step[i]]) ++common_arcs;
    }
    // Shared arcs of a cycle form paths; their number is common minus common_arcs.
    if (common == 0 || common_arcs + 1 != common) return std::nullopt;
    std::size_t i = 0;
    while (!b.vertices[a.cycle[i]] || b.arcs[a.step[(i + len - 1) % len]]) ++i;
    std::vector<Vertex> path{a.cycle[i]};
    for (; b.arcs[a.step[i]]; i = (i + 1) % len) path.push_back(a.cycle[(i + 1) % len]);
    return path;
}

// Checks the closing conditions on a complete circular sequence.
bool closes(const Digraph& h, const std::vector<const CycleSets*>& seq) {
    std::vector<int> depth(h.vertex_count(), 0);
    std::vector<bool> arcs(h.arc_count(), false);
    for (const CycleSets* c : seq) {
        for (Vertex v : c->cycle)
            if (++depth[v] > 2) return false;
        for (std::size_t j = 0; j < arcs.size(); ++j)
            if (c->arcs[j]) arcs[j] = true;
    }
    if (std::find(arcs.begin(), arcs.end(), false) != arcs.end()) return false;
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        if (depth[v] == 0 && (h.out_degree(static_cast<Vertex>(v)) || h.in_degree(static_cast<Vertex>(v))))
            return false;
    return true;
}

WeakDoubleCycle assemble(const Digraph& h, const std::vector<const CycleSets*>& seq) {
    WeakDoubleCycle d;
    d.k = seq.size();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        d.cycles.push_back(seq[i]->cycle);
        d.shared.push_back(*meeting_path(*seq[i], *seq[(i + 1) % seq.size()]));
    }
    d.arcs.assign(h.arcs().begin(), h.arcs().end());
    return d;
}

}  // namespace

std::string check_weak_double_cycle(const Digraph& g, const WeakDoubleCycle& d) {
    const std::size_t k = d.cycles.size();
    if (k < 3 || d.k != k) return "needs at least three cycles and k equal to their number";
    if (d.shared.size() != k) return "needs one shared path per consecutive pair";
    std::vector<CycleSets> sets;
    for (const Cycle& c : d.cycles) {
        if (!is_directed_cycle(g, c)) return "a listed cycle is not a directed cycle of the digraph";
        sets.push_back(sets_of(g, c));
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (canonical_cycle(d.cycles[i]) == canonical_cycle(d.cycles[j])) return "a cycle is listed twice";
            const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (!consecutive && !disjoint(sets[i], sets[j]))
                return "cycles " + std::to_string(i) + " and " + std::to_string(j) + " are not consecutive but meet";
        }
    for (std::size_t i = 0; i < k; ++i) {
        const auto path = meeting_path(sets[i], sets[(i + 1) % k]);
        if (!path) return "cycles " + std::to_string(i) + " and " + std::to_string((i + 1) % k) + " do not meet in a path";
        if (*path != d.shared[i]) return "shared path " + std::to_string(i) + " is wrong";
    }
    std::vector<int> depth(g.vertex_count(), 0);
    std::vector<Arc> arcs;
    for (const auto& s : sets) {
        for (Vertex v : s.cycle)
            if (++depth[v] > 2) return "a vertex lies on three cycles";
        for (std::size_t j = 0; j < s.arcs.size(); ++j)
            if (s.arcs[j]) arcs.push_back(g.arcs()[j]);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    if (arcs != d.arcs) return "arc list is not the union of the cycles";
    return "";
}

std::optional<WeakDoubleCycle> match_weak_double_cycle(const Digraph& h, std::size_t max_cycles) {
    if (h.arc_count() == 0) return std::nullopt;
    std::vector<CycleSets> all;
    for (const Cycle& c : enumerate_cycles(h, max_cycles)) all.push_back(sets_of(h, c));

    std::vector<const CycleSets*> seq;
    std::vector<bool> used(all.size(), false);
    std::optional<WeakDoubleCycle> found;
    auto extend = [&](auto&& self) -> void {
        const CycleSets& last = *seq.back();
        const std::size_t j = seq.size();
        for (std::size_t c = 0; c < all.size() && !found; ++c) {
            if (used[c] || !meeting_path(last, all[c])) continue;
            bool ok = true;
            for (std::size_t i = 1; i + 1 < j && ok; ++i) ok = disjoint(*seq[i], all[c]);
            if (!ok) continue;
            seq.push_back(&all[c]);
            used[c] = true;
            if (j == 1 || disjoint(*seq[0], all[c])) {
                self(self);
            } else if (meeting_path(*seq[0], all[c]) && closes(h, seq)) {
                found = assemble(h, seq);
            }
            used[c] = false;
            seq.pop_back();
        }
    };
    for (std::size_t c = 0; c < all.size() && !found; ++c) {
        if (!all[c].arcs[0]) continue;
        seq = {&all[c]};
        used[c] = true;
        extend(extend);
        used[c] = false;
    }
    return found;
}

std::optional<WeakDoubleCycle> find_weak_double_cycle(const Digraph& g, std::size_t max_cycles) {
    if (weightable(g, max_cycles)) return std::nullopt;
    std::vector<bool> keep(g.arc_count(), true);
    // Weightability survives arc deletion, so an arc found necessary stays necessary and
    // one ascending pass reaches the same result as restarting after each deletion.
    for (std::size_t i = 0; i < keep.size(); ++i) {
        keep[i] = false;
        if (weightable(g.filter_arcs(keep), max_cycles)) keep[i] = true;
    }
    const Digraph h = g.filter_arcs(keep);
    auto d = match_weak_double_cycle(h, max_cycles);
    if (!d) throw PatternMismatch("minimal unweightable subdigraph is not a weak double-cycle");
    return d;
}

}  // namespace tricyclic
