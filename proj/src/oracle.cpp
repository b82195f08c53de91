#include "tricyclic/oracle.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace tricyclic {

namespace {

// Johnson's circuit enumeration restricted, for each root s, to the strong component of s
// in the subdigraph induced on {s, s+1, ...}.
class CycleWalker {
public:
    CycleWalker(const Digraph& g, const std::function<bool(const Cycle&)>& visit, std::size_t max_count)
        : g_(g), visit_(visit), max_count_(max_count), blocked_(g.vertex_count(), false),
          blocked_by_(g.vertex_count()), allowed_(g.vertex_count(), false) {}

    void run() {
        const std::size_t n = g_.vertex_count();
        for (std::size_t s = 0; s < n && !stopped_; ++s) {
            root_ = static_cast<Vertex>(s);
            mark_component();
            if (!has_cycle_at_root()) continue;
            for (std::size_t v = s; v < n; ++v) {
                blocked_[v] = false;
                blocked_by_[v].clear();
            }
            circuit(root_);
        }
    }

private:
    void mark_component() {
        const std::size_t n = g_.vertex_count();
        std::vector<bool> fwd(n, false), bwd(n, false);
        auto sweep = [&](std::vector<bool>& seen, bool forward) {
            std::vector<Vertex> stack{root_};
            seen[root_] = true;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : forward ? g_.out(v) : g_.in(v))
                    if (w >= root_ && !seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
            }
        };
        sweep(fwd, true);
        sweep(bwd, false);
        for (std::size_t v = 0; v < n; ++v) allowed_[v] = fwd[v] && bwd[v];
    }

    bool has_cycle_at_root() const {
        for (Vertex w : g_.out(root_))
            if (allowed_[w]) return true;
        return false;
    }

    void unblock(Vertex v) {
        blocked_[v] = false;
        auto pending = std::move(blocked_by_[v]);
        blocked_by_[v].clear();
        for (Vertex w : pending)
            if (blocked_[w]) unblock(w);
    }

    bool circuit(Vertex v) {
        bool found = false;
        path_.push_back(v);
        blocked_[v] = true;
        for (Vertex w : g_.out(v)) {
            if (stopped_) break;
            if (!allowed_[w]) continue;
            if (w == root_) {
                emit();
                found = true;
            } else if (!blocked_[w] && circuit(w)) {
                found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (Vertex w : g_.out(v))
                if (allowed_[w]) {
                    auto& list = blocked_by_[w];
                    if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
                }
        }
        path_.pop_back();
        return found;
    }

    void emit() {
        if (++count_ > max_count_)
            throw CycleBudgetExceeded("more than " + std::to_string(max_count_) + " directed cycles");
        if (!visit_(path_)) stopped_ = true;
    }

    const Digraph& g_;
    const std::function<bool(const Cycle&)>& visit_;
    std::size_t max_count_;
    std::vector<bool> blocked_;
    std::vector<std::vector<Vertex>> blocked_by_;
    std::vector<bool> allowed_;
    Cycle path_;
    Vertex root_ = 0;
    std::size_t count_ = 0;
    bool stopped_ = false;
};

}  // namespace

void for_each_cycle(const Digraph& g, const std::function<bool(const Cycle&)>& visit, std::size_t max_count) {
    CycleWalker(g, visit, max_count).run();
}

std::vector<Cycle> enumerate_cycles(const Digraph& g, std::size_t max_count) {
    std::vector<Cycle> out;
    for_each_cycle(g, [&](const Cycle& c) { out.push_back(c); return true; }, max_count);
    return out;
}

CyclicVerdict oracle_is_l_cyclic(const Digraph& g, int l, std::size_t max_count) {
    CyclicVerdict verdict;
    for_each_cycle(g, [&](const Cycle& c) {
        if (static_cast<int>(c.size()) != l && (!verdict.witness || c.size() < verdict.witness->size()))
            verdict.witness = c;
        return true;
    }, max_count);
    verdict.holds = !verdict.witness;
    return verdict;
}

bool oracle_is_weightable(const Digraph& g, std::size_t max_count) {
    // Rows are kept in echelon form over the integers; each new row is reduced against them
    // by cross-multiplication and divided by its content. The last column is the right-hand side.
    const std::size_t m = g.arc_count();
    struct Row {
        std::vector<mpz_class> entries;
        std::size_t pivot;
    };
    std::vector<Row> echelon;
    bool consistent = true;
    for_each_cycle(g, [&](const Cycle& c) {
        std::vector<mpz_class> row(m + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) row[g.arc_index({c[i], c[(i + 1) % c.size()]})] = 1;
        row[m] = 1;
        for (const Row& r : echelon) {
            if (row[r.pivot] == 0) continue;
            mpz_class f = row[r.pivot];
            mpz_class p = r.entries[r.pivot];
            for (std::size_t j = 0; j <= m; ++j) row[j] = row[j] * p - r.entries[j] * f;
        }
        std::size_t pivot = 0;
        while (pivot <= m && row[pivot] == 0) ++pivot;
        if (pivot > m) return true;
        if (pivot == m) {
            consistent = false;
            return false;
        }
        mpz_class content = 0;
        for (const auto& x : row) content = gcd(content, x);
        for (auto& x : row) x /= content;
        // Insert keeping pivots ascending so later reductions sweep left to right.
        auto pos = std::find_if(echelon.begin(), echelon.end(), [&](const Row& r) { return r.pivot > pivot; });
        echelon.insert(pos, Row{std::move(row), pivot});
        return true;
    }, max_count);
    return consistent;
}

}  // namespace tricyclic
