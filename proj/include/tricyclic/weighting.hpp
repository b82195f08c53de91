#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tricyclic/digraph.hpp"
#include "tricyclic/oracle.hpp"
#include "tricyclic/rational.hpp"

namespace tricyclic {

/// Exact value per arc, kept sorted by arc.
struct Weighting {
    std::vector<std::pair<Arc, Rational>> values;

    /// Every arc of g gets `value`.
    static Weighting constant(const Digraph& g, const Rational& value);
    /// values[i] belongs to g.arcs()[i].
    static Weighting from_vector(const Digraph& g, const std::vector<Rational>& values);

    const Rational* find(Arc a) const;
    /// Throws NotAWeighting when the arc carries no value.
    const Rational& at(Arc a) const;
    Rational& at(Arc a);
    bool is_integral() const;
    bool is_zero_one() const;
    /// Values aligned with g.arcs(); throws NotAWeighting unless the arc sets coincide.
    std::vector<Rational> aligned(const Digraph& g) const;

    friend bool operator==(const Weighting&, const Weighting&) = default;
};

/// Arcs that lie on no directed cycle.
class NonCycleArc : public Error {
public:
    NonCycleArc(std::vector<Arc> arcs, const std::string& message) : Error(message), arcs_(std::move(arcs)) {}
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

private:
    std::vector<Arc> arcs_;
};

struct BasisCycle {
    Cycle cycle;
    /// The ear that brought in this cycle's private arc; for the first cycle, the cycle closed up.
    std::vector<Vertex> ear;
    /// Path from the ear's last vertex back to its first inside what was already built.
    std::vector<Vertex> closing;
};

struct CycleBasis {
    std::vector<BasisCycle> cycles;
    std::size_t size() const { return cycles.size(); }
};

/// Directed cycle basis from an ear decomposition of g - marked, followed by one single-arc
/// ear per marked arc, so each marked arc lies on exactly one basis cycle. Size is
/// |E| - |V| + 1. Throws NotStronglyConnected when g or g - marked is not.
CycleBasis cycle_basis(const Digraph& g, const std::vector<Arc>& marked = {});

/// Exact elimination over every directed cycle with right-hand side one; free arcs get 0.
/// Throws CycleBudgetExceeded.
std::optional<Weighting> solve_weighting(const Digraph& g, std::size_t max_cycles = kDefaultMaxCycles);

struct WeightCheck {
    bool valid = false;
    /// First cycle whose sum is not one, with that sum.
    std::optional<Cycle> violation;
    Rational violation_sum;
    explicit operator bool() const { return valid; }
};

/// Checks every directed cycle. Throws NotAWeighting when w is not defined on exactly the
/// arcs of g, CycleBudgetExceeded when there are too many cycles.
WeightCheck verify_weighting(const Digraph& g, const Weighting& w, std::size_t max_cycles = kDefaultMaxCycles);

/// Subtracts delta on the arcs into v and adds it on the arcs out of v.
Weighting shift_potential(const Weighting& w, Vertex v, const Rational& delta);

/// Integer weighting obtained by shifting potentials along an ear decomposition of every
/// strong component; arcs on no cycle are rounded down. Throws NotAWeighting.
Weighting integerize(const Digraph& g, const Weighting& w, std::size_t max_cycles = kDefaultMaxCycles);

/// {0,1} weighting from an integer one by repeatedly moving a cut around a negative arc.
/// Throws NonCycleArc when some arc lies on no cycle and NotAWeighting when w is not an
/// integer weighting.
Weighting to_zero_one(const Digraph& g, const Weighting& w, std::size_t max_cycles = kDefaultMaxCycles);

/// solve, integerize and to_zero_one on the arcs that lie on cycles; other arcs get 0.
std::optional<Weighting> zero_one_weighting(const Digraph& g, std::size_t max_cycles = kDefaultMaxCycles);

/// Cycles C1..Ck in circular order: consecutive ones meet in a directed path, others are
/// vertex-disjoint, and no vertex is on more than two of them.
struct WeakDoubleCycle {
    std::size_t k = 0;
    std::vector<Cycle> cycles;
    /// shared[i] is the path C(i) meets C(i+1) in, indices mod k.
    std::vector<std::vector<Vertex>> shared;
    /// The arcs of the union, sorted.
    std::vector<Arc> arcs;
};

/// Empty string when `d` is a weak k-double-cycle with k >= 3 made of cycles of g whose
/// union has arc set d.arcs; otherwise the first violated condition.
std::string check_weak_double_cycle(const Digraph& g, const WeakDoubleCycle& d);

/// Recognises h (ignoring isolated vertices) as a weak k-double-cycle with k >= 3.
std::optional<WeakDoubleCycle> match_weak_double_cycle(const Digraph& h, std::size_t max_cycles = kDefaultMaxCycles);

/// None when g is weightable. Otherwise deletes arcs in ascending order while the rest stays
/// unweightable and matches what is left. Throws PatternMismatch if that fails to match.
std::optional<WeakDoubleCycle> find_weak_double_cycle(const Digraph& g, std::size_t max_cycles = kDefaultMaxCycles);

}  // namespace tricyclic
