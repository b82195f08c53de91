// One line per acceptance criterion: PASS or FAIL, what was counted, and wall time.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tricyclic/annular.hpp"
#include "tricyclic/builder.hpp"
#include "tricyclic/certificate.hpp"
#include "tricyclic/connectivity.hpp"
#include "tricyclic/decomposition.hpp"
#include "tricyclic/fixtures.hpp"
#include "tricyclic/oracle.hpp"
#include "tricyclic/recognition.hpp"
#include "tricyclic/weighting.hpp"

using namespace tricyclic;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    double limit_seconds = 0;  // 0: no time limit
};

std::string first_failure;

bool expect(Outcome& o, bool ok, const std::string& what) {
    if (!ok && o.pass) {
        o.pass = false;
        first_failure = what;
    }
    return ok;
}

// Every cycle sums to one, by the backtracking enumeration in the test oracles.
bool sums_to_one(const Digraph& g, const Weighting& w) {
    for (const Cycle& c : oracle::cycles(g)) {
        Rational s = 0;
        for (std::size_t i = 0; i < c.size(); ++i) s += w.at({c[i], c[(i + 1) % c.size()]});
        if (s != 1) return false;
    }
    return true;
}

bool pinched_three_ring(const Digraph& g, const LRing& r) {
    if (r.parts.size() != 3) return false;
    std::vector<int> part(g.vertex_count(), -1);
    bool has_single = false;
    for (int i = 0; i < 3; ++i) {
        if (r.parts[i].size() == 1) has_single = true;
        for (Vertex v : r.parts[i]) {
            if (v < 0 || v >= static_cast<Vertex>(g.vertex_count()) || part[v] != -1) return false;
            part[v] = i;
        }
    }
    for (int p : part)
        if (p < 0) return false;
    for (const Arc& a : g.arcs())
        if (part[a.head] != (part[a.tail] + 1) % 3) return false;
    return has_single;
}

bool special_in(const Digraph& child, const std::vector<Vertex>& map, Arc arc) {
    const Vertex none = static_cast<Vertex>(child.vertex_count());
    Vertex tail = none, head = none;
    for (Vertex i = 0; i < static_cast<Vertex>(map.size()); ++i) {
        if (map[i] == arc.tail) tail = i;
        if (map[i] == arc.head) head = i;
    }
    if (tail == none || head == none || !child.has_arc(tail, head)) return false;
    return child.out_degree(tail) == 1 || child.in_degree(head) == 1;
}

// Leaves pinched, identified arcs special in both children.
bool tree_ok(const DecompositionTree& t, std::size_t& leaves) {
    if (const auto* leaf = std::get_if<DecompositionTree::Leaf>(&t.node)) {
        ++leaves;
        return pinched_three_ring(leaf->graph, leaf->ring);
    }
    const auto& sum = std::get<DecompositionTree::Sum>(t.node);
    if (!tree_ok(*sum.left, leaves) || !tree_ok(*sum.right, leaves)) return false;
    return special_in(recompose(*sum.left), sum.left_map, sum.arc) &&
           special_in(recompose(*sum.right), sum.right_map, sum.arc);
}

bool synthesizes_valid(const Digraph& g, bool& valid) {
    try {
        valid = static_cast<bool>(validate_drawing(g, synthesize_drawing(g)));
        return true;
    } catch (const NotAnnular&) {
        valid = true;
        return false;
    }
}

std::vector<Digraph> weighting_instances() {
    std::vector<Digraph> out;
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint64_t m = 0; m < corpus::labelled_count(n); ++m) out.push_back(oracle::from_mask(n, m));
    Rng rng(2024);
    for (int i = 0; i < 300; ++i) out.push_back(oracle::random_digraph(rng, 2 + rng.below(7), 1, 2 + rng.below(5)));
    return out;
}

Outcome exhaustive_recognition() {
    Outcome o;
    o.limit_seconds = 60;
    std::size_t total = 0, positive = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint64_t m = 0; m < corpus::labelled_count(n); ++m) {
            const Digraph g = oracle::from_mask(n, m);
            const bool expected = static_cast<bool>(oracle_is_l_cyclic(g, 3));
            expect(o, is_positive(recognize_three_cyclic(g)) == expected,
                   "recognition disagrees on n=" + std::to_string(n) + " mask " + std::to_string(m));
            ++total;
            if (expected) ++positive;
        }
    o.detail = std::to_string(total) + " digraphs, " + std::to_string(positive) + " 3-cyclic";
    return o;
}

Outcome decomposition_round_trip() {
    Outcome o;
    std::vector<Digraph> instances = corpus::safe(250, 501, 4, 40);
    for (const Digraph& g : corpus::pinched(400, 502, 6, 8)) {
        if (instances.size() == 500) break;
        if (g.vertex_count() <= 40) instances.push_back(g);
    }
    expect(o, instances.size() == 500, "fewer than 500 instances");
    std::size_t leaves = 0, sums = 0;
    for (const Digraph& g : instances) {
        const DecompositionTree t = decompose(g);
        if (!t.is_leaf()) ++sums;
        const Digraph back = recompose(t);
        expect(o, back == g && serialize_edge_list(back) == serialize_edge_list(g), "recompose differs");
        expect(o, tree_ok(t, leaves), "leaf not pinched or identified arc not special");
        expect(o, check_tree(t).empty(), "check_tree: " + check_tree(t));
    }
    o.detail = std::to_string(instances.size()) + " instances, " + std::to_string(sums) + " sums, " +
               std::to_string(leaves) + " leaves";
    return o;
}

Outcome safe_building() {
    Outcome o;
    std::size_t count = 0, safe_count = 0;
    auto run = [&](const Digraph& g) {
        if (count == 500 || oracle::has_diwheel(g)) return;
        ++count;
        expect(o, !find_diwheel(g), "find_diwheel reports a wheel the oracle does not see");
        const Digraph back = replay(extract_build_script(g));
        expect(o, serialize_edge_list(back) == serialize_edge_list(g), "replayed script differs");
        const DiwheelFreeReport r = diwheel_free_report(g);
        expect(o, r.agree() && r.no_diwheel && r.ring_pairs_are_trees && r.peel_order_exists &&
                      r.edge_count_is_2n_minus_3,
               "diwheel-free report disagrees");
        expect(o, g.arc_count() == 2 * g.vertex_count() - 3, "arc count is not 2n-3");
    };
    for (const Digraph& g : corpus::safe(250, 504, 3, 40)) run(g);
    safe_count = count;
    for (const Digraph& g : corpus::pinched(1000, 503, 5, 7)) run(g);
    expect(o, count == 500, "fewer than 500 diwheel-free instances");
    o.detail = std::to_string(count) + " diwheel-free instances (" + std::to_string(count - safe_count) +
               " pinched sums)";
    return o;
}

Outcome annularity() {
    Outcome o;
    o.limit_seconds = 120;
    std::size_t unbreakable = 0, annular = 0, corpus_count = 0;
    auto compare = [&](const Digraph& g, bool search) {
        const AnnularVerdict v = is_three_annular(g);
        const bool by_activity = v.three_cyclic && v.diwheel_free && v.max_activity.activity <= 2;
        const bool by_brancher = v.three_cyclic && v.diwheel_free && v.brancher_free;
        bool valid = false;
        const bool by_drawing = synthesizes_valid(g, valid);
        const std::string who = serialize_edge_list(g);
        expect(o, by_activity == by_brancher && by_brancher == by_drawing && by_drawing == v.annular,
               "annularity predicates differ on\n" + who);
        expect(o, v.brancher_agrees, "brancher search disagrees with activity on\n" + who);
        expect(o, valid, "synthesized drawing fails validation on\n" + who);
        if (v.three_cyclic && v.diwheel_free)
            expect(o, v.max_activity.activity == oracle::max_activity(g), "activity differs from oracle on\n" + who);
        if (search) expect(o, oracle::annular_by_search(g) == v.annular, "exhaustive drawing search differs on\n" + who);
        if (v.annular) ++annular;
    };
    for (std::size_t n = 3; n <= 5; ++n)
        for (std::uint64_t m = 0; m < corpus::labelled_count(n); ++m) {
            const Digraph g = oracle::from_mask(n, m);
            if (!oracle::unbreakable(g)) continue;
            ++unbreakable;
            compare(g, true);
        }
    for (const Digraph& g : corpus::mixed(400, 505, 14)) {
        ++corpus_count;
        compare(g, g.vertex_count() <= 9);
    }
    expect(o, !is_three_annular(fixtures::w4()).annular, "W4 accepted");
    for (int variant = 1; variant <= 4; ++variant)
        expect(o, !is_three_annular(fixtures::brancher(variant)).annular,
               "brancher " + std::to_string(variant) + " accepted");
    o.detail = std::to_string(unbreakable) + " unbreakable digraphs n<=5 and " + std::to_string(corpus_count) +
               " corpus instances, " + std::to_string(annular) + " annular; W4 and B1-B4 rejected";
    return o;
}

Outcome weighting_pipeline() {
    Outcome o;
    std::size_t total = 0, weightable = 0;
    for (const Digraph& g : weighting_instances()) {
        ++total;
        const auto real = solve_weighting(g);
        expect(o, real.has_value() == oracle_is_weightable(g), "solve_weighting disagrees with rank oracle");
        if (!real) continue;
        ++weightable;
        expect(o, sums_to_one(g, *real), "real weighting fails");
        const Weighting integral = integerize(g, *real);
        expect(o, integral.is_integral() && sums_to_one(g, integral), "integer weighting fails");
        // to_zero_one rejects arcs on no cycle; zero_one_weighting runs it on the cyclic core.
        bool every_arc_cyclic = true;
        const auto reach = oracle::reachability(g);
        for (const Arc& a : g.arcs()) every_arc_cyclic = every_arc_cyclic && reach[a.head][a.tail];
        const auto zero_one = every_arc_cyclic ? std::optional(to_zero_one(g, integral)) : zero_one_weighting(g);
        expect(o, zero_one && zero_one->is_zero_one() && sums_to_one(g, *zero_one), "{0,1} weighting fails");
    }
    o.detail = std::to_string(weightable) + " weightable of " + std::to_string(total) + " instances";
    return o;
}

Outcome obstructions() {
    Outcome o;
    std::size_t total = 0, infeasible = 0;
    for (const Digraph& g : weighting_instances()) {
        ++total;
        const bool feasible = solve_weighting(g).has_value();
        const auto d = find_weak_double_cycle(g);
        expect(o, feasible == !d.has_value(), "feasibility and obstruction disagree");
        if (!d) continue;
        ++infeasible;
        expect(o, d->k >= 3 && check_weak_double_cycle(g, *d).empty(), "obstruction fails validation");
        expect(o, !oracle_is_weightable(Digraph(g.vertex_count(), d->arcs)), "obstruction is weightable");
    }
    for (int k = 3; k <= 6; ++k) {
        const Digraph dc = fixtures::double_cycle(k);
        const auto d = find_weak_double_cycle(dc);
        expect(o, !solve_weighting(dc) && d && d->k == static_cast<std::size_t>(k) &&
                      d->arcs == oracle::arc_set(dc),
               "DC" + std::to_string(k) + " obstruction is not DC" + std::to_string(k));
    }
    const Digraph dc2 = fixtures::double_cycle(2);
    expect(o, solve_weighting(dc2).has_value() && !find_weak_double_cycle(dc2), "DC2 infeasible");
    o.detail = std::to_string(infeasible) + " obstructions among " + std::to_string(total) +
               " instances; DC3-DC6 obstructed by themselves; DC2 feasible";
    return o;
}

Outcome structural_invariants() {
    Outcome o;
    std::size_t accepted = 0, strongly = 0;
    for (const Digraph& g : corpus::mixed(1200, 506, 30)) {
        if (!is_positive(recognize_three_cyclic(g))) continue;
        ++strongly;
        expect(o, !is_strongly_2connected(g) && !oracle::strongly_2connected(g),
               "3-cyclic digraph is strongly 2-connected");
        if (accepted == 500 || find_diwheel(g)) continue;
        ++accepted;
        expect(o, structural_violations(g).empty(), "library reports a structural violation");
        expect(o, oracle::structural_failures(g) == 0, "oracle reports a structural violation");
    }
    Rng rng(507);
    for (int i = 0; i < 3000; ++i) {
        const Digraph g = oracle::random_digraph(rng, 3 + rng.below(6), 1, 2 + rng.below(3));
        if (!oracle::strongly_connected(g) || !oracle::all_cycles_length(g, 3)) continue;
        ++strongly;
        expect(o, !is_strongly_2connected(g) && !oracle::strongly_2connected(g),
               "3-cyclic digraph is strongly 2-connected");
    }
    expect(o, accepted == 500, "fewer than 500 accepted diwheel-free instances");
    o.detail = std::to_string(accepted) + " accepted diwheel-free instances, " + std::to_string(strongly) +
               " 3-cyclic digraphs checked for strong 2-connectivity";
    return o;
}

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(TRICYCLIC_CLI) + " " + args + " 2>&1";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return out + "\nexit " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / ("tricyclic_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string safe = (dir / "safe.txt").string(), pinched = (dir / "pinched.txt").string();
    run_cli("generate --kind safe --n 25 --seed 9 --output " + safe);
    run_cli("generate --kind pinched --pieces 4 --piece-size 6 --seed 9 --output " + pinched);

    std::vector<std::string> commands;
    for (const std::string& in : {safe, pinched, std::string("GLUE6"), std::string("W4"), std::string("DC4"),
                                 std::string("B2"), std::string("C6")}) {
        commands.push_back("check " + in);
        commands.push_back("decompose " + in);
        commands.push_back("build " + in + " --replay");
        commands.push_back("weight " + in);
        commands.push_back("weight " + in + " --integer");
        commands.push_back("weight " + in + " --zero-one");
        commands.push_back("oracle " + in);
    }
    commands.push_back("check " + safe + " " + pinched + " GLUE6 --jobs 3");
    commands.push_back("generate --kind safe --n 40 --seed 3");
    commands.push_back("generate --kind pinched --pieces 5 --piece-size 7 --seed 3");

    std::size_t compared = 0;
    for (const std::string& c : commands) {
        expect(o, run_cli(c) == run_cli(c), "output differs between runs of: " + c);
        ++compared;
    }
    std::size_t svgs = 0;
    for (const std::string& in : {safe, pinched, std::string("GLUE6"), std::string("FAN3"), std::string("W4")}) {
        const fs::path a = dir / "a.svg", b = dir / "b.svg";
        fs::remove(a);
        fs::remove(b);
        const std::string first = run_cli("draw " + in + " --output " + a.string());
        const std::string second = run_cli("draw " + in + " --output " + b.string());
        expect(o, first == second, "draw output differs for " + in);
        expect(o, fs::exists(a) == fs::exists(b), "SVG written by only one run for " + in);
        if (fs::exists(a)) {
            expect(o, slurp(a) == slurp(b), "SVG differs for " + in);
            ++svgs;
        }
        compared += 2;
    }
    expect(o, svgs >= 2, "fewer than two drawings written");
    for (const std::string& c : {"decompose " + safe, "weight " + pinched + " --zero-one", "build " + safe}) {
        const std::string artifact = run_cli(c);
        std::ofstream(dir / "artifact.json", std::ios::binary) << artifact.substr(0, artifact.rfind("\nexit"));
        const std::string v = "verify " + (dir / "artifact.json").string();
        const std::string first = run_cli(v);
        expect(o, first == run_cli(v), "verify output differs");
        expect(o, first.ends_with("exit 0"), "artifact from '" + c + "' does not verify");
        ++compared;
    }
    fs::remove_all(dir);
    o.detail = std::to_string(compared) + " commands run twice, " + std::to_string(svgs) +
               " SVG drawings, outputs byte-identical";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"exhaustive recognition against the cycle oracle, n <= 5", exhaustive_recognition},
        {"decomposition round trip", decomposition_round_trip},
        {"safe building and diwheel-free equivalences", safe_building},
        {"annularity predicates agree", annularity},
        {"weighting pipeline is exact", weighting_pipeline},
        {"feasibility equals absence of a weak double-cycle", obstructions},
        {"structural invariants on accepted instances", structural_invariants},
        {"CLI determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        first_failure.clear();
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            first_failure = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.limit_seconds > 0 && seconds >= o.limit_seconds && o.pass) {
            o.pass = false;
            first_failure = "over the " + std::to_string(static_cast<int>(o.limit_seconds)) + " s limit";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1f s", seconds);
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
                  << " (" << timing << ")";
        if (!o.pass) std::cout << " -- " << first_failure;
        std::cout << std::endl;
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
