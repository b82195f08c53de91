#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "tricyclic/annular.hpp"
#include "tricyclic/builder.hpp"
#include "tricyclic/connectivity.hpp"
#include "tricyclic/fixtures.hpp"
#include "tricyclic/json_io.hpp"
#include "tricyclic/oracle.hpp"
#include "tricyclic/recognition.hpp"
#include "tricyclic/weighting.hpp"

using namespace tricyclic;
using json::Json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

// Domain-level refusal: the command needs a positive verdict it did not get.
struct Negative {
    std::string reason;
    std::optional<Json> artifact;
};

Digraph load(const std::string& source) {
    if (std::filesystem::is_regular_file(source)) return read_edge_list_file(source);
    if (auto g = fixtures::by_name(source)) return *g;
    throw IoError("'" + source + "' is neither a readable file nor a fixture name");
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("failed writing '" + path + "'");
}

Json arc_json(const Arc& a) { return Json::array({a.tail, a.head}); }

Json check_report(const Digraph& g, int l, std::size_t max_cycles) {
    Json r;
    r["graph"] = json::from_digraph(g);
    const bool strong = !g.empty() && is_strongly_connected(g);
    r["strongly_connected"] = strong;
    r["unbreakable"] = static_cast<bool>(is_unbreakable(g));
    r["ring"] = nullptr;
    r["pinched"] = false;
    if (strong) {
        auto ring = compute_lring(g, l);
        if (const auto* lr = std::get_if<LRing>(&ring)) {
            r["ring"] = json::from_ring(*lr);
            r["pinched"] = is_pinched(*lr);
        } else {
            r["ring_witness"] = std::get<RingConflict>(ring).cycle;
        }
    }
    const Certificate cert = recognize_three_cyclic(g, max_cycles);
    r["three_cyclic"] = is_positive(cert);
    r["certificate"] = json::from_certificate(cert);
    const auto wheel = find_diwheel(g);
    r["diwheel"] = wheel ? json::from_certificate(*wheel) : Json(nullptr);
    const auto brancher = find_brancher(g);
    r["branchers"] = brancher ? json::from_certificate(*brancher) : Json(nullptr);
    if (g.arc_count() > 0) {
        const ActivityMax act = max_activity(g);
        r["max_activity"] = {{"activity", act.activity}, {"arc", arc_json(act.arc)}};
    } else {
        r["max_activity"] = nullptr;
    }
    r["annular"] = nullptr;
    if (is_unbreakable(g)) {
        const AnnularVerdict v = is_three_annular(g);
        r["annular"] = v.annular;
        if (!v.annular) r["annular_reason"] = v.reason;
    }
    const long n = static_cast<long>(g.vertex_count());
    r["arc_count_identity"] = {{"arcs", g.arc_count()},
                               {"two_n_minus_3", 2 * n - 3},
                               {"holds", static_cast<long>(g.arc_count()) == 2 * n - 3}};
    r["strongly_2connected"] = g.vertex_count() >= 3 ? Json(is_strongly_2connected(g)) : Json(nullptr);
    return r;
}

int run_check(const std::vector<std::string>& files, int l, std::size_t max_cycles, unsigned jobs) {
    struct Outcome {
        Json report;
        std::string error;
    };
    std::vector<Outcome> out(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            try {
                Json r;
                r["file"] = files[i];
                const Json report = check_report(load(files[i]), l, max_cycles);
                for (const auto& [k, v] : report.items()) r[k] = v;
                out[i].report = std::move(r);
            } catch (const Error& e) {
                out[i].error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int code = kOk;
    Json all = Json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (!out[i].error.empty()) {
            std::cerr << files[i] << ": " << out[i].error << "\n";
            code = kInputError;
            continue;
        }
        all.push_back(std::move(out[i].report));
    }
    if (files.size() == 1 && code == kOk)
        std::cout << json::dump(all[0]);
    else
        std::cout << json::dump(all);
    return code;
}

Json run_decompose(const Digraph& g, std::size_t max_cycles) {
    if (!is_unbreakable(g)) throw Negative{"digraph is not unbreakable", std::nullopt};
    const Certificate cert = recognize_three_cyclic(g, max_cycles);
    if (!is_positive(cert))
        throw Negative{std::string("digraph is not 3-cyclic: ") + kind_name(cert),
                       json::envelope("certificate", g, json::from_certificate(cert))};
    return json::envelope("tree", g, json::from_tree(decompose(g)));
}

Json run_build(const Digraph& g, bool check_replay) {
    BuildScript s;
    try {
        s = extract_build_script(g);
    } catch (const HypothesisViolated& e) {
        throw Negative{e.what(), std::nullopt};
    }
    if (check_replay) {
        if (!(replay(s) == g)) throw Negative{"script does not replay to the input", std::nullopt};
        std::cerr << "replay: identical to input\n";
    }
    return json::envelope("script", g, json::from_script(s));
}

Json run_draw(const Digraph& g, const std::string& svg_path) {
    AnnularDrawing d;
    try {
        d = synthesize_drawing(g);
    } catch (const NotAnnular& e) {
        throw Negative{e.what(), std::nullopt};
    } catch (const NotUnbreakable& e) {
        throw Negative{e.what(), std::nullopt};
    }
    if (!svg_path.empty()) export_svg(g, d, svg_path);
    return json::envelope("drawing", g, json::from_drawing(d));
}

Json run_weight(const Digraph& g, bool integer, bool zero_one, std::size_t max_cycles) {
    std::optional<Weighting> w;
    std::string stage = "real";
    if (zero_one) {
        w = zero_one_weighting(g, max_cycles);
        stage = "zero_one";
    } else {
        w = solve_weighting(g, max_cycles);
        if (w && integer) {
            w = integerize(g, *w, max_cycles);
            stage = "integer";
        }
    }
    if (!w) {
        const auto obstruction = find_weak_double_cycle(g, max_cycles);
        throw Negative{"digraph is not weightable; it contains a weak " + std::to_string(obstruction->k) +
                           "-double-cycle",
                       json::envelope("obstruction", g, json::from_obstruction(*obstruction))};
    }
    Json j = json::envelope("weighting", g, json::from_weighting(*w));
    j["stage"] = stage;
    return j;
}

Json run_oracle(const Digraph& g, int l, std::size_t max_cycles) {
    const auto cycles = enumerate_cycles(g, max_cycles);
    Json j;
    j["graph"] = json::from_digraph(g);
    j["cycle_count"] = cycles.size();
    j["cycles"] = cycles;
    const auto verdict = oracle_is_l_cyclic(g, l, max_cycles);
    j["l"] = l;
    j["l_cyclic"] = verdict.holds;
    j["witness"] = verdict.witness ? Json(*verdict.witness) : Json(nullptr);
    j["weightable"] = oracle_is_weightable(g, max_cycles);
    return j;
}

std::string generate(const std::string& kind, std::size_t n, std::uint64_t seed, std::size_t pieces,
                     std::size_t piece_size) {
    if (kind == "safe") return serialize_edge_list(random_safely_buildable(seed, n));
    if (kind == "pinched") return serialize_edge_list(random_pinched_sum(seed, pieces, piece_size));
    throw std::invalid_argument("--kind must be 'safe' or 'pinched'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Digraphs whose directed cycles all have length three: recognition, decomposition, "
                 "safe building, annular drawings and weightings."};
    app.require_subcommand(1);

    int l = 3;
    std::size_t max_cycles = kDefaultMaxCycles;
    unsigned jobs = 1;
    std::vector<std::string> files;
    std::string input, output;
    bool check_replay = false, integer = false, zero_one = false;
    std::string kind = "safe";
    std::size_t n = 10, pieces = 3, piece_size = 5;
    std::uint64_t seed = 1;

    auto add_cycles = [&](CLI::App* c) {
        c->add_option("--max-cycles", max_cycles, "Cycle enumeration budget")->check(CLI::PositiveNumber);
    };
    auto* check = app.add_subcommand("check", "Report every verdict for edge-list files or fixture names");
    check->add_option("inputs", files, "Edge-list files or fixture names")->required();
    check->add_option("--l", l, "Ring length")->check(CLI::Range(2, 1000));
    check->add_option("--jobs", jobs, "Files processed in parallel")->check(CLI::PositiveNumber);
    add_cycles(check);

    auto* dec = app.add_subcommand("decompose", "Decomposition tree into 3-pinched pieces");
    dec->add_option("input", input)->required();
    add_cycles(dec);

    auto* build = app.add_subcommand("build", "Safe-building script");
    build->add_option("input", input)->required();
    build->add_flag("--replay", check_replay, "Replay the script and compare with the input");

    auto* draw = app.add_subcommand("draw", "3-annular drawing");
    draw->add_option("input", input)->required();
    draw->add_option("--output", output, "SVG file to write");

    auto* weight = app.add_subcommand("weight", "Weighting with unit cycle sums, or an obstruction");
    weight->add_option("input", input)->required();
    auto* integer_flag = weight->add_flag("--integer", integer, "Integer-valued weighting");
    weight->add_flag("--zero-one", zero_one, "{0,1}-valued weighting")->excludes(integer_flag);
    add_cycles(weight);

    auto* gen = app.add_subcommand("generate", "Random edge list from a seeded generator");
    gen->add_option("--kind", kind, "safe or pinched")->check(CLI::IsMember({"safe", "pinched"}));
    gen->add_option("--n", n, "Vertex count for safe builds")->check(CLI::Range(3, 100000));
    gen->add_option("--seed", seed, "Seed");
    gen->add_option("--pieces", pieces, "Pinched pieces")->check(CLI::Range(1, 100000));
    gen->add_option("--piece-size", piece_size, "Vertices per pinched piece")->check(CLI::Range(3, 100000));
    gen->add_option("--output", output, "Edge-list file to write; standard output otherwise");

    auto* orc = app.add_subcommand("oracle", "Brute-force cycle list and verdicts");
    orc->add_option("input", input)->required();
    orc->add_option("--l", l, "Cycle length")->check(CLI::Range(2, 1000));
    add_cycles(orc);

    auto* ver = app.add_subcommand("verify", "Re-validate JSON artifacts written by this tool");
    ver->add_option("artifacts", files)->required();
    add_cycles(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*check) return run_check(files, l, max_cycles, jobs);
        if (*gen) {
            const std::string text = generate(kind, n, seed, pieces, piece_size);
            if (output.empty())
                std::cout << text;
            else
                write_text(output, text);
            return kOk;
        }
        if (*ver) {
            int code = kOk;
            for (const auto& f : files) {
                const std::string problem = json::verify_artifact(json::parse_text(read_text(f)), max_cycles);
                std::cout << f << ": " << (problem.empty() ? "ok" : problem) << "\n";
                if (!problem.empty()) code = kNegative;
            }
            return code;
        }
        const Digraph g = load(input);
        Json result;
        if (*dec) result = run_decompose(g, max_cycles);
        if (*build) result = run_build(g, check_replay);
        if (*draw) result = run_draw(g, output);
        if (*weight) result = run_weight(g, integer, zero_one, max_cycles);
        if (*orc) result = run_oracle(g, l, max_cycles);
        std::cout << json::dump(result);
        return kOk;
    } catch (const Negative& neg) {
        if (neg.artifact) std::cout << json::dump(*neg.artifact);
        std::cerr << neg.reason << "\n";
        return kNegative;
    } catch (const NotUnbreakable& e) {
        std::cerr << e.what() << "\n";
        return kNegative;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }
}
