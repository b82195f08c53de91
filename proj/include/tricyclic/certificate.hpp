#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tricyclic/decomposition.hpp"
#include "tricyclic/digraph.hpp"

namespace tricyclic {

namespace certificate {

/// Every block of every strong component, each with a decomposition into pinched leaves.
/// Tree ids are block-local: id i is vertices[i].
struct ThreeCyclic {
    struct Block {
        std::vector<Vertex> vertices;
        DecompositionTree tree;
    };
    std::vector<Block> blocks;
};

struct LongCycle {
    Cycle cycle;
};

struct TwoCycle {
    Vertex u;
    Vertex v;
};

/// A directed cycle whose length is not a multiple of three, found while ringing a block.
struct NotRingable {
    Cycle cycle;
};

struct Diwheel {
    Vertex hub;
    /// Rim in cyclic order; even length, at least four.
    std::vector<Vertex> rim;
};

struct Brancher {
    int variant;
    /// Pattern vertex -> host vertex.
    std::vector<Vertex> map;
};

/// The recognizer rejected a block without finding an offending cycle.
struct NoValidSplit {
    std::vector<Vertex> piece;
    std::string reason;
};

}  // namespace certificate

using Certificate = std::variant<certificate::ThreeCyclic, certificate::LongCycle, certificate::TwoCycle,
                                 certificate::NotRingable, certificate::Diwheel, certificate::Brancher,
                                 certificate::NoValidSplit>;

/// "three_cyclic", "long_cycle", "two_cycle", "not_ringable", "diwheel", "brancher", "no_valid_split".
const char* kind_name(const Certificate& c);
bool is_positive(const Certificate& c);

/// Replays a certificate against g. Returns an empty string when it checks out, else the
/// first discrepancy. NoValidSplit never checks out: it carries no witness.
std::string verify_certificate(const Digraph& g, const Certificate& c);

class NotThreeCyclic : public Error {
public:
    explicit NotThreeCyclic(Certificate c)
        : Error(std::string("digraph is not 3-cyclic: ") + kind_name(c)), certificate_(std::move(c)) {}
    const Certificate& certificate() const noexcept { return certificate_; }

private:
    Certificate certificate_;
};

}  // namespace tricyclic
