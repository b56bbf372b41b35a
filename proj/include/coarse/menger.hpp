#pragma once

#include <cstdint>
#include <optional>

#include "coarse/fatminor.hpp"
#include "coarse/graph.hpp"

namespace coarse {

// Ask for k distinct simple (s,t)-paths whose vertex sets are pairwise at
// distance >= min_distance.
struct SpreadPathQuery {
    VertexSet s, t;
    std::uint32_t k = 1;
    std::uint32_t min_distance = 0;
    SearchBudget budget;
};

struct SpreadPathWitness {
    std::vector<std::vector<Vertex>> paths;      // vertex sequences, s-end first
    Dist min_pairwise_distance;                  // infinity when k = 1
};

struct SpreadVerdict {
    VerdictKind kind;
    std::optional<SpreadPathWitness> witness;
};

// Backtracking search: paths are chosen in strictly increasing lexicographic
// order (so witnesses are sets, not tuples), and each later path must avoid
// the (min_distance - 1)-neighborhood of every earlier one, which is exactly
// the pairwise distance constraint. Sound, and complete within the node
// budget: NoneExhaustive only when the whole ordered space was covered.
// Throws std::invalid_argument on weighted hosts, empty s/t, or k = 0.
SpreadVerdict find_spread_paths(const Graph& g, const SpreadPathQuery& qy);

// Independent ground truth: enumerate every simple (s,t)-path with at most
// path_length_cap vertices (0 means |V(g)|, which covers all simple paths),
// then scan k-subsets for pairwise-compatible ones. Throws when the host has
// more than 40 vertices or when a negative verdict cannot be certified
// because the cap cuts off paths.
SpreadVerdict triple_oracle(const Graph& g, const SpreadPathQuery& qy,
                            std::size_t path_length_cap = 0);

}  // namespace coarse
