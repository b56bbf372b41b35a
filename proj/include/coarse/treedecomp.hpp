#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coarse/constructions.hpp"
#include "coarse/graph.hpp"

namespace coarse {

struct TreeDecomposition {
    Graph tree;
    std::vector<VertexSet> bags;  // one per tree node
};

enum class TDViolationKind { VertexMissing, EdgeUncovered, OccurrenceDisconnected };

struct TDViolation {
    TDViolationKind kind;
    Vertex vertex = 0;  // for VertexMissing / OccurrenceDisconnected
    Edge edge{0, 0};    // for EdgeUncovered
};

// Checks the three decomposition axioms; empty result means valid. Throws
// std::invalid_argument when td.tree is not a tree, the bag count does not
// match, or a bag references a vertex outside g.
std::optional<TDViolation> validate(const Graph& g, const TreeDecomposition& td);

// max bag size - 1
std::int64_t width(const TreeDecomposition& td);

// Width <= 3 decomposition of build_tree_leaf_path(d), by the leaf-interval
// interface scheme (each internal node contributes five bags of at most four
// vertices keyed by its subtree's extreme leaves).
TreeDecomposition decompose_tree_leaf_path(std::uint32_t d);

// Width <= 7 decomposition of the gadget: the same interval recursion with
// thick-vertex pairs m_j = {p_{2j-1}, p_{2j}} riding along in place of single
// leaves, plus three-vertex chain bags covering every subdivided segment.
TreeDecomposition decompose_n_gadget(const NGadget& ng);

// Exact treewidth by dynamic programming over elimination prefixes.
// Throws when the host exceeds the cap (default 12, hard limit 25).
std::uint32_t exact_treewidth(const Graph& g, std::size_t cap = 12);

}  // namespace coarse
