#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coarse/graph.hpp"

namespace coarse {

// Branch sets indexed by pattern vertex, connector sets indexed by position in
// pattern.edges(), plus the fatness K the model claims.
struct MinorModel {
    std::vector<VertexSet> branch;
    std::vector<VertexSet> connector;
    Rat fatness{0};
};

// Deterministic part ordering: all branch sets (by pattern vertex), then all
// connectors (by pattern edge index).
struct PartRef {
    bool is_connector = false;
    std::uint32_t index = 0;

    friend bool operator==(const PartRef& a, const PartRef& b) {
        return a.is_connector == b.is_connector && a.index == b.index;
    }
    friend bool operator<(const PartRef& a, const PartRef& b) {
        if (a.is_connector != b.is_connector) return !a.is_connector;
        return a.index < b.index;
    }
};

std::string part_name(const Graph& pattern, PartRef p);

enum class ViolationKind {
    MissingPart,
    DisconnectedPart,
    MissingIncidence,
    SeparationTooSmall,
};

struct ModelViolation {
    ViolationKind kind;
    PartRef a, b;   // b meaningful for MissingIncidence / SeparationTooSmall
    Dist achieved;  // for SeparationTooSmall: the witnessing distance (< fatness)
};

struct VerifyReport {
    std::optional<ModelViolation> violation;
    // Minimum separation over all distance-constrained pairs, when it is at
    // most the fatness bound the model was checked against. Empty means every
    // constrained pair is strictly farther than the bound.
    std::optional<Rat> min_separation;
    PartRef min_pair_a, min_pair_b;

    bool ok() const { return !violation.has_value(); }
};

// Checks all model invariants at fatness k. Reports the first violation in
// the deterministic part ordering. Throws std::invalid_argument on index
// mismatches between the model and the pattern.
VerifyReport verify_model(const Graph& g, const Graph& pattern, const MinorModel& m,
                          const Rat& k);

struct SearchBudget {
    std::uint64_t node_limit = 10'000'000;
};

enum class VerdictKind { Found, NoneExhaustive, Inconclusive };

struct SearchVerdict {
    VerdictKind kind;
    std::optional<MinorModel> model;
};

// Backtracking search for a k-fat minor model of the pattern in g. Sound
// (Found models verify) and, within budget, complete over normal-form models
// for k >= 1 on unweighted hosts. Weighted hosts never report NoneExhaustive.
SearchVerdict find_fat_minor(const Graph& g, const Graph& pattern, const Rat& k,
                             SearchBudget budget);

// Brute-force ground truth over all assignments of connected vertex sets,
// with no pruning beyond the definition. Throws when the host exceeds cap.
SearchVerdict exhaustive_oracle(const Graph& g, const Graph& pattern, const Rat& k,
                                std::size_t cap = 10);

struct MergedSets {
    std::vector<VertexSet> sets;
    std::vector<std::size_t> index_map;  // input index -> output index
};

// Greedy cluster merging: while two clusters are at distance < eps, replace
// the pair (A, B) by N^eps[A] union B. Output sets are connected, pairwise at
// distance >= eps, and sandwiched between the input union and its
// (n-m)*eps-neighborhood.
MergedSets merge_close_sets(const Graph& g, const std::vector<VertexSet>& xs, const Rat& eps);

// Lifts a 3-fat model in power_graph(g, k) to a k-fat model in g by growing
// every part by radius floor(k/2) and re-routing connectors as paths. Throws
// std::invalid_argument when m3 is not a 3-fat model in the power graph.
MinorModel inflate_model(const Graph& g, const Graph& pattern, std::uint32_t k,
                         const MinorModel& m3);

}  // namespace coarse
