#pragma once

#include <cstdint>
#include <optional>

#include "coarse/fatminor.hpp"
#include "coarse/graph.hpp"

namespace coarse {

// A vertex-to-vertex map claimed to distort distances by at most a factor /
// additive term q, with q-dense image.
struct VertexMap {
    Graph domain;
    Graph codomain;
    std::vector<Vertex> map;  // codomain vertex per domain vertex
    Rat q{1};
};

enum class QIViolationKind { LowerBound, UpperBound, Density };

struct QIViolation {
    QIViolationKind kind;
    // Domain pair for the bound kinds; u is the uncovered codomain vertex for
    // Density (v unused).
    Vertex u = 0, v = 0;
    Dist achieved;  // codomain distance (bounds) or distance to the image (Density)
    Dist required;  // the bound that failed
};

// Exhaustively checks both displacement inequalities over all vertex pairs
// (lexicographic order, lower bound before upper) and then q-density of the
// image, via one distance sweep per vertex. An infinite distance on one side
// must be infinite on the other. Throws std::invalid_argument on a non-total
// or out-of-range map, or q < 1.
std::optional<QIViolation> check_quasi_isometry(const VertexMap& m);

// The identity map g -> power_graph(g, k) with constant q = k. Unweighted g.
VertexMap identity_into_power(const Graph& g, std::uint32_t k);

// N^{q+1}[map(x)] in the codomain. Requires x connected in the domain and m a
// valid quasi-isometry (both checked); the result is guaranteed connected and
// that guarantee is asserted.
VertexSet expand_image(const VertexMap& m, const VertexSet& x);

struct PushforwardReport {
    MinorModel model;
    // Minimum codomain separation over the distance-constrained part pairs:
    // the pushed model verifies at exactly the fatness values <= achieved.
    Dist achieved;
};

// Pushes every part of mm through expand_image and reports the fatness the
// image model achieves in the codomain. Requires mm to verify in the domain
// at its stated fatness. model.fatness is set to achieved when finite.
PushforwardReport pushforward_model(const VertexMap& m, const Graph& pattern,
                                    const MinorModel& mm);

}  // namespace coarse
