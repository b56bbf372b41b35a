#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "coarse/fatminor.hpp"
#include "coarse/graph.hpp"

namespace coarse {

// Refuse to materialise graphs larger than this unless the caller raises the
// budget explicitly; the full-scale family grows astronomically in q.
inline constexpr std::size_t kDefaultVertexBudget = std::size_t(1) << 26;

struct TreeLeafPath {
    Graph graph;
    Vertex root = 0;
    std::vector<Vertex> leaves;  // planar left-to-right order
};

// Complete binary tree of depth d plus a path through its leaves in planar
// order. d = 1 gives a triangle.
TreeLeafPath build_tree_leaf_path(std::uint32_t d);

struct GadgetParams {
    std::uint32_t d = 1;  // tree depth
    std::uint32_t s = 1;  // length of every subdivided segment
};

// The bottom gadget: a complete binary tree of depth d whose 2^d leaves hang
// by two length-s pendant paths each onto a bottom path of 2^{d+1}+2 thick
// vertices joined by length-s segments. Leaf i (1-based) attaches to
// p_{2i-1} and p_{2i+2}, so consecutive leaf spans overlap.
struct NGadget {
    Graph graph;
    Vertex root = 0;
    VertexSet tree_vertices;
    std::vector<Vertex> leaves;             // l_1..l_L in planar order
    std::vector<Vertex> pendant_mid_left;   // l_i^-: ceil(s/2) down the left pendant
    std::vector<Vertex> pendant_mid_right;  // l_i^+
    std::vector<Vertex> thick;              // p_1..p_{2L+2}
    std::array<Vertex, 3> S{}, T{};         // S = (root, p_1, p_2); T = (root, p_{2L+2}, p_{2L+1})
    std::vector<std::vector<Vertex>> segments;       // bottom path p_j..p_{j+1}, inclusive
    std::vector<std::vector<Vertex>> pendant_left;   // l_i..p_{2i-1}, inclusive
    std::vector<std::vector<Vertex>> pendant_right;  // l_i..p_{2i+2}, inclusive
};

NGadget build_n_gadget(GadgetParams p, std::size_t vertex_budget = kDefaultVertexBudget);

// Closed-form vertex count of build_n_gadget(p); throws on overflow-scale d.
std::uint64_t n_gadget_vertex_count(GadgetParams p);

struct HGraph {
    Graph graph;
    std::uint32_t n = 0;
    std::vector<Vertex> x;  // x_1..x_n = 0..n-1
    std::vector<Vertex> y;  // y_1..y_n = n..2n-1
};

// Two disjoint copies of K_n joined by the three edges x_1y_1, x_2y_2, x_3y_3.
HGraph build_h(std::uint32_t n);

struct AssemblyParams {
    std::uint32_t n = 4;  // clique size
    std::uint32_t d = 1;  // gadget tree depth
    std::uint32_t s = 1;  // gadget segment length
    std::uint32_t t = 1;  // clique subdivision length
    std::uint32_t c = 1;  // star-to-gadget connector length
};

AssemblyParams paper_params(std::uint32_t q);

// Two t-subdivided K_n "stars" joined through one gadget: the hubs x_1*,x_2*,
// x_3* reach S_1,S_2,S_3 and y_1*,y_2*,y_3* reach T_1,T_2,T_3 by length-c
// paths, and nothing else joins the three regions.
struct GAssembly {
    Graph graph;
    AssemblyParams params;
    std::vector<Vertex> x_hubs, y_hubs;
    VertexSet left_star, right_star, gadget_region;
    NGadget gadget;        // labels in gadget-local ids; add gadget_offset
    Vertex gadget_offset = 0;
    // Subdivided clique edges, indexed like complete_graph(n).edges();
    // each path runs hub_i .. hub_j inclusive.
    std::vector<std::vector<Vertex>> left_spokes, right_spokes;
    // Connector paths, inclusive of both endpoints: x_connectors[i] runs
    // x_hubs[i] .. S_{i+1}, y_connectors[i] runs y_hubs[i] .. T_{i+1}.
    std::array<std::vector<Vertex>, 3> x_connectors, y_connectors;
};

GAssembly build_g(AssemblyParams p, std::size_t vertex_budget = kDefaultVertexBudget);

std::uint64_t g_vertex_count(AssemblyParams p);

// A 2-fat model of build_h(a.params.n) in a.graph: clique branch sets are
// balls of radius ceil(t/4) around the hubs, clique connectors ride the
// spokes, and the three cross connectors thread the gadget (one through the
// root, two leapfrogging strands along the bottom path). Verified internally
// at fatness 2 before returning; throws if verification fails or the
// parameters are below the feasibility bounds d >= 2, s >= 2, t >= 6,
// c >= 4, n >= 4.
MinorModel build_2fat_witness(const GAssembly& a);

}  // namespace coarse
