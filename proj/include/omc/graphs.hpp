#pragma once

#include <optional>
#include <vector>

#include "omc/committees.hpp"
#include "omc/matroid.hpp"
#include "omc/topes.hpp"

namespace omc {

// Plain undirected graph on vertex indices 0..n-1, no loops or multi-edges.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, lexicographically sorted
    std::vector<std::vector<int>> adjacency; // sorted neighbor lists

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
    bool has_edge(int a, int b) const;
    int degree(int v) const { return static_cast<int>(adjacency[static_cast<std::size_t>(v)].size()); }
};

enum class CoverGraphKind { gamma, cycle_restricted, maxplus_restricted };

// Graph on topes whose edges are the pairs with positive parts jointly
// covering the ground set.
struct CoverGraph {
    CoverGraphKind kind = CoverGraphKind::gamma;
    std::vector<SignVector> vertices; // canonical order
    Graph graph;

    int index_of(const SignVector& t) const;
};

CoverGraph gamma(const OrientedMatroid& m);
CoverGraph gamma_maxplus(const OrientedMatroid& m);
CoverGraph cycle_graph_G(const OrientedMatroid& m, const SymmetricCycle& cycle);

struct MaxplusCycle {
    bool degenerate = false;          // cycle passes through the all-plus tope
    std::vector<SignVector> vertices; // odd cycle in cyclic order
};

// The explicit odd cycle on max+ of a symmetric cycle's vertices (vertices at
// cyclic distance d in position order are joined, where the cycle has 2d+1
// vertices).
MaxplusCycle odd_cycle_on_maxplus(const OrientedMatroid& m, const SymmetricCycle& cycle);

// BFS 2-coloring; on the first color conflict the tree paths give an odd
// cycle whose vertex set is a committee. Empty when the graph is bipartite.
std::optional<Committee> odd_cycle_committee(const OrientedMatroid& m, const CoverGraph& g);

struct StructureReport {
    bool connected = false;
    int min_degree = 0;
    std::vector<std::pair<int, int>> bridges;
    std::vector<int> cutvertices;
    bool bipartite = true;
    std::optional<int> odd_girth;
    std::vector<bool> vertex_on_odd_cycle;
    bool every_vertex_on_odd_cycle = false;
};

StructureReport structure_report(const Graph& g);

// For a max+ cover graph of a simple non-acyclic oriented matroid the
// guarantees (connected, min degree >= 2, bridge-free, non-bipartite) are
// enforced, not just reported.
StructureReport structure_report(const CoverGraph& g);

// Sufficient condition against B being a cutvertex, checked for one 2-path
// (r, b, s) of the max+ cover graph.
struct CutvertexConditionReport {
    bool hypothesis_holds = false;
    std::vector<SignVector> witness; // r', s' when found
};

CutvertexConditionReport cutvertex_condition(const OrientedMatroid& m, const SignVector& r,
                                             const SignVector& b, const SignVector& s);

Graph kneser(const std::vector<ElementSet>& family);

// Facets of the neighborhood complex: inclusion-maximal vertex neighborhoods.
std::vector<std::vector<int>> neighborhood_facets(const Graph& g);

struct Hypergraph {
    std::vector<SignVector> vertices;
    std::vector<std::vector<int>> minimal_edges; // index sets, sorted
};

// Hypergraph of topes with maximal positive parts: minimal subsets whose
// positive parts cover the ground set.
Hypergraph xi_maxplus(const OrientedMatroid& m);

struct DeletionIsoReport {
    SignVector top_covector;        // unique nonnegative covector with maximum positive part
    bool deletion_is_identity = false;
    bool restriction_is_isomorphism = false;
    bool isomorphic = false; // via restriction or exhaustive search
};

DeletionIsoReport deletion_isomorphism_check(const OrientedMatroid& m);

} // namespace omc
