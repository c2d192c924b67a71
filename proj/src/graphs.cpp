#include "omc/graphs.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>

namespace omc {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.n = n;
    for (auto& [a, b] : edges) {
        if (a == b) fail(ErrorKind::domain, "graph loops are not allowed");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    g.adjacency.assign(static_cast<std::size_t>(n), {});
    for (auto [a, b] : g.edges) {
        g.adjacency[static_cast<std::size_t>(a)].push_back(b);
        g.adjacency[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& list : g.adjacency) std::sort(list.begin(), list.end());
    return g;
}

bool Graph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

int CoverGraph::index_of(const SignVector& t) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), t, CanonicalLess{});
    if (it == vertices.end() || !(*it == t))
        fail(ErrorKind::domain, t.str() + " is not a vertex of this graph");
    return static_cast<int>(it - vertices.begin());
}

namespace {

CoverGraph cover_graph_on(std::vector<SignVector> vertices, int m, CoverGraphKind kind) {
    canonicalize(vertices);
    const ElementSet full = ElementSet::full(m);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i].positive_part().united(vertices[j].positive_part()) == full)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    CoverGraph g;
    g.kind = kind;
    g.graph = Graph::from_edges(static_cast<int>(vertices.size()), std::move(edges));
    g.vertices = std::move(vertices);
    return g;
}

} // namespace

CoverGraph gamma(const OrientedMatroid& m) {
    require_simple(m, "gamma");
    return cover_graph_on(m.topes(), m.ground_size(), CoverGraphKind::gamma);
}

CoverGraph gamma_maxplus(const OrientedMatroid& m) {
    require_simple(m, "gamma_maxplus");
    return cover_graph_on(maxplus(m.topes()), m.ground_size(),
                          CoverGraphKind::maxplus_restricted);
}

CoverGraph cycle_graph_G(const OrientedMatroid& m, const SymmetricCycle& cycle) {
    require_simple(m, "cycle_graph_G");
    validate_cycle(m, cycle);
    return cover_graph_on(cycle.topes, m.ground_size(), CoverGraphKind::cycle_restricted);
}

MaxplusCycle odd_cycle_on_maxplus(const OrientedMatroid& m, const SymmetricCycle& cycle) {
    require_simple(m, "odd_cycle_on_maxplus");
    validate_cycle(m, cycle);
    MaxplusCycle out;

    std::vector<SignVector> members = maxplus(cycle.topes);
    if (contains_vector(members, SignVector::all_plus(m.ground_size()))) {
        out.degenerate = true;
        out.vertices = {SignVector::all_plus(m.ground_size())};
        return out;
    }
    // Cycle positions of the max+ vertices, ascending.
    std::vector<int> positions;
    for (std::size_t k = 0; k < cycle.topes.size(); ++k)
        if (contains_vector(members, cycle.topes[k])) positions.push_back(static_cast<int>(k));
    if (positions.size() != members.size() || positions.size() % 2 == 0)
        fail(ErrorKind::internal, "max+ of a symmetric cycle must be odd-sized");

    // Joining positions at cyclic distance d makes one odd cycle on 2d+1
    // vertices; this is exactly the covering-edge graph restricted to them.
    const int count = static_cast<int>(positions.size());
    const int d = count / 2;
    std::vector<std::pair<int, int>> cycle_edges;
    for (int i = 0; i < count; ++i) {
        int j = (i + d) % count;
        cycle_edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(cycle_edges.begin(), cycle_edges.end());
    cycle_edges.erase(std::unique(cycle_edges.begin(), cycle_edges.end()), cycle_edges.end());

    const ElementSet full = ElementSet::full(m.ground_size());
    std::vector<std::pair<int, int>> covering_edges;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            const auto& a = cycle.topes[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])];
            const auto& b = cycle.topes[static_cast<std::size_t>(positions[static_cast<std::size_t>(j)])];
            if (a.positive_part().united(b.positive_part()) == full)
                covering_edges.emplace_back(i, j);
        }
    if (!(covering_edges == cycle_edges))
        fail(ErrorKind::internal,
             "covering edges among max+ cycle vertices do not form the expected odd cycle");

    // Walk the odd cycle: from position index i step to (i+d) mod count.
    int at = 0;
    for (int step = 0; step < count; ++step) {
        out.vertices.push_back(
            cycle.topes[static_cast<std::size_t>(positions[static_cast<std::size_t>(at)])]);
        at = (at + d) % count;
    }
    return out;
}

std::optional<Committee> odd_cycle_committee(const OrientedMatroid& m, const CoverGraph& g) {
    const Graph& graph = g.graph;
    std::vector<int> color(static_cast<std::size_t>(graph.n), -1);
    std::vector<int> parent(static_cast<std::size_t>(graph.n), -1);

    for (int root = 0; root < graph.n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : graph.adjacency[static_cast<std::size_t>(u)]) {
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] = color[static_cast<std::size_t>(u)] ^ 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] ==
                               color[static_cast<std::size_t>(u)] &&
                           v != parent[static_cast<std::size_t>(u)]) {
                    // Tree paths to the lowest common ancestor close an odd cycle.
                    std::vector<int> pu{u}, pv{v};
                    while (pu.back() != -1) pu.push_back(parent[static_cast<std::size_t>(pu.back())]);
                    while (pv.back() != -1) pv.push_back(parent[static_cast<std::size_t>(pv.back())]);
                    pu.pop_back();
                    pv.pop_back();
                    int lca = -1;
                    for (int a : pu) {
                        if (std::find(pv.begin(), pv.end(), a) != pv.end()) {
                            lca = a;
                            break;
                        }
                    }
                    std::vector<int> cycle_vertices;
                    for (int a : pu) {
                        cycle_vertices.push_back(a);
                        if (a == lca) break;
                    }
                    for (int a : pv) {
                        if (a == lca) break;
                        cycle_vertices.push_back(a);
                    }
                    std::vector<SignVector> members;
                    for (int idx : cycle_vertices)
                        members.push_back(g.vertices[static_cast<std::size_t>(idx)]);
                    if (members.size() % 2 == 0)
                        fail(ErrorKind::internal, "BFS conflict produced an even cycle");
                    Committee committee = make_committee(members);
                    if (!is_committee(m, committee.members).is_committee)
                        fail(ErrorKind::internal,
                             "odd cycle vertex set failed the committee predicate");
                    return committee;
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

struct DfsState {
    const Graph& g;
    std::vector<int> tin, low, parent;
    std::vector<bool> visited;
    std::vector<std::pair<int, int>> bridges;
    std::vector<bool> cut;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;

    explicit DfsState(const Graph& graph)
        : g(graph), tin(static_cast<std::size_t>(graph.n), 0),
          low(static_cast<std::size_t>(graph.n), 0),
          parent(static_cast<std::size_t>(graph.n), -1),
          visited(static_cast<std::size_t>(graph.n), false),
          cut(static_cast<std::size_t>(graph.n), false) {}

    void dfs(int start) {
        // Iterative DFS with an explicit stack of (vertex, neighbor cursor).
        std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
        visited[static_cast<std::size_t>(start)] = true;
        tin[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = timer++;
        int root_children = 0;

        while (!stack.empty()) {
            auto& [u, cursor] = stack.back();
            const auto& neighbors = g.adjacency[static_cast<std::size_t>(u)];
            if (cursor < neighbors.size()) {
                int v = neighbors[cursor++];
                if (v == parent[static_cast<std::size_t>(u)]) continue;
                if (visited[static_cast<std::size_t>(v)]) {
                    if (tin[static_cast<std::size_t>(v)] < tin[static_cast<std::size_t>(u)])
                        edge_stack.emplace_back(u, v); // back edge
                    low[static_cast<std::size_t>(u)] = std::min(
                        low[static_cast<std::size_t>(u)], tin[static_cast<std::size_t>(v)]);
                } else {
                    edge_stack.emplace_back(u, v);
                    parent[static_cast<std::size_t>(v)] = u;
                    visited[static_cast<std::size_t>(v)] = true;
                    tin[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
                    if (u == start) ++root_children;
                    stack.emplace_back(v, 0);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                int p = stack.back().first;
                low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)],
                                                            low[static_cast<std::size_t>(u)]);
                if (low[static_cast<std::size_t>(u)] > tin[static_cast<std::size_t>(p)])
                    bridges.emplace_back(std::min(p, u), std::max(p, u));
                if (low[static_cast<std::size_t>(u)] >= tin[static_cast<std::size_t>(p)]) {
                    if (p != start || root_children > 1) cut[static_cast<std::size_t>(p)] = true;
                    // Pop the block of edges above (p,u).
                    std::vector<std::pair<int, int>> block;
                    while (!edge_stack.empty()) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == std::make_pair(p, u) || e == std::make_pair(u, p)) break;
                    }
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
};

bool block_is_bipartite(const std::vector<std::pair<int, int>>& block) {
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : block) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::map<int, int> color;
    for (const auto& [v, _] : adj) {
        if (color.count(v)) continue;
        color[v] = 0;
        std::deque<int> queue{v};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u]) {
                if (!color.count(w)) {
                    color[w] = color[u] ^ 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

StructureReport structure_report(const Graph& g) {
    StructureReport report;
    report.vertex_on_odd_cycle.assign(static_cast<std::size_t>(g.n), false);
    if (g.n == 0) {
        report.connected = true;
        report.every_vertex_on_odd_cycle = true;
        return report;
    }

    // Connectivity and bipartiteness by BFS.
    std::vector<int> color(static_cast<std::size_t>(g.n), -1);
    int reached = 0;
    report.bipartite = true;
    for (int root = 0; root < g.n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        if (root > 0) report.connected = false;
        color[static_cast<std::size_t>(root)] = 0;
        std::deque<int> queue{root};
        ++reached;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] = color[static_cast<std::size_t>(u)] ^ 1;
                    queue.push_back(v);
                    ++reached;
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    report.bipartite = false;
                }
            }
        }
    }
    report.connected = reached == g.n;

    report.min_degree = g.n == 0 ? 0 : g.degree(0);
    for (int v = 0; v < g.n; ++v) report.min_degree = std::min(report.min_degree, g.degree(v));

    DfsState dfs(g);
    for (int v = 0; v < g.n; ++v)
        if (!dfs.visited[static_cast<std::size_t>(v)]) dfs.dfs(v);
    report.bridges = dfs.bridges;
    std::sort(report.bridges.begin(), report.bridges.end());
    for (int v = 0; v < g.n; ++v)
        if (dfs.cut[static_cast<std::size_t>(v)]) report.cutvertices.push_back(v);

    // A vertex lies on an odd cycle iff one of its biconnected blocks is
    // non-bipartite (a non-bipartite block is 2-connected, and every vertex
    // of a 2-connected non-bipartite graph is on an odd cycle).
    for (const auto& block : dfs.blocks) {
        if (block.size() < 2) continue; // a single edge is bipartite
        if (!block_is_bipartite(block)) {
            for (auto [a, b] : block) {
                report.vertex_on_odd_cycle[static_cast<std::size_t>(a)] = true;
                report.vertex_on_odd_cycle[static_cast<std::size_t>(b)] = true;
            }
        }
    }
    report.every_vertex_on_odd_cycle =
        std::all_of(report.vertex_on_odd_cycle.begin(), report.vertex_on_odd_cycle.end(),
                    [](bool b) { return b; });

    if (!report.bipartite) {
        // Odd girth: shortest odd closed walk over all BFS roots; any such
        // walk contains an odd cycle of at most its length.
        int best = g.n + 1;
        for (int s = 0; s < g.n; ++s) {
            std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
            dist[static_cast<std::size_t>(s)] = 0;
            std::deque<int> queue{s};
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int v : g.adjacency[static_cast<std::size_t>(u)])
                    if (dist[static_cast<std::size_t>(v)] == -1) {
                        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                        queue.push_back(v);
                    }
            }
            for (auto [a, b] : g.edges) {
                if (dist[static_cast<std::size_t>(a)] < 0 || dist[static_cast<std::size_t>(b)] < 0)
                    continue;
                if ((dist[static_cast<std::size_t>(a)] + dist[static_cast<std::size_t>(b)]) % 2 == 0)
                    best = std::min(best,
                                    dist[static_cast<std::size_t>(a)] +
                                        dist[static_cast<std::size_t>(b)] + 1);
            }
        }
        report.odd_girth = best;
    }
    return report;
}

StructureReport structure_report(const CoverGraph& g) {
    StructureReport report = structure_report(g.graph);
    if (g.kind == CoverGraphKind::maxplus_restricted && g.graph.n > 1) {
        if (!report.connected || report.min_degree < 2 || !report.bridges.empty() ||
            report.bipartite)
            fail(ErrorKind::internal,
                 "max+ cover graph lost its structural guarantees");
    }
    return report;
}

CutvertexConditionReport cutvertex_condition(const OrientedMatroid& m, const SignVector& r,
                                             const SignVector& b, const SignVector& s) {
    require_simple(m, "cutvertex_condition");
    const ElementSet full = ElementSet::full(m.ground_size());
    CutvertexConditionReport report;
    const SignVector minus_b = b.negated();
    for (const auto& rp : m.topes()) {
        if (rp == minus_b || !rp.positive_part().subset_of(r.positive_part())) continue;
        if (!(b.positive_part().united(rp.positive_part()) == full)) continue;
        for (const auto& sp : m.topes()) {
            if (sp == minus_b || !sp.positive_part().subset_of(s.positive_part())) continue;
            if (!(b.positive_part().united(sp.positive_part()) == full)) continue;
            if (rp.positive_part().intersected(b.positive_part()).intersected(sp.positive_part())
                    .empty()) {
                report.hypothesis_holds = true;
                report.witness = {rp, sp};
                return report;
            }
        }
    }
    return report;
}

Graph kneser(const std::vector<ElementSet>& family) {
    std::vector<ElementSet> sets = family;
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (!sets[i].intersects(sets[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edges(static_cast<int>(sets.size()), std::move(edges));
}

std::vector<std::vector<int>> neighborhood_facets(const Graph& g) {
    std::vector<std::vector<int>> neighborhoods;
    for (int v = 0; v < g.n; ++v) {
        if (!g.adjacency[static_cast<std::size_t>(v)].empty())
            neighborhoods.push_back(g.adjacency[static_cast<std::size_t>(v)]);
    }
    std::sort(neighborhoods.begin(), neighborhoods.end());
    neighborhoods.erase(std::unique(neighborhoods.begin(), neighborhoods.end()),
                        neighborhoods.end());
    std::vector<std::vector<int>> facets;
    for (const auto& a : neighborhoods) {
        bool maximal = true;
        for (const auto& b : neighborhoods) {
            if (a == b) continue;
            if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) facets.push_back(a);
    }
    return facets;
}

Hypergraph xi_maxplus(const OrientedMatroid& m) {
    require_simple(m, "xi_maxplus");
    if (structural_predicates(m).acyclic)
        fail(ErrorKind::precondition, "xi_maxplus requires a non-acyclic oriented matroid");
    Hypergraph h;
    h.vertices = maxplus(m.topes());
    const int n = static_cast<int>(h.vertices.size());
    if (n > 20)
        fail(ErrorKind::resource, "hypergraph enumeration limited to 20 max+ topes, got " +
                                      std::to_string(n));

    const ElementSet full = ElementSet::full(m.ground_size());
    const std::size_t total = std::size_t{1} << n;
    std::vector<ElementSet> unions(total);
    for (std::size_t mask = 1; mask < total; ++mask) {
        int low = std::countr_zero(mask);
        unions[mask] = unions[mask & (mask - 1)].united(
            h.vertices[static_cast<std::size_t>(low)].positive_part());
    }
    for (std::size_t mask = 1; mask < total; ++mask) {
        if (!(unions[mask] == full)) continue;
        bool minimal = true;
        for (int b = 0; b < n && minimal; ++b)
            if ((mask >> b) & 1)
                if (unions[mask ^ (std::size_t{1} << b)] == full) minimal = false;
        if (!minimal) continue;
        std::vector<int> edge;
        for (int b = 0; b < n; ++b)
            if ((mask >> b) & 1) edge.push_back(b);
        h.minimal_edges.push_back(std::move(edge));
    }
    std::sort(h.minimal_edges.begin(), h.minimal_edges.end());

    // Every covering pair of max+ topes is a minimal hyperedge.
    CoverGraph gm = gamma_maxplus(m);
    for (auto [a, b] : gm.graph.edges) {
        std::vector<int> pair{a, b};
        if (!std::binary_search(h.minimal_edges.begin(), h.minimal_edges.end(), pair))
            fail(ErrorKind::internal, "a max+ cover edge is missing from the minimal hyperedges");
    }
    return h;
}

namespace {

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    if (a.n > 12) fail(ErrorKind::resource, "isomorphism search limited to 12 vertices");

    std::vector<int> perm(static_cast<std::size_t>(a.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < a.n && ok; ++v)
            if (da[static_cast<std::size_t>(v)] != db[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])])
                ok = false;
        for (auto [x, y] : a.edges) {
            if (!ok) break;
            if (!b.has_edge(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]))
                ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

DeletionIsoReport deletion_isomorphism_check(const OrientedMatroid& m) {
    require_simple(m, "deletion_isomorphism_check");
    if (!m.has_covectors())
        fail(ErrorKind::capability, "deletion_isomorphism_check requires covectors");
    StructuralPredicates p = structural_predicates(m);
    if (p.acyclic)
        fail(ErrorKind::precondition,
             "deletion_isomorphism_check requires a non-acyclic oriented matroid");

    DeletionIsoReport report;
    std::vector<SignVector> nonnegative;
    for (const auto& x : m.covectors())
        if (x.is_nonnegative()) nonnegative.push_back(x);
    std::vector<SignVector> tops = maxplus(nonnegative);
    if (tops.size() != 1)
        fail(ErrorKind::validation,
             "expected a unique nonnegative covector with maximum positive part, found " +
                 std::to_string(tops.size()));
    for (const auto& x : nonnegative)
        if (!x.positive_part().subset_of(tops.front().positive_part()))
            fail(ErrorKind::validation,
                 "nonnegative covector positive parts are not dominated by " +
                     tops.front().str());
    report.top_covector = tops.front();

    if (report.top_covector.is_zero()) {
        report.deletion_is_identity = true;
        report.restriction_is_isomorphism = true;
        report.isomorphic = true;
        return report;
    }

    OrientedMatroid rest = deletion(m, report.top_covector.positive_part());
    if (!structural_predicates(rest).totally_cyclic.value_or(false))
        fail(ErrorKind::internal, "deleting the top covector's positive part must leave a "
                                  "totally cyclic minor");
    CoverGraph g_full = gamma_maxplus(m);
    CoverGraph g_rest = gamma_maxplus(rest);

    // Try the natural restriction map first.
    ElementSet keep = ElementSet::full(m.ground_size()).minus(report.top_covector.positive_part());
    bool natural = g_full.vertices.size() == g_rest.vertices.size();
    if (natural) {
        std::vector<int> image(g_full.vertices.size(), -1);
        std::vector<bool> hit(g_rest.vertices.size(), false);
        for (std::size_t i = 0; i < g_full.vertices.size() && natural; ++i) {
            SignVector r = g_full.vertices[i].restricted_to(keep);
            auto it = std::lower_bound(g_rest.vertices.begin(), g_rest.vertices.end(), r,
                                       CanonicalLess{});
            if (it == g_rest.vertices.end() || !(*it == r)) {
                natural = false;
                break;
            }
            std::size_t j = static_cast<std::size_t>(it - g_rest.vertices.begin());
            if (hit[j]) natural = false;
            hit[j] = true;
            image[i] = static_cast<int>(j);
        }
        if (natural) {
            for (std::size_t i = 0; i < g_full.vertices.size() && natural; ++i)
                for (std::size_t j = i + 1; j < g_full.vertices.size(); ++j) {
                    bool e1 = g_full.graph.has_edge(static_cast<int>(i), static_cast<int>(j));
                    bool e2 = g_rest.graph.has_edge(image[i], image[j]);
                    if (e1 != e2) {
                        natural = false;
                        break;
                    }
                }
        }
    }
    report.restriction_is_isomorphism = natural;
    report.isomorphic = natural || graphs_isomorphic(g_full.graph, g_rest.graph);
    return report;
}

} // namespace omc
