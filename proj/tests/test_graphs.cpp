#include <doctest.h>

#include <random>

#include "omc/graphs.hpp"
#include "support.hpp"

using namespace omc;
using namespace omc::test;

TEST_CASE("gamma of N3 contains the golden 5-cycle and is Kneser-isomorphic") {
    OrientedMatroid n0 = load_fixture_matroid("t0.om");
    OrientedMatroid n3 = reorient(n0, ElementSet::interval(1, 3));
    CoverGraph g = gamma(n3);

    std::vector<SignVector> cycle = load_fixture_vectors("five-cycle.txt");
    REQUIRE(cycle.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        int a = g.index_of(cycle[i]);
        int b = g.index_of(cycle[(i + 1) % 5]);
        CHECK(g.graph.has_edge(a, b));
    }
    CHECK(is_committee(n3, cycle).is_committee);

    // Gamma is the Kneser graph of the negative parts.
    std::vector<ElementSet> negatives;
    for (const auto& t : g.vertices) negatives.push_back(t.negative_part());
    Graph kg = kneser(negatives);
    // kneser sorts its family; negatives here are distinct, so compare edge
    // sets through the index mapping induced by sorting.
    std::vector<ElementSet> sorted_neg = negatives;
    std::sort(sorted_neg.begin(), sorted_neg.end());
    auto to_kneser = [&](int v) {
        return static_cast<int>(std::lower_bound(sorted_neg.begin(), sorted_neg.end(),
                                                 negatives[static_cast<std::size_t>(v)]) -
                                sorted_neg.begin());
    };
    CHECK(kg.edges.size() == g.graph.edges.size());
    for (auto [a, b] : g.graph.edges) CHECK(kg.has_edge(to_kneser(a), to_kneser(b)));

    // No edge where both topes are negative somewhere in common.
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
            if (g.vertices[i].negative_part().intersects(g.vertices[j].negative_part()))
                CHECK_FALSE(g.graph.has_edge(static_cast<int>(i), static_cast<int>(j)));
}

TEST_CASE("the all-plus tope is adjacent to every tope in gamma") {
    OrientedMatroid n0 = load_fixture_matroid("t0.om");
    CoverGraph g = gamma(n0);
    int idx = g.index_of(SignVector::all_plus(6));
    CHECK(g.graph.degree(idx) == static_cast<int>(g.vertices.size()) - 1);
}

TEST_CASE("odd cycle committees from gamma") {
    OrientedMatroid n0 = load_fixture_matroid("t0.om");
    OrientedMatroid n3 = reorient(n0, ElementSet::interval(1, 3));
    auto committee = odd_cycle_committee(n3, gamma(n3));
    REQUIRE(committee.has_value());
    CHECK(committee->size() % 2 == 1);
    CHECK(is_committee(n3, committee->members).is_committee);

    // A bipartite toy graph yields nothing.
    CoverGraph toy;
    toy.kind = CoverGraphKind::gamma;
    toy.vertices = {SignVector::parse("-+"), SignVector::parse("+-")};
    canonicalize(toy.vertices);
    toy.graph = Graph::from_edges(2, {{0, 1}});
    OrientedMatroid square = OrientedMatroid::from_topes(
        {SignVector::parse("++"), SignVector::parse("+-"), SignVector::parse("-+"),
         SignVector::parse("--")},
        TopeTrust::trusted);
    CHECK_FALSE(odd_cycle_committee(square, toy).has_value());
}

TEST_CASE("cycle graph G and the odd cycle on max-plus vertices") {
    OrientedMatroid n2 = load_fixture_matroid("t2.om");
    // Reorient the chain fixture's symmetric cycle by {1,2}.
    std::ifstream f(fixture_path("example-chain.txt"));
    OrientedMatroid n0 = load_fixture_matroid("t0.om");
    MaximalChain chain = validate_chain(n0, read_chain_file(f, "example-chain.txt"));
    SymmetricCycle cycle = symmetric_cycle_from_chain(chain);
    for (auto& t : cycle.topes) t = t.reoriented(ElementSet::of({1, 2}));
    validate_cycle(n2, cycle);

    CoverGraph g = cycle_graph_G(n2, cycle);
    CHECK(g.vertices.size() == 12);

    MaxplusCycle odd = odd_cycle_on_maxplus(n2, cycle);
    CHECK_FALSE(odd.degenerate);
    CHECK(odd.vertices.size() % 2 == 1);
    std::vector<SignVector> vertex_set = odd.vertices;
    canonicalize(vertex_set);
    CHECK(vertex_set == maxplus(cycle.topes));
    // The walk is a genuine cycle in G.
    for (std::size_t i = 0; i < odd.vertices.size(); ++i) {
        int a = g.index_of(odd.vertices[i]);
        int b = g.index_of(odd.vertices[(i + 1) % odd.vertices.size()]);
        CHECK(g.graph.has_edge(a, b));
    }
    // Balance: positives among max+ equal ceil(count/2) at every element.
    Committee c = make_committee(vertex_set);
    for (long long votes : c.positive_counts) CHECK(votes == (c.size() + 1) / 2);

    // Degenerate case: a cycle through the all-plus tope.
    SymmetricCycle through_plus = symmetric_cycle_from_chain(chain);
    MaxplusCycle degenerate = odd_cycle_on_maxplus(n0, through_plus);
    CHECK(degenerate.degenerate);
    CHECK(degenerate.vertices.size() == 1);
}

TEST_CASE("gamma_maxplus golden of the reoriented 28-tope example") {
    OrientedMatroid n2 = load_fixture_matroid("t2.om");
    CoverGraph g = gamma_maxplus(n2);
    CHECK(g.vertices == load_fixture_vectors("maxplus-vertices.txt"));

    // Spot-check an edge: {+++-+-, -+++-+} covers E6.
    CHECK(g.graph.has_edge(g.index_of(SignVector::parse("+++-+-")),
                           g.index_of(SignVector::parse("-+++-+"))));

    StructureReport report = structure_report(g.graph);
    CHECK(report.connected);
    CHECK(report.min_degree >= 2);
    CHECK(report.bridges.empty());
    CHECK_FALSE(report.bipartite);
    CHECK(report.every_vertex_on_odd_cycle);

    // Neighborhood of each vertex equals the antichain G(B).
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        std::vector<SignVector> nbhd;
        for (int j : g.graph.adjacency[i]) nbhd.push_back(g.vertices[static_cast<std::size_t>(j)]);
        canonicalize(nbhd);
        CHECK(nbhd == antichain_G(n2, g.vertices[i]));
    }
}

TEST_CASE("structure report basics") {
    Graph single_edge = Graph::from_edges(2, {{0, 1}});
    StructureReport report = structure_report(single_edge);
    CHECK(report.connected);
    CHECK(report.bridges.size() == 1);
    CHECK(report.bipartite);
    CHECK_FALSE(report.odd_girth.has_value());
    CHECK_FALSE(report.every_vertex_on_odd_cycle);

    // Two triangles joined at a cutvertex.
    Graph bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    StructureReport b = structure_report(bowtie);
    CHECK(b.connected);
    CHECK(b.cutvertices == std::vector<int>{2});
    CHECK(b.bridges.empty());
    CHECK_FALSE(b.bipartite);
    CHECK(b.odd_girth == 3);
    CHECK(b.every_vertex_on_odd_cycle);

    // Triangle with a pendant edge: the pendant vertex is on no odd cycle.
    Graph pan = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    StructureReport p = structure_report(pan);
    CHECK_FALSE(p.every_vertex_on_odd_cycle);
    CHECK(p.vertex_on_odd_cycle[0]);
    CHECK_FALSE(p.vertex_on_odd_cycle[3]);
    CHECK(p.bridges.size() == 1);
}

TEST_CASE("gamma_maxplus structural guarantees on random non-acyclic instances") {
    std::mt19937_64 rng(612);
    int done = 0;
    while (done < 200) {
        Realization r = random_simple_realization(rng, 5 + done % 4, done % 2 ? 3 : 2, false);
        OrientedMatroid m = OrientedMatroid::from_realization(r);
        if (structural_predicates(m).acyclic) continue;
        ++done;
        CoverGraph g = gamma_maxplus(m);
        StructureReport report = structure_report(g.graph);
        CHECK(report.connected);
        CHECK(report.min_degree >= 2);
        CHECK(report.bridges.empty());
        CHECK_FALSE(report.bipartite);
        auto committee = odd_cycle_committee(m, g);
        REQUIRE(committee.has_value());
        CHECK(is_committee(m, committee->members).is_committee);
        // The full cover graph also carries odd-cycle committees.
        auto from_gamma = odd_cycle_committee(m, gamma(m));
        REQUIRE(from_gamma.has_value());
        CHECK(is_committee(m, from_gamma->members).is_committee);
    }
}

TEST_CASE("cutvertex sufficient condition reports witnesses") {
    OrientedMatroid n2 = load_fixture_matroid("t2.om");
    CoverGraph g = gamma_maxplus(n2);
    // Take any 2-path (r, b, s).
    int b = 0;
    REQUIRE(g.graph.degree(b) >= 2);
    int rv = g.graph.adjacency[0][0];
    int sv = g.graph.adjacency[0][1];
    CutvertexConditionReport report = cutvertex_condition(
        n2, g.vertices[static_cast<std::size_t>(rv)], g.vertices[0],
        g.vertices[static_cast<std::size_t>(sv)]);
    if (report.hypothesis_holds) {
        // The conclusion must agree with the actual block structure.
        StructureReport s = structure_report(g.graph);
        CHECK(std::find(s.cutvertices.begin(), s.cutvertices.end(), b) == s.cutvertices.end());
    }
}

TEST_CASE("kneser graphs") {
    // Pairwise-intersecting family: edgeless.
    std::vector<ElementSet> family{ElementSet::of({1, 2}), ElementSet::of({2, 3}),
                                   ElementSet::of({1, 3})};
    CHECK(kneser(family).edges.empty());
    // The empty set is disjoint from everything.
    Graph g = kneser({ElementSet{}, ElementSet::of({1})});
    CHECK(g.edges.size() == 1);
}

TEST_CASE("neighborhood complex facets") {
    // Complete graph on 4 vertices: facets are the 3-subsets.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.emplace_back(i, j);
    Graph k4 = Graph::from_edges(4, edges);
    auto facets = neighborhood_facets(k4);
    CHECK(facets.size() == 4);
    for (const auto& f : facets) CHECK(f.size() == 3);

    Graph edgeless = Graph::from_edges(3, {});
    CHECK(neighborhood_facets(edgeless).empty());

    // Facets of gamma_maxplus are among the antichains G(B).
    OrientedMatroid n2 = load_fixture_matroid("t2.om");
    CoverGraph g = gamma_maxplus(n2);
    auto complex_facets = neighborhood_facets(g.graph);
    for (const auto& facet : complex_facets) {
        std::vector<SignVector> facet_topes;
        for (int v : facet) facet_topes.push_back(g.vertices[static_cast<std::size_t>(v)]);
        canonicalize(facet_topes);
        bool is_some_antichain = false;
        for (const auto& b : g.vertices)
            if (facet_topes == antichain_G(n2, b)) is_some_antichain = true;
        CHECK(is_some_antichain);
    }
}

TEST_CASE("hypergraph of max-plus topes") {
    OrientedMatroid n2 = load_fixture_matroid("t2.om");
    Hypergraph h = xi_maxplus(n2);
    CHECK(h.vertices == load_fixture_vectors("maxplus-vertices.txt"));

    // Every gamma_maxplus edge appears as a minimal hyperedge.
    CoverGraph g = gamma_maxplus(n2);
    for (auto [a, b] : g.graph.edges) {
        std::vector<int> pair{a, b};
        CHECK(std::binary_search(h.minimal_edges.begin(), h.minimal_edges.end(), pair));
    }
    // No singleton hyperedge: that would require the all-plus tope.
    for (const auto& edge : h.minimal_edges) CHECK(edge.size() >= 2);
    // Minimality: dropping any vertex breaks the cover.
    const ElementSet full = ElementSet::full(6);
    for (const auto& edge : h.minimal_edges) {
        ElementSet all;
        for (int v : edge) all = all.united(h.vertices[static_cast<std::size_t>(v)].positive_part());
        CHECK(all == full);
        for (std::size_t skip = 0; skip < edge.size(); ++skip) {
            ElementSet partial;
            for (std::size_t i = 0; i < edge.size(); ++i)
                if (i != skip)
                    partial = partial.united(
                        h.vertices[static_cast<std::size_t>(edge[i])].positive_part());
            CHECK_FALSE(partial == full);
        }
    }
}

TEST_CASE("deletion isomorphism check") {
    // A rank-2 oriented matroid is acyclic or totally cyclic; the "neither"
    // case needs rank 3.
    std::mt19937_64 rng(90125);
    int neither = 0, totally = 0;
    while (neither < 6 || totally < 3) {
        Realization r = random_simple_realization(rng, 6, 3, false);
        OrientedMatroid m = OrientedMatroid::from_realization(r);
        StructuralPredicates p = structural_predicates(m);
        if (p.acyclic) continue;
        if (*p.totally_cyclic) {
            if (totally >= 3) continue;
            ++totally;
            DeletionIsoReport report = deletion_isomorphism_check(m);
            CHECK(report.top_covector.is_zero());
            CHECK(report.deletion_is_identity);
            CHECK(report.isomorphic);
        } else {
            if (neither >= 6) continue;
            ++neither;
            DeletionIsoReport report = deletion_isomorphism_check(m);
            CHECK_FALSE(report.top_covector.is_zero());
            CHECK(report.isomorphic);
        }
    }
}
