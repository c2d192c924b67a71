// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Exact combinatorial checks; tolerances are equalities.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "omc/classify.hpp"
#include "omc/cli.hpp"
#include "omc/committees.hpp"
#include "omc/graphs.hpp"
#include "omc/io.hpp"
#include "omc/topes.hpp"
#include "support.hpp"

using namespace omc;
using namespace omc::test;

namespace {

struct Harness {
    int failures = 0;
    std::ostringstream detail;

    void check(bool condition, const std::string& what) {
        if (!condition) {
            ++failures;
            detail << "    check failed: " << what << "\n";
        }
    }

    template <typename T, typename U>
    void check_eq(const T& got, const U& want, const std::string& what) {
        check(got == want, what);
    }
};

using Criterion = std::function<void(Harness&)>;

bool run_criterion(int number, const std::string& title, double budget_seconds,
                   const Criterion& body) {
    Harness h;
    auto start = std::chrono::steady_clock::now();
    try {
        body(h);
    } catch (const std::exception& e) {
        ++h.failures;
        h.detail << "    exception: " << e.what() << "\n";
    }
    auto stop = std::chrono::steady_clock::now();
    double elapsed = std::chrono::duration<double>(stop - start).count();
    if (elapsed >= budget_seconds) {
        ++h.failures;
        h.detail << "    runtime " << elapsed << "s exceeds budget " << budget_seconds
                 << "s\n";
    }
    bool pass = h.failures == 0;
    std::printf("[%s] criterion %d: %s (%.3fs)\n", pass ? "PASS" : "FAIL", number,
                title.c_str(), elapsed);
    if (!pass) std::fputs(h.detail.str().c_str(), stdout);
    return pass;
}

MaximalChain example_chain(const OrientedMatroid& n0) {
    std::ifstream f(fixture_path("example-chain.txt"));
    return validate_chain(n0, read_chain_file(f, "example-chain.txt"));
}

// ---------------------------------------------------------------------------

void criterion1(Harness& h) {
    OrientedMatroid n0 = load_fixture_matroid("t0.om");
    OrientedMatroid t2 = load_fixture_matroid("t2.om");
    h.check_eq(reorient(n0, ElementSet::of({1, 2})).topes(), t2.topes(),
               "reorientation of T0 by {1,2} equals the T2 fixture");
    h.check_eq(t2.topes().size(), std::size_t{28}, "T2 has 28 topes");

    // Byte-for-byte through the CLI as well.
    std::istringstream empty;
    std::ostringstream out, err;
    int code = run_cli({"reorient", "-A", "1,2", fixture_path("t0.om")}, empty, out, err);
    h.check_eq(code, 0, "CLI reorient exit code");
    h.check_eq(out.str(), slurp(fixture_path("t2.om")), "CLI output byte-identical to t2.om");
}

void criterion2(Harness& h) {
    OrientedMatroid n0 = load_fixture_matroid("t0.om");
    MaximalChain chain = example_chain(n0);
    h.check_eq(chain.labels, std::vector<int>{3, 1, 4, 6, 2, 5}, "chain fixture labels");
    for (int s = 1; s <= 6; ++s) {
        Committee c = alg3(n0, chain, prefix_sequence(s));
        std::vector<SignVector> expect =
            load_fixture_vectors("k" + std::to_string(s) + ".committee");
        canonicalize(expect);
        h.check_eq(c.members, expect, "alg3 s=" + std::to_string(s) + " equals K" +
                                          std::to_string(s) + "*");
    }
    Committee k6 = alg3(n0, chain, prefix_sequence(6));
    h.check(k6.size() == 1 && k6.members.front() == SignVector::all_plus(6),
            "K6* is the singleton all-plus committee");
}

void criterion3(Harness& h) {
    OrientedMatroid n0 = load_fixture_matroid("t0.om");
    OrientedMatroid n3 = reorient(n0, ElementSet::interval(1, 3));
    CoverGraph g = gamma(n3);
    std::vector<SignVector> cycle = load_fixture_vectors("five-cycle.txt");
    h.check_eq(cycle.size(), std::size_t{5}, "fixture lists five vertices");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int a = g.index_of(cycle[i]);
        int b = g.index_of(cycle[(i + 1) % cycle.size()]);
        h.check(g.graph.has_edge(a, b), "5-cycle edge " + cycle[i].str() + " -- " +
                                            cycle[(i + 1) % cycle.size()].str());
    }
    h.check(is_p_committee(n3, cycle, Rational(1, 2)).is_committee,
            "5-cycle vertex set is a tope committee for N3");
}

void criterion4(Harness& h) {
    OrientedMatroid n2 = load_fixture_matroid("t2.om");
    SignVector base = SignVector::parse("+--+++");
    h.check_eq(filter_O(n2, base), load_fixture_vectors("filter-O.txt"),
               "O(B) equals the 7-tope filter fixture");
    h.check_eq(antichain_G(n2, base), load_fixture_vectors("filter-G.txt"),
               "G(B) equals the 3-tope antichain fixture");
}

void criterion5(Harness& h) {
    OrientedMatroid n2 = load_fixture_matroid("t2.om");
    CoverGraph g = gamma_maxplus(n2);
    h.check_eq(g.vertices, load_fixture_vectors("maxplus-vertices.txt"),
               "gamma_max vertices equal the fixture list");
    StructureReport report = structure_report(g.graph);
    h.check(report.connected, "gamma_max connected");
    h.check(report.min_degree >= 2, "gamma_max min degree >= 2");
    h.check(report.bridges.empty(), "gamma_max bridge-free");
    h.check(!report.bipartite, "gamma_max non-bipartite");
}

void criterion6(Harness& h) {
    std::ifstream f(fixture_path("training-rank2.om"));
    MatroidFile file = read_matroid_file(f, "training-rank2.om");
    TrainingSet s = make_training_set(matroid_from_file(file), *file.minus_labels);
    OrientedMatroid m = reorient_training(s);
    Committee committee = make_committee(load_fixture_vectors("training-committee.txt"));
    h.check(is_committee(m, committee.members).is_committee,
            "fixture committee verifies for the reoriented training set");

    Extension ext_c = localization_from_realization(m, {Rational(2), Rational(-1)});
    LiftResult lift = lift_committee(s, committee, ext_c);
    h.check(lift.conformal, "extension (c) is conformal");
    std::vector<SignVector> expect{SignVector::parse("+---+"), SignVector::parse("-++--"),
                                   SignVector::parse("++++-")};
    canonicalize(expect);
    h.check_eq(lift.lifted, expect, "lifted committee equals the golden set");
    h.check(decide(s, committee, ext_c, 5) == Sign::minus,
            "pattern 5 classified as class A under extension (c)");

    Extension ext_d = localization_from_realization(m, {Rational(1), Rational(-2)});
    LiftResult lift_d = lift_committee(s, committee, ext_d);
    h.check(!lift_d.conformal, "extension (d) triggers the non-conformal fallback");
    h.check(decide(s, committee, ext_d, 5) == Sign::zero,
            "pattern 5 unclassified under extension (d)");
}

void criterion7(Harness& h) {
    std::mt19937_64 rng(1234502);
    auto pick = [&rng](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };

    const int instances = 200;
    int rank2_alg1_checked = 0;
    int corollary_checked = 0;

    for (int trial = 0; trial < instances; ++trial) {
        const int dim = trial % 2 == 0 ? 2 : 3;
        const int m = 4 + trial % 5; // 4..8
        Realization r = random_simple_realization(rng, m, dim, true);
        OrientedMatroid n0 = OrientedMatroid::from_realization(r);
        if (!structural_predicates(n0).acyclic || !structural_predicates(n0).simple) {
            h.check(false, "generator produced a non-acyclic or non-simple instance");
            continue;
        }

        // |T_e^+| = |T|/2 for every element.
        for (int e = 1; e <= m; ++e)
            h.check(positive_halfspace(n0, e).size() == n0.topes().size() / 2,
                    "halfspace cardinality |T|/2");

        // Random chain from the all-plus tope.
        MaximalChain chain = random_maximal_chain(n0, SignVector::all_plus(m), pick);
        SymmetricCycle cycle = symmetric_cycle_from_chain(chain);
        const int s = 1 + pick(m);

        // alg3 output = max+ of the reoriented cycle (exact set equality),
        // with the size bounds.
        Committee via_alg3 = alg3(n0, chain, prefix_sequence(s));
        ElementSet prefix = ElementSet::interval(1, s);
        SymmetricCycle reoriented_cycle = cycle;
        for (auto& t : reoriented_cycle.topes) t = t.reoriented(prefix);
        h.check_eq(via_alg3.members, maxplus(reoriented_cycle.topes),
                   "alg3 equals max+ of the reoriented symmetric cycle");
        h.check(via_alg3.size() <= (m % 2 == 1 ? m : m - 1), "size bound <= m or m-1");
        if (s <= m / 2) h.check(via_alg3.size() <= 1 + 2 * s, "size bound <= 1+2s");

        // Committee properties of the cycle committee on a random
        // reorientation.
        ElementSet a = random_subset(rng, m);
        OrientedMatroid ma = reorient(n0, a);
        MaximalChain random_chain =
            random_maximal_chain(ma, ma.topes()[static_cast<std::size_t>(
                                     pick(static_cast<int>(ma.topes().size())))], pick);
        SymmetricCycle rc = symmetric_cycle_from_chain(random_chain);
        Committee cc = cycle_committee(ma, rc);
        CommitteeClassification cls = is_committee(ma, cc.members);
        h.check(cls.is_committee, "cycle committee passes the predicate");
        h.check(cc.size() % 2 == 1, "cycle committee has odd size");
        for (long long votes : cc.positive_counts)
            h.check(votes == (cc.size() + 1) / 2, "cycle committee ceil-balance");
        CommitteeClassification full = classify_committee(ma, cc.members);
        h.check(full.is_critical.value_or(false), "cycle committee is critical");

        // Rank 2: alg1 equals max+ of the reoriented topes.
        if (dim == 2) {
            std::vector<int> seq;
            ElementSet net;
            for (int i = 0, len = 1 + pick(2 * m); i < len; ++i) {
                int j = 1 + pick(m);
                seq.push_back(j);
                net = net.sym_diff(ElementSet::single(j));
            }
            Committee c1 = alg1_rank2(n0, seq);
            h.check_eq(c1.members, maxplus(reorient(n0, net).topes()),
                       "alg1 equals max+ of the reoriented tope set");
            ++rank2_alg1_checked;
        }

        // Layer enumeration <=> definition-level predicate (double oracle),
        // exhaustively for k = 1..3.
        if (trial % 10 == 0) {
            auto key = [](const std::vector<SignVector>& members) {
                std::string k;
                for (const auto& t : members) k += t.str() + " ";
                return k;
            };
            for (int k = 1; k <= 3; ++k) {
                std::set<std::string> layer_set;
                for (const auto& members : enumerate_committees(ma, k))
                    layer_set.insert(key(members));
                std::vector<int> idx(static_cast<std::size_t>(k));
                std::function<void(int, int)> scan = [&](int from, int depth) {
                    if (depth == k) {
                        std::vector<SignVector> members;
                        for (int i : idx)
                            members.push_back(ma.topes()[static_cast<std::size_t>(i)]);
                        bool direct = is_committee(ma, members).is_committee;
                        h.check(direct == (layer_set.count(key(members)) > 0),
                                "layer membership equals the committee predicate");
                        return;
                    }
                    for (int i = from; i < static_cast<int>(ma.topes().size()); ++i) {
                        idx[static_cast<std::size_t>(depth)] = i;
                        scan(i + 1, depth + 1);
                    }
                };
                scan(0, 0);
            }
        }

        // Corollary: chain cover topes and the order filters, on non-acyclic
        // reorientations.
        if (!structural_predicates(ma).acyclic) {
            ++corollary_checked;
            std::vector<SignVector> bases = maxplus(ma.topes());
            const SignVector& base = bases[static_cast<std::size_t>(
                pick(static_cast<int>(bases.size())))];
            MaximalChain based = random_maximal_chain(ma, base, pick);
            // (i) + (ii) + rank bound are enforced inside chain_cover_tope.
            ChainCoverTope cover = chain_cover_tope(ma, based);
            h.check(base.positive_part().united(cover.tope.positive_part()) ==
                        ElementSet::full(m),
                    "chain cover tope covers the ground set with the base");
            // (iii): O(B) is an order filter with min = G(B) (enforced in
            // antichain_G); the filters over all bases cover the tope set.
            std::vector<SignVector> covered;
            for (const auto& b : bases)
                for (const auto& t : filter_O(ma, b)) covered.push_back(t);
            canonicalize(covered);
            h.check_eq(covered, ma.topes(), "union of O(B) covers the tope set");
            // (iii) third bullet: O-intersection iff G-intersection.
            for (std::size_t i = 0; i < bases.size(); ++i) {
                for (std::size_t j = i + 1; j < bases.size(); ++j) {
                    auto oi = filter_O(ma, bases[i]);
                    auto oj = filter_O(ma, bases[j]);
                    auto gi = antichain_G(ma, bases[i]);
                    auto gj = antichain_G(ma, bases[j]);
                    auto intersects = [](const std::vector<SignVector>& x,
                                         const std::vector<SignVector>& y) {
                        for (const auto& v : x)
                            if (contains_vector(y, v)) return true;
                        return false;
                    };
                    h.check(intersects(oi, oj) == intersects(gi, gj),
                            "O-filters intersect iff G-antichains intersect");
                }
            }
        }

        // Localization route equals the extended realization's cocircuits.
        {
            std::uniform_int_distribution<int> coeff(-4, 4);
            for (int attempt = 0; attempt < 40; ++attempt) {
                RationalVector g(static_cast<std::size_t>(dim));
                for (auto& v : g) v = coeff(rng);
                Extension ext;
                try {
                    ext = localization_from_realization(n0, g);
                } catch (const Error&) {
                    continue; // degenerate draw
                }
                Realization extended = r;
                extended.rows.push_back(g);
                extended.m += 1;
                OrientedMatroid m_ext = OrientedMatroid::from_realization(extended);
                h.check_eq(ext.extended_cocircuits, m_ext.cocircuits(),
                           "extend(localization) equals the extended realization");
                break;
            }
        }
    }
    h.check(rank2_alg1_checked >= 50, "enough rank-2 alg1 instances exercised");
    h.check(corollary_checked >= 30, "enough non-acyclic corollary instances exercised");
}

void criterion8(Harness& h) {
    OrientedMatroid m = OrientedMatroid::from_realization(
        Realization{4, 2, {{1, 0}, {1, 1}, {0, 1}, {-1, 1}}});

    // Delete an eliminator: a cocircuit pair removed from the covectors.
    std::vector<SignVector> mutated;
    SignVector removed = m.cocircuits().front();
    for (const auto& x : m.covectors())
        if (!(x == removed) && !(x == removed.negated())) mutated.push_back(x);
    ValidationReport l3 = validate_covector_axioms(mutated);
    h.check(!l3.ok(), "L3 mutation detected");
    bool l3_witnessed = false;
    for (const auto& v : l3.violations)
        if (v.axiom == "L3" && v.witness.size() == 2) l3_witnessed = true;
    h.check(l3_witnessed, "L3 violation carries a covector pair witness");

    // Drop a negation from the circuits.
    std::vector<SignVector> missing = m.circuits();
    SignVector gone = missing.back();
    missing.pop_back();
    ValidationReport c1 = validate_circuit_axioms(missing);
    h.check(!c1.ok(), "C1 mutation detected");
    h.check(!c1.violations.empty() && c1.violations.front().axiom == "C1" &&
                c1.violations.front().witness.size() == 1 &&
                c1.violations.front().witness.front() == gone.negated(),
            "C1 violation names the vector whose opposite vanished");

    // Insert the zero vector into the circuits.
    std::vector<SignVector> with_zero = m.circuits();
    with_zero.push_back(SignVector(4));
    ValidationReport c0 = validate_circuit_axioms(with_zero);
    h.check(!c0.ok(), "C0 mutation detected");
    h.check(!c0.violations.empty() && c0.violations.front().axiom == "C0",
            "C0 violation reported");
}

} // namespace

int main() {
    int failures = 0;
    failures += !run_criterion(1, "reorientation golden (T0 -> T2)", 0.1, criterion1);
    failures += !run_criterion(2, "algorithm 3 golden (K1*..K6*)", 0.5, criterion2);
    failures += !run_criterion(3, "golden five-cycle committee in gamma(N3)", 0.5,
                               criterion3);
    failures += !run_criterion(4, "golden order filter and antichain", 0.5, criterion4);
    failures += !run_criterion(5, "golden graph of maximal positive parts", 0.5,
                               criterion5);
    failures += !run_criterion(6, "golden classification scenario", 0.5, criterion6);
    failures += !run_criterion(7, "property suite over 200 random oriented matroids", 300.0,
                               criterion7);
    failures += !run_criterion(8, "axiom validator mutation detection", 1.0, criterion8);
    if (failures == 0)
        std::puts("acceptance: all criteria passed");
    else
        std::printf("acceptance: %d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
