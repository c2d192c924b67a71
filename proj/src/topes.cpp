#include "omc/topes.hpp"

#include <algorithm>

#include "omc/committees.hpp"

namespace omc {

TopeGraph tope_graph(const OrientedMatroid& m) {
    require_simple(m, "tope_graph");
    TopeGraph g;
    g.vertices = m.topes();
    const int n = static_cast<int>(g.vertices.size());
    g.adjacency.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.vertices[static_cast<std::size_t>(i)]
                    .separation_set(g.vertices[static_cast<std::size_t>(j)])
                    .count() == 1) {
                g.edges.emplace_back(i, j);
                g.adjacency[static_cast<std::size_t>(i)].push_back(j);
                g.adjacency[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    }
    return g;
}

TopePoset::TopePoset(const OrientedMatroid& m, SignVector base) : base_(std::move(base)) {
    if (!m.is_tope(base_))
        fail(ErrorKind::domain, "base " + base_.str() + " is not a tope");
    topes_ = m.topes();
    separations_.reserve(topes_.size());
    for (const auto& t : topes_) separations_.push_back(base_.separation_set(t));
}

int TopePoset::index_of(const SignVector& t) const {
    auto it = std::lower_bound(topes_.begin(), topes_.end(), t, CanonicalLess{});
    if (it == topes_.end() || !(*it == t))
        fail(ErrorKind::domain, t.str() + " is not a tope of this poset");
    return static_cast<int>(it - topes_.begin());
}

std::vector<std::pair<int, int>> TopePoset::covering_pairs() const {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(topes_.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && rank_of(b) == rank_of(a) + 1 && less_eq(a, b))
                out.emplace_back(a, b);
    return out;
}

TopePoset tope_poset(const OrientedMatroid& m, const SignVector& base) {
    require_simple(m, "tope_poset");
    return TopePoset(m, base);
}

namespace {

// Elements whose flip moves T one step up in the poset based at B; ascending.
std::vector<int> increasing_flips(const OrientedMatroid& m, const SignVector& base,
                                  const SignVector& t) {
    std::vector<int> out;
    ElementSet sep = base.separation_set(t);
    for (int e = 1; e <= m.ground_size(); ++e) {
        if (sep.contains(e)) continue;
        if (m.is_tope(t.reoriented(ElementSet::single(e)))) out.push_back(e);
    }
    return out;
}

MaximalChain build_chain(const OrientedMatroid& m, const SignVector& base,
                         const std::function<int(const std::vector<int>&)>& choose) {
    require_simple(m, "maximal_chain");
    if (!m.is_tope(base)) fail(ErrorKind::domain, "base " + base.str() + " is not a tope");
    MaximalChain chain;
    chain.topes.push_back(base);
    SignVector current = base;
    const SignVector target = base.negated();
    while (!(current == target)) {
        std::vector<int> options = increasing_flips(m, base, current);
        if (options.empty())
            fail(ErrorKind::validation,
                 "no rank-increasing neighbor from " + current.str() +
                     "; input tope set is not an oriented matroid tope set");
        int e = choose(options);
        current = current.reoriented(ElementSet::single(e));
        chain.topes.push_back(current);
        chain.labels.push_back(e);
    }
    return chain;
}

} // namespace

MaximalChain maximal_chain(const OrientedMatroid& m, const SignVector& base) {
    return build_chain(m, base, [](const std::vector<int>& options) { return options.front(); });
}

MaximalChain random_maximal_chain(const OrientedMatroid& m, const SignVector& base,
                                  const std::function<int(int)>& pick) {
    return build_chain(m, base, [&pick](const std::vector<int>& options) {
        return options[static_cast<std::size_t>(pick(static_cast<int>(options.size())))];
    });
}

MaximalChain validate_chain(const OrientedMatroid& m, const std::vector<SignVector>& topes) {
    if (topes.size() != static_cast<std::size_t>(m.ground_size()) + 1)
        fail(ErrorKind::validation, "chain must list m+1 topes, got " +
                                        std::to_string(topes.size()));
    MaximalChain chain;
    chain.topes = topes;
    ElementSet seen;
    for (std::size_t i = 0; i < topes.size(); ++i) {
        if (!m.is_tope(topes[i]))
            fail(ErrorKind::validation, "chain member " + topes[i].str() + " is not a tope");
        if (i == 0) continue;
        ElementSet sep = topes[i - 1].separation_set(topes[i]);
        if (sep.count() != 1)
            fail(ErrorKind::validation, "chain step " + topes[i - 1].str() + " -> " +
                                            topes[i].str() + " is not a tope-graph edge");
        int label = sep.elements().front();
        if (seen.contains(label))
            fail(ErrorKind::validation,
                 "chain flips element " + std::to_string(label) + " twice");
        seen.insert(label);
        chain.labels.push_back(label);
    }
    if (!(topes.back() == topes.front().negated()))
        fail(ErrorKind::validation, "chain does not end at the opposite of its base");
    return chain;
}

SymmetricCycle symmetric_cycle_from_chain(const MaximalChain& chain) {
    const int m = chain.length();
    if (m < 1 || chain.topes.size() != static_cast<std::size_t>(m) + 1)
        fail(ErrorKind::validation, "malformed maximal chain");
    SymmetricCycle cycle;
    cycle.topes = chain.topes; // R^0 .. R^m
    for (int k = 1; k <= m - 1; ++k)
        cycle.topes.push_back(chain.topes[static_cast<std::size_t>(k)].negated());
    for (int k = 0; k < m; ++k)
        if (!(cycle.topes[static_cast<std::size_t>(k + m)] ==
              cycle.topes[static_cast<std::size_t>(k)].negated()))
            fail(ErrorKind::internal, "symmetric cycle lost its antipodal pairing");
    return cycle;
}

void validate_cycle(const OrientedMatroid& m, const SymmetricCycle& cycle) {
    const int n = static_cast<int>(cycle.topes.size());
    if (n != 2 * m.ground_size())
        fail(ErrorKind::validation, "symmetric cycle must have 2m vertices, got " +
                                        std::to_string(n));
    for (int k = 0; k < n; ++k) {
        const auto& t = cycle.topes[static_cast<std::size_t>(k)];
        if (!m.is_tope(t))
            fail(ErrorKind::validation, "cycle vertex " + t.str() + " is not a tope");
        if (t.separation_set(cycle.topes[static_cast<std::size_t>((k + 1) % n)]).count() != 1)
            fail(ErrorKind::validation, "cycle vertices " + t.str() + " and " +
                                            cycle.topes[static_cast<std::size_t>((k + 1) % n)]
                                                .str() +
                                            " are not adjacent");
    }
    for (int k = 0; k < n / 2; ++k)
        if (!(cycle.topes[static_cast<std::size_t>(k + n / 2)] ==
              cycle.topes[static_cast<std::size_t>(k)].negated()))
            fail(ErrorKind::validation, "cycle is not antipodally symmetric at position " +
                                            std::to_string(k));
}

std::vector<SignVector> positive_path(const SymmetricCycle& cycle, int e) {
    const int n = static_cast<int>(cycle.topes.size());
    if (e < 1 || e > cycle.ground_size())
        fail(ErrorKind::domain, "element " + std::to_string(e) + " outside the ground set");
    int start = -1;
    for (int k = 0; k < n; ++k) {
        bool here = cycle.topes[static_cast<std::size_t>(k)].at(e) == Sign::plus;
        bool before = cycle.topes[static_cast<std::size_t>((k + n - 1) % n)].at(e) == Sign::plus;
        if (here && !before) {
            start = k;
            break;
        }
    }
    if (start < 0) return {}; // e is a loop: no positive vertices
    std::vector<SignVector> path;
    for (int k = start; cycle.topes[static_cast<std::size_t>(k % n)].at(e) == Sign::plus; ++k)
        path.push_back(cycle.topes[static_cast<std::size_t>(k % n)]);
    int positives = 0;
    for (const auto& t : cycle.topes)
        if (t.at(e) == Sign::plus) ++positives;
    if (static_cast<int>(path.size()) != positives)
        fail(ErrorKind::internal, "positive vertices at element " + std::to_string(e) +
                                      " do not form one path");
    return path;
}

std::vector<SignVector> tconvex_hull(const OrientedMatroid& m,
                                     const std::vector<SignVector>& q) {
    for (const auto& t : q)
        if (!m.is_tope(t)) fail(ErrorKind::domain, t.str() + " is not a tope");
    // Intersect every halfspace containing q. A halfspace T_e^s contains q
    // iff all of q carries sign s at e.
    std::vector<SignVector> hull;
    for (const auto& t : m.topes()) {
        bool inside = true;
        for (int e = 1; e <= m.ground_size() && inside; ++e) {
            bool all_plus = true;
            bool all_minus = true;
            for (const auto& member : q) {
                if (member.at(e) != Sign::plus) all_plus = false;
                if (member.at(e) != Sign::minus) all_minus = false;
            }
            if (all_plus && t.at(e) != Sign::plus) inside = false;
            if (all_minus && t.at(e) != Sign::minus) inside = false;
        }
        if (inside) hull.push_back(t);
    }
    return hull;
}

namespace {

void require_filter_preconditions(const OrientedMatroid& m, const SignVector& base,
                                  const char* op) {
    require_simple(m, op);
    if (structural_predicates(m).acyclic)
        fail(ErrorKind::precondition, std::string(op) + " requires a non-acyclic oriented matroid");
    if (!m.is_tope(base)) fail(ErrorKind::domain, "base " + base.str() + " is not a tope");
    auto mp = maxplus(m.topes());
    if (!contains_vector(mp, base))
        fail(ErrorKind::precondition,
             "base " + base.str() + " does not have an inclusion-maximal positive part");
}

} // namespace

std::vector<SignVector> filter_O(const OrientedMatroid& m, const SignVector& base) {
    require_filter_preconditions(m, base, "filter_O");
    const ElementSet full = ElementSet::full(m.ground_size());
    std::vector<SignVector> out;
    for (const auto& t : m.topes())
        if (base.positive_part().united(t.positive_part()) == full) out.push_back(t);

    // Equivalent description as an intersection of positive halfspaces.
    std::vector<SignVector> via_halfspaces = m.topes();
    for (int e : base.negative_part().elements()) {
        std::vector<SignVector> filtered;
        for (const auto& t : via_halfspaces)
            if (t.at(e) == Sign::plus) filtered.push_back(t);
        via_halfspaces = std::move(filtered);
    }
    if (!(out == via_halfspaces))
        fail(ErrorKind::internal, "filter_O: covering description disagrees with the "
                                  "halfspace intersection");
    return out;
}

std::vector<SignVector> antichain_G(const OrientedMatroid& m, const SignVector& base) {
    require_filter_preconditions(m, base, "antichain_G");
    const ElementSet full = ElementSet::full(m.ground_size());
    std::vector<SignVector> out;
    for (const auto& t : maxplus(m.topes()))
        if (base.positive_part().united(t.positive_part()) == full) out.push_back(t);

    // min O(B) = G(B): verify against the filter and the poset order.
    std::vector<SignVector> filter = filter_O(m, base);
    std::vector<SignVector> minimal;
    for (const auto& t : filter) {
        bool is_min = true;
        for (const auto& s : filter)
            if (!(s == t) && base.separation_set(s).subset_of(base.separation_set(t))) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(t);
    }
    if (!(minimal == out))
        fail(ErrorKind::internal, "antichain_G does not equal min filter_O");
    return out;
}

ChainCoverTope chain_cover_tope(const OrientedMatroid& m, const MaximalChain& chain) {
    const SignVector& base = chain.base();
    require_filter_preconditions(m, chain.base(), "chain_cover_tope");
    const ElementSet full = ElementSet::full(m.ground_size());

    auto covers = [&](const SignVector& t) {
        return base.positive_part().united(t.positive_part()) == full;
    };

    int first = -1;
    for (std::size_t k = 0; k < chain.topes.size(); ++k) {
        if (covers(chain.topes[k])) {
            first = static_cast<int>(k);
            break;
        }
    }
    if (first <= 0)
        fail(ErrorKind::internal, "chain from a max-positive base must reach a covering tope "
                                  "strictly above it");

    // Covering holds along the chain exactly from that tope upward.
    for (std::size_t k = 0; k < chain.topes.size(); ++k)
        if (covers(chain.topes[k]) != (static_cast<int>(k) >= first))
            fail(ErrorKind::internal, "covering is not upward closed along the chain");

    // It is the unique covering tope among the chain members with maximal
    // positive part.
    std::vector<SignVector> chain_maxplus = maxplus(chain.topes);
    int covering_maxplus = 0;
    for (const auto& t : chain_maxplus)
        if (covers(t)) ++covering_maxplus;
    if (covering_maxplus != 1 ||
        !contains_vector(chain_maxplus, chain.topes[static_cast<std::size_t>(first)]))
        fail(ErrorKind::internal, "chain cover tope is not the unique max-positive cover");

    // Rank bound: rank(K) >= 2m - max|T+| - |B+|.
    int cbar = 0;
    for (const auto& t : m.topes()) cbar = std::max(cbar, t.positive_part().count());
    const int rank = first; // |S(B, R^first)|
    if (rank < 2 * m.ground_size() - cbar - base.positive_part().count())
        fail(ErrorKind::internal, "chain cover tope violates the rank lower bound");

    // No two non-base chain members cover the ground set together.
    for (std::size_t i = 1; i < chain.topes.size(); ++i)
        for (std::size_t j = i; j < chain.topes.size(); ++j)
            if (chain.topes[i].positive_part().united(chain.topes[j].positive_part()) == full)
                fail(ErrorKind::internal,
                     "two non-base chain members jointly cover the ground set");

    return {chain.topes[static_cast<std::size_t>(first)], rank};
}

} // namespace omc
