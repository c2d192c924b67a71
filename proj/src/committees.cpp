#include "omc/committees.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace omc {

std::vector<SignVector> maxplus(const std::vector<SignVector>& family) {
    std::vector<SignVector> out;
    for (const auto& x : family) {
        bool maximal = true;
        for (const auto& y : family) {
            if (x.positive_part().subset_of(y.positive_part()) &&
                !(x.positive_part() == y.positive_part())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(x);
    }
    canonicalize(out);
    return out;
}

std::vector<SignVector> minplus(const std::vector<SignVector>& family) {
    std::vector<SignVector> out;
    for (const auto& x : maxplus(family)) out.push_back(x.negated());
    canonicalize(out);
    return out;
}

Committee make_committee(std::vector<SignVector> members) {
    canonicalize(members);
    Committee c;
    if (!members.empty()) {
        c.positive_counts.assign(static_cast<std::size_t>(members.front().size()), 0);
        for (const auto& k : members)
            for (int e : k.positive_part().elements())
                ++c.positive_counts[static_cast<std::size_t>(e - 1)];
    }
    c.members = std::move(members);
    return c;
}

namespace {

void check_members(const OrientedMatroid& m, const std::vector<SignVector>& members) {
    for (const auto& k : members)
        if (!m.is_tope(k))
            fail(ErrorKind::domain, "committee member " + k.str() + " is not a tope");
}

// Positive votes needed for a strict majority above p among `size` members.
long long votes_needed(const Rational& p, long long size) {
    // smallest c with c > p*size
    Rational bound = p * size;
    boost::multiprecision::cpp_int floor_val =
        numerator(bound) / denominator(bound); // exact floor for nonnegative bound
    return floor_val.convert_to<long long>() + 1;
}

} // namespace

CommitteeClassification is_p_committee(const OrientedMatroid& m,
                                       const std::vector<SignVector>& members,
                                       const Rational& p) {
    if (p < 0 || p >= 1) fail(ErrorKind::domain, "p must satisfy 0 <= p < 1");
    check_members(m, members);
    Committee c = make_committee(members);

    CommitteeClassification out;
    out.is_committee = true;
    const long long needed = votes_needed(p, c.size());
    for (int e = 1; e <= m.ground_size(); ++e) {
        long long have =
            c.members.empty() ? 0 : c.positive_counts[static_cast<std::size_t>(e - 1)];
        if (have < needed) {
            out.is_committee = false;
            out.deficiency[e] = needed - have;
        }
    }
    return out;
}

Committee cycle_committee(const OrientedMatroid& m, const SymmetricCycle& cycle) {
    require_simple(m, "cycle_committee");
    validate_cycle(m, cycle);
    Committee c = make_committee(maxplus(cycle.topes));

    // Local description: a cycle vertex belongs to the committee iff every
    // one-element separation inside the cycle leaves it on the + side.
    std::vector<SignVector> local;
    for (const auto& t : cycle.topes) {
        bool keep = true;
        for (const auto& s : cycle.topes) {
            ElementSet sep = t.separation_set(s);
            if (sep.count() == 1 && t.at(sep.elements().front()) != Sign::plus) {
                keep = false;
                break;
            }
        }
        if (keep) local.push_back(t);
    }
    canonicalize(local);
    if (!(local == c.members))
        fail(ErrorKind::internal, "cycle committee disagrees with its local description");

    if (c.size() % 2 == 0)
        fail(ErrorKind::internal, "cycle committee has even cardinality");
    const long long expected = (c.size() + 1) / 2;
    for (long long votes : c.positive_counts)
        if (votes != expected)
            fail(ErrorKind::internal, "cycle committee misses the exact majority balance");
    return c;
}

namespace {

bool is_rank2(const OrientedMatroid& m) {
    if (m.rank() != 0) return m.rank() == 2;
    // For a simple oriented matroid the tope graph of rank 2 is a 2m-cycle.
    return static_cast<int>(m.topes().size()) == 2 * m.ground_size();
}

} // namespace

Committee alg1_rank2(const OrientedMatroid& n0, const std::vector<int>& seq) {
    require_simple(n0, "alg1_rank2");
    if (!is_rank2(n0)) fail(ErrorKind::precondition, "alg1_rank2 requires rank 2");
    if (!structural_predicates(n0).acyclic)
        fail(ErrorKind::precondition, "alg1_rank2 requires an acyclic starting matroid");
    if (seq.empty()) fail(ErrorKind::domain, "empty reorientation sequence");
    for (int j : seq)
        if (j < 1 || j > n0.ground_size())
            fail(ErrorKind::domain, "sequence element " + std::to_string(j) +
                                        " outside the ground set");

    std::vector<SignVector> topes = n0.topes(); // topes of N^{i-1}, kept sorted
    std::vector<SignVector> committee{SignVector::all_plus(n0.ground_size())};

    for (int j : seq) {
        const ElementSet flip = ElementSet::single(j);
        std::vector<SignVector> working = committee; // canonical pick order
        std::vector<SignVector> next;
        bool found = false;

        // Condition (for K in the working committee): K is positive at j and
        // borders hyperplane j, i.e. the tope opposite across everything but
        // j exists.
        auto borders_positively = [&](const SignVector& k) {
            return k.at(j) == Sign::plus &&
                   contains_vector(topes, k.negated().reoriented(flip));
        };

        for (std::size_t idx = 0; idx < working.size(); ++idx) {
            const SignVector k = working[idx];
            if (borders_positively(k)) {
                found = true;
                // Partner S with S(j)=+ and S reoriented at j = -K.
                SignVector partner = k.negated().reoriented(flip);
                auto it = std::find(working.begin() + static_cast<std::ptrdiff_t>(idx) + 1,
                                    working.end(), partner);
                if (it != working.end())
                    working.erase(it); // K and S cancel; neither survives
                else
                    next.push_back(k); // K kept unchanged
            } else {
                next.push_back(k.reoriented(flip));
            }
        }
        if (!found) {
            // Both topes bordering hyperplane j from the negative side.
            std::vector<std::pair<SignVector, SignVector>> pairs;
            for (const auto& t : topes) {
                if (t.at(j) != Sign::minus) continue;
                SignVector other = t.reoriented(flip).negated();
                if (canonical_less(other, t)) continue; // count each pair once
                if (contains_vector(topes, other) && other.at(j) == Sign::minus)
                    pairs.emplace_back(t, other);
            }
            if (pairs.size() != 1)
                fail(ErrorKind::validation,
                     "expected a unique negative-side tope pair at element " +
                         std::to_string(j) + ", found " + std::to_string(pairs.size()));
            next.push_back(pairs.front().first.reoriented(flip));
            next.push_back(pairs.front().second.reoriented(flip));
        }

        canonicalize(next);
        committee = std::move(next);
        for (auto& t : topes) t = t.reoriented(flip);
        canonicalize(topes);
    }
    return make_committee(std::move(committee));
}

std::vector<int> prefix_sequence(int s) {
    std::vector<int> seq(static_cast<std::size_t>(s));
    std::iota(seq.begin(), seq.end(), 1);
    return seq;
}

namespace {

struct ReorientationPlan {
    std::vector<int> order; // full permutation of [1,m]; first s entries = seq
    int s = 0;
};

ReorientationPlan plan_sequence(const OrientedMatroid& n0, const MaximalChain& chain,
                                const std::vector<int>& seq) {
    const int m = n0.ground_size();
    if (seq.empty() || static_cast<int>(seq.size()) > m)
        fail(ErrorKind::domain, "reorientation sequence must have between 1 and m elements");
    ElementSet used;
    for (int e : seq) {
        if (e < 1 || e > m)
            fail(ErrorKind::domain, "sequence element " + std::to_string(e) +
                                        " outside the ground set");
        if (used.contains(e))
            fail(ErrorKind::domain, "sequence repeats element " + std::to_string(e));
        used.insert(e);
    }
    if (!(chain.base() == SignVector::all_plus(m)))
        fail(ErrorKind::precondition, "chain must be based at the all-plus tope");
    if (chain.length() != m) fail(ErrorKind::validation, "chain length must equal m");

    ReorientationPlan plan;
    plan.s = static_cast<int>(seq.size());
    plan.order = seq;
    for (int e = 1; e <= m; ++e)
        if (!used.contains(e)) plan.order.push_back(e);
    return plan;
}

// Multiset helpers on canonically sorted vectors.
void multiset_insert(std::vector<SignVector>& ms, const SignVector& x) {
    ms.insert(std::upper_bound(ms.begin(), ms.end(), x, CanonicalLess{}), x);
}

bool multiset_remove_one(std::vector<SignVector>& ms, const SignVector& x) {
    auto it = std::lower_bound(ms.begin(), ms.end(), x, CanonicalLess{});
    if (it == ms.end() || !(*it == x)) return false;
    ms.erase(it);
    return true;
}

void strip_opposite_pairs(std::vector<SignVector>& ms) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const SignVector& k : ms) {
            SignVector opp = k.negated();
            auto it = std::lower_bound(ms.begin(), ms.end(), opp, CanonicalLess{});
            if (it != ms.end() && *it == opp) {
                SignVector keep = k;
                multiset_remove_one(ms, opp);
                multiset_remove_one(ms, keep);
                changed = true;
                break;
            }
        }
    }
}

Committee run_chain_algorithm(const OrientedMatroid& n0, const MaximalChain& chain,
                              const std::vector<int>& seq, bool strip_eagerly) {
    require_simple(n0, "alg3");
    if (!structural_predicates(n0).acyclic)
        fail(ErrorKind::precondition, "alg3 requires an acyclic starting matroid");
    ReorientationPlan plan = plan_sequence(n0, chain, seq);
    const int m = n0.ground_size();

    // The prefix/suffix reorientation sets of the classical algorithm become
    // prefix and suffix sets of the generalized element order.
    std::vector<SignVector> committee{SignVector::all_plus(m)};
    for (int i = 1; i <= plan.s; ++i) {
        const int element = plan.order[static_cast<std::size_t>(i - 1)];
        std::vector<SignVector> next;
        next.reserve(committee.size() + 2);
        for (const auto& k : committee)
            next.push_back(k.reoriented(ElementSet::single(element)));
        std::sort(next.begin(), next.end(), CanonicalLess{});

        int chain_index = -1;
        for (int k = 1; k <= m; ++k)
            if (chain.labels[static_cast<std::size_t>(k - 1)] == element) chain_index = k;
        if (chain_index < 0)
            fail(ErrorKind::validation, "chain labels miss element " + std::to_string(element));
        const SignVector& r = chain.topes[static_cast<std::size_t>(chain_index)];

        ElementSet prefix;
        for (int t = 1; t <= i; ++t) prefix.insert(plan.order[static_cast<std::size_t>(t - 1)]);
        ElementSet suffix = ElementSet::full(m);
        for (int t = 1; t < i; ++t) suffix.erase(plan.order[static_cast<std::size_t>(t - 1)]);

        multiset_insert(next, r.reoriented(prefix));
        multiset_insert(next, r.reoriented(suffix));
        if (strip_eagerly) strip_opposite_pairs(next);
        committee = std::move(next);
    }
    if (!strip_eagerly) strip_opposite_pairs(committee);

    for (std::size_t i = 1; i < committee.size(); ++i)
        if (committee[i] == committee[i - 1])
            fail(ErrorKind::internal, "chain algorithm produced a duplicate member");
    return make_committee(std::move(committee));
}

} // namespace

Committee alg3(const OrientedMatroid& n0, const MaximalChain& chain,
               const std::vector<int>& seq) {
    return run_chain_algorithm(n0, chain, seq, true);
}

Committee alg4(const OrientedMatroid& n0, const MaximalChain& chain,
               const std::vector<int>& seq) {
    return run_chain_algorithm(n0, chain, seq, false);
}

namespace {

// Bitmask committee predicate machinery over a fixed candidate list.
struct VoteTable {
    int m = 0;
    std::vector<std::uint64_t> positives; // per element: bitmask over candidates

    explicit VoteTable(const std::vector<SignVector>& candidates) {
        if (candidates.size() > 64)
            fail(ErrorKind::resource, "subset scan limited to 64 candidate topes");
        m = candidates.empty() ? 0 : candidates.front().size();
        positives.assign(static_cast<std::size_t>(m), 0);
        for (std::size_t i = 0; i < candidates.size(); ++i)
            for (int e : candidates[i].positive_part().elements())
                positives[static_cast<std::size_t>(e - 1)] |= std::uint64_t{1} << i;
    }

    bool committee(std::uint64_t subset) const {
        const int size = std::popcount(subset);
        if (size == 0) return false;
        const int needed = size / 2 + 1;
        for (const auto& mask : positives)
            if (std::popcount(subset & mask) < needed) return false;
        return true;
    }
};

} // namespace

CommitteeClassification classify_committee(const OrientedMatroid& m,
                                           const std::vector<SignVector>& members) {
    CommitteeClassification out = is_committee(m, members);
    if (!out.is_committee) return out;

    std::vector<SignVector> sorted = members;
    canonicalize(sorted);
    if (sorted.size() > 24)
        fail(ErrorKind::resource, "minimality scan over 2^" + std::to_string(sorted.size()) +
                                      " subsets exceeds the configured cap");
    VoteTable table(sorted);
    const std::uint64_t all = (std::uint64_t{1} << sorted.size()) - 1;
    bool minimal = true;
    for (std::uint64_t subset = 1; subset < all && minimal; ++subset)
        if (table.committee(subset)) minimal = false;
    out.is_minimal = minimal;

    if (!minimal) {
        out.is_critical = false;
        return out;
    }
    // Critical: no swap of a member for a tope with strictly smaller positive
    // part stays a committee.
    bool critical = true;
    for (std::size_t i = 0; i < sorted.size() && critical; ++i) {
        for (const auto& t : m.topes()) {
            if (!(t.positive_part().subset_of(sorted[i].positive_part()) &&
                  !(t.positive_part() == sorted[i].positive_part())))
                continue;
            std::vector<SignVector> swapped = sorted;
            swapped[i] = t;
            if (is_committee(m, swapped).is_committee) {
                critical = false;
                break;
            }
        }
    }
    out.is_critical = critical;
    return out;
}

namespace {

struct SubsetSearch {
    const std::vector<SignVector>& topes;
    int m;
    std::vector<std::vector<int>> suffix_positives; // [i][e-1]: positives in topes[i..]
    long long nodes = 0;

    explicit SubsetSearch(const OrientedMatroid& om) : topes(om.topes()), m(om.ground_size()) {
        if (static_cast<long long>(topes.size()) > limits::max_enumeration_topes)
            fail(ErrorKind::resource,
                 "tope set of size " + std::to_string(topes.size()) +
                     " exceeds the enumeration cap " +
                     std::to_string(limits::max_enumeration_topes));
        const std::size_t n = topes.size();
        suffix_positives.assign(n + 1, std::vector<int>(static_cast<std::size_t>(m), 0));
        for (std::size_t i = n; i-- > 0;) {
            suffix_positives[i] = suffix_positives[i + 1];
            for (int e : topes[i].positive_part().elements())
                ++suffix_positives[i][static_cast<std::size_t>(e - 1)];
        }
    }

    void charge() {
        if (++nodes > limits::max_search_nodes)
            fail(ErrorKind::resource, "committee search exceeded the node budget");
    }

    // Enumerates size-k tope subsets meeting the per-element majority bound
    // ceil((k+1)/2); calls sink(members) for each. sink returns false to
    // abort the whole search (used by minimum search: first hit wins).
    bool enumerate(int k, std::vector<int>& chosen, std::vector<int>& counts, std::size_t from,
                   const std::function<bool(const std::vector<int>&)>& sink) {
        charge();
        if (static_cast<int>(chosen.size()) == k) {
            const int needed = k / 2 + 1;
            for (int e = 0; e < m; ++e)
                if (counts[static_cast<std::size_t>(e)] < needed) return true;
            return sink(chosen);
        }
        const int needed = k / 2 + 1;
        for (std::size_t i = from; i < topes.size(); ++i) {
            if (static_cast<int>(topes.size() - i) < k - static_cast<int>(chosen.size()))
                break;
            bool feasible = true;
            for (int e = 0; e < m && feasible; ++e) {
                int optimistic = counts[static_cast<std::size_t>(e)] +
                                 suffix_positives[i][static_cast<std::size_t>(e)];
                if (optimistic < needed) feasible = false;
            }
            if (!feasible) break; // suffix counts only shrink as i grows
            chosen.push_back(static_cast<int>(i));
            for (int e : topes[i].positive_part().elements())
                ++counts[static_cast<std::size_t>(e - 1)];
            bool keep_going = enumerate(k, chosen, counts, i + 1, sink);
            for (int e : topes[i].positive_part().elements())
                --counts[static_cast<std::size_t>(e - 1)];
            chosen.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }

    bool run(int k, const std::function<bool(const std::vector<int>&)>& sink) {
        std::vector<int> chosen;
        std::vector<int> counts(static_cast<std::size_t>(m), 0);
        return enumerate(k, chosen, counts, 0, sink);
    }
};

} // namespace

Committee minimum_committee(const OrientedMatroid& m) {
    require_simple(m, "minimum_committee");
    SubsetSearch search(m);
    const int n = static_cast<int>(m.topes().size());

    auto find_at_size = [&](int k) -> std::optional<std::vector<SignVector>> {
        std::optional<std::vector<SignVector>> found;
        search.run(k, [&](const std::vector<int>& chosen) {
            std::vector<SignVector> members;
            for (int i : chosen) members.push_back(m.topes()[static_cast<std::size_t>(i)]);
            found = std::move(members);
            return false; // first hit in canonical order wins
        });
        return found;
    };

    // Constructive results all have odd cardinality, so try odd sizes first;
    // even sizes below a found odd minimum are still searched afterwards.
    std::optional<std::vector<SignVector>> best;
    int best_size = n + 1;
    for (int k = 1; k <= n; k += 2) {
        if (auto hit = find_at_size(k)) {
            best = hit;
            best_size = k;
            break;
        }
    }
    for (int k = 2; k < best_size; k += 2) {
        if (auto hit = find_at_size(k)) {
            best = hit;
            best_size = k;
            break;
        }
    }
    if (!best) fail(ErrorKind::validation, "no tope committee exists (non-simple input?)");
    return make_committee(std::move(*best));
}

std::vector<std::vector<SignVector>> enumerate_committees(const OrientedMatroid& m, int k) {
    if (k < 0) fail(ErrorKind::domain, "negative layer size");
    SubsetSearch search(m);
    std::vector<std::vector<SignVector>> out;
    if (k == 0) return out;
    search.run(k, [&](const std::vector<int>& chosen) {
        std::vector<SignVector> members;
        for (int i : chosen) members.push_back(m.topes()[static_cast<std::size_t>(i)]);
        out.push_back(std::move(members));
        return true;
    });
    return out;
}

std::vector<std::vector<SignVector>> minimal_committees(const OrientedMatroid& m, int max_size) {
    SubsetSearch search(m);
    std::vector<std::vector<SignVector>> found;
    std::vector<std::vector<int>> found_indices;

    for (int k = 1; k <= std::min<int>(max_size, static_cast<int>(m.topes().size())); ++k) {
        search.run(k, [&](const std::vector<int>& chosen) {
            // A committee is minimal iff it contains no smaller minimal
            // committee; smaller ones were all found at earlier sizes.
            for (const auto& smaller : found_indices) {
                if (std::includes(chosen.begin(), chosen.end(), smaller.begin(), smaller.end()))
                    return true;
            }
            std::vector<SignVector> members;
            for (int i : chosen) members.push_back(m.topes()[static_cast<std::size_t>(i)]);
            found.push_back(std::move(members));
            found_indices.push_back(chosen);
            return true;
        });
    }
    return found;
}

BoundReport bound_check(const OrientedMatroid& n0, const MaximalChain& chain, int s) {
    const int m = n0.ground_size();
    if (s < 1 || s > m) fail(ErrorKind::domain, "s outside [1,m]");
    Committee c = alg3(n0, chain, prefix_sequence(s));
    BoundReport report;
    report.committee_size = c.size();
    report.ground_bound = (m % 2 == 1) ? m : m - 1;
    report.ok = c.size() <= report.ground_bound;
    if (s <= m / 2) {
        report.step_bound = 1 + 2 * s;
        report.ok = report.ok && c.size() <= *report.step_bound;
    }
    return report;
}

} // namespace omc
