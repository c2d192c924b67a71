#pragma once

#include <map>
#include <optional>
#include <vector>

#include "omc/matroid.hpp"
#include "omc/topes.hpp"

namespace omc {

// Members of a sign-vector family whose positive parts are inclusion-maximal
// (resp. minimal); minplus(P) is the negation image of maxplus(P).
std::vector<SignVector> maxplus(const std::vector<SignVector>& family);
std::vector<SignVector> minplus(const std::vector<SignVector>& family);

struct Committee {
    std::vector<SignVector> members;        // canonical order, duplicate-free
    std::vector<long long> positive_counts; // index e-1 = |{K : K(e) = +}|

    int size() const { return static_cast<int>(members.size()); }
};

Committee make_committee(std::vector<SignVector> members);

struct CommitteeClassification {
    bool is_committee = false;
    std::optional<bool> is_minimal;
    std::optional<bool> is_critical;
    std::map<int, long long> deficiency; // element -> missing positive votes
};

// Strict per-element majority test at threshold p = p_num/p_den, evaluated by
// exact cross-multiplication. Rejects members outside the tope set.
CommitteeClassification is_p_committee(const OrientedMatroid& m,
                                       const std::vector<SignVector>& members,
                                       const Rational& p);

inline CommitteeClassification is_committee(const OrientedMatroid& m,
                                            const std::vector<SignVector>& members) {
    return is_p_committee(m, members, Rational(1, 2));
}

// max+ of a symmetric cycle's vertex set: a critical tope committee with the
// exact ceil(|K|/2) per-element balance.
Committee cycle_committee(const OrientedMatroid& m, const SymmetricCycle& cycle);

// Reorientation-by-reorientation committee transformation for rank 2.
Committee alg1_rank2(const OrientedMatroid& n0, const std::vector<int>& seq);

// Chain-driven committee construction for arbitrary rank; `seq` lists the
// distinct elements to reorient, in order (the classical setting is 1..s).
// alg3 strips opposite pairs eagerly, alg4 once at the end; both agree.
Committee alg3(const OrientedMatroid& n0, const MaximalChain& chain, const std::vector<int>& seq);
Committee alg4(const OrientedMatroid& n0, const MaximalChain& chain, const std::vector<int>& seq);

std::vector<int> prefix_sequence(int s); // (1, 2, ..., s)

// Minimality (no committee proper subset) and criticality (additionally no
// positive-part-shrinking swap keeps the committee property).
CommitteeClassification classify_committee(const OrientedMatroid& m,
                                           const std::vector<SignVector>& members);

Committee minimum_committee(const OrientedMatroid& m);

std::vector<std::vector<SignVector>> enumerate_committees(const OrientedMatroid& m, int k);

// All inclusion-minimal committees of size <= max_size (the relative
// 1/2-blocker, truncated at max_size).
std::vector<std::vector<SignVector>> minimal_committees(const OrientedMatroid& m, int max_size);

struct BoundReport {
    int committee_size = 0;
    int ground_bound = 0;            // m if m odd, m-1 if m even
    std::optional<int> step_bound;   // 1+2s when s <= floor(m/2)
    bool ok = false;
};

BoundReport bound_check(const OrientedMatroid& n0, const MaximalChain& chain, int s);

} // namespace omc
