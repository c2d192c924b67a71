#pragma once

#include <functional>
#include <vector>

#include "omc/matroid.hpp"

namespace omc {

struct TopeGraph {
    std::vector<SignVector> vertices;         // canonical order
    std::vector<std::pair<int, int>> edges;   // index pairs, i < j, lex sorted
    std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
};

// Edges are exactly the tope pairs with one-element separation set. For a
// simple oriented matroid this is the usual tope graph: covector axiom L3
// applied to two topes separated at a single element yields the common
// subtope they both cover.
TopeGraph tope_graph(const OrientedMatroid& m);

class TopePoset {
  public:
    TopePoset(const OrientedMatroid& m, SignVector base);

    const SignVector& base() const { return base_; }
    const std::vector<SignVector>& topes() const { return topes_; }
    int index_of(const SignVector& t) const;
    // Poset rank |S(B,T)|.
    int rank_of(int idx) const { return separations_[static_cast<std::size_t>(idx)].count(); }
    int rank_of(const SignVector& t) const { return rank_of(index_of(t)); }
    bool less_eq(int a, int b) const {
        return separations_[static_cast<std::size_t>(a)].subset_of(
            separations_[static_cast<std::size_t>(b)]);
    }
    bool less_eq(const SignVector& a, const SignVector& b) const {
        return less_eq(index_of(a), index_of(b));
    }
    // Covering pairs (a <. b): rank difference one with containment.
    std::vector<std::pair<int, int>> covering_pairs() const;

  private:
    SignVector base_;
    std::vector<SignVector> topes_;
    std::vector<ElementSet> separations_;
};

TopePoset tope_poset(const OrientedMatroid& m, const SignVector& base);

struct MaximalChain {
    std::vector<SignVector> topes; // R^0 .. R^m
    std::vector<int> labels;       // l_1 .. l_m, a permutation of [1,m]

    const SignVector& base() const { return topes.front(); }
    int length() const { return static_cast<int>(labels.size()); }
};

// Deterministic greedy chain from `base` to its opposite: each step flips the
// smallest element that increases the poset rank.
MaximalChain maximal_chain(const OrientedMatroid& m, const SignVector& base);

// Random increasing walk, for property tests.
MaximalChain random_maximal_chain(const OrientedMatroid& m, const SignVector& base,
                                  const std::function<int(int)>& pick);

// Checks a user-supplied tope sequence and attaches labels.
MaximalChain validate_chain(const OrientedMatroid& m, const std::vector<SignVector>& topes);

struct SymmetricCycle {
    std::vector<SignVector> topes; // T^0 .. T^{2m-1}, cyclically closed

    int half() const { return static_cast<int>(topes.size()) / 2; }
    int ground_size() const { return topes.empty() ? 0 : topes.front().size(); }
};

SymmetricCycle symmetric_cycle_from_chain(const MaximalChain& chain);
void validate_cycle(const OrientedMatroid& m, const SymmetricCycle& cycle);

// The m cycle vertices positive at e, in path order along the cycle.
std::vector<SignVector> positive_path(const SymmetricCycle& cycle, int e);

std::vector<SignVector> tconvex_hull(const OrientedMatroid& m,
                                     const std::vector<SignVector>& q);

// Order filter O(B) = {T : B+ u T+ = E} and its antichain of minimal
// elements G(B); requires simple non-acyclic m and B with maximal positive
// part.
std::vector<SignVector> filter_O(const OrientedMatroid& m, const SignVector& base);
std::vector<SignVector> antichain_G(const OrientedMatroid& m, const SignVector& base);

struct ChainCoverTope {
    SignVector tope;
    int rank; // position in the chain = |S(B,K)|
};

// The unique chain member with maximal positive part whose positive part
// covers the ground set together with the base's.
ChainCoverTope chain_cover_tope(const OrientedMatroid& m, const MaximalChain& chain);

} // namespace omc
