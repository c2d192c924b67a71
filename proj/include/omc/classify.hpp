#pragma once

#include <optional>
#include <vector>

#include "omc/committees.hpp"
#include "omc/matroid.hpp"

namespace omc {

struct TrainingSet {
    OrientedMatroid matroid; // simple
    ElementSet minus_class;  // labels: elements mapped to '-'; the rest map to '+'

    int ground_size() const { return matroid.ground_size(); }
    Sign label(int e) const {
        return minus_class.contains(e) ? Sign::minus : Sign::plus;
    }
};

TrainingSet make_training_set(OrientedMatroid matroid, ElementSet minus_class);

OrientedMatroid reorient_training(const TrainingSet& s);

// Single-element extension described by a localization on the cocircuits.
struct Extension {
    std::vector<Sign> sigma;                   // aligned with m.cocircuits()
    std::vector<SignVector> extended_cocircuits; // on m+1 elements, canonical order
    bool trivial_loop = false;                 // sigma identically zero
};

// Localization induced by adjoining the hyperplane with normal g to the
// realization: sigma(Y) = sign <x_Y, g> at the exact witness point of Y.
Extension localization_from_realization(const OrientedMatroid& m, const RationalVector& g);

// Extension from an explicit localization; validates sigma(-Y) = -sigma(Y)
// and the cocircuit axioms of the extended set.
Extension extend(const OrientedMatroid& m, const std::vector<Sign>& sigma);

// Cocircuits conformal to the tope K; their conformal composition is K.
std::vector<SignVector> conforming_cocircuits(const OrientedMatroid& m, const SignVector& k);

struct LiftResult {
    bool conformal = false;
    std::vector<SignVector> lifted;     // multiset, one vector per committee member
    std::optional<SignVector> offending; // member whose extended cocircuits clash
};

LiftResult lift_committee(const TrainingSet& s, const Committee& committee, const Extension& ext);

// Committee decision rule: pattern indices 1..m are the training patterns,
// m+1 is the new pattern g. '-' = class A, '+' = class B, '0' = unclassified.
Sign decide(const TrainingSet& s, const Committee& committee, const Extension& ext, int pattern);

struct Verdict {
    bool conformal = false;
    std::vector<Sign> per_pattern; // index 0 = pattern 1, ..., index m = pattern g
};

Verdict decide_all(const TrainingSet& s, const Committee& committee, const Extension& ext);

} // namespace omc
