#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "omc/linalg.hpp"
#include "omc/rational.hpp"
#include "omc/sign_vector.hpp"

namespace omc {

namespace limits {
// Resource caps; the CLI overrides these from environment variables.
inline constexpr long long kDefaultMaxCovectors = 200000;
inline constexpr long long kDefaultMaxValidationSet = 5000;
inline constexpr long long kDefaultMaxEnumerationTopes = 4096;
inline constexpr long long kDefaultMaxSearchNodes = 50000000;
extern long long max_covectors;          // compose-closure size cap
extern long long max_validation_set;     // covector/circuit axiom check cap
extern long long max_enumeration_topes;  // |T| cap for subset-enumeration ops
extern long long max_search_nodes;       // backtracking node budget
} // namespace limits

// Exact-rational central arrangement: row e = normal of hyperplane e.
struct Realization {
    int m = 0;   // element count
    int dim = 0; // ambient dimension
    RationalMatrix rows;

    int rank() const { return matrix_rank(rows); }
};

struct ValidationIssue {
    std::string axiom; // "C0".."C3", "L0".."L3", or a structural check id
    std::string detail;
    std::vector<SignVector> witness;
};

struct ValidationReport {
    std::vector<ValidationIssue> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

ValidationReport validate_circuit_axioms(const std::vector<SignVector>& circuits);
ValidationReport validate_covector_axioms(const std::vector<SignVector>& covectors);

enum class TopeTrust { trusted, untrusted };

class OrientedMatroid {
  public:
    // All stored families are canonically sorted and duplicate-free.
    static OrientedMatroid from_realization(Realization r);
    static OrientedMatroid from_covectors(std::vector<SignVector> covectors);
    static OrientedMatroid from_covectors_unscoped(std::vector<SignVector> covectors);
    static OrientedMatroid from_topes(std::vector<SignVector> topes, TopeTrust trust);

    int ground_size() const { return m_; }
    int rank() const { return rank_; } // 0 when not derivable from the input
    const std::vector<SignVector>& topes() const { return topes_; }

    bool has_covectors() const { return covectors_.has_value(); }
    const std::vector<SignVector>& covectors() const;
    bool has_cocircuits() const { return cocircuits_.has_value(); }
    const std::vector<SignVector>& cocircuits() const;
    bool has_circuits() const { return circuits_.has_value(); }
    const std::vector<SignVector>& circuits() const;
    bool has_realization() const { return realization_.has_value(); }
    const Realization& realization() const;

    bool is_tope(const SignVector& t) const { return contains_vector(topes_, t); }

  private:
    OrientedMatroid() = default;
    static OrientedMatroid from_validated_covectors(std::vector<SignVector> covectors);

    int m_ = 0;
    int rank_ = 0;
    std::vector<SignVector> topes_;
    std::optional<std::vector<SignVector>> covectors_;
    std::optional<std::vector<SignVector>> cocircuits_;
    std::optional<std::vector<SignVector>> circuits_;
    std::optional<Realization> realization_;

    friend OrientedMatroid reorient(const OrientedMatroid&, const ElementSet&);
    friend OrientedMatroid deletion(const OrientedMatroid&, const ElementSet&);
};

OrientedMatroid reorient(const OrientedMatroid& m, const ElementSet& a);
OrientedMatroid deletion(const OrientedMatroid& m, const ElementSet& a);

enum class PairCheckSource { covectors, topes };

struct StructuralPredicates {
    bool acyclic = false;
    std::optional<bool> totally_cyclic; // unset when neither circuits nor covectors exist
    bool simple = false;
    ElementSet loops;
    std::vector<std::pair<int, int>> parallel_pairs;
    std::vector<std::pair<int, int>> antiparallel_pairs;
    PairCheckSource pair_source = PairCheckSource::topes;
};

StructuralPredicates structural_predicates(const OrientedMatroid& m);

// Throws a precondition error naming the violation unless m is simple.
void require_simple(const OrientedMatroid& m, const char* op);

std::vector<SignVector> positive_halfspace(const OrientedMatroid& m, int e);
std::vector<SignVector> negative_halfspace(const OrientedMatroid& m, int e);

// Poset rank in the big face lattice; cross-checked against the realization
// when one is stored.
int face_rank(const OrientedMatroid& m, const SignVector& x);

// Compose-closure of the circuits with inclusion-maximal support; these are
// the topes of the dual.
std::vector<SignVector> maximal_vectors(const OrientedMatroid& m);

// Compose-closure of a family (used for covectors from cocircuits and for
// vectors from circuits). The zero vector is included iff `with_zero`.
std::vector<SignVector> compose_closure(const std::vector<SignVector>& generators, int m,
                                        bool with_zero);

std::vector<SignVector> maximal_support_members(const std::vector<SignVector>& family);
std::vector<SignVector> minimal_nonzero_support_members(const std::vector<SignVector>& family);

} // namespace omc
