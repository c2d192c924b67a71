#include "omc/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace omc {

namespace limits {
long long max_covectors = kDefaultMaxCovectors;
long long max_validation_set = kDefaultMaxValidationSet;
long long max_enumeration_topes = kDefaultMaxEnumerationTopes;
long long max_search_nodes = kDefaultMaxSearchNodes;
} // namespace limits

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& v : violations) {
        s += v.axiom + ": " + v.detail;
        for (const auto& w : v.witness) s += " " + w.str();
        s += "\n";
    }
    return s;
}

int face_rank_unchecked(const OrientedMatroid& m, const SignVector& x);

namespace {

void check_uniform_length(const std::vector<SignVector>& family, const char* what) {
    for (const auto& x : family)
        if (x.size() != family.front().size())
            fail(ErrorKind::domain, std::string(what) + ": mixed sign vector lengths");
}

void check_validation_cap(std::size_t n) {
    if (static_cast<long long>(n) > limits::max_validation_set)
        fail(ErrorKind::resource, "axiom validation set of size " + std::to_string(n) +
                                      " exceeds cap " +
                                      std::to_string(limits::max_validation_set));
}

} // namespace

ValidationReport validate_circuit_axioms(const std::vector<SignVector>& circuits) {
    ValidationReport report;
    if (circuits.empty()) return report; // no circuits: every axiom is vacuous
    check_uniform_length(circuits, "circuits");
    check_validation_cap(circuits.size());

    std::vector<SignVector> sorted = circuits;
    canonicalize(sorted);

    for (const auto& x : sorted) {
        if (x.is_zero()) {
            report.violations.push_back({"C0", "zero vector present", {x}});
            break;
        }
    }
    for (const auto& x : sorted) {
        if (!contains_vector(sorted, x.negated())) {
            report.violations.push_back({"C1", "negation missing", {x}});
            break;
        }
    }
    for (std::size_t i = 0; i < sorted.size() && report.ok(); ++i) {
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            if (i == j) continue;
            const auto& x = sorted[i];
            const auto& y = sorted[j];
            if (x.support().subset_of(y.support()) && !(x == y) && !(x == y.negated())) {
                report.violations.push_back({"C2", "nested supports", {x, y}});
                break;
            }
        }
    }
    if (!report.ok()) return report;

    for (const auto& x : sorted) {
        for (const auto& y : sorted) {
            if (x == y.negated()) continue;
            for (int e : x.positive_part().intersected(y.negative_part()).elements()) {
                ElementSet allowed_minus =
                    x.negative_part().united(y.negative_part()).minus(ElementSet::single(e));
                ElementSet allowed_plus =
                    x.positive_part().united(y.positive_part()).minus(ElementSet::single(e));
                bool found = false;
                for (const auto& z : sorted) {
                    if (z.negative_part().subset_of(allowed_minus) &&
                        z.positive_part().subset_of(allowed_plus)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    report.violations.push_back(
                        {"C3", "no eliminating vector at element " + std::to_string(e), {x, y}});
                    return report;
                }
            }
        }
    }
    return report;
}

ValidationReport validate_covector_axioms(const std::vector<SignVector>& covectors) {
    ValidationReport report;
    if (covectors.empty()) {
        report.violations.push_back({"L0", "zero vector missing (empty family)", {}});
        return report;
    }
    check_uniform_length(covectors, "covectors");
    check_validation_cap(covectors.size());

    std::vector<SignVector> sorted = covectors;
    canonicalize(sorted);
    const int m = sorted.front().size();

    if (!contains_vector(sorted, SignVector(m)))
        report.violations.push_back({"L0", "zero vector missing", {}});
    for (const auto& x : sorted) {
        if (!contains_vector(sorted, x.negated())) {
            report.violations.push_back({"L1", "negation missing", {x}});
            break;
        }
    }
    for (const auto& x : sorted) {
        bool bad = false;
        for (const auto& y : sorted) {
            SignVector c = x.composed_with(y);
            if (!contains_vector(sorted, c)) {
                report.violations.push_back({"L2", "composition missing", {x, y, c}});
                bad = true;
                break;
            }
        }
        if (bad) break;
    }
    if (!report.ok()) return report;

    for (const auto& x : sorted) {
        for (const auto& y : sorted) {
            ElementSet sep = x.separation_set(y);
            if (sep.empty()) continue;
            SignVector xy = x.composed_with(y);
            // Z eliminates e in sep iff Z(e) = 0 and Z agrees with x o y
            // outside sep; the agreement test is independent of e.
            ElementSet eliminated;
            for (const auto& z : sorted) {
                if (!z.positive_part().sym_diff(xy.positive_part()).subset_of(sep)) continue;
                if (!z.negative_part().sym_diff(xy.negative_part()).subset_of(sep)) continue;
                eliminated = eliminated.united(sep.intersected(z.zero_set()));
            }
            if (!sep.subset_of(eliminated)) {
                int e = sep.minus(eliminated).elements().front();
                report.violations.push_back(
                    {"L3", "no eliminating covector at element " + std::to_string(e), {x, y}});
                return report;
            }
        }
    }
    return report;
}

std::vector<SignVector> compose_closure(const std::vector<SignVector>& generators, int m,
                                        bool with_zero) {
    std::set<SignVector, CanonicalLess> closed;
    if (with_zero) closed.insert(SignVector(m));
    std::vector<SignVector> frontier;
    for (const auto& g : generators)
        if (closed.insert(g).second) frontier.push_back(g);

    while (!frontier.empty()) {
        std::vector<SignVector> next;
        for (const auto& x : frontier) {
            for (const auto& g : generators) {
                SignVector c = x.composed_with(g);
                if (closed.insert(c).second) {
                    next.push_back(c);
                    if (static_cast<long long>(closed.size()) > limits::max_covectors)
                        fail(ErrorKind::resource,
                             "compose closure exceeds cap " +
                                 std::to_string(limits::max_covectors));
                }
            }
        }
        frontier = std::move(next);
    }
    return {closed.begin(), closed.end()};
}

std::vector<SignVector> maximal_support_members(const std::vector<SignVector>& family) {
    std::vector<SignVector> out;
    for (const auto& x : family) {
        if (x.is_zero() && family.size() > 1) continue;
        bool maximal = true;
        for (const auto& y : family) {
            ElementSet sx = x.support();
            ElementSet sy = y.support();
            if (sx.subset_of(sy) && !(sx == sy)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(x);
    }
    canonicalize(out);
    return out;
}

std::vector<SignVector> minimal_nonzero_support_members(const std::vector<SignVector>& family) {
    std::vector<SignVector> out;
    for (const auto& x : family) {
        if (x.is_zero()) continue;
        bool minimal = true;
        for (const auto& y : family) {
            if (y.is_zero()) continue;
            ElementSet sx = x.support();
            ElementSet sy = y.support();
            if (sy.subset_of(sx) && !(sx == sy)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(x);
    }
    canonicalize(out);
    return out;
}

namespace {

// Sign vector of the point x in the arrangement given by `rows`.
SignVector sign_vector_at(const RationalMatrix& rows, const RationalVector& x) {
    SignVector v(static_cast<int>(rows.size()));
    for (std::size_t e = 0; e < rows.size(); ++e)
        v.set(static_cast<int>(e) + 1, sign_of(dot(rows[e], x)));
    return v;
}

std::vector<SignVector> cocircuits_of_realization(const Realization& r, int rank) {
    // A cocircuit corresponds to a line that is the intersection of the
    // kernels of a rank-(rank-1) row subset with the row space. Enumerate
    // (rank-1)-subsets of rows and keep those of full sub-rank.
    std::vector<int> basis_rows = independent_rows(r.rows);
    RationalMatrix basis;
    for (int i : basis_rows) basis.push_back(r.rows[static_cast<std::size_t>(i)]);

    std::set<SignVector, CanonicalLess> found;
    auto process = [&](const std::vector<int>& rows_idx) {
        RationalMatrix sub;
        for (int i : rows_idx) sub.push_back(r.rows[static_cast<std::size_t>(i)]);
        if (matrix_rank(sub) != rank - 1) return;
        // Solve rows_sub * (basis^T c) = 0 for c in Q^rank.
        RationalMatrix a(sub.size(), RationalVector(static_cast<std::size_t>(rank)));
        for (std::size_t i = 0; i < sub.size(); ++i)
            for (int j = 0; j < rank; ++j)
                a[i][static_cast<std::size_t>(j)] = dot(sub[i], basis[static_cast<std::size_t>(j)]);
        auto ns = nullspace(a, rank);
        if (ns.size() != 1) return; // defensive; sub-rank check should preclude this
        RationalVector x(static_cast<std::size_t>(r.dim), Rational(0));
        for (int j = 0; j < rank; ++j)
            for (int d = 0; d < r.dim; ++d)
                x[static_cast<std::size_t>(d)] +=
                    ns[0][static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(j)]
                                                              [static_cast<std::size_t>(d)];
        SignVector y = sign_vector_at(r.rows, x);
        if (y.is_zero()) fail(ErrorKind::internal, "cocircuit witness evaluated to zero");
        found.insert(y);
        found.insert(y.negated());
    };

    // Iterate all (rank-1)-subsets of [0,m).
    std::vector<int> idx(static_cast<std::size_t>(rank - 1));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    if (static_cast<int>(idx.size()) > r.m) return {};
    while (true) {
        process(idx);
        int k = static_cast<int>(idx.size()) - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] ==
                             r.m - static_cast<int>(idx.size()) + k)
            --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (std::size_t j = static_cast<std::size_t>(k) + 1; j < idx.size(); ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return {found.begin(), found.end()};
}

std::vector<SignVector> circuits_of_realization(const Realization& r, int rank) {
    // Circuits are the signed minimal linear dependencies among the rows.
    std::set<SignVector, CanonicalLess> found;
    auto process = [&](const std::vector<int>& subset) {
        RationalMatrix cols(static_cast<std::size_t>(r.dim),
                            RationalVector(subset.size(), Rational(0)));
        for (std::size_t j = 0; j < subset.size(); ++j)
            for (int d = 0; d < r.dim; ++d)
                cols[static_cast<std::size_t>(d)][j] =
                    r.rows[static_cast<std::size_t>(subset[j])][static_cast<std::size_t>(d)];
        auto ns = nullspace(cols, static_cast<int>(subset.size()));
        if (ns.size() != 1) return; // independent, or not minimal at this size
        const RationalVector& lambda = ns[0];
        for (const auto& c : lambda)
            if (c == 0) return; // dependency not supported on the whole subset
        SignVector circuit(r.m);
        for (std::size_t j = 0; j < subset.size(); ++j)
            circuit.set(subset[j] + 1, sign_of(lambda[j]));
        found.insert(circuit);
        found.insert(circuit.negated());
    };

    for (int size = 1; size <= rank + 1 && size <= r.m; ++size) {
        std::vector<int> subset(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i;
        while (true) {
            process(subset);
            int k = size - 1;
            while (k >= 0 && subset[static_cast<std::size_t>(k)] == r.m - size + k) --k;
            if (k < 0) break;
            ++subset[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < size; ++j)
                subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return {found.begin(), found.end()};
}

void check_tope_structure(const std::vector<SignVector>& topes) {
    for (const auto& t : topes) {
        if (!contains_vector(topes, t.negated()))
            fail(ErrorKind::validation, "tope set not closed under negation; " + t.str() +
                                            " lacks its opposite");
        if (!(t.support() == topes.front().support()))
            fail(ErrorKind::validation, "topes have mixed supports: " + topes.front().str() +
                                            " vs " + t.str());
    }
}

} // namespace

OrientedMatroid OrientedMatroid::from_realization(Realization r) {
    if (r.m != static_cast<int>(r.rows.size()))
        fail(ErrorKind::domain, "realization row count mismatch");
    if (r.m > kMaxGroundSetSize)
        fail(ErrorKind::resource, "realization with " + std::to_string(r.m) +
                                      " elements exceeds capacity " +
                                      std::to_string(kMaxGroundSetSize));
    for (const auto& row : r.rows)
        if (static_cast<int>(row.size()) != r.dim)
            fail(ErrorKind::domain, "realization row dimension mismatch");
    const int rank = r.rank();
    if (rank < 2)
        fail(ErrorKind::precondition,
             "realization rank " + std::to_string(rank) + " unsupported (rank >= 2 required)");

    OrientedMatroid om;
    om.m_ = r.m;
    om.rank_ = rank;
    om.cocircuits_ = cocircuits_of_realization(r, rank);
    om.covectors_ = compose_closure(*om.cocircuits_, r.m, true);
    om.topes_ = maximal_support_members(*om.covectors_);
    om.circuits_ = circuits_of_realization(r, rank);
    om.realization_ = std::move(r);
    return om;
}

OrientedMatroid OrientedMatroid::from_covectors(std::vector<SignVector> covectors) {
    OrientedMatroid om = from_covectors_unscoped(std::move(covectors));
    if (om.rank_ < 2)
        fail(ErrorKind::precondition, "covector family has rank " + std::to_string(om.rank_) +
                                          " (rank >= 2 required)");
    return om;
}

// Deletions may legitimately drop below rank 2; this path skips the scope
// check but still validates the axioms.
OrientedMatroid OrientedMatroid::from_covectors_unscoped(std::vector<SignVector> covectors) {
    if (covectors.empty()) fail(ErrorKind::domain, "empty covector family");
    check_uniform_length(covectors, "covectors");
    canonicalize(covectors);
    ValidationReport report = validate_covector_axioms(covectors);
    if (!report.ok())
        fail(ErrorKind::validation, "covector axioms violated\n" + report.summary());
    return from_validated_covectors(std::move(covectors));
}

OrientedMatroid OrientedMatroid::from_validated_covectors(std::vector<SignVector> covectors) {
    OrientedMatroid om;
    om.m_ = covectors.front().size();
    om.topes_ = maximal_support_members(covectors);
    om.cocircuits_ = minimal_nonzero_support_members(covectors);
    // Poset rank of a tope = matroid rank; longest chain from the zero vector.
    om.covectors_ = std::move(covectors);
    om.rank_ = om.topes_.empty() ? 0 : face_rank_unchecked(om, om.topes_.front());
    return om;
}

OrientedMatroid OrientedMatroid::from_topes(std::vector<SignVector> topes, TopeTrust trust) {
    if (topes.empty()) fail(ErrorKind::domain, "empty tope set");
    check_uniform_length(topes, "topes");
    std::size_t before = topes.size();
    canonicalize(topes);
    if (topes.size() != before) fail(ErrorKind::validation, "duplicate topes in input");
    check_tope_structure(topes);
    if (trust == TopeTrust::untrusted)
        fail(ErrorKind::capability,
             "tope-only axiom verification is unsupported; supply covectors or a realization");

    OrientedMatroid om;
    om.m_ = topes.front().size();
    om.topes_ = std::move(topes);
    om.rank_ = 0; // unknown without covectors or a realization
    return om;
}

const std::vector<SignVector>& OrientedMatroid::covectors() const {
    if (!covectors_) fail(ErrorKind::capability, "covectors not available for this matroid");
    return *covectors_;
}

const std::vector<SignVector>& OrientedMatroid::cocircuits() const {
    if (!cocircuits_) fail(ErrorKind::capability, "cocircuits not available for this matroid");
    return *cocircuits_;
}

const std::vector<SignVector>& OrientedMatroid::circuits() const {
    if (!circuits_) fail(ErrorKind::capability, "circuits not available for this matroid");
    return *circuits_;
}

const Realization& OrientedMatroid::realization() const {
    if (!realization_) fail(ErrorKind::capability, "realization not available for this matroid");
    return *realization_;
}

OrientedMatroid reorient(const OrientedMatroid& m, const ElementSet& a) {
    if (!a.subset_of(ElementSet::full(m.ground_size())))
        fail(ErrorKind::domain, "reorientation set not contained in the ground set");

    auto map_family = [&](const std::vector<SignVector>& family) {
        std::vector<SignVector> out;
        out.reserve(family.size());
        for (const auto& x : family) out.push_back(x.reoriented(a));
        canonicalize(out);
        return out;
    };

    OrientedMatroid out;
    out.m_ = m.m_;
    out.rank_ = m.rank_;
    out.topes_ = map_family(m.topes_);
    if (m.covectors_) out.covectors_ = map_family(*m.covectors_);
    if (m.cocircuits_) out.cocircuits_ = map_family(*m.cocircuits_);
    if (m.circuits_) out.circuits_ = map_family(*m.circuits_);
    if (m.realization_) {
        Realization r = *m.realization_;
        for (int e : a.elements())
            for (auto& v : r.rows[static_cast<std::size_t>(e - 1)]) v = -v;
        out.realization_ = std::move(r);
    }
    return out;
}

OrientedMatroid deletion(const OrientedMatroid& m, const ElementSet& a) {
    if (!m.has_covectors())
        fail(ErrorKind::capability, "deletion requires covectors");
    if (!a.subset_of(ElementSet::full(m.ground_size())))
        fail(ErrorKind::domain, "deletion set not contained in the ground set");

    ElementSet keep = ElementSet::full(m.ground_size()).minus(a);
    std::vector<SignVector> restricted;
    restricted.reserve(m.covectors().size());
    for (const auto& x : m.covectors()) restricted.push_back(x.restricted_to(keep));
    canonicalize(restricted);

    // Restrictions of a covector family form the deletion's covector family;
    // no re-validation needed here (the test suite re-validates explicitly).
    OrientedMatroid out = OrientedMatroid::from_validated_covectors(std::move(restricted));
    if (m.has_realization()) {
        Realization r;
        r.dim = m.realization().dim;
        for (int e : keep.elements())
            r.rows.push_back(m.realization().rows[static_cast<std::size_t>(e - 1)]);
        r.m = static_cast<int>(r.rows.size());
        out.realization_ = std::move(r);
    }
    return out;
}

StructuralPredicates structural_predicates(const OrientedMatroid& m) {
    StructuralPredicates p;
    for (const auto& t : m.topes()) {
        if (t.is_nonnegative()) {
            p.acyclic = true;
            break;
        }
    }
    p.loops = m.topes().front().zero_set();

    const std::vector<SignVector>* family = &m.topes();
    p.pair_source = PairCheckSource::topes;
    if (m.has_covectors()) {
        family = &m.covectors();
        p.pair_source = PairCheckSource::covectors;
    }
    for (int e = 1; e <= m.ground_size(); ++e) {
        for (int f = e + 1; f <= m.ground_size(); ++f) {
            bool parallel = true;
            bool antiparallel = true;
            for (const auto& x : *family) {
                if (x.at(e) != x.at(f)) parallel = false;
                if (x.at(e) != opposite(x.at(f))) antiparallel = false;
                if (!parallel && !antiparallel) break;
            }
            if (parallel) p.parallel_pairs.emplace_back(e, f);
            if (antiparallel) p.antiparallel_pairs.emplace_back(e, f);
        }
    }
    p.simple = p.loops.empty() && p.parallel_pairs.empty() && p.antiparallel_pairs.empty();

    if (m.has_circuits()) {
        bool tc = true;
        for (int e = 1; e <= m.ground_size() && tc; ++e) {
            bool covered = false;
            for (const auto& c : m.circuits())
                if (c.is_nonnegative() && c.positive_part().contains(e)) {
                    covered = true;
                    break;
                }
            tc = covered;
        }
        p.totally_cyclic = tc;
    } else if (m.has_covectors()) {
        bool tc = true;
        for (const auto& x : m.covectors())
            if (x.is_nonnegative() && !x.is_zero()) {
                tc = false;
                break;
            }
        p.totally_cyclic = tc;
    }
    return p;
}

void require_simple(const OrientedMatroid& m, const char* op) {
    StructuralPredicates p = structural_predicates(m);
    if (p.simple) return;
    std::string why;
    if (!p.loops.empty()) {
        why = "loop at element " + std::to_string(p.loops.elements().front());
    } else if (!p.parallel_pairs.empty()) {
        why = "parallel elements " + std::to_string(p.parallel_pairs.front().first) + "," +
              std::to_string(p.parallel_pairs.front().second);
    } else {
        why = "antiparallel elements " + std::to_string(p.antiparallel_pairs.front().first) + "," +
              std::to_string(p.antiparallel_pairs.front().second);
    }
    fail(ErrorKind::precondition, std::string(op) + " requires a simple oriented matroid: " + why);
}

std::vector<SignVector> positive_halfspace(const OrientedMatroid& m, int e) {
    if (e < 1 || e > m.ground_size())
        fail(ErrorKind::domain, "element " + std::to_string(e) + " outside the ground set");
    std::vector<SignVector> out;
    for (const auto& t : m.topes())
        if (t.at(e) == Sign::plus) out.push_back(t);
    return out;
}

std::vector<SignVector> negative_halfspace(const OrientedMatroid& m, int e) {
    if (e < 1 || e > m.ground_size())
        fail(ErrorKind::domain, "element " + std::to_string(e) + " outside the ground set");
    std::vector<SignVector> out;
    for (const auto& t : m.topes())
        if (t.at(e) == Sign::minus) out.push_back(t);
    return out;
}

namespace {

int longest_chain_rank(const std::vector<SignVector>& covectors, const SignVector& x) {
    // Longest chain 0 < ... < x in the product order; the family is graded,
    // so a DP over covectors sorted by support size suffices.
    std::vector<const SignVector*> below;
    for (const auto& y : covectors)
        if (y.leq(x)) below.push_back(&y);
    std::sort(below.begin(), below.end(), [](const SignVector* a, const SignVector* b) {
        return a->support().count() < b->support().count();
    });
    std::vector<int> depth(below.size(), 0);
    int best = 0;
    for (std::size_t i = 0; i < below.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (!(*below[j] == *below[i]) && below[j]->leq(*below[i]))
                depth[i] = std::max(depth[i], depth[j] + 1);
        }
        best = std::max(best, depth[i]);
    }
    return best;
}

} // namespace

int face_rank_unchecked(const OrientedMatroid& m, const SignVector& x);

int face_rank_unchecked(const OrientedMatroid& m, const SignVector& x) {
    int rank = longest_chain_rank(m.covectors(), x);
    if (m.has_realization()) {
        RationalMatrix zero_rows;
        for (int e : x.zero_set().elements())
            zero_rows.push_back(m.realization().rows[static_cast<std::size_t>(e - 1)]);
        int geometric = m.realization().rank() - matrix_rank(zero_rows);
        if (geometric != rank)
            fail(ErrorKind::internal, "face rank mismatch between chain length (" +
                                          std::to_string(rank) + ") and realization (" +
                                          std::to_string(geometric) + ") for " + x.str());
    }
    return rank;
}

int face_rank(const OrientedMatroid& m, const SignVector& x) {
    if (!contains_vector(m.covectors(), x))
        fail(ErrorKind::domain, x.str() + " is not a covector");
    return face_rank_unchecked(m, x);
}

std::vector<SignVector> maximal_vectors(const OrientedMatroid& m) {
    const auto& circuits = m.circuits();
    if (circuits.empty()) return {}; // all elements coloops
    auto vectors = compose_closure(circuits, m.ground_size(), false);
    return maximal_support_members(vectors);
}

} // namespace omc
