#include "omc/classify.hpp"

#include <algorithm>

namespace omc {

TrainingSet make_training_set(OrientedMatroid matroid, ElementSet minus_class) {
    require_simple(matroid, "training set");
    if (!minus_class.subset_of(ElementSet::full(matroid.ground_size())))
        fail(ErrorKind::domain, "labels name elements outside the ground set");
    if (minus_class.empty() || minus_class.count() == matroid.ground_size())
        fail(ErrorKind::validation, "both training samples must be nonempty");
    return TrainingSet{std::move(matroid), minus_class};
}

OrientedMatroid reorient_training(const TrainingSet& s) {
    return reorient(s.matroid, s.minus_class);
}

namespace {

int cocircuit_index(const std::vector<SignVector>& cocircuits, const SignVector& y) {
    auto it = std::lower_bound(cocircuits.begin(), cocircuits.end(), y, CanonicalLess{});
    if (it == cocircuits.end() || !(*it == y))
        fail(ErrorKind::domain, y.str() + " is not a cocircuit");
    return static_cast<int>(it - cocircuits.begin());
}

} // namespace

Extension extend(const OrientedMatroid& m, const std::vector<Sign>& sigma) {
    const auto& cocircuits = m.cocircuits();
    if (sigma.size() != cocircuits.size())
        fail(ErrorKind::domain, "localization must assign a sign to every cocircuit");
    for (std::size_t i = 0; i < cocircuits.size(); ++i) {
        int j = cocircuit_index(cocircuits, cocircuits[i].negated());
        if (sigma[static_cast<std::size_t>(j)] != opposite(sigma[i]))
            fail(ErrorKind::validation, "localization is not antisymmetric at " +
                                            cocircuits[i].str());
    }

    Extension ext;
    ext.sigma = sigma;
    ext.trivial_loop =
        std::all_of(sigma.begin(), sigma.end(), [](Sign s) { return s == Sign::zero; });

    std::vector<SignVector> extended;
    for (std::size_t i = 0; i < cocircuits.size(); ++i)
        extended.push_back(cocircuits[i].appended(sigma[i]));
    // Second family: conformal compositions of rank 2 whose localizations
    // cancel, extended by zero.
    for (std::size_t i = 0; i < cocircuits.size(); ++i) {
        for (std::size_t j = i + 1; j < cocircuits.size(); ++j) {
            if (sigma[i] == Sign::zero || sigma[i] != opposite(sigma[j])) continue;
            if (!cocircuits[i].conforms_to(cocircuits[j])) continue;
            SignVector composed = cocircuits[i].composed_with(cocircuits[j]);
            if (face_rank(m, composed) != 2) continue;
            extended.push_back(composed.appended(Sign::zero));
        }
    }
    canonicalize(extended);

    ValidationReport report = validate_circuit_axioms(extended);
    if (!report.ok())
        fail(ErrorKind::validation, "localization does not define an extension\n" +
                                        report.summary());
    ext.extended_cocircuits = std::move(extended);
    return ext;
}

Extension localization_from_realization(const OrientedMatroid& m, const RationalVector& g) {
    const Realization& r = m.realization();
    if (static_cast<int>(g.size()) != r.dim)
        fail(ErrorKind::domain, "extension vector dimension mismatch");
    bool zero = std::all_of(g.begin(), g.end(), [](const Rational& x) { return x == 0; });
    if (zero) fail(ErrorKind::validation, "zero extension vector would be a loop");
    for (int e = 0; e < r.m; ++e) {
        // g (anti)parallel to a row <=> their 2x... all 2-minors vanish.
        const RationalVector& row = r.rows[static_cast<std::size_t>(e)];
        bool proportional = true;
        for (int i = 0; i < r.dim && proportional; ++i)
            for (int j = i + 1; j < r.dim; ++j)
                if (row[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)] !=
                    row[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(i)]) {
                    proportional = false;
                    break;
                }
        if (proportional) {
            bool positive = false;
            for (int i = 0; i < r.dim; ++i)
                if (row[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)] > 0)
                    positive = true;
            fail(ErrorKind::validation,
                 std::string("extension vector is ") + (positive ? "parallel" : "antiparallel") +
                     " to element " + std::to_string(e + 1));
        }
    }
    if (!in_row_space(r.rows, g))
        fail(ErrorKind::validation,
             "extension vector lies outside the row space; it would be a coloop");

    const int rank = r.rank();
    std::vector<int> basis_rows = independent_rows(r.rows);
    RationalMatrix basis;
    for (int i : basis_rows) basis.push_back(r.rows[static_cast<std::size_t>(i)]);

    std::vector<Sign> sigma;
    for (const auto& y : m.cocircuits()) {
        // Witness point: the line where the zero-set rows vanish, oriented to
        // reproduce y.
        RationalMatrix zero_rows;
        for (int e : y.zero_set().elements())
            zero_rows.push_back(r.rows[static_cast<std::size_t>(e - 1)]);
        RationalMatrix a(zero_rows.size(), RationalVector(static_cast<std::size_t>(rank)));
        for (std::size_t i = 0; i < zero_rows.size(); ++i)
            for (int j = 0; j < rank; ++j)
                a[i][static_cast<std::size_t>(j)] =
                    dot(zero_rows[i], basis[static_cast<std::size_t>(j)]);
        auto ns = nullspace(a, rank);
        if (ns.size() != 1)
            fail(ErrorKind::internal, "cocircuit " + y.str() + " has no unique witness line");
        RationalVector x(static_cast<std::size_t>(r.dim), Rational(0));
        for (int j = 0; j < rank; ++j)
            for (int d = 0; d < r.dim; ++d)
                x[static_cast<std::size_t>(d)] +=
                    ns[0][static_cast<std::size_t>(j)] *
                    basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)];

        SignVector at_x(m.ground_size());
        for (int e = 1; e <= m.ground_size(); ++e)
            at_x.set(e, sign_of(dot(r.rows[static_cast<std::size_t>(e - 1)], x)));
        if (at_x == y.negated()) {
            for (auto& v : x) v = -v;
        } else if (!(at_x == y)) {
            fail(ErrorKind::internal, "witness point does not reproduce cocircuit " + y.str());
        }
        sigma.push_back(sign_of(dot(x, g)));
    }
    return extend(m, sigma);
}

std::vector<SignVector> conforming_cocircuits(const OrientedMatroid& m, const SignVector& k) {
    if (!m.is_tope(k)) fail(ErrorKind::precondition, k.str() + " is not a tope");
    std::vector<SignVector> out;
    for (const auto& d : m.cocircuits())
        if (d.conforms_to(k)) out.push_back(d);
    SignVector composed(k.size());
    for (const auto& d : out) composed = composed.composed_with(d);
    if (!(composed == k))
        fail(ErrorKind::validation, "conforming cocircuits do not compose to " + k.str() +
                                        "; cocircuit data is incomplete");
    return out;
}

LiftResult lift_committee(const TrainingSet& s, const Committee& committee,
                          const Extension& ext) {
    OrientedMatroid m = reorient_training(s);
    CommitteeClassification check = is_committee(m, committee.members);
    if (!check.is_committee)
        fail(ErrorKind::precondition, "the given tope set is not a committee for the "
                                      "reoriented training set");
    const auto& cocircuits = m.cocircuits();

    LiftResult result;
    result.conformal = true;
    for (const auto& k : committee.members) {
        std::vector<SignVector> conforming = conforming_cocircuits(m, k);
        bool plus = false;
        bool minus = false;
        for (const auto& d : conforming) {
            Sign sd = ext.sigma[static_cast<std::size_t>(cocircuit_index(cocircuits, d))];
            if (sd == Sign::plus) plus = true;
            if (sd == Sign::minus) minus = true;
        }
        if (plus && minus) {
            result.conformal = false;
            result.offending = k;
            result.lifted.clear();
            return result;
        }
        SignVector lifted(m.ground_size() + 1);
        for (const auto& d : conforming) {
            Sign sd = ext.sigma[static_cast<std::size_t>(cocircuit_index(cocircuits, d))];
            lifted = lifted.composed_with(d.reoriented(s.minus_class).appended(sd));
        }
        result.lifted.push_back(lifted);
    }
    std::sort(result.lifted.begin(), result.lifted.end(), CanonicalLess{});
    return result;
}

namespace {

Sign majority(long long minus_votes, long long plus_votes) {
    if (minus_votes > plus_votes) return Sign::minus;
    if (plus_votes > minus_votes) return Sign::plus;
    return Sign::zero;
}

} // namespace

Verdict decide_all(const TrainingSet& s, const Committee& committee, const Extension& ext) {
    const int m = s.ground_size();
    LiftResult lift = lift_committee(s, committee, ext);
    Verdict verdict;
    verdict.conformal = lift.conformal;
    verdict.per_pattern.assign(static_cast<std::size_t>(m) + 1, Sign::zero);

    if (lift.conformal) {
        for (int f = 1; f <= m + 1; ++f) {
            long long minus_votes = 0, plus_votes = 0;
            for (const auto& v : lift.lifted) {
                if (v.at(f) == Sign::minus) ++minus_votes;
                if (v.at(f) == Sign::plus) ++plus_votes;
            }
            verdict.per_pattern[static_cast<std::size_t>(f - 1)] =
                majority(minus_votes, plus_votes);
        }
    } else {
        for (int e = 1; e <= m; ++e) {
            long long minus_votes = 0, plus_votes = 0;
            for (const auto& k : committee.members) {
                Sign v = k.reoriented(s.minus_class).at(e);
                if (v == Sign::minus) ++minus_votes;
                if (v == Sign::plus) ++plus_votes;
            }
            verdict.per_pattern[static_cast<std::size_t>(e - 1)] =
                majority(minus_votes, plus_votes);
        }
        verdict.per_pattern[static_cast<std::size_t>(m)] = Sign::zero;
    }

    // Decision rules reproduce the labels on training patterns.
    for (int e = 1; e <= m; ++e)
        if (verdict.per_pattern[static_cast<std::size_t>(e - 1)] != s.label(e))
            fail(ErrorKind::internal,
                 "decision rule disagrees with the label of training pattern " +
                     std::to_string(e));
    return verdict;
}

Sign decide(const TrainingSet& s, const Committee& committee, const Extension& ext,
            int pattern) {
    if (pattern < 1 || pattern > s.ground_size() + 1)
        fail(ErrorKind::domain, "pattern index outside [1, m+1]");
    return decide_all(s, committee, ext).per_pattern[static_cast<std::size_t>(pattern - 1)];
}

} // namespace omc
