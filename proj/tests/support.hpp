#pragma once

// Shared test helpers: fixture loading, brute-force oracles independent of
// the library's construction paths, and seeded random instance generators.

#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "omc/io.hpp"
#include "omc/matroid.hpp"

namespace omc::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(OMC_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(ErrorKind::io, "missing fixture " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline OrientedMatroid load_fixture_matroid(const std::string& name) {
    std::ifstream f(fixture_path(name));
    if (!f) fail(ErrorKind::io, "missing fixture " + name);
    return matroid_from_file(read_matroid_file(f, name));
}

inline std::vector<SignVector> load_fixture_vectors(const std::string& name) {
    std::ifstream f(fixture_path(name));
    if (!f) fail(ErrorKind::io, "missing fixture " + name);
    return read_sign_vector_file(f, name);
}

// Oracle: all tope sign vectors of a rank-2 realization, collected by exact
// evaluation at rational points of the unit circle (Weierstrass
// parametrization), refined until the count stabilizes. Rays give cocircuits.
inline std::vector<SignVector> rank2_topes_by_sampling(const RationalMatrix& rows) {
    auto sign_vec = [&](const Rational& x, const Rational& y) {
        SignVector v(static_cast<int>(rows.size()));
        for (std::size_t e = 0; e < rows.size(); ++e)
            v.set(static_cast<int>(e) + 1, sign_of(rows[e][0] * x + rows[e][1] * y));
        return v;
    };
    std::set<SignVector, CanonicalLess> seen;
    for (int denom = 8; denom <= 512; denom *= 2) {
        std::size_t before = seen.size();
        for (int k = -denom; k <= denom; ++k) {
            Rational t(k, denom);
            // (1-t^2, 2t) sweeps the right half circle; use both orientations.
            Rational x = 1 - t * t, y = 2 * t;
            for (int s = 0; s < 2; ++s, x = -x, y = -y) {
                SignVector v = sign_vec(x, y);
                if (v.support().count() == static_cast<int>(rows.size())) seen.insert(v);
            }
        }
        if (seen.size() == before && denom > 8) break;
    }
    return {seen.begin(), seen.end()};
}

inline std::vector<SignVector> rank2_cocircuits_by_rays(const RationalMatrix& rows) {
    std::set<SignVector, CanonicalLess> seen;
    for (const auto& row : rows) {
        Rational dx = -row[1], dy = row[0];
        for (int s = 0; s < 2; ++s, dx = -dx, dy = -dy) {
            SignVector v(static_cast<int>(rows.size()));
            for (std::size_t e = 0; e < rows.size(); ++e)
                v.set(static_cast<int>(e) + 1, sign_of(rows[e][0] * dx + rows[e][1] * dy));
            if (!v.is_zero()) seen.insert(v);
        }
    }
    return {seen.begin(), seen.end()};
}

// Random realization with simple oriented matroid (no zero, parallel or
// antiparallel rows); optionally acyclic by forcing a common positive side.
inline Realization random_simple_realization(std::mt19937_64& rng, int m, int dim,
                                             bool acyclic) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    while (true) {
        Realization r;
        r.m = m;
        r.dim = dim;
        for (int e = 0; e < m; ++e) {
            RationalVector row(static_cast<std::size_t>(dim));
            for (auto& v : row) v = coeff(rng);
            if (acyclic) row[0] = std::abs(coeff(rng)) + 1; // strictly positive at (1,0,..)
            r.rows.push_back(std::move(row));
        }
        bool degenerate = matrix_rank(r.rows) != dim;
        for (int e = 0; e < m && !degenerate; ++e) {
            bool zero = true;
            for (const auto& v : r.rows[static_cast<std::size_t>(e)])
                if (v != 0) zero = false;
            if (zero) degenerate = true;
            for (int f = e + 1; f < m && !degenerate; ++f) {
                bool proportional = true;
                for (int i = 0; i < dim && proportional; ++i)
                    for (int j = i + 1; j < dim; ++j)
                        if (r.rows[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)] *
                                r.rows[static_cast<std::size_t>(f)][static_cast<std::size_t>(j)] !=
                            r.rows[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] *
                                r.rows[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)])
                            proportional = false;
                if (proportional) degenerate = true;
            }
        }
        if (!degenerate) return r;
    }
}

inline ElementSet random_subset(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> bit(0, 1);
    ElementSet s;
    for (int e = 1; e <= m; ++e)
        if (bit(rng)) s.insert(e);
    return s;
}

} // namespace omc::test
