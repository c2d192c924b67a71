#include "omc/linalg.hpp"

#include <algorithm>

namespace omc {

Rational parse_rational(std::string_view text) {
    if (text.empty()) fail(ErrorKind::domain, "empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            boost::multiprecision::cpp_int p{std::string(text)};
            return Rational(p);
        }
        boost::multiprecision::cpp_int p{std::string(text.substr(0, slash))};
        boost::multiprecision::cpp_int q{std::string(text.substr(slash + 1))};
        if (q == 0) fail(ErrorKind::domain, "zero denominator in rational literal");
        return Rational(p, q);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorKind::domain, "invalid rational literal '" + std::string(text) + "'");
    }
}

std::string rational_str(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) fail(ErrorKind::domain, "dot product dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

// Row echelon elimination; returns pivot column per eliminated row.
std::vector<int> echelon(RationalMatrix& a, int cols) {
    std::vector<int> pivot_cols;
    std::size_t row = 0;
    for (int col = 0; col < cols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][static_cast<std::size_t>(col)] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[row], a[p]);
        const Rational inv = a[row][static_cast<std::size_t>(col)];
        for (int c = col; c < cols; ++c) a[row][static_cast<std::size_t>(c)] /= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row) continue;
            const Rational f = a[r][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c = col; c < cols; ++c)
                a[r][static_cast<std::size_t>(c)] -= f * a[row][static_cast<std::size_t>(c)];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

int matrix_rank(RationalMatrix a) {
    if (a.empty()) return 0;
    return static_cast<int>(echelon(a, static_cast<int>(a[0].size())).size());
}

std::vector<RationalVector> nullspace(RationalMatrix a, int cols) {
    std::vector<int> pivots = a.empty() ? std::vector<int>{} : echelon(a, cols);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<RationalVector> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        RationalVector x(static_cast<std::size_t>(cols), Rational(0));
        x[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[static_cast<std::size_t>(pivots[r])] = -a[r][static_cast<std::size_t>(free)];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<int> independent_rows(const RationalMatrix& a) {
    std::vector<int> chosen;
    RationalMatrix acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc.push_back(a[i]);
        if (matrix_rank(acc) == static_cast<int>(acc.size()))
            chosen.push_back(static_cast<int>(i));
        else
            acc.pop_back();
    }
    return chosen;
}

bool in_row_space(const RationalMatrix& a, const RationalVector& v) {
    RationalMatrix b = a;
    int r = matrix_rank(b);
    b = a;
    b.push_back(v);
    return matrix_rank(b) == r;
}

} // namespace omc
