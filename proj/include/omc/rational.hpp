#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "omc/error.hpp"
#include "omc/sign_vector.hpp"

namespace omc {

using Rational = boost::multiprecision::cpp_rational;

inline Sign sign_of(const Rational& x) {
    int s = x.sign();
    return s < 0 ? Sign::minus : (s > 0 ? Sign::plus : Sign::zero);
}

// Accepts "p/q" or an integer shorthand "p"; exact, no floating point.
Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& x);

using RationalVector = std::vector<Rational>;

Rational dot(const RationalVector& a, const RationalVector& b);

} // namespace omc
