#pragma once

#include <optional>
#include <vector>

#include "omc/rational.hpp"

namespace omc {

// Dense exact-rational matrix, row major. Small: everything here runs at desk
// scale (tens of rows, rank <= 4), so plain Gaussian elimination is enough.
using RationalMatrix = std::vector<RationalVector>;

int matrix_rank(RationalMatrix a);

// Basis of the right nullspace {x : a x = 0}, columns of `a` indexed by x.
std::vector<RationalVector> nullspace(RationalMatrix a, int cols);

// Indices of a row subset forming a basis of the row space (first independent
// rows in order).
std::vector<int> independent_rows(const RationalMatrix& a);

// True if v lies in the row space of `a`.
bool in_row_space(const RationalMatrix& a, const RationalVector& v);

} // namespace omc
