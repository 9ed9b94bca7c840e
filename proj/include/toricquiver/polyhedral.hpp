#pragma once

#include "toricquiver/matrix.hpp"

namespace toricquiver {

/// Exact feasibility of { x : eq * x == eq_rhs, x >= 0 }.
/// Equalities are eliminated by exact row reduction; the remaining
/// nonnegativity constraints on the free variables are decided by
/// Fourier-Motzkin elimination.
bool nonnegative_feasible(const MatQ& eq, const VecQ& eq_rhs);

}  // namespace toricquiver
