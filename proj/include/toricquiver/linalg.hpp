#pragma once

#include "toricquiver/matrix.hpp"

#include <optional>
#include <vector>

namespace toricquiver {

// Exact rational elimination. Pivots are chosen as the first nonzero entry
// in the column; exact arithmetic makes magnitude pivoting unnecessary.

MatQ mat_mul(const MatQ& a, const MatQ& b);

/// Throws SingularError when the rank is below the size, DimensionError when not square.
MatQ mat_inverse(const MatQ& a);

struct RowEchelon {
  MatQ reduced;                     ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

RowEchelon rref(const MatQ& a);
std::size_t rank(const MatQ& a);

struct Nullspace {
  std::size_t dimension = 0;
  std::vector<MatQ> basis;  ///< column vectors (cols x 1)
};

Nullspace nullspace(const MatQ& a);

/// Unique solution of a*x = b when a has full column rank; nullopt when inconsistent.
std::optional<VecQ> solve_unique(const MatQ& a, const VecQ& b);

/// Determinant by fraction-free (Bareiss) elimination.
Integer det(const MatZ& a);

/// Row Hermite normal form: u*a == h, u unimodular. h is in row echelon form,
/// pivots positive, and entries above each pivot reduced into [0, pivot).
struct Hermite {
  MatZ h;
  MatZ u;
};
Hermite hnf(const MatZ& a);

/// Smith normal form: u*a*v == s, u and v unimodular, s diagonal with
/// nonnegative entries d_1 | d_2 | ... (zeros last).
struct Smith {
  MatZ s;
  MatZ u;
  MatZ v;
  VecZ diagonal() const;
};
Smith snf(const MatZ& a);

/// Integer inverse of a unimodular matrix.
MatZ unimodular_inverse(const MatZ& a);

Integer vector_gcd(const VecZ& v);

}  // namespace toricquiver
