#include "toricquiver/polyhedral.hpp"

#include "toricquiver/linalg.hpp"

#include <set>
#include <vector>

namespace toricquiver {

namespace {

// coeffs . y + constant >= 0, stored as [coeffs..., constant]
using Inequality = std::vector<Rational>;

Inequality normalized(Inequality row) {
  for (std::size_t i = 0; i + 1 < row.size(); ++i) {
    if (row[i] == 0) continue;
    Rational scale = abs(row[i]);
    for (auto& x : row) x /= scale;
    break;
  }
  return row;
}

}  // namespace

bool nonnegative_feasible(const MatQ& eq, const VecQ& eq_rhs) {
  const std::size_t vars = eq.cols();
  MatQ aug(eq.rows(), vars + 1);
  for (std::size_t r = 0; r < eq.rows(); ++r) {
    for (std::size_t c = 0; c < vars; ++c) aug(r, c) = eq(r, c);
    aug(r, vars) = eq_rhs[r];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == vars) return false;

  std::vector<bool> is_pivot(vars, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t c = 0; c < vars; ++c)
    if (!is_pivot[c]) free_vars.push_back(c);
  const std::size_t nf = free_vars.size();

  std::set<Inequality> system;
  // pivot variable: rhs - sum R_f y_f >= 0
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    Inequality row(nf + 1);
    for (std::size_t f = 0; f < nf; ++f) row[f] = -e.reduced(r, free_vars[f]);
    row[nf] = e.reduced(r, vars);
    system.insert(normalized(std::move(row)));
  }
  for (std::size_t f = 0; f < nf; ++f) {
    Inequality row(nf + 1);
    row[f] = 1;
    system.insert(std::move(row));
  }

  for (std::size_t k = 0; k < nf; ++k) {
    std::vector<Inequality> pos, neg;
    std::set<Inequality> next;
    for (const auto& row : system) {
      if (row[k] > 0)
        pos.push_back(row);
      else if (row[k] < 0)
        neg.push_back(row);
      else
        next.insert(row);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Inequality row(nf + 1);
        for (std::size_t i = 0; i <= nf; ++i) row[i] = p[i] * (-q[k]) + q[i] * p[k];
        row[k] = 0;
        next.insert(normalized(std::move(row)));
      }
    system = std::move(next);
  }
  for (const auto& row : system)
    if (row[nf] < 0) return false;
  return true;
}

}  // namespace toricquiver
