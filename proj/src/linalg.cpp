#include "toricquiver/linalg.hpp"

#include <algorithm>

namespace toricquiver {

MatQ mat_mul(const MatQ& a, const MatQ& b) { return a * b; }

RowEchelon rref(const MatQ& a) {
  RowEchelon out{a, {}};
  MatQ& m = out.reduced;
  std::size_t row = 0;
  Rational factor;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(row, piv);
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const MatQ& a) { return rref(a).pivots.size(); }

MatQ mat_inverse(const MatQ& a) {
  if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  MatQ aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw SingularError("matrix is singular (rank " + std::to_string(std::count_if(e.pivots.begin(), e.pivots.end(), [n](std::size_t p) { return p < n; })) +
                        " < " + std::to_string(n) + ")");
  MatQ inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Nullspace nullspace(const MatQ& a) {
  RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Nullspace out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    MatQ v(a.cols(), 1);
    v(free, 0) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r], 0) = -e.reduced(r, free);
    out.basis.push_back(std::move(v));
  }
  out.dimension = out.basis.size();
  return out;
}

std::optional<VecQ> solve_unique(const MatQ& a, const VecQ& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
  MatQ aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  if (e.pivots.size() != a.cols()) throw DimensionError("solve: matrix lacks full column rank");
  VecQ x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

Integer det(const MatZ& a) {
  if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  MatZ m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Replaces rows (or columns) a, b of m by x*a + y*b and (-b0/g)*a + (a0/g)*b,
// where x*a0 + y*b0 = g. The 2x2 transform has determinant 1.
struct Bezout {
  Integer g, x, y, a_over_g, b_over_g;
};

Bezout bezout(const Integer& a, const Integer& b) {
  Bezout out;
  mpz_gcdext(out.g.get_mpz_t(), out.x.get_mpz_t(), out.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  out.a_over_g = a / out.g;
  out.b_over_g = b / out.g;
  return out;
}

void combine_rows(MatZ& m, std::size_t a, std::size_t b, const Bezout& t) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer ra = m(a, c), rb = m(b, c);
    m(a, c) = t.x * ra + t.y * rb;
    m(b, c) = t.a_over_g * rb - t.b_over_g * ra;
  }
}

void combine_cols(MatZ& m, std::size_t a, std::size_t b, const Bezout& t) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer ca = m(r, a), cb = m(r, b);
    m(r, a) = t.x * ca + t.y * cb;
    m(r, b) = t.a_over_g * cb - t.b_over_g * ca;
  }
}

void add_row_multiple(MatZ& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}

void add_col_multiple(MatZ& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += k * m(r, src);
}

void negate_row(MatZ& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

Hermite hnf(const MatZ& a) {
  Hermite out{a, MatZ::identity(a.rows())};
  MatZ& h = out.h;
  MatZ& u = out.u;
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    bool any = false;
    for (std::size_t i = row; i < h.rows(); ++i) any = any || h(i, col) != 0;
    if (!any) continue;
    for (std::size_t i = row + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      Bezout t = bezout(h(row, col), h(i, col));
      combine_rows(h, row, i, t);
      combine_rows(u, row, i, t);
    }
    if (h(row, col) < 0) {
      negate_row(h, row);
      negate_row(u, row);
    }
    const Integer pivot = h(row, col);
    for (std::size_t k = 0; k < row; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(k, col).get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      add_row_multiple(h, k, row, -q);
      add_row_multiple(u, k, row, -q);
    }
    ++row;
  }
  return out;
}

VecZ Smith::diagonal() const {
  VecZ d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
  return d;
}

Smith snf(const MatZ& a) {
  Smith out{a, MatZ::identity(a.rows()), MatZ::identity(a.cols())};
  MatZ& s = out.s;
  MatZ& u = out.u;
  MatZ& v = out.v;
  const std::size_t m = s.rows(), n = s.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero entry (first in row-major order) becomes the pivot
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (s(i, j) != 0 && (pr == m || abs(s(i, j)) < abs(s(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    s.swap_rows(t, pr);
    u.swap_rows(t, pr);
    s.swap_cols(t, pc);
    v.swap_cols(t, pc);

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        if (s(i, t) % s(t, t) == 0) {
          Integer q = s(i, t) / s(t, t);
          add_row_multiple(s, i, t, -q);
          add_row_multiple(u, i, t, -q);
        } else {
          Bezout b = bezout(s(t, t), s(i, t));
          combine_rows(s, t, i, b);
          combine_rows(u, t, i, b);
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        if (s(t, j) % s(t, t) == 0) {
          Integer q = s(t, j) / s(t, t);
          add_col_multiple(s, j, t, -q);
          add_col_multiple(v, j, t, -q);
        } else {
          Bezout b = bezout(s(t, t), s(t, j));
          combine_cols(s, t, j, b);
          combine_cols(v, t, j, b);
        }
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m && clean; ++i) clean = s(i, t) == 0;
      if (!clean) continue;
      // divisibility: fold a row holding a non-multiple into the pivot row
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row_multiple(s, t, bad, 1);
      add_row_multiple(u, t, bad, 1);
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  return out;
}

MatZ unimodular_inverse(const MatZ& a) {
  MatZ inv = to_integer(mat_inverse(to_rational(a)));
  return inv;
}

Integer vector_gcd(const VecZ& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

}  // namespace toricquiver
