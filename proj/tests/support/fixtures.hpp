#pragma once

// Hand-built representations used by the unit and acceptance suites.

#include "toricquiver/builtins.hpp"
#include "toricquiver/category.hpp"

#include <array>

namespace fixtures {

using namespace toricquiver;

inline MatQ scalar(const Rational& x) { return MatQ{{x}}; }

/// 1x1 object on the P^2 fan with prescribed monodromies M[|p] = m[p] and
/// (i)-(iii) satisfied: u[|p] = 1, v[|p] = m[p] - 1, u[{p}|q] = 1,
/// v[{p}|q] = m[q] - 1. Forces M[{p}|q] = m[q].
inline Representation p2_scalar_object(const std::array<Rational, 3>& m) {
  Fan fan = projective_plane().load();
  Representation rep = constant_object(fan, 1);
  for (std::size_t p = 0; p < 3; ++p) {
    rep.u[{Cone{}, p}] = scalar(1);
    rep.v[{Cone{}, p}] = scalar(m[p] - 1);
  }
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = 0; q < 3; ++q) {
      if (p == q) continue;
      rep.u[{Cone{p}, q}] = scalar(1);
      rep.v[{Cone{p}, q}] = scalar(m[q] - 1);
    }
  return rep;
}

/// Fan-wide object with u[{I,p}] = U_p and v[{I,p}] = V_p for diagonal U_p,
/// V_p on Q^d everywhere; satisfies (iii) because diagonal matrices commute.
inline Representation diagonal_object(const Fan& fan, const std::vector<MatQ>& u_by_ray,
                                      const std::vector<MatQ>& v_by_ray) {
  const std::size_t d = u_by_ray.empty() ? 0 : u_by_ray.front().rows();
  Representation rep = constant_object(fan, d);
  for (auto& [key, m] : rep.u) m = u_by_ray.at(key.ray);
  for (auto& [key, m] : rep.v) m = v_by_ray.at(key.ray);
  return rep;
}

inline MatQ diag(const std::vector<Rational>& entries) {
  MatQ m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

/// Locations of all failures, in report order.
inline std::vector<std::string> locations(const ConditionReport& r) {
  std::vector<std::string> out;
  for (const auto& f : r.failures) out.push_back(f.location());
  return out;
}

}  // namespace fixtures
