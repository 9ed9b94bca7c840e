#pragma once

#include "toricquiver/fan.hpp"

#include <string>
#include <vector>

namespace toricquiver {

/// Unvalidated fan description, as read from or written to fan JSON.
struct FanData {
  std::size_t dim = 0;
  std::vector<VecZ> rays;
  std::vector<Cone> max_cones;

  Fan load(FanOptions options = {}) const { return Fan::load(dim, rays, max_cones, options); }
  friend bool operator==(const FanData&, const FanData&) = default;
};

FanData affine_space(std::size_t n);                      // C^n
FanData torus_product(std::size_t l, std::size_t n);      // C^l x (C*)^(n-l)
FanData projective_line();                                // P^1
FanData projective_plane();                               // P^2
FanData figure_one_fan();                                 // cone(e1,e2) and the ray -e1-e2
FanData projective_space(std::size_t n);                  // P^n

/// Names accepted by the `example` command: cn:<n>, cstar:<l>,<n>, p1, p2, fan1.
/// Throws std::invalid_argument for anything else.
FanData example_fan(const std::string& name);

/// A representative list of built-in names, used by tests and the acceptance suite.
std::vector<std::string> builtin_fan_names();

}  // namespace toricquiver
