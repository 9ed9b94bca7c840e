#pragma once

#include "toricquiver/cone.hpp"
#include "toricquiver/matrix.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricquiver {

/// One reason a fan failed validation.
struct FanIssue {
  enum class Kind { NonPrimitiveRay, DuplicateRay, UnusedRay, NonSmoothCone, FanAxiomViolation };

  Kind kind;
  std::vector<std::size_t> rays;  ///< offending ray indices (NonPrimitiveRay, DuplicateRay, UnusedRay)
  Cone first;                     ///< NonSmoothCone, FanAxiomViolation
  Cone second;                    ///< FanAxiomViolation
  VecZ snf_diagonal;              ///< NonSmoothCone witness
  std::string message;
};

std::string to_string(FanIssue::Kind kind);

/// Raised by Fan::load when the data describes a well-formed but invalid fan.
/// Structural problems (ray of the wrong length, index out of range) raise
/// std::invalid_argument instead.
class FanValidationError : public std::runtime_error {
 public:
  explicit FanValidationError(std::vector<FanIssue> issues);
  const std::vector<FanIssue>& issues() const { return issues_; }

 private:
  std::vector<FanIssue> issues_;
};

struct FanOptions {
  /// Skip the Fourier-Motzkin part of the fan-axiom check; only ray containment is tested.
  bool trust_fan = false;
};

/// Z-basis B_K of Z^n containing the rays of a maximal cone K.
/// Columns 0..|K|-1 are the rays of K in increasing index order.
struct ChartBasis {
  Cone cone;
  MatZ basis;
  std::map<std::size_t, std::size_t> ray_positions;
};

/// The basis B_K reordered for the pair (J, p): rays of J first, then the
/// rays of K outside J, then the completion columns. `coords` are the
/// coordinates of ray p in that basis.
struct ChartView {
  Cone face;               ///< J
  std::size_t ray;         ///< p
  Cone chart;              ///< K
  MatZ ordered_basis;
  std::size_t face_rank;   ///< j = |J|
  std::size_t chart_rank;  ///< l = |K|
  VecZ coords;
  /// Ray index occupying each of the first l columns of ordered_basis.
  std::vector<std::size_t> column_rays;
};

/// A regular (smooth, simplicial) fan. Immutable after load.
class Fan {
 public:
  /// Validates and builds the fan generated by `max_cones` (the family of
  /// cones is their downward closure). Collects every validation problem
  /// before throwing FanValidationError.
  static Fan load(std::size_t dim, std::vector<VecZ> rays, const std::vector<Cone>& generating_cones,
                  FanOptions options = {});

  std::size_t dim() const { return dim_; }
  std::size_t num_rays() const { return rays_.size(); }
  const std::vector<VecZ>& rays() const { return rays_; }
  const VecZ& ray(std::size_t i) const { return rays_.at(i); }
  bool trust_fan() const { return trust_fan_; }

  /// All cones in canonical order; always contains the zero cone.
  const std::vector<Cone>& cones() const { return cones_; }
  bool contains(const Cone& c) const { return cone_set_.count(c) > 0; }

  /// Inclusion-maximal cones in canonical order.
  const std::vector<Cone>& maximal_cones() const { return maximal_; }

  /// Largest cardinality of a maximal cone containing `c`.
  std::size_t l_of(const Cone& c) const;

  /// Every (I, p) with I and I+{p} both cones, p not in I; sorted by (I, p).
  std::vector<std::pair<Cone, std::size_t>> codim1_pairs() const;

  const ChartBasis& chart_basis(const Cone& maximal) const;

  /// One view per maximal K with J in K, p not in K and |K| == l_of(J).
  std::vector<ChartView> chart_views(const Cone& face, std::size_t ray) const;

  /// Ray matrix: columns are the rays of `c` in increasing index order.
  MatZ ray_matrix(const Cone& c) const;

 private:
  Fan() = default;

  std::size_t dim_ = 0;
  std::vector<VecZ> rays_;
  std::vector<Cone> cones_;
  std::set<Cone> cone_set_;
  std::vector<Cone> maximal_;
  std::map<Cone, ChartBasis> bases_;
  bool trust_fan_ = false;
};

/// Convenience wrapper around Fan::load.
Fan load_fan(std::size_t dim, std::vector<VecZ> rays, const std::vector<Cone>& generating_cones,
             FanOptions options = {});

/// True iff the rays of `c` extend to a Z-basis, i.e. the Smith form of the
/// n x |c| ray matrix has all diagonal entries equal to 1.
bool is_smooth_cone(const Fan& fan, const Cone& c);
bool is_smooth_cone(const MatZ& ray_matrix);

/// cone(a) and cone(b) meet exactly in cone(a & b). With `exact` false only
/// ray containment is tested.
bool check_fan_axiom(const Fan& fan, const Cone& a, const Cone& b, bool exact = true);

/// Unimodular completion of the rays of a smooth cone, computed from the
/// row Hermite transform of the ray matrix.
ChartBasis extend_to_basis(const MatZ& ray_matrix, const Cone& cone);

}  // namespace toricquiver
