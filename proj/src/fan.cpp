#include "toricquiver/fan.hpp"

#include "toricquiver/linalg.hpp"
#include "toricquiver/polyhedral.hpp"

#include <algorithm>

namespace toricquiver {

std::string to_string(FanIssue::Kind kind) {
  switch (kind) {
    case FanIssue::Kind::NonPrimitiveRay: return "NonPrimitiveRay";
    case FanIssue::Kind::DuplicateRay: return "DuplicateRay";
    case FanIssue::Kind::UnusedRay: return "UnusedRay";
    case FanIssue::Kind::NonSmoothCone: return "NonSmoothCone";
    case FanIssue::Kind::FanAxiomViolation: return "FanAxiomViolation";
  }
  return "Unknown";
}

namespace {

std::string summarize(const std::vector<FanIssue>& issues) {
  std::string s = "invalid fan:";
  for (const auto& i : issues) s += " " + i.message + ";";
  return s;
}

MatZ ray_matrix_of(std::size_t dim, const std::vector<VecZ>& rays, const Cone& c) {
  MatZ m(dim, c.size());
  std::size_t col = 0;
  for (auto i : c) {
    for (std::size_t r = 0; r < dim; ++r) m(r, col) = rays[i][r];
    ++col;
  }
  return m;
}

// v in cone(c), the rays of c being linearly independent.
bool in_simplicial_cone(std::size_t dim, const std::vector<VecZ>& rays, const Cone& c, const VecZ& v) {
  MatQ a = to_rational(ray_matrix_of(dim, rays, c));
  VecQ b(v.begin(), v.end());
  auto x = solve_unique(a, b);
  if (!x) return false;
  return std::all_of(x->begin(), x->end(), [](const Rational& q) { return q >= 0; });
}

bool fan_axiom_holds(std::size_t dim, const std::vector<VecZ>& rays, const Cone& a, const Cone& b, bool exact) {
  const Cone a_only = a.minus(b);
  const Cone b_only = b.minus(a);
  if (a_only.empty() || b_only.empty()) return true;
  for (auto i : a_only)
    if (in_simplicial_cone(dim, rays, b, rays[i])) return false;
  for (auto j : b_only)
    if (in_simplicial_cone(dim, rays, a, rays[j])) return false;
  if (!exact) return true;

  // sum_a x_i v_i - sum_b y_j v_j = 0, x, y >= 0, with unit mass on the
  // rays outside the common face: feasible iff the cones overlap beyond it.
  const std::size_t vars = a.size() + b.size();
  MatQ eq(dim + 1, vars);
  VecQ rhs(dim + 1, 0);
  std::size_t col = 0;
  for (auto i : a) {
    for (std::size_t r = 0; r < dim; ++r) eq(r, col) = rays[i][r];
    if (!b.contains(i)) eq(dim, col) = 1;
    ++col;
  }
  for (auto j : b) {
    for (std::size_t r = 0; r < dim; ++r) eq(r, col) = -rays[j][r];
    if (!a.contains(j)) eq(dim, col) = 1;
    ++col;
  }
  rhs[dim] = 1;
  return !nonnegative_feasible(eq, rhs);
}

}  // namespace

FanValidationError::FanValidationError(std::vector<FanIssue> issues)
    : std::runtime_error(summarize(issues)), issues_(std::move(issues)) {}

bool is_smooth_cone(const MatZ& ray_matrix) {
  if (ray_matrix.cols() > ray_matrix.rows()) return false;
  VecZ d = snf(ray_matrix).diagonal();
  return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

bool is_smooth_cone(const Fan& fan, const Cone& c) {
  for (auto i : c)
    if (i >= fan.num_rays()) throw std::out_of_range("unknown ray index " + std::to_string(i));
  return is_smooth_cone(fan.ray_matrix(c));
}

bool check_fan_axiom(const Fan& fan, const Cone& a, const Cone& b, bool exact) {
  return fan_axiom_holds(fan.dim(), fan.rays(), a, b, exact);
}

ChartBasis extend_to_basis(const MatZ& ray_matrix, const Cone& cone) {
  const std::size_t n = ray_matrix.rows();
  const std::size_t k = ray_matrix.cols();
  if (k != cone.size()) throw DimensionError("extend_to_basis: ray matrix does not match cone");
  // u * R = [I; 0] for a smooth cone, so R is the leading block of u^-1.
  Hermite h = hnf(ray_matrix);
  MatZ basis = unimodular_inverse(h.u);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (basis(r, c) != ray_matrix(r, c))
        throw std::logic_error("extend_to_basis: cone " + cone.to_string() + " is not smooth");
  ChartBasis out{cone, std::move(basis), {}};
  std::size_t col = 0;
  for (auto i : cone) out.ray_positions[i] = col++;
  return out;
}

Fan Fan::load(std::size_t dim, std::vector<VecZ> rays, const std::vector<Cone>& generating_cones,
              FanOptions options) {
  if (dim == 0) throw std::invalid_argument("fan dimension must be positive");
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i].size() != dim)
      throw std::invalid_argument("ray " + std::to_string(i) + " has " + std::to_string(rays[i].size()) +
                                  " coordinates, expected " + std::to_string(dim));
  for (const auto& c : generating_cones)
    for (auto i : c)
      if (i >= rays.size()) throw std::invalid_argument("cone " + c.to_string() + " references unknown ray " + std::to_string(i));

  std::vector<FanIssue> issues;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (vector_gcd(rays[i]) != 1)
      issues.push_back({FanIssue::Kind::NonPrimitiveRay, {i}, {}, {}, {},
                        "ray " + std::to_string(i) + " is not primitive"});
    for (std::size_t j = 0; j < i; ++j)
      if (rays[i] == rays[j])
        issues.push_back({FanIssue::Kind::DuplicateRay, {j, i}, {}, {}, {},
                          "rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide"});
  }

  Fan fan;
  fan.dim_ = dim;
  fan.rays_ = std::move(rays);
  fan.trust_fan_ = options.trust_fan;

  // downward closure
  fan.cone_set_.insert(Cone{});
  for (const auto& g : generating_cones) {
    const auto& r = g.rays();
    if (r.size() >= 8 * sizeof(unsigned long long)) throw std::invalid_argument("cone " + g.to_string() + " is too large");
    for (unsigned long long mask = 0; mask < (1ULL << r.size()); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t b = 0; b < r.size(); ++b)
        if (mask & (1ULL << b)) sub.push_back(r[b]);
      fan.cone_set_.insert(Cone(std::move(sub)));
    }
  }
  fan.cones_.assign(fan.cone_set_.begin(), fan.cone_set_.end());

  for (const auto& c : fan.cones_) {
    bool maximal = std::none_of(fan.cones_.begin(), fan.cones_.end(), [&](const Cone& d) {
      return d.size() > c.size() && c.is_subset_of(d);
    });
    if (maximal) fan.maximal_.push_back(c);
  }

  std::vector<bool> used(fan.rays_.size(), false);
  for (const auto& c : fan.maximal_)
    for (auto i : c) used[i] = true;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i])
      issues.push_back({FanIssue::Kind::UnusedRay, {i}, {}, {}, {},
                        "ray " + std::to_string(i) + " spans no cone of the fan"});

  // faces of smooth cones are smooth, so the maximal ones suffice
  bool all_smooth = true;
  for (const auto& c : fan.maximal_) {
    MatZ m = fan.ray_matrix(c);
    VecZ diag = snf(m).diagonal();
    bool smooth = c.size() <= dim && std::all_of(diag.begin(), diag.end(), [](const Integer& x) { return x == 1; });
    if (!smooth) {
      all_smooth = false;
      std::string d;
      for (std::size_t i = 0; i < diag.size(); ++i) d += (i ? "," : "") + diag[i].get_str();
      issues.push_back({FanIssue::Kind::NonSmoothCone, {}, c, {}, diag,
                        "cone " + c.to_string() + " is not smooth (Smith diagonal " + d + ")"});
    }
  }

  // the axiom for maximal pairs implies it for all faces (simplicial cones)
  if (all_smooth) {
    for (std::size_t a = 0; a < fan.maximal_.size(); ++a)
      for (std::size_t b = a + 1; b < fan.maximal_.size(); ++b)
        if (!fan_axiom_holds(dim, fan.rays_, fan.maximal_[a], fan.maximal_[b], !options.trust_fan))
          issues.push_back({FanIssue::Kind::FanAxiomViolation, {}, fan.maximal_[a], fan.maximal_[b], {},
                            "cones " + fan.maximal_[a].to_string() + " and " + fan.maximal_[b].to_string() +
                                " overlap beyond their common face"});
  }

  if (!issues.empty()) throw FanValidationError(std::move(issues));

  for (const auto& k : fan.maximal_) fan.bases_.emplace(k, extend_to_basis(fan.ray_matrix(k), k));
  return fan;
}

Fan load_fan(std::size_t dim, std::vector<VecZ> rays, const std::vector<Cone>& generating_cones, FanOptions options) {
  return Fan::load(dim, std::move(rays), generating_cones, options);
}

MatZ Fan::ray_matrix(const Cone& c) const { return ray_matrix_of(dim_, rays_, c); }

std::size_t Fan::l_of(const Cone& c) const {
  if (!contains(c)) throw std::invalid_argument("l_of: " + c.to_string() + " is not a cone of the fan");
  std::size_t best = 0;
  for (const auto& k : maximal_)
    if (c.is_subset_of(k)) best = std::max(best, k.size());
  return best;
}

std::vector<std::pair<Cone, std::size_t>> Fan::codim1_pairs() const {
  std::vector<std::pair<Cone, std::size_t>> out;
  for (const auto& c : cones_)
    for (std::size_t p = 0; p < rays_.size(); ++p)
      if (!c.contains(p) && contains(c.with(p))) out.emplace_back(c, p);
  return out;
}

const ChartBasis& Fan::chart_basis(const Cone& maximal) const {
  auto it = bases_.find(maximal);
  if (it == bases_.end()) throw std::invalid_argument("chart_basis: " + maximal.to_string() + " is not a maximal cone");
  return it->second;
}

std::vector<ChartView> Fan::chart_views(const Cone& face, std::size_t ray) const {
  if (!contains(face) || face.contains(ray) || ray >= rays_.size() || !contains(face.with(ray)))
    throw std::invalid_argument("chart_views: (" + face.to_string() + ", " + std::to_string(ray) +
                                ") is not a codimension-one incidence");
  const std::size_t l = l_of(face);
  std::vector<ChartView> out;
  for (const auto& k : maximal_) {
    if (k.size() != l || k.contains(ray) || !face.is_subset_of(k)) continue;
    const ChartBasis& cb = chart_basis(k);
    ChartView view{face, ray, k, MatZ(dim_, dim_), face.size(), l, {}, {}};
    std::vector<std::size_t> source_cols;
    for (auto i : face) view.column_rays.push_back(i);
    for (auto i : k.minus(face)) view.column_rays.push_back(i);
    for (auto i : view.column_rays) source_cols.push_back(cb.ray_positions.at(i));
    for (std::size_t c = l; c < dim_; ++c) source_cols.push_back(c);
    for (std::size_t c = 0; c < dim_; ++c)
      for (std::size_t r = 0; r < dim_; ++r) view.ordered_basis(r, c) = cb.basis(r, source_cols[c]);
    MatZ inv = unimodular_inverse(view.ordered_basis);
    MatZ vp(dim_, 1);
    for (std::size_t r = 0; r < dim_; ++r) vp(r, 0) = rays_[ray][r];
    view.coords = (inv * vp).column(0);
    out.push_back(std::move(view));
  }
  return out;
}

}  // namespace toricquiver
