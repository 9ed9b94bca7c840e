#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace toricquiver {

/// A cone of a simplicial fan, identified by its sorted set of 0-based ray indices.
/// Ordering is by size first, then lexicographic; this is the canonical
/// vertex order used in every export.
class Cone {
 public:
  Cone() = default;
  Cone(std::initializer_list<std::size_t> rays) : Cone(std::vector<std::size_t>(rays)) {}
  explicit Cone(std::vector<std::size_t> rays) : rays_(std::move(rays)) {
    std::sort(rays_.begin(), rays_.end());
    rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
  }

  std::size_t size() const { return rays_.size(); }
  bool empty() const { return rays_.empty(); }
  auto begin() const { return rays_.begin(); }
  auto end() const { return rays_.end(); }
  const std::vector<std::size_t>& rays() const { return rays_; }

  bool contains(std::size_t ray) const { return std::binary_search(rays_.begin(), rays_.end(), ray); }

  bool is_subset_of(const Cone& other) const {
    return std::includes(other.rays_.begin(), other.rays_.end(), rays_.begin(), rays_.end());
  }

  Cone with(std::size_t ray) const {
    auto r = rays_;
    r.push_back(ray);
    return Cone(std::move(r));
  }
  Cone without(std::size_t ray) const {
    auto r = rays_;
    r.erase(std::remove(r.begin(), r.end(), ray), r.end());
    return Cone(std::move(r));
  }

  Cone intersect(const Cone& other) const {
    std::vector<std::size_t> r;
    std::set_intersection(rays_.begin(), rays_.end(), other.rays_.begin(), other.rays_.end(), std::back_inserter(r));
    return Cone(std::move(r));
  }
  Cone minus(const Cone& other) const {
    std::vector<std::size_t> r;
    std::set_difference(rays_.begin(), rays_.end(), other.rays_.begin(), other.rays_.end(), std::back_inserter(r));
    return Cone(std::move(r));
  }

  /// "[0,2]"; "[]" for the zero cone.
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rays_.size(); ++i) s += (i ? "," : "") + std::to_string(rays_[i]);
    return s + "]";
  }

  friend bool operator==(const Cone&, const Cone&) = default;
  friend bool operator<(const Cone& a, const Cone& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.rays_ < b.rays_;
  }

 private:
  std::vector<std::size_t> rays_;
};

}  // namespace toricquiver
