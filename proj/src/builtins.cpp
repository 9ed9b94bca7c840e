#include "toricquiver/builtins.hpp"

#include <charconv>
#include <stdexcept>

namespace toricquiver {

namespace {

VecZ unit(std::size_t n, std::size_t i) {
  VecZ v(n, 0);
  v[i] = 1;
  return v;
}

std::size_t parse_count(const std::string& text, const std::string& name) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw std::invalid_argument("bad number in example name '" + name + "'");
  return value;
}

}  // namespace

FanData affine_space(std::size_t n) { return torus_product(n, n); }

FanData torus_product(std::size_t l, std::size_t n) {
  if (n == 0 || l > n) throw std::invalid_argument("torus_product needs 0 <= l <= n and n >= 1");
  FanData f{n, {}, {}};
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < l; ++i) {
    f.rays.push_back(unit(n, i));
    all.push_back(i);
  }
  f.max_cones.push_back(Cone(all));
  return f;
}

FanData projective_line() { return {1, {{1}, {-1}}, {Cone{0}, Cone{1}}}; }

FanData projective_plane() { return projective_space(2); }

FanData figure_one_fan() { return {2, {{1, 0}, {0, 1}, {-1, -1}}, {Cone{0, 1}, Cone{2}}}; }

FanData projective_space(std::size_t n) {
  if (n == 0) throw std::invalid_argument("projective_space needs n >= 1");
  FanData f{n, {}, {}};
  for (std::size_t i = 0; i < n; ++i) f.rays.push_back(unit(n, i));
  f.rays.push_back(VecZ(n, -1));
  for (std::size_t skip = n + 1; skip-- > 0;) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    f.max_cones.push_back(Cone(c));
  }
  return f;
}

FanData example_fan(const std::string& name) {
  if (name == "p1") return projective_line();
  if (name == "p2") return projective_plane();
  if (name == "fan1") return figure_one_fan();
  if (name.rfind("cn:", 0) == 0) {
    std::size_t n = parse_count(name.substr(3), name);
    if (n == 0) throw std::invalid_argument("cn:<n> needs n >= 1");
    return affine_space(n);
  }
  if (name.rfind("cstar:", 0) == 0) {
    std::string rest = name.substr(6);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected cstar:<l>,<n>");
    std::size_t l = parse_count(rest.substr(0, comma), name);
    std::size_t n = parse_count(rest.substr(comma + 1), name);
    if (n == 0 || l > n) throw std::invalid_argument("cstar:<l>,<n> needs 0 <= l <= n, n >= 1");
    return torus_product(l, n);
  }
  throw std::invalid_argument("unknown example '" + name + "'");
}

std::vector<std::string> builtin_fan_names() {
  return {"cn:1", "cn:2", "cn:3", "cstar:0,2", "cstar:1,2", "cstar:1,3", "cstar:2,3", "p1", "p2", "fan1"};
}

}  // namespace toricquiver
