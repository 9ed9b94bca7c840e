#include "toricquiver/io.hpp"

#include <limits>

namespace toricquiver {

using nlohmann::json;

namespace {

json cone_json(const Cone& c) { return json(c.rays()); }

Cone cone_from_json(const json& j) {
  if (!j.is_array()) throw InputError("cone must be an array of ray indices");
  std::vector<std::size_t> rays;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw InputError("ray index must be a nonnegative integer");
    rays.push_back(x.get<std::size_t>());
  }
  Cone c(rays);
  if (c.size() != rays.size()) throw InputError("cone " + j.dump() + " lists a ray twice");
  return c;
}

Cone cone_from_key(const std::string& key) {
  json j = json::parse(key, nullptr, false);
  if (j.is_discarded()) throw InputError("vertex key '" + key + "' is not a JSON array");
  return cone_from_json(j);
}

// The pair (I, p) for an arrow key "A->B" between I and I+{p}, either direction.
ArrowKey arrow_from_key(const std::string& key, bool* points_up) {
  auto arrow = key.find("->");
  if (arrow == std::string::npos) throw InputError("arrow key '" + key + "' must look like \"[..]->[..]\"");
  Cone a = cone_from_key(key.substr(0, arrow));
  Cone b = cone_from_key(key.substr(arrow + 2));
  auto as_pair = [&](const Cone& lo, const Cone& hi) -> std::optional<ArrowKey> {
    Cone extra = hi.minus(lo);
    if (!lo.is_subset_of(hi) || extra.size() != 1) return std::nullopt;
    return ArrowKey{lo, *extra.begin()};
  };
  if (auto k = as_pair(a, b)) {
    *points_up = true;
    return *k;
  }
  if (auto k = as_pair(b, a)) {
    *points_up = false;
    return *k;
  }
  throw InputError("arrow key '" + key + "' does not join a cone to a codimension-one face");
}

std::string arrow_key(const Cone& from, const Cone& to) { return cone_json(from).dump() + "->" + cone_json(to).dump(); }

Integer integer_from_json(const json& j) {
  Rational q = rational_from_json(j);
  if (q.get_den() != 1) throw InputError("expected an integer, got " + j.dump());
  return q.get_num();
}

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

}  // namespace

json rational_to_json(const Rational& q) {
  if (q.get_den() == 1) return integer_to_json(q.get_num());
  return json(q.get_str());
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected an exact rational (integer or \"p/q\" string), got " + j.dump());
}

json matrix_to_json(const MatQ& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatQ matrix_from_json(const json& j, std::size_t cols_if_empty) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  if (j.empty()) return MatQ(0, cols_if_empty);
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  MatQ m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

FanData parse_fan_json(const std::string& text) {
  json in = json::parse(text, nullptr, false);
  if (in.is_discarded()) throw InputError("fan file is not valid JSON");
  if (!in.is_object()) throw InputError("fan file must be a JSON object");
  if (in.contains("index_base") && in["index_base"] != 0) throw InputError("only \"index_base\": 0 is supported");
  for (const char* field : {"dim", "rays", "max_cones"})
    if (!in.contains(field)) throw InputError(std::string("fan file lacks \"") + field + "\"");
  if (!in["dim"].is_number_unsigned()) throw InputError("\"dim\" must be a positive integer");
  if (!in["rays"].is_array() || !in["max_cones"].is_array()) throw InputError("\"rays\" and \"max_cones\" must be arrays");
  FanData f;
  f.dim = in["dim"].get<std::size_t>();
  for (const auto& r : in["rays"]) {
    if (!r.is_array()) throw InputError("each ray must be an array of integers");
    VecZ v;
    for (const auto& x : r) v.push_back(integer_from_json(x));
    f.rays.push_back(std::move(v));
  }
  for (const auto& c : in["max_cones"]) f.max_cones.push_back(cone_from_json(c));
  return f;
}

std::string fan_to_json(const FanData& fan) {
  json out;
  out["index_base"] = 0;
  out["dim"] = fan.dim;
  json rays = json::array();
  for (const auto& r : fan.rays) {
    json v = json::array();
    for (const auto& x : r) v.push_back(integer_to_json(x));
    rays.push_back(std::move(v));
  }
  out["rays"] = std::move(rays);
  json cones = json::array();
  for (const auto& c : fan.max_cones) cones.push_back(cone_json(c));
  out["max_cones"] = std::move(cones);
  return out.dump() + "\n";
}

std::string fan_info_json(const Fan& fan) {
  json out;
  out["index_base"] = 0;
  out["dim"] = fan.dim();
  out["trust_fan"] = fan.trust_fan();
  json rays = json::array();
  for (const auto& r : fan.rays()) {
    json v = json::array();
    for (const auto& x : r) v.push_back(integer_to_json(x));
    rays.push_back(std::move(v));
  }
  out["rays"] = std::move(rays);
  json cones = json::array();
  for (const auto& c : fan.cones()) cones.push_back({{"cone", cone_json(c)}, {"l", fan.l_of(c)}});
  out["cones"] = std::move(cones);
  json maximal = json::array();
  json bases = json::array();
  for (const auto& k : fan.maximal_cones()) {
    maximal.push_back(cone_json(k));
    const ChartBasis& b = fan.chart_basis(k);
    json columns = json::array();
    for (std::size_t c = 0; c < b.basis.cols(); ++c) {
      json col = json::array();
      for (const auto& x : b.basis.column(c)) col.push_back(integer_to_json(x));
      columns.push_back(std::move(col));
    }
    bases.push_back({{"cone", cone_json(k)}, {"columns", std::move(columns)}});
  }
  out["max_cones"] = std::move(maximal);
  out["bases"] = std::move(bases);
  return out.dump(2) + "\n";
}

json fan_issue_json(const FanIssue& issue) {
  json out{{"kind", to_string(issue.kind)}, {"message", issue.message}};
  if (!issue.rays.empty()) out["rays"] = issue.rays;
  switch (issue.kind) {
    case FanIssue::Kind::NonSmoothCone: {
      out["cone"] = cone_json(issue.first);
      json diag = json::array();
      for (const auto& d : issue.snf_diagonal) diag.push_back(integer_to_json(d));
      out["snf_diagonal"] = std::move(diag);
      break;
    }
    case FanIssue::Kind::FanAxiomViolation:
      out["cones"] = {cone_json(issue.first), cone_json(issue.second)};
      break;
    default: break;
  }
  return out;
}

Representation parse_representation_json(const std::string& text) {
  json in = json::parse(text, nullptr, false);
  if (in.is_discarded()) throw InputError("representation file is not valid JSON");
  if (!in.is_object()) throw InputError("representation file must be a JSON object");
  if (in.contains("index_base") && in["index_base"] != 0) throw InputError("only \"index_base\": 0 is supported");
  if (!in.contains("spaces") || !in["spaces"].is_object()) throw InputError("representation lacks a \"spaces\" object");
  Representation rep;
  for (const auto& [key, d] : in["spaces"].items()) {
    if (!d.is_number_unsigned()) throw InputError("space dimension at " + key + " must be a nonnegative integer");
    if (!rep.spaces.emplace(cone_from_key(key), d.get<std::size_t>()).second)
      throw InputError("space " + key + " listed twice");
  }
  auto dim_or_zero = [&](const Cone& c) {
    auto it = rep.spaces.find(c);
    return it == rep.spaces.end() ? std::size_t{0} : it->second;
  };
  for (const char* field : {"u", "v"}) {
    if (!in.contains(field)) continue;
    if (!in[field].is_object()) throw InputError(std::string("\"") + field + "\" must be an object");
    const bool is_u = std::string(field) == "u";
    auto& maps = is_u ? rep.u : rep.v;
    for (const auto& [key, m] : in[field].items()) {
      bool up = true;
      ArrowKey k = arrow_from_key(key, &up);
      std::size_t cols = is_u ? dim_or_zero(k.face) : dim_or_zero(k.coface());
      if (!maps.emplace(k, matrix_from_json(m, cols)).second) throw InputError(std::string(field) + " map " + key + " listed twice");
    }
  }
  if (in.contains("loops")) {
    if (!in["loops"].is_object()) throw InputError("\"loops\" must be an object");
    for (const auto& [key, list] : in["loops"].items()) {
      if (!list.is_array()) throw InputError("loops at " + key + " must be a list of matrices");
      Cone c = cone_from_key(key);
      std::vector<MatQ> ms;
      for (const auto& m : list) ms.push_back(matrix_from_json(m, dim_or_zero(c)));
      if (!rep.loops.emplace(c, std::move(ms)).second) throw InputError("loops at " + key + " listed twice");
    }
  }
  return rep;
}

std::string representation_to_json(const Representation& rep) {
  json out;
  out["index_base"] = 0;
  json spaces = json::object();
  for (const auto& [c, d] : rep.spaces) spaces[cone_json(c).dump()] = d;
  out["spaces"] = std::move(spaces);
  json u = json::object(), v = json::object();
  for (const auto& [k, m] : rep.u) u[arrow_key(k.face, k.coface())] = matrix_to_json(m);
  for (const auto& [k, m] : rep.v) v[arrow_key(k.coface(), k.face)] = matrix_to_json(m);
  out["u"] = std::move(u);
  out["v"] = std::move(v);
  json loops = json::object();
  for (const auto& [c, ms] : rep.loops) {
    json list = json::array();
    for (const auto& m : ms) list.push_back(matrix_to_json(m));
    loops[cone_json(c).dump()] = std::move(list);
  }
  out["loops"] = std::move(loops);
  return out.dump(2) + "\n";
}

json report_to_json(const ConditionReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    json entry{{"condition", to_string(f.condition)},
               {"prerequisite", f.prerequisite},
               {"location", f.location()},
               {"vertex", cone_json(f.vertex)},
               {"message", f.message}};
    if (f.ray) entry["ray"] = *f.ray;
    if (f.second_ray) entry["second_ray"] = *f.second_ray;
    if (f.loop) entry["loop"] = *f.loop;
    if (f.chart) entry["chart"] = cone_json(*f.chart);
    if (!f.identity.empty()) entry["identity"] = f.identity;
    json witness = json::array();
    for (const auto& m : f.witness) witness.push_back(matrix_to_json(m));
    entry["witness"] = std::move(witness);
    failures.push_back(std::move(entry));
  }
  return json{{"index_base", 0}, {"passed", report.passed()}, {"failures", std::move(failures)}};
}

json morphism_to_json(const Morphism& m) {
  json out = json::object();
  for (const auto& [c, phi] : m.maps) out[cone_json(c).dump()] = matrix_to_json(phi);
  return out;
}

}  // namespace toricquiver
