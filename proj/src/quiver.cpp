#include "toricquiver/quiver.hpp"

#include <json.hpp>

#include <set>
#include <sstream>
#include <stdexcept>

namespace toricquiver {

using nlohmann::json;

std::vector<Arrow> Quiver::arrows() const {
  std::vector<Arrow> out;
  out.reserve(2 * arrow_pairs.size());
  for (const auto& k : arrow_pairs) {
    out.push_back({k, ArrowKind::U});
    out.push_back({k, ArrowKind::V});
  }
  return out;
}

Quiver build_quiver(const Fan& fan) {
  Quiver q;
  q.dim = fan.dim();
  q.vertices = fan.cones();
  for (const auto& c : q.vertices) q.loops[c] = fan.dim() - fan.l_of(c);
  for (auto& [face, ray] : fan.codim1_pairs()) q.arrow_pairs.push_back({face, ray});
  return q;
}

namespace {

std::string quoted(const Cone& c) { return "\"" + c.to_string() + "\""; }

json cone_json(const Cone& c) { return json(c.rays()); }

Cone cone_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("cone must be an array of ray indices");
  std::vector<std::size_t> rays;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw std::invalid_argument("ray index must be a nonnegative integer");
    rays.push_back(x.get<std::size_t>());
  }
  Cone c(rays);
  if (c.size() != rays.size()) throw std::invalid_argument("cone lists a ray twice");
  return c;
}

}  // namespace

std::string export_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (const auto& v : q.vertices) os << "  " << quoted(v) << ";\n";
  for (const auto& a : q.arrows())
    os << "  " << quoted(a.source()) << " -> " << quoted(a.target()) << " [label=\""
       << (a.kind == ArrowKind::U ? "u" : "v") << "\"];\n";
  for (const auto& v : q.vertices)
    for (std::size_t i = 1; i <= q.loops.at(v); ++i)
      os << "  " << quoted(v) << " -> " << quoted(v) << " [label=\"M" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const Quiver& q) {
  json out;
  out["index_base"] = 0;
  out["dim"] = q.dim;
  json vertices = json::array();
  for (const auto& v : q.vertices) vertices.push_back({{"cone", cone_json(v)}, {"loops", q.loops.at(v)}});
  out["vertices"] = std::move(vertices);
  json arrows = json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"from", cone_json(a.source())},
                      {"to", cone_json(a.target())},
                      {"ray", a.key.ray},
                      {"kind", a.kind == ArrowKind::U ? "u" : "v"}});
  out["arrows"] = std::move(arrows);
  return out.dump(2) + "\n";
}

Quiver parse_quiver_json(const std::string& text) {
  json in = json::parse(text);
  if (in.contains("index_base") && in["index_base"] != 0) throw std::invalid_argument("only index_base 0 is supported");
  Quiver q;
  q.dim = in.at("dim").get<std::size_t>();
  for (const auto& v : in.at("vertices")) {
    Cone c = cone_from_json(v.at("cone"));
    q.vertices.push_back(c);
    q.loops[c] = v.at("loops").get<std::size_t>();
  }
  std::set<ArrowKey> u_seen, v_seen;
  for (const auto& a : in.at("arrows")) {
    Cone from = cone_from_json(a.at("from"));
    Cone to = cone_from_json(a.at("to"));
    std::size_t ray = a.at("ray").get<std::size_t>();
    std::string kind = a.at("kind").get<std::string>();
    if (kind == "u") {
      if (to != from.with(ray) || from.contains(ray)) throw std::invalid_argument("malformed u-arrow");
      u_seen.insert({from, ray});
    } else if (kind == "v") {
      if (from != to.with(ray) || to.contains(ray)) throw std::invalid_argument("malformed v-arrow");
      v_seen.insert({to, ray});
    } else {
      throw std::invalid_argument("arrow kind must be \"u\" or \"v\"");
    }
  }
  if (u_seen != v_seen) throw std::invalid_argument("arrows must come in opposite pairs");
  q.arrow_pairs.assign(u_seen.begin(), u_seen.end());
  return q;
}

}  // namespace toricquiver
