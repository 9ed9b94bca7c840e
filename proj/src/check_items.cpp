#include "check_items.hpp"

#include "toricquiver/linalg.hpp"

namespace toricquiver::detail {

bool invertible(const MatQ& m) { return m.is_square() && rank(m) == m.rows(); }

namespace {

Failure shape_failure(Cone at, std::optional<std::size_t> ray, std::string message) {
  Failure f;
  f.condition = Condition::Shape;
  f.vertex = std::move(at);
  f.ray = ray;
  f.message = std::move(message);
  return f;
}

std::string shape_str(const MatQ& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }
std::string shape_str(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

}  // namespace

std::vector<Failure> shape_failures(const Quiver& quiver, const Representation& rep) {
  std::vector<Failure> out;
  std::set<Cone> vertices(quiver.vertices.begin(), quiver.vertices.end());
  for (const auto& [c, d] : rep.spaces)
    if (!vertices.count(c)) out.push_back(shape_failure(c, {}, "space at " + c.to_string() + " is not a vertex"));
  bool spaces_ok = true;
  for (const auto& c : quiver.vertices)
    if (!rep.spaces.count(c)) {
      out.push_back(shape_failure(c, {}, "missing space at " + c.to_string()));
      spaces_ok = false;
    }
  if (!spaces_ok) return out;

  std::set<ArrowKey> pairs(quiver.arrow_pairs.begin(), quiver.arrow_pairs.end());
  for (const auto* maps : {&rep.u, &rep.v}) {
    const char* name = maps == &rep.u ? "u" : "v";
    for (const auto& [key, m] : *maps)
      if (!pairs.count(key))
        out.push_back(shape_failure(key.face, key.ray, std::string(name) + " map on a non-arrow (" +
                                                           key.face.to_string() + "," + std::to_string(key.ray) + ")"));
    for (const auto& key : quiver.arrow_pairs) {
      auto it = maps->find(key);
      const std::size_t lo = rep.spaces.at(key.face), hi = rep.spaces.at(key.coface());
      const std::size_t rows = maps == &rep.u ? hi : lo, cols = maps == &rep.u ? lo : hi;
      std::string where = std::string(name) + "(" + key.face.to_string() + "," + std::to_string(key.ray) + ")";
      if (it == maps->end())
        out.push_back(shape_failure(key.face, key.ray, "missing map " + where));
      else if (it->second.rows() != rows || it->second.cols() != cols)
        out.push_back(shape_failure(key.face, key.ray,
                                    "map " + where + " is " + shape_str(it->second) + ", expected " + shape_str(rows, cols)));
    }
  }

  for (const auto& [c, ms] : rep.loops)
    if (!vertices.count(c)) out.push_back(shape_failure(c, {}, "loops at " + c.to_string() + " which is not a vertex"));
  for (const auto& c : quiver.vertices) {
    const std::size_t want = quiver.loops.at(c);
    auto it = rep.loops.find(c);
    const std::size_t have = it == rep.loops.end() ? 0 : it->second.size();
    if (have != want) {
      out.push_back(shape_failure(c, {}, "vertex " + c.to_string() + " has " + std::to_string(have) +
                                             " loop maps, expected " + std::to_string(want)));
      continue;
    }
    const std::size_t d = rep.spaces.at(c);
    for (std::size_t i = 0; i < have; ++i)
      if (it->second[i].rows() != d || it->second[i].cols() != d)
        out.push_back(shape_failure(c, {}, "loop " + std::to_string(i + 1) + " at " + c.to_string() + " is " +
                                               shape_str(it->second[i]) + ", expected " + shape_str(d, d)));
  }
  return out;
}

std::optional<Failure> loop_failure(const Representation& rep, const Cone& vertex, std::size_t loop) {
  const MatQ& m = rep.loop(vertex, loop);
  if (invertible(m)) return std::nullopt;
  Failure f;
  f.condition = Condition::I;
  f.vertex = vertex;
  f.loop = loop;
  f.message = "loop endomorphism is singular";
  f.witness = {m};
  return f;
}

std::optional<Failure> monodromy_failure(const Representation& rep, const Cone& face, std::size_t ray) {
  MatQ m = monodromy(rep, face, ray);
  if (invertible(m)) return std::nullopt;
  Failure f;
  f.condition = Condition::II;
  f.vertex = face;
  f.ray = ray;
  f.message = "monodromy v u + Id is singular";
  f.witness = {std::move(m)};
  return f;
}

std::vector<Failure> square_failures(const Representation& rep, const Cone& face, std::size_t p, std::size_t q) {
  const ArrowKey ip{face, p}, iq{face, q};
  const ArrowKey ip_q{face.with(p), q}, iq_p{face.with(q), p};
  std::vector<Failure> out;
  auto compare = [&](const char* identity, MatQ lhs, MatQ rhs) {
    if (lhs == rhs) return;
    Failure f;
  f.condition = Condition::III;
    f.vertex = face;
    f.ray = p;
    f.second_ray = q;
    f.identity = identity;
    f.message = std::string("square identity ") + identity + " does not commute";
    f.witness = {std::move(lhs), std::move(rhs)};
    out.push_back(std::move(f));
  };
  // E_I -> E_{I+p+q} both ways round the square
  compare("uu", rep.u.at(ip_q) * rep.u.at(ip), rep.u.at(iq_p) * rep.u.at(iq));
  // E_{I+p+q} -> E_I
  compare("vv", rep.v.at(ip) * rep.v.at(ip_q), rep.v.at(iq) * rep.v.at(iq_p));
  // E_{I+q} -> E_{I+p}, and the mirror E_{I+p} -> E_{I+q}
  compare("vu(p,q)", rep.v.at(ip_q) * rep.u.at(iq_p), rep.u.at(ip) * rep.v.at(iq));
  compare("vu(q,p)", rep.v.at(iq_p) * rep.u.at(ip_q), rep.u.at(iq) * rep.v.at(ip));
  return out;
}

std::optional<Failure> relation_failure(const Representation& rep, const RelationWord& word) {
  Failure f;
  f.condition = Condition::IV;
  f.vertex = word.lhs.vertex;
  f.ray = word.lhs.index;
  f.chart = word.chart;
  for (const auto& factor : word.rhs) {
    if (invertible(generator_matrix(rep, factor.generator))) continue;
    f.prerequisite = true;
    f.message = "not evaluated: generator " + factor.generator.to_string() + " is singular";
    return f;
  }
  MatQ lhs = monodromy(rep, word.lhs.vertex, word.lhs.index);
  MatQ rhs = evaluate_word(rep, word);
  if (lhs == rhs) return std::nullopt;
  f.message = "relation " + word.to_string() + " does not hold";
  f.witness = {std::move(lhs), std::move(rhs)};
  return f;
}

}  // namespace toricquiver::detail
