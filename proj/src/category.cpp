#include "toricquiver/category.hpp"

#include "check_items.hpp"
#include "toricquiver/linalg.hpp"

#include <algorithm>

namespace toricquiver {

std::size_t Representation::dim_at(const Cone& c) const {
  auto it = spaces.find(c);
  if (it == spaces.end()) throw std::out_of_range("representation has no space at " + c.to_string());
  return it->second;
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::Shape: return "shape";
    case Condition::I: return "i";
    case Condition::II: return "ii";
    case Condition::III: return "iii";
    case Condition::IV: return "iv";
  }
  return "?";
}

namespace {

std::string bare(const Cone& c) {
  std::string s;
  for (auto i : c) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

}  // namespace

std::string Failure::location() const {
  std::string head = "(" + toricquiver::to_string(condition) + ")" + (prerequisite ? " prerequisite" : "") + " at ";
  switch (condition) {
    case Condition::Shape:
      return head + vertex.to_string() + (ray ? " ray " + std::to_string(*ray) : "");
    case Condition::I:
      return head + vertex.to_string() + ", loop " + std::to_string(loop.value_or(0));
    case Condition::II:
      return head + "(" + vertex.to_string() + "," + std::to_string(ray.value_or(0)) + ")";
    case Condition::III:
      return head + "(" + vertex.to_string() + "," + std::to_string(ray.value_or(0)) + "," +
             std::to_string(second_ray.value_or(0)) + ") " + identity;
    case Condition::IV:
      return head + "(" + vertex.to_string() + "," + std::to_string(ray.value_or(0)) +
             ",K=" + (chart ? chart->to_string() : "[]") + ")";
  }
  return head;
}

std::set<Condition> ConditionReport::violated() const {
  std::set<Condition> out;
  for (const auto& f : failures)
    if (!f.prerequisite) out.insert(f.condition);
  return out;
}

void ConditionReport::append(const ConditionReport& other) {
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string Generator::to_string() const {
  return std::string(kind == Kind::Monodromy ? "M[" : "L[") + bare(vertex) + "|" + std::to_string(index) + "]";
}

std::string RelationWord::to_string() const {
  std::string s = lhs.to_string() + " =";
  if (rhs.empty()) return s + " Id";
  for (std::size_t i = 0; i < rhs.size(); ++i)
    s += (i ? " * " : " ") + rhs[i].generator.to_string() + "^" + std::to_string(rhs[i].exponent);
  return s;
}

std::vector<RelationWord> relations(const Fan& fan) {
  std::vector<RelationWord> out;
  for (const auto& [face, ray] : fan.codim1_pairs()) {
    for (const ChartView& view : fan.chart_views(face, ray)) {
      RelationWord word{Generator::monodromy(face, ray), {}, view.chart};
      for (std::size_t c = view.face_rank; c < fan.dim(); ++c) {
        const Integer& e = view.coords[c];
        if (e == 0) continue;
        if (!e.fits_slong_p()) throw std::overflow_error("relation exponent does not fit in 64 bits");
        Generator g = c < view.chart_rank ? Generator::monodromy(face, view.column_rays[c])
                                          : Generator::loop_at(face, c - view.chart_rank + 1);
        word.rhs.push_back({std::move(g), e.get_si()});
      }
      out.push_back(std::move(word));
    }
  }
  return out;
}

PrerequisiteFailure::PrerequisiteFailure(Generator g)
    : std::runtime_error("generator " + g.to_string() + " is singular"), generator_(std::move(g)) {}

MatQ monodromy(const Representation& rep, const Cone& face, std::size_t ray) {
  const ArrowKey key{face, ray};
  const MatQ& u = rep.u.at(key);
  const MatQ& v = rep.v.at(key);
  MatQ m = v * u;
  if (!m.is_square() || m.rows() != rep.dim_at(face))
    throw DimensionError("monodromy at (" + face.to_string() + "," + std::to_string(ray) + ") has wrong shape");
  return m + MatQ::identity(m.rows());
}

MatQ generator_matrix(const Representation& rep, const Generator& g) {
  if (g.kind == Generator::Kind::Monodromy) return monodromy(rep, g.vertex, g.index);
  return rep.loop(g.vertex, g.index);
}

namespace {

MatQ power(MatQ base, std::int64_t e) {
  MatQ result = MatQ::identity(base.rows());
  auto n = static_cast<std::uint64_t>(e);
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

}  // namespace

MatQ evaluate_word(const Representation& rep, const RelationWord& word) {
  MatQ result = MatQ::identity(rep.dim_at(word.lhs.vertex));
  for (const auto& f : word.rhs) {
    MatQ g = generator_matrix(rep, f.generator);
    if (f.exponent < 0) {
      try {
        g = mat_inverse(g);
      } catch (const SingularError&) {
        throw PrerequisiteFailure(f.generator);
      }
      result = result * power(std::move(g), -f.exponent);
    } else {
      result = result * power(std::move(g), f.exponent);
    }
  }
  return result;
}

std::vector<Category::Square> squares_of(const Fan& fan) {
  std::vector<Category::Square> out;
  for (const auto& face : fan.cones())
    for (std::size_t p = 0; p < fan.num_rays(); ++p) {
      if (face.contains(p)) continue;
      for (std::size_t q = p + 1; q < fan.num_rays(); ++q)
        if (!face.contains(q) && fan.contains(face.with(p).with(q))) out.push_back({face, p, q});
    }
  return out;
}

Category::Category(const Fan& fan)
    : fan_(fan), quiver_(build_quiver(fan)), relations_(relations(fan)), squares_(squares_of(fan)) {}

Representation constant_object(const Fan& fan, std::size_t d) {
  Representation rep;
  const Quiver q = build_quiver(fan);
  for (const auto& c : q.vertices) {
    rep.spaces[c] = d;
    std::size_t m = q.loops.at(c);
    if (m) rep.loops[c] = std::vector<MatQ>(m, MatQ::identity(d));
  }
  for (const auto& key : q.arrow_pairs) {
    rep.u[key] = MatQ(d, d);
    rep.v[key] = MatQ(d, d);
  }
  return rep;
}

namespace {

void require_shape(const Quiver& quiver, const Representation& rep, const char* role) {
  auto f = detail::shape_failures(quiver, rep);
  if (!f.empty()) throw DimensionError(std::string(role) + " representation: " + f.front().message);
}

}  // namespace

bool is_morphism(const Quiver& quiver, const Representation& source, const Representation& target,
                 const Morphism& m) {
  for (const auto& c : quiver.vertices) {
    auto it = m.maps.find(c);
    if (it == m.maps.end()) throw DimensionError("morphism has no map at " + c.to_string());
    if (it->second.rows() != target.dim_at(c) || it->second.cols() != source.dim_at(c))
      throw DimensionError("morphism map at " + c.to_string() + " has wrong shape");
  }
  for (const auto& key : quiver.arrow_pairs) {
    const MatQ& phi_lo = m.maps.at(key.face);
    const MatQ& phi_hi = m.maps.at(key.coface());
    if (phi_hi * source.u.at(key) != target.u.at(key) * phi_lo) return false;
    if (phi_lo * source.v.at(key) != target.v.at(key) * phi_hi) return false;
  }
  for (const auto& c : quiver.vertices)
    for (std::size_t i = 1; i <= quiver.loops.at(c); ++i)
      if (m.maps.at(c) * source.loop(c, i) != target.loop(c, i) * m.maps.at(c)) return false;
  return true;
}

namespace {

// Unknowns: the entries of phi_I (d'_I x d_I, row-major), vertices in canonical order.
class HomSystem {
 public:
  HomSystem(const Quiver& quiver, const Representation& src, const Representation& dst) : src_(src), dst_(dst) {
    std::size_t offset = 0;
    for (const auto& c : quiver.vertices) {
      offsets_[c] = offset;
      offset += dst.dim_at(c) * src.dim_at(c);
    }
    unknowns_ = offset;
  }

  std::size_t unknowns() const { return unknowns_; }
  std::size_t offset(const Cone& c) const { return offsets_.at(c); }

  // Rows for phi_to * a - b * phi_from = 0, where a : src(from) -> src(to), b : dst(from) -> dst(to).
  void add_intertwining(const Cone& from, const Cone& to, const MatQ& a, const MatQ& b) {
    const std::size_t ds_from = src_.dim_at(from), ds_to = src_.dim_at(to);
    const std::size_t dt_from = dst_.dim_at(from), dt_to = dst_.dim_at(to);
    for (std::size_t r = 0; r < dt_to; ++r)
      for (std::size_t c = 0; c < ds_from; ++c) {
        std::map<std::size_t, Rational> row;
        // (phi_to * a)(r,c) = sum_k phi_to(r,k) a(k,c)
        for (std::size_t k = 0; k < ds_to; ++k)
          if (a(k, c) != 0) row[offset(to) + r * ds_to + k] += a(k, c);
        // (b * phi_from)(r,c) = sum_k b(r,k) phi_from(k,c)
        for (std::size_t k = 0; k < dt_from; ++k)
          if (b(r, k) != 0) row[offset(from) + k * ds_from + c] -= b(r, k);
        std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
        if (!row.empty()) rows_.push_back(std::move(row));
      }
  }

  MatQ matrix() const {
    MatQ m(rows_.size(), unknowns_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, x] : rows_[r]) m(r, c) = x;
    return m;
  }

 private:
  const Representation& src_;
  const Representation& dst_;
  std::map<Cone, std::size_t> offsets_;
  std::size_t unknowns_ = 0;
  std::vector<std::map<std::size_t, Rational>> rows_;
};

}  // namespace

HomSpace hom_dim(const Quiver& quiver, const Representation& source, const Representation& target) {
  require_shape(quiver, source, "source");
  require_shape(quiver, target, "target");
  HomSystem sys(quiver, source, target);
  for (const auto& key : quiver.arrow_pairs) {
    sys.add_intertwining(key.face, key.coface(), source.u.at(key), target.u.at(key));
    sys.add_intertwining(key.coface(), key.face, source.v.at(key), target.v.at(key));
  }
  for (const auto& c : quiver.vertices)
    for (std::size_t i = 1; i <= quiver.loops.at(c); ++i)
      sys.add_intertwining(c, c, source.loop(c, i), target.loop(c, i));

  Nullspace ns = nullspace(sys.matrix());
  HomSpace out;
  out.dimension = ns.dimension;
  for (const auto& vec : ns.basis) {
    Morphism m;
    for (const auto& c : quiver.vertices) {
      const std::size_t rows = target.dim_at(c), cols = source.dim_at(c);
      MatQ phi(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t k = 0; k < cols; ++k) phi(r, k) = vec(sys.offset(c) + r * cols + k, 0);
      m.maps.emplace(c, std::move(phi));
    }
    out.basis.push_back(std::move(m));
  }
  return out;
}

}  // namespace toricquiver
