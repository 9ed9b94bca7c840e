#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "toricquiver/category.hpp"
#include "toricquiver/linalg.hpp"

#include <doctest.h>

#include <algorithm>

using namespace toricquiver;
using fixtures::scalar;

namespace {

bool has_location(const ConditionReport& r, const std::string& loc) {
  auto l = fixtures::locations(r);
  return std::find(l.begin(), l.end(), loc) != l.end();
}

std::vector<FanData> small_fans() {
  return {affine_space(2), projective_line(), projective_plane(), figure_one_fan(), torus_product(1, 2),
          {2, {{1, 0}, {-1, 1}}, {Cone{0}, Cone{1}}}};
}

}  // namespace

TEST_CASE("monodromy") {
  Fan c1 = affine_space(1).load();
  Representation rep = constant_object(c1, 2);
  CHECK(monodromy(rep, Cone{}, 0) == MatQ::identity(2));

  Representation one = constant_object(c1, 1);
  one.u[{Cone{}, 0}] = scalar(2);
  one.v[{Cone{}, 0}] = scalar(3);
  CHECK(monodromy(one, Cone{}, 0) == scalar(7));

  rep.u[{Cone{}, 0}] = MatQ::identity(2);
  rep.v[{Cone{}, 0}] = Rational(-1) * MatQ::identity(2);
  CHECK(monodromy(rep, Cone{}, 0).is_zero());

  rep.u[{Cone{}, 0}] = MatQ(3, 2);
  CHECK_THROWS_AS(monodromy(rep, Cone{}, 0), DimensionError);
}

TEST_CASE("check_i") {
  Category fan1(figure_one_fan().load());
  Representation rep = constant_object(fan1.fan(), 1);
  CHECK(check_i(fan1, rep).passed());

  rep.loops[Cone{2}][0] = scalar(0);
  ConditionReport r = check_i(fan1, rep);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].location() == "(i) at [2], loop 1");
  CHECK(r.failures[0].witness.front() == scalar(0));

  Representation two = constant_object(fan1.fan(), 2);
  two.loops[Cone{2}][0] = MatQ{{1, 1}, {0, 1}};
  CHECK(check_i(fan1, two).passed());
}

TEST_CASE("check_ii") {
  Category c2(affine_space(2).load());
  Representation rep = constant_object(c2.fan(), 1);
  CHECK(check_ii(c2, rep).passed());

  rep.u[{Cone{}, 0}] = scalar(1);
  rep.v[{Cone{}, 0}] = scalar(-2);
  CHECK(check_ii(c2, rep).passed());

  rep.v[{Cone{}, 0}] = scalar(-1);
  ConditionReport r = check_ii(c2, rep);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].location() == "(ii) at ([],0)");
}

TEST_CASE("check_iii") {
  Category c2(affine_space(2).load());
  CHECK(check_iii(c2, constant_object(c2.fan(), 2)).passed());

  Representation rep = constant_object(c2.fan(), 1);
  rep.u[{Cone{}, 0}] = scalar(1);
  rep.u[{Cone{}, 1}] = scalar(1);
  rep.u[{Cone{0}, 1}] = scalar(1);
  rep.u[{Cone{1}, 0}] = scalar(2);
  ConditionReport r = check_iii(c2, rep);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].identity == "uu");
  CHECK(r.failures[0].location() == "(iii) at ([],0,1) uu");
  CHECK(r.failures[0].witness == std::vector<MatQ>{scalar(1), scalar(2)});

  SUBCASE("mixed identity is checked in both orientations") {
    Representation m = constant_object(c2.fan(), 1);
    m.u[{Cone{}, 0}] = scalar(1);
    m.v[{Cone{}, 1}] = scalar(1);
    ConditionReport mr = check_iii(c2, m);
    REQUIRE(mr.failures.size() == 1);
    CHECK(mr.failures[0].identity == "vu(p,q)");
    std::swap(m.u[{Cone{}, 0}], m.u[{Cone{}, 1}]);
    std::swap(m.v[{Cone{}, 0}], m.v[{Cone{}, 1}]);
    mr = check_iii(c2, m);
    REQUIRE(mr.failures.size() == 1);
    CHECK(mr.failures[0].identity == "vu(q,p)");
  }
}

TEST_CASE("diagonal objects satisfy (iii) and their monodromies commute") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(-3, 3);
  for (const auto& data : small_fans()) {
    Category cat(data.load());
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<MatQ> us, vs;
      for (std::size_t p = 0; p < cat.fan().num_rays(); ++p) {
        us.push_back(fixtures::diag({e(rng), e(rng)}));
        vs.push_back(fixtures::diag({e(rng), e(rng)}));
      }
      Representation rep = fixtures::diagonal_object(cat.fan(), us, vs);
      CHECK(check_iii(cat, rep).passed());
      if (!check_i(cat, rep).passed() || !check_ii(cat, rep).passed()) continue;
      for (const auto& s : cat.squares()) {
        MatQ mp = monodromy(rep, s.face, s.p), mq = monodromy(rep, s.face, s.q);
        CHECK(mp * mq == mq * mp);
      }
    }
  }
}

TEST_CASE("relations of the P^2 fan") {
  auto words = relations(projective_plane().load());
  REQUIRE(words.size() == 9);
  auto M = [](Cone j, std::size_t q) { return Generator::monodromy(std::move(j), q); };
  // M_{0,3} = M_{0,1}^-1 M_{0,2}^-1 in the 1-based labels
  RelationWord w{M(Cone{}, 2), {{M(Cone{}, 0), -1}, {M(Cone{}, 1), -1}}, Cone{0, 1}};
  CHECK(std::find(words.begin(), words.end(), w) != words.end());
  CHECK(w.to_string() == "M[|2] = M[|0]^-1 * M[|1]^-1");
  // M_{13} = M_{12}^-1
  RelationWord s{M(Cone{0}, 2), {{M(Cone{0}, 1), -1}}, Cone{0, 1}};
  CHECK(std::find(words.begin(), words.end(), s) != words.end());
  for (const auto& word : words) {
    for (const auto& f : word.rhs) CHECK(f.generator.vertex == word.lhs.vertex);
    CHECK(word.lhs.kind == Generator::Kind::Monodromy);
  }
}

TEST_CASE("relations elsewhere") {
  CHECK(relations(affine_space(3).load()).empty());
  auto fan1 = relations(figure_one_fan().load());
  REQUIRE(fan1.size() == 1);
  CHECK(fan1[0].to_string() == "M[|2] = M[|0]^-1 * M[|1]^-1");

  // rays e1 and (-1,1): the chart of e1 has basis (e1, e2), so the loop appears
  auto loops = relations(FanData{2, {{1, 0}, {-1, 1}}, {Cone{0}, Cone{1}}}.load());
  REQUIRE(loops.size() == 2);
  CHECK(loops[1].to_string() == "M[|1] = M[|0]^-1 * L[|1]^1");
  CHECK(loops[1].chart == Cone{0});
}

TEST_CASE("evaluate_word") {
  Fan torus = torus_product(0, 1).load();
  Representation rep = constant_object(torus, 1);
  rep.loops[Cone{}][0] = scalar(2);
  const Generator L = Generator::loop_at(Cone{}, 1);
  CHECK(evaluate_word(rep, {L, {}, Cone{}}) == scalar(1));
  CHECK(evaluate_word(rep, {L, {{L, -1}}, Cone{}}) == scalar(Rational(1, 2)));
  CHECK(evaluate_word(rep, {L, {{L, 3}}, Cone{}}) == scalar(8));

  rep.loops[Cone{}][0] = scalar(0);
  CHECK_THROWS_AS(evaluate_word(rep, {L, {{L, -1}}, Cone{}}), PrerequisiteFailure);
  CHECK(evaluate_word(rep, {L, {{L, 2}}, Cone{}}) == scalar(0));

  Fan p2 = projective_plane().load();
  Representation c = constant_object(p2, 2);
  for (const auto& w : relations(p2)) CHECK(evaluate_word(c, w) == MatQ::identity(2));
}

TEST_CASE("property: exponent additivity") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> ex(-3, 3);
  Fan torus = torus_product(0, 1).load();
  const Generator L = Generator::loop_at(Cone{}, 1);
  for (int trial = 0; trial < 40; ++trial) {
    Representation rep = constant_object(torus, 2);
    rep.loops[Cone{}][0] = oracle::random_invertible(rng, 2);
    std::int64_t a = ex(rng), b = ex(rng);
    if (a == 0 || b == 0 || a + b == 0) continue;
    CHECK(evaluate_word(rep, {L, {{L, a}, {L, b}}, Cone{}}) == evaluate_word(rep, {L, {{L, a + b}}, Cone{}}));
  }
}

TEST_CASE("check_iv on rigged P^2 objects") {
  Category p2(projective_plane().load());
  CHECK(check_iv(p2, constant_object(p2.fan(), 1)).passed());

  Representation bad = fixtures::p2_scalar_object({2, 3, 6});
  ConditionReport all = check_all(p2, bad);
  CHECK(all.violated() == std::set<Condition>{Condition::IV});
  CHECK(has_location(all, "(iv) at ([],2,K=[0,1])"));

  Representation good = fixtures::p2_scalar_object({2, 3, Rational(1, 6)});
  ConditionReport r = check_iv(p2, good);
  CHECK_FALSE(has_location(r, "(iv) at ([],2,K=[0,1])"));
  for (const auto& f : r.failures) CHECK(f.vertex != Cone{});

  // the singleton relations force m_q m_r = 1 for q != r, so only m = (1,1,1) is a member
  CHECK(check_all(p2, fixtures::p2_scalar_object({1, 1, 1})).passed());
}

TEST_CASE("check_iv reports prerequisites instead of inverting singular generators") {
  Category p2(projective_plane().load());
  Representation rep = constant_object(p2.fan(), 1);
  rep.u[{Cone{}, 0}] = scalar(1);
  rep.v[{Cone{}, 0}] = scalar(-1);
  ConditionReport r = check_all(p2, rep);
  CHECK(r.violated().count(Condition::II) == 1);
  bool saw_prerequisite = false;
  for (const auto& f : r.failures)
    if (f.prerequisite) {
      saw_prerequisite = true;
      CHECK(f.condition == Condition::IV);
      CHECK(f.message.find("M[|0]") != std::string::npos);
    }
  CHECK(saw_prerequisite);
}

TEST_CASE("check_all") {
  for (const auto& data : small_fans()) {
    Category cat(data.load());
    for (std::size_t d : {0, 1, 2}) CHECK(check_all(cat, constant_object(cat.fan(), d)).passed());
  }

  Category c2(affine_space(2).load());
  Representation broken = constant_object(c2.fan(), 1);
  broken.u.erase(ArrowKey{Cone{}, 0});
  broken.spaces[Cone{0, 1}] = 2;
  ConditionReport r = check_all(c2, broken);
  CHECK(r.violated() == std::set<Condition>{Condition::Shape});
  CHECK(r.failures.size() >= 2);
}

TEST_CASE("constant_object") {
  Representation p2 = constant_object(projective_plane().load(), 1);
  CHECK(p2.spaces.size() == 7);
  for (const auto& [c, d] : p2.spaces) CHECK(d == 1);
  Representation zero = constant_object(projective_plane().load(), 0);
  for (const auto& [c, d] : zero.spaces) CHECK(d == 0);
  Representation c2 = constant_object(affine_space(2).load(), 2);
  CHECK(c2.spaces.size() == 4);
  CHECK(c2.u.at({Cone{}, 0}) == MatQ(2, 2));
}

TEST_CASE("is_morphism") {
  Fan p1 = projective_line().load();
  Quiver q = build_quiver(p1);
  std::mt19937 rng(23);
  Representation rep = oracle::random_rep(rng, q, 2);
  Morphism id, scaled;
  for (const auto& [c, d] : rep.spaces) {
    id.maps[c] = MatQ::identity(d);
    scaled.maps[c] = Rational(5, 7) * MatQ::identity(d);
  }
  CHECK(is_morphism(q, rep, rep, id));
  CHECK(is_morphism(q, rep, rep, scaled));

  Representation c = constant_object(p1, 1);
  Morphism mixed;
  for (const auto& v : q.vertices) mixed.maps[v] = scalar(1);
  mixed.maps[Cone{0}] = scalar(2);
  CHECK(is_morphism(q, c, c, mixed));

  Representation nonzero = c;
  nonzero.u[{Cone{}, 0}] = scalar(1);
  CHECK_FALSE(is_morphism(q, nonzero, nonzero, mixed));

  mixed.maps[Cone{0}] = MatQ(2, 1);
  CHECK_THROWS_AS(is_morphism(q, c, c, mixed), DimensionError);
}

TEST_CASE("hom_dim") {
  Fan p1 = projective_line().load();
  Quiver q1 = build_quiver(p1);
  HomSpace h = hom_dim(q1, constant_object(p1, 1), constant_object(p1, 1));
  CHECK(h.dimension == 3);
  CHECK(oracle::hom_dimension(q1, constant_object(p1, 1), constant_object(p1, 1)) == 3);
  for (const auto& m : h.basis) CHECK(is_morphism(q1, constant_object(p1, 1), constant_object(p1, 1), m));

  Fan c2 = affine_space(2).load();
  Quiver q2 = build_quiver(c2);
  CHECK(hom_dim(q2, constant_object(c2, 1), constant_object(c2, 1)).dimension == 4);
  CHECK(hom_dim(q2, constant_object(c2, 0), constant_object(c2, 2)).dimension == 0);

  Representation bad = constant_object(c2, 1);
  bad.spaces[Cone{}] = 3;
  CHECK_THROWS_AS(hom_dim(q2, bad, bad), DimensionError);
}

TEST_CASE("property: hom_dim agrees with the Kronecker oracle on random representations") {
  std::mt19937 rng(29);
  for (const auto& data : small_fans()) {
    Fan fan = data.load();
    Quiver q = build_quiver(fan);
    for (int trial = 0; trial < 8; ++trial) {
      Representation a = oracle::random_rep(rng, q, 2, -1, 1);
      Representation b = oracle::random_rep(rng, q, 2, -1, 1);
      HomSpace h = hom_dim(q, a, b);
      CHECK(h.dimension == oracle::hom_dimension(q, a, b));
      for (const auto& m : h.basis) CHECK(is_morphism(q, a, b, m));
      bool nonzero = std::any_of(a.spaces.begin(), a.spaces.end(), [](const auto& kv) { return kv.second > 0; });
      if (nonzero) CHECK(hom_dim(q, a, a).dimension >= 1);
    }
  }
}

TEST_CASE("property: conjugation invariance") {
  std::mt19937 rng(31);
  auto signature = [](const ConditionReport& r) {
    std::vector<std::string> s;
    for (const auto& f : r.failures) s.push_back(f.location());
    return s;
  };
  for (const auto& data : small_fans()) {
    Category cat(data.load());
    for (int trial = 0; trial < 6; ++trial) {
      Representation r = oracle::random_rep(rng, cat.quiver(), 3);
      Representation s = oracle::random_rep(rng, cat.quiver(), 2);
      auto pr = oracle::random_conjugators(rng, r);
      auto ps = oracle::random_conjugators(rng, s);
      Representation r2 = oracle::conjugate(r, pr);
      Representation s2 = oracle::conjugate(s, ps);
      CHECK(signature(check_all(cat, r)) == signature(check_all(cat, r2)));
      CHECK(hom_dim(cat.quiver(), r, s).dimension == hom_dim(cat.quiver(), r2, s2).dimension);
    }
  }
}
