// Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
// criterion fails.

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "toricquiver/builtins.hpp"
#include "toricquiver/category.hpp"
#include "toricquiver/fan.hpp"
#include "toricquiver/linalg.hpp"
#include "toricquiver/quiver.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#ifndef TORICQ_EXECUTABLE
#error "TORICQ_EXECUTABLE must name the CLI binary"
#endif

using namespace toricquiver;

namespace {

/// Collects violations; a criterion passes when none were recorded.
class Verdict {
 public:
  template <typename... Parts>
  void expect(bool ok, const Parts&... parts) {
    if (ok) return;
    ++violations_;
    if (first_.empty()) {
      std::ostringstream ss;
      (ss << ... << parts);
      first_ = ss.str();
    }
  }
  bool ok() const { return violations_ == 0; }
  std::string summary() const {
    return std::to_string(violations_) + " violation(s); first: " + first_;
  }

 private:
  std::size_t violations_ = 0;
  std::string first_;
};

std::size_t total_loops(const Quiver& q) {
  std::size_t n = 0;
  for (const auto& [v, k] : q.loops) n += k;
  return n;
}

void hypercube_law(Verdict& v) {
  for (std::size_t n = 1; n <= 5; ++n) {
    Quiver q = build_quiver(affine_space(n).load());
    v.expect(q.vertices.size() == (std::size_t{1} << n), "C^", n, ": ", q.vertices.size(), " vertices");
    v.expect(q.arrow_pairs.size() == n * (std::size_t{1} << (n - 1)), "C^", n, ": ", q.arrow_pairs.size(), " arrow pairs");
    v.expect(total_loops(q) == 0, "C^", n, ": loops present");
  }
}

void loop_law(Verdict& v) {
  for (auto [l, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {1, 3}, {2, 3}}) {
    Quiver q = build_quiver(torus_product(l, n).load());
    v.expect(q.vertices.size() == (std::size_t{1} << l), "(", l, ",", n, "): ", q.vertices.size(), " vertices");
    for (const auto& c : q.vertices)
      v.expect(q.loop_count(c) == n - l, "(", l, ",", n, "): ", q.loop_count(c), " loops at ", c.to_string());
  }
}

void figure_quivers(Verdict& v) {
  Quiver fan1 = build_quiver(figure_one_fan().load());
  v.expect(fan1.vertices.size() == 5, "fan1 vertices ", fan1.vertices.size());
  v.expect(fan1.arrow_pairs.size() == 5, "fan1 arrow pairs ", fan1.arrow_pairs.size());
  v.expect(total_loops(fan1) == 1 && fan1.loop_count(Cone{2}) == 1, "fan1 loops misplaced");
  Quiver p1 = build_quiver(projective_line().load());
  v.expect(p1.vertices.size() == 3 && p1.arrow_pairs.size() == 2, "P^1 counts");
  v.expect(total_loops(p1) == 0, "P^1 loops");
  Quiver p2 = build_quiver(projective_plane().load());
  v.expect(p2.vertices.size() == 7 && p2.arrow_pairs.size() == 9, "P^2 counts");
  v.expect(total_loops(p2) == 0, "P^2 loops");
}

void p2_relations(Verdict& v) {
  auto M = [](Cone j, std::size_t q) { return Generator::monodromy(std::move(j), q); };
  // M[|p] = M[|q]^-1 M[|r]^-1 in the chart {q,r}; M[i|j] = M[i|k]^-1 in the chart {i,k}
  std::vector<RelationWord> expected = {
      {M(Cone{}, 0), {{M(Cone{}, 1), -1}, {M(Cone{}, 2), -1}}, Cone{1, 2}},
      {M(Cone{}, 1), {{M(Cone{}, 0), -1}, {M(Cone{}, 2), -1}}, Cone{0, 2}},
      {M(Cone{}, 2), {{M(Cone{}, 0), -1}, {M(Cone{}, 1), -1}}, Cone{0, 1}},
      {M(Cone{0}, 1), {{M(Cone{0}, 2), -1}}, Cone{0, 2}},
      {M(Cone{0}, 2), {{M(Cone{0}, 1), -1}}, Cone{0, 1}},
      {M(Cone{1}, 0), {{M(Cone{1}, 2), -1}}, Cone{1, 2}},
      {M(Cone{1}, 2), {{M(Cone{1}, 0), -1}}, Cone{0, 1}},
      {M(Cone{2}, 0), {{M(Cone{2}, 1), -1}}, Cone{1, 2}},
      {M(Cone{2}, 1), {{M(Cone{2}, 0), -1}}, Cone{0, 2}},
  };
  auto got = relations(projective_plane().load());
  v.expect(got.size() == expected.size(), got.size(), " relations");
  for (const auto& w : expected)
    v.expect(std::find(got.begin(), got.end(), w) != got.end(), "missing ", w.to_string());
}

void positive_control(Verdict& v) {
  for (const auto& name : builtin_fan_names()) {
    Category cat(example_fan(name).load());
    for (std::size_t d : {0, 1, 2}) {
      ConditionReport r = check_all(cat, constant_object(cat.fan(), d));
      v.expect(r.passed(), name, " d=", d, ": ", r.failures.empty() ? "" : r.failures[0].location());
    }
  }
}

bool has_location(const ConditionReport& r, const std::string& loc) {
  for (const auto& f : r.failures)
    if (f.location() == loc) return true;
  return false;
}

void negative_controls(Verdict& v) {
  using fixtures::scalar;
  Category fan1(figure_one_fan().load());
  Representation zero_loop = constant_object(fan1.fan(), 1);
  zero_loop.loops[Cone{2}][0] = scalar(0);
  ConditionReport a = check_all(fan1, zero_loop);
  v.expect(fixtures::locations(a) == std::vector<std::string>{"(i) at [2], loop 1"}, "(a) wrong report");

  Category c2(affine_space(2).load());
  Representation minus = constant_object(c2.fan(), 1);
  minus.u[{Cone{}, 0}] = scalar(1);
  minus.v[{Cone{}, 0}] = scalar(-1);
  ConditionReport b = check_all(c2, minus);
  v.expect(fixtures::locations(b) == std::vector<std::string>{"(ii) at ([],0)"}, "(b) wrong report");

  Representation square = constant_object(c2.fan(), 1);
  square.u[{Cone{}, 0}] = scalar(1);
  square.u[{Cone{}, 1}] = scalar(1);
  square.u[{Cone{0}, 1}] = scalar(1);
  square.u[{Cone{1}, 0}] = scalar(2);
  ConditionReport c = check_all(c2, square);
  v.expect(fixtures::locations(c) == std::vector<std::string>{"(iii) at ([],0,1) uu"}, "(c) wrong report");

  // The three relations at the empty face all say M0 M1 M2 = Id for 1x1
  // objects, so with (2,3,6) every one of them fails; (iv) is the only
  // violated condition and the report must name the chart {0,1} relation.
  Category p2(projective_plane().load());
  ConditionReport d = check_all(p2, fixtures::p2_scalar_object({2, 3, 6}));
  v.expect(d.violated() == std::set<Condition>{Condition::IV}, "(d) violated conditions other than (iv)");
  v.expect(has_location(d, "(iv) at ([],2,K=[0,1])"), "(d) location missing");
  ConditionReport fixed = check_all(p2, fixtures::p2_scalar_object({2, 3, Rational(1, 6)}));
  v.expect(!has_location(fixed, "(iv) at ([],2,K=[0,1])"), "(d) relation still fails with 1/6");
  for (const auto& f : fixed.failures) v.expect(f.vertex != Cone{}, "(d) failure at the empty face with 1/6");
}

void smoothness_gate(Verdict& v) {
  try {
    FanData{2, {{1, 0}, {1, 2}}, {Cone{0, 1}}}.load();
    v.expect(false, "cone accepted");
  } catch (const FanValidationError& e) {
    v.expect(!e.issues().empty() && e.issues()[0].kind == FanIssue::Kind::NonSmoothCone, "wrong issue kind");
    v.expect(!e.issues().empty() && e.issues()[0].snf_diagonal == VecZ{1, 2}, "wrong SNF witness");
  }
}

void hom_oracle(Verdict& v) {
  for (auto [data, expected] : std::vector<std::pair<FanData, std::size_t>>{{projective_line(), 3}, {affine_space(2), 4}}) {
    Fan fan = data.load();
    Quiver q = build_quiver(fan);
    Representation c = constant_object(fan, 1);
    std::size_t got = hom_dim(q, c, c).dimension;
    std::size_t oracle_dim = oracle::hom_dimension(q, c, c);
    v.expect(got == expected, "hom_dim ", got, " expected ", expected);
    v.expect(oracle_dim == expected, "oracle ", oracle_dim, " expected ", expected);
  }
}

void conjugation_invariance(Verdict& v) {
  std::mt19937 rng(20261016);
  std::vector<Category> cats;
  for (const auto& name : builtin_fan_names()) cats.emplace_back(example_fan(name).load());
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> dim(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Category& cat = cats[trial % cats.size()];
    Representation r;
    if (trial % 2 == 0) {
      r = oracle::random_rep(rng, cat.quiver(), 3);
    } else {
      // diagonal objects satisfy (iii), so verdicts on (ii) and (iv) are exercised
      const std::size_t d = dim(rng);
      std::vector<MatQ> us, vs;
      for (std::size_t p = 0; p < cat.fan().num_rays(); ++p) {
        std::vector<Rational> a, b;
        for (std::size_t i = 0; i < d; ++i) a.push_back(entry(rng)), b.push_back(entry(rng));
        us.push_back(fixtures::diag(a));
        vs.push_back(fixtures::diag(b));
      }
      r = cat.fan().num_rays() == 0 ? constant_object(cat.fan(), d) : fixtures::diagonal_object(cat.fan(), us, vs);
    }
    Representation s = oracle::random_rep(rng, cat.quiver(), 3);
    Representation r2 = oracle::conjugate(r, oracle::random_conjugators(rng, r));
    Representation s2 = oracle::conjugate(s, oracle::random_conjugators(rng, s));
    v.expect(check_all(cat, r).violated() == check_all(cat, r2).violated(), "trial ", trial, ": verdicts differ");
    v.expect(hom_dim(cat.quiver(), r, s).dimension == hom_dim(cat.quiver(), r2, s2).dimension, "trial ", trial,
             ": hom_dim(R,S) differs");
    v.expect(hom_dim(cat.quiver(), r, r).dimension == hom_dim(cat.quiver(), r2, r2).dimension, "trial ", trial,
             ": hom_dim(R,R) differs");
  }
}

bool unimodular(const MatZ& m) { return m.rows() == m.cols() && abs(oracle::leibniz_det(m)) == 1; }

void linear_algebra(Verdict& v) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    MatZ a = oracle::random_matz(rng, size(rng), size(rng), -9, 9);
    Hermite h = hnf(a);
    v.expect(unimodular(h.u) && h.u * a == h.h, "trial ", trial, ": HNF");
    Smith s = snf(a);
    v.expect(unimodular(s.u) && unimodular(s.v) && s.u * a * s.v == s.s, "trial ", trial, ": SNF");
    MatQ q = to_rational(a);
    v.expect(nullspace(q).dimension + oracle::bareiss_rank(q) == q.cols(), "trial ", trial, ": rank-nullity");
    if (a.rows() == a.cols() && oracle::leibniz_det(a) != 0) {
      MatQ inv = mat_inverse(q);
      v.expect(q * inv == MatQ::identity(q.rows()) && mat_inverse(inv) == q, "trial ", trial, ": inverse");
    }
  }
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  if (status != 0) out += "<exit " + std::to_string(status) + ">";
  return out;
}

void determinism(Verdict& v) {
  namespace fs = std::filesystem;
  const std::string exe = TORICQ_EXECUTABLE;
  fs::path dir = fs::temp_directory_path() / ("toricq-acceptance-" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  for (const auto& name : builtin_fan_names()) {
    std::string fan = capture("'" + exe + "' example '" + name + "'");
    fs::path file = dir / "fan.json";
    std::ofstream(file) << fan;
    for (const std::string sub : {"quiver '" + file.string() + "' --format dot", "quiver '" + file.string() + "' --format json",
                                  "relations '" + file.string() + "'", "fan info '" + file.string() + "'"}) {
      std::string cmd = "'" + exe + "' " + sub;
      std::string first = capture(cmd), second = capture(cmd);
      v.expect(first.find("<exit") == std::string::npos, name, ": ", sub, " failed");
      v.expect(!first.empty() || sub.rfind("relations", 0) == 0, name, ": ", sub, " printed nothing");
      v.expect(first == second, name, ": ", sub, " differs between runs");
    }
  }
  fs::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"hypercube law for C^n, n = 1..5", hypercube_law},
      {"loop law for C^l x (C*)^(n-l)", loop_law},
      {"figure quivers (fan1, P^1, P^2)", figure_quivers},
      {"P^2 relations, 9 literal words", p2_relations},
      {"constant objects are members on every built-in fan", positive_control},
      {"negative controls for conditions (i)-(iv)", negative_controls},
      {"smoothness gate with SNF witness diag(1,2)", smoothness_gate},
      {"hom dimension against the Kronecker oracle", hom_oracle},
      {"conjugation invariance on 100 random objects", conjugation_invariance},
      {"exact linear algebra on 200 random integer matrices", linear_algebra},
      {"byte-identical CLI output across runs", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.expect(false, "exception: ", e.what());
    }
    std::cout << (v.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!v.ok()) std::cout << " (" << v.summary() << ")";
    std::cout << "\n";
    if (!v.ok()) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
