#pragma once

#include "toricquiver/fan.hpp"
#include "toricquiver/matrix.hpp"
#include "toricquiver/quiver.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricquiver {

/// A representation of the fan's quiver over Q.
///
/// `u[{I,p}]` maps E_I -> E_{I+p} (shape d_{I+p} x d_I), `v[{I,p}]` maps
/// E_{I+p} -> E_I, and `loops[I][i-1]` is the i-th loop endomorphism at I.
/// Vertices without loops may be absent from `loops`.
struct Representation {
  std::map<Cone, std::size_t> spaces;
  std::map<ArrowKey, MatQ> u;
  std::map<ArrowKey, MatQ> v;
  std::map<Cone, std::vector<MatQ>> loops;

  std::size_t dim_at(const Cone& c) const;
  const MatQ& loop(const Cone& c, std::size_t index) const { return loops.at(c).at(index - 1); }

  friend bool operator==(const Representation&, const Representation&) = default;
};

enum class Condition { Shape, I, II, III, IV };
std::string to_string(Condition c);

struct Failure {
  Condition condition = Condition::Shape;
  /// A relation of condition (iv) that was not evaluated because one of its
  /// generators is singular; the singularity itself is reported under (i)/(ii).
  bool prerequisite = false;
  Cone vertex;                             ///< I or J
  std::optional<std::size_t> ray;          ///< p
  std::optional<std::size_t> second_ray;   ///< q for condition (iii)
  std::optional<std::size_t> loop;         ///< 1-based loop index for condition (i)
  std::optional<Cone> chart;               ///< K for condition (iv)
  std::string identity;                    ///< which identity of (iii) broke
  std::string message;
  std::vector<MatQ> witness;

  /// e.g. "(i) at [2], loop 1" or "(iv) at ([],2,K=[0,1])"
  std::string location() const;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct ConditionReport {
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
  /// Conditions with at least one genuine (non-prerequisite) failure.
  std::set<Condition> violated() const;
  void append(const ConditionReport& other);
};

/// A monodromy M_{J|q} = v u + Id or a loop L_{J|i} (i is 1-based).
struct Generator {
  enum class Kind { Monodromy, Loop };
  Kind kind;
  Cone vertex;
  std::size_t index;

  static Generator monodromy(Cone j, std::size_t q) { return {Kind::Monodromy, std::move(j), q}; }
  static Generator loop_at(Cone j, std::size_t i) { return {Kind::Loop, std::move(j), i}; }

  /// "M[0,1|2]" or "L[|1]"
  std::string to_string() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct Factor {
  Generator generator;
  std::int64_t exponent;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// lhs = rhs[0]^e0 * rhs[1]^e1 * ..., all factors endomorphisms of E_J.
/// `chart` is the maximal cone K whose basis produced the exponents.
struct RelationWord {
  Generator lhs;
  std::vector<Factor> rhs;
  Cone chart;

  /// "M[|2] = M[|0]^-1 * M[|1]^-1"
  std::string to_string() const;
  friend bool operator==(const RelationWord&, const RelationWord&) = default;
};

/// Relations imposed by condition (iv): one per (J, p, K) chart view,
/// ordered by J, then p, then K. Zero exponents are omitted.
std::vector<RelationWord> relations(const Fan& fan);

class PrerequisiteFailure : public std::runtime_error {
 public:
  explicit PrerequisiteFailure(Generator g);
  const Generator& generator() const { return generator_; }

 private:
  Generator generator_;
};

/// v_{Ip} u_{Ip} + Id on E_I.
MatQ monodromy(const Representation& rep, const Cone& face, std::size_t ray);

MatQ generator_matrix(const Representation& rep, const Generator& g);

/// Product of the rhs factors in written order (leftmost outermost).
/// Throws PrerequisiteFailure when a negative power of a singular generator is needed.
MatQ evaluate_word(const Representation& rep, const RelationWord& word);

/// Everything about a fan that the membership checks need, computed once.
class Category {
 public:
  struct Square {
    Cone face;
    std::size_t p;
    std::size_t q;
  };

  explicit Category(const Fan& fan);

  const Fan& fan() const { return fan_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<RelationWord>& relation_words() const { return relations_; }
  const std::vector<Square>& squares() const { return squares_; }

 private:
  Fan fan_;
  Quiver quiver_;
  std::vector<RelationWord> relations_;
  std::vector<Square> squares_;
};

/// Quadruples (I, I+p, I+q, I+p+q) of cones with p < q, in canonical order.
std::vector<Category::Square> squares_of(const Fan& fan);

// Membership checks. These run their independent items in parallel (OpenMP)
// and return failures in the same deterministic order as the serial
// reference implementations in reference.hpp.

ConditionReport check_shape(const Category& cat, const Representation& rep);
ConditionReport check_i(const Category& cat, const Representation& rep);
ConditionReport check_ii(const Category& cat, const Representation& rep);
ConditionReport check_iii(const Category& cat, const Representation& rep);
ConditionReport check_iv(const Category& cat, const Representation& rep);
/// Shape first; when the shape is wrong nothing else is evaluated.
ConditionReport check_all(const Category& cat, const Representation& rep);

/// E_I = Q^d everywhere, u = v = 0, loops = Id.
Representation constant_object(const Fan& fan, std::size_t d);

/// Vertex maps phi_I : E_I -> E'_I (shape d'_I x d_I).
struct Morphism {
  std::map<Cone, MatQ> maps;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Commutes with every u-arrow, v-arrow and loop. Throws DimensionError on shape mismatch.
bool is_morphism(const Quiver& quiver, const Representation& source, const Representation& target,
                 const Morphism& m);

struct HomSpace {
  std::size_t dimension = 0;
  std::vector<Morphism> basis;
};

/// Solves the commutation constraints as one exact linear system.
/// Both representations must be shape-valid for the quiver.
HomSpace hom_dim(const Quiver& quiver, const Representation& source, const Representation& target);

}  // namespace toricquiver
