#pragma once

#include "toricquiver/cone.hpp"
#include "toricquiver/fan.hpp"

#include <map>
#include <string>
#include <vector>

namespace toricquiver {

enum class ArrowKind { U, V };

/// Arrows are identified by the codimension-one pair (I, I+{p}) and a direction:
/// U runs I -> I+{p}, V runs I+{p} -> I.
struct ArrowKey {
  Cone face;
  std::size_t ray = 0;

  Cone coface() const { return face.with(ray); }
  friend bool operator==(const ArrowKey&, const ArrowKey&) = default;
  friend bool operator<(const ArrowKey& a, const ArrowKey& b) {
    if (a.face == b.face) return a.ray < b.ray;
    return a.face < b.face;
  }
};

struct Arrow {
  ArrowKey key;
  ArrowKind kind;

  Cone source() const { return kind == ArrowKind::U ? key.face : key.coface(); }
  Cone target() const { return kind == ArrowKind::U ? key.coface() : key.face; }
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// The quiver of a fan: one vertex per cone carrying dim - l(I) loops, and a
/// pair of opposite arrows for every codimension-one face incidence.
struct Quiver {
  std::size_t dim = 0;
  std::vector<Cone> vertices;               ///< canonical order
  std::map<Cone, std::size_t> loops;        ///< loop count per vertex
  std::vector<ArrowKey> arrow_pairs;        ///< sorted; each yields a U and a V arrow

  std::vector<Arrow> arrows() const;
  std::size_t loop_count(const Cone& v) const { return loops.at(v); }

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

Quiver build_quiver(const Fan& fan);

/// Graphviz digraph. Byte-for-byte deterministic.
std::string export_dot(const Quiver& q);

/// {"index_base":0,"dim":n,"vertices":[{"cone":[...],"loops":m}],
///  "arrows":[{"from":[...],"to":[...],"ray":p,"kind":"u"|"v"}]}
std::string export_json(const Quiver& q);
Quiver parse_quiver_json(const std::string& text);

}  // namespace toricquiver
