// Parallel membership checks: each condition is flattened into a list of
// independent items evaluated under OpenMP; per-item results are gathered
// in item order so reports are identical to the serial reference.

#include "check_items.hpp"
#include "toricquiver/category.hpp"

#include <optional>
#include <vector>

namespace toricquiver {

namespace {

template <typename Item, typename Eval>
ConditionReport run_items(const std::vector<Item>& items, Eval eval) {
  std::vector<std::vector<Failure>> slots(items.size());
  const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) slots[i] = eval(items[i]);
  ConditionReport report;
  for (auto& s : slots)
    for (auto& f : s) report.failures.push_back(std::move(f));
  return report;
}

std::vector<Failure> as_list(std::optional<Failure> f) {
  if (!f) return {};
  return {std::move(*f)};
}

}  // namespace

ConditionReport check_shape(const Category& cat, const Representation& rep) {
  return {detail::shape_failures(cat.quiver(), rep)};
}

ConditionReport check_i(const Category& cat, const Representation& rep) {
  struct LoopRef {
    Cone vertex;
    std::size_t index;
  };
  std::vector<LoopRef> items;
  for (const auto& c : cat.quiver().vertices)
    for (std::size_t i = 1; i <= cat.quiver().loops.at(c); ++i) items.push_back({c, i});
  return run_items(items, [&](const LoopRef& l) { return as_list(detail::loop_failure(rep, l.vertex, l.index)); });
}

ConditionReport check_ii(const Category& cat, const Representation& rep) {
  return run_items(cat.quiver().arrow_pairs,
                   [&](const ArrowKey& k) { return as_list(detail::monodromy_failure(rep, k.face, k.ray)); });
}

ConditionReport check_iii(const Category& cat, const Representation& rep) {
  return run_items(cat.squares(),
                   [&](const Category::Square& s) { return detail::square_failures(rep, s.face, s.p, s.q); });
}

ConditionReport check_iv(const Category& cat, const Representation& rep) {
  return run_items(cat.relation_words(),
                   [&](const RelationWord& w) { return as_list(detail::relation_failure(rep, w)); });
}

ConditionReport check_all(const Category& cat, const Representation& rep) {
  ConditionReport report = check_shape(cat, rep);
  if (!report.passed()) return report;
  report.append(check_i(cat, rep));
  report.append(check_ii(cat, rep));
  report.append(check_iii(cat, rep));
  report.append(check_iv(cat, rep));
  return report;
}

}  // namespace toricquiver
