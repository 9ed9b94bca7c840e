#include "toricquiver/reference.hpp"

#include "check_items.hpp"

namespace toricquiver::serial {

ConditionReport check_shape(const Fan& fan, const Representation& rep) {
  return {detail::shape_failures(build_quiver(fan), rep)};
}

ConditionReport check_i(const Fan& fan, const Representation& rep) {
  ConditionReport report;
  for (const auto& c : fan.cones())
    for (std::size_t i = 1; i <= fan.dim() - fan.l_of(c); ++i)
      if (auto f = detail::loop_failure(rep, c, i)) report.failures.push_back(std::move(*f));
  return report;
}

ConditionReport check_ii(const Fan& fan, const Representation& rep) {
  ConditionReport report;
  for (const auto& [face, ray] : fan.codim1_pairs())
    if (auto f = detail::monodromy_failure(rep, face, ray)) report.failures.push_back(std::move(*f));
  return report;
}

ConditionReport check_iii(const Fan& fan, const Representation& rep) {
  ConditionReport report;
  for (const auto& face : fan.cones())
    for (std::size_t p = 0; p < fan.num_rays(); ++p)
      for (std::size_t q = p + 1; q < fan.num_rays(); ++q) {
        if (face.contains(p) || face.contains(q) || !fan.contains(face.with(p).with(q))) continue;
        for (auto& f : detail::square_failures(rep, face, p, q)) report.failures.push_back(std::move(f));
      }
  return report;
}

ConditionReport check_iv(const Fan& fan, const Representation& rep) {
  ConditionReport report;
  for (const auto& word : relations(fan))
    if (auto f = detail::relation_failure(rep, word)) report.failures.push_back(std::move(*f));
  return report;
}

ConditionReport check_all(const Fan& fan, const Representation& rep) {
  ConditionReport report = check_shape(fan, rep);
  if (!report.passed()) return report;
  report.append(check_i(fan, rep));
  report.append(check_ii(fan, rep));
  report.append(check_iii(fan, rep));
  report.append(check_iv(fan, rep));
  return report;
}

}  // namespace toricquiver::serial
