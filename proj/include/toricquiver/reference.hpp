#pragma once

#include "toricquiver/category.hpp"

// Straightforward single-threaded implementations of the membership checks,
// enumerating directly over the fan. Kept as the oracle for the parallel
// kernels in category.hpp and as the baseline in the benchmark.
namespace toricquiver::serial {

ConditionReport check_shape(const Fan& fan, const Representation& rep);
ConditionReport check_i(const Fan& fan, const Representation& rep);
ConditionReport check_ii(const Fan& fan, const Representation& rep);
ConditionReport check_iii(const Fan& fan, const Representation& rep);
ConditionReport check_iv(const Fan& fan, const Representation& rep);
ConditionReport check_all(const Fan& fan, const Representation& rep);

}  // namespace toricquiver::serial
