#pragma once

// Per-item checks shared by the parallel kernels and the serial reference.

#include "toricquiver/category.hpp"

#include <optional>
#include <vector>

namespace toricquiver::detail {

bool invertible(const MatQ& m);

std::vector<Failure> shape_failures(const Quiver& quiver, const Representation& rep);
std::optional<Failure> loop_failure(const Representation& rep, const Cone& vertex, std::size_t loop);
std::optional<Failure> monodromy_failure(const Representation& rep, const Cone& face, std::size_t ray);
std::vector<Failure> square_failures(const Representation& rep, const Cone& face, std::size_t p, std::size_t q);
std::optional<Failure> relation_failure(const Representation& rep, const RelationWord& word);

}  // namespace toricquiver::detail
