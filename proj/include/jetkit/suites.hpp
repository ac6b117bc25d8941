#pragma once

#include "jetkit/validate.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jetkit {

// Named randomized property suites: combinatorics, weil, affine,
// quasicolimit, naturality, prolongation, conversion, holonomy,
// bijectivity, forms, tangential, dimensions, and all of them as "all".
[[nodiscard]] const std::vector<std::string>& suite_names();

// Throws SchemaError for an unknown name.
[[nodiscard]] Report run_suite(std::string_view name, int trials, std::uint64_t seed);

}  // namespace jetkit
