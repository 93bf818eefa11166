#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "alg/field.hpp"

namespace autoseq {

// First kernel combination of the given columns, in reduced-echelon order:
// columns are reduced left to right against earlier pivots, and the first
// column that collapses to zero yields the witness, scaled so its first
// nonzero entry is one. Over F_2 the columns are bit-packed into words.
// Returns nullopt when the columns are independent.
std::optional<std::vector<felem>> kernel_vector(const FieldCtx& F,
                                                const std::vector<std::vector<felem>>& columns);

// Independent rank computation by plain row reduction, for cross-checks.
uint32_t matrix_rank(const FieldCtx& F, const std::vector<std::vector<felem>>& columns);

} // namespace autoseq
