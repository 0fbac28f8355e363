#pragma once

#include <cstdint>
#include <vector>

#include "mbd/gf.hpp"

namespace mbd {

/// Rank of the span of `rows` over the field, by exact Gaussian elimination.
/// Throws InputError if the rows have unequal lengths.
int matrix_rank(std::vector<std::vector<uint8_t>> rows, const GaloisField& field);

/// Solve sum_i x_i * cols[i] = target over the field.  Requires the columns
/// to be linearly independent; returns the unique coefficient vector or
/// throws PreconditionError when the system is unsolvable.
std::vector<uint8_t> solve_in_span(const std::vector<std::vector<uint8_t>>& cols,
                                   const std::vector<uint8_t>& target, const GaloisField& field);

}  // namespace mbd
