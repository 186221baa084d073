#pragma once

#include <cstdint>
#include <vector>

#include "spreadlab/rational.hpp"

namespace spreadlab {

struct EliminationResult {
    int rank = 0;
    std::vector<int> pivot_rows; // row indices of a nonsingular rank x rank minor
    std::vector<int> pivot_cols;
};

/// Gaussian elimination over F_p (p prime). Destroys its copy of m.
EliminationResult rank_mod_p(std::vector<std::vector<std::uint64_t>> m,
                             std::uint64_t p);

/// Gaussian elimination over Q.
EliminationResult rank_rational(std::vector<std::vector<Rational>> m);

/// Exact rank over Q of an integer matrix.
int integer_matrix_rank(const std::vector<std::vector<long long>>& m);

/// Is the square minor m[rows, cols] invertible over F_p?
bool minor_invertible_mod_p(const std::vector<std::vector<std::uint64_t>>& m,
                            const std::vector<int>& rows,
                            const std::vector<int>& cols, std::uint64_t p);

bool minor_invertible_rational(const std::vector<std::vector<Rational>>& m,
                               const std::vector<int>& rows,
                               const std::vector<int>& cols);

} // namespace spreadlab
