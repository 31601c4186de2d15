#pragma once

#include <vector>

#include "pomo/complex.hpp"
#include "pomo/numbers.hpp"

namespace pomo {

// Sparse integer matrix, column-major; entries within a column sorted by row.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, Integer>>> columns;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

    void set(int r, int c, Integer v);
    Integer at(int r, int c) const;
    bool is_zero() const;
};

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);

// Boundary map of the d-chains with the alternating-sign convention
// (single edge, d=1: column (-1, 1)^T). For d = 0 this is the augmentation
// row mapping every vertex to 1, so the composite with d = 1 is still zero.
// Rows/columns are indexed by the complex's (dimension, lex)-sorted
// simplex lists. Throws DimensionOutOfRange unless 0 <= d <= dimension.
IntMatrix boundary_matrix(const SimplicialComplex& L, int d);

struct SmithSummary {
    int rank = 0;
    // |d_1|, ..., |d_rank| with d_1 | d_2 | ... | d_rank.
    std::vector<Integer> invariant_factors;

    std::vector<Integer> torsion() const;  // factors > 1
};

// Exact Smith normal form over arbitrary-precision integers. Unit pivots
// are eliminated first with a fill-minimising choice; the residual matrix
// is finished by the classical dense algorithm.
SmithSummary smith_normal_form(const IntMatrix& M);

}  // namespace pomo
