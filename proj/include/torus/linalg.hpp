#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "torus/numeric.hpp"

namespace torus {

// Visit all size-r index subsets of {0,...,pool-1} in lexicographic order.
void for_each_combination(
    std::size_t pool, std::size_t r,
    const std::function<void(const std::vector<std::size_t>&)>& fn);

// Dense row-major integer matrix. Sized at construction; entries default to 0.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  IntVec row(std::size_t r) const;
  std::vector<IntVec> to_rows() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// Determinant of a square matrix by fraction-free Bareiss elimination.
// All intermediate divisions are exact; no rationals are formed.
Int det(const IntMatrix& m);

// lcm of a nonempty list of positive integers.
Int lcm_all(const std::vector<Int>& values);

// Rank over Q (Gaussian elimination with exact rationals).
std::size_t rank_rational(const IntMatrix& m);
std::size_t rank_of_rows(const std::vector<IntVec>& rows);

// Solve B x = b for square nonsingular B by Cramer's rule. Each coordinate is
// det(B_i)/det(B) in lowest terms, so denominators divide |det B|.
RatVec solve_exact(const IntMatrix& b_mat, const IntVec& rhs);

// Row-style Hermite normal form basis of the row lattice: echelon rows with
// positive pivots, entries above each pivot reduced into [0, pivot), zero rows
// dropped. The result is the unique such basis, so equal lattices compare
// equal as matrices.
IntMatrix hnf_row_basis(const IntMatrix& m);

// True iff v lies in the integer row span of an HNF basis.
bool in_row_lattice(const IntMatrix& hnf, const IntVec& v);

// Reduce v modulo the integer row span of an HNF basis: subtract
// floor_div-multiples of each pivot row, top down. The result is the unique
// coset representative with entries in [0, pivot) at every pivot column.
IntVec reduce_mod_row_lattice(const IntMatrix& hnf, IntVec v);

// Integral solution of B x = b for B of full column rank (k x n, k >= n).
// Returns nullopt when the unique rational solution is non-integral or fails
// some equation; throws if the columns are dependent.
std::optional<IntVec> integral_solution(const IntMatrix& b_mat,
                                        const IntVec& rhs);

}  // namespace torus
