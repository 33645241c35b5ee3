#pragma once

#include <cstdint>
#include <vector>

#include "augcheck/matrix.hpp"

namespace augcheck {

/// Row rank by exact Gaussian elimination (first nonzero entry in column
/// order as pivot).
size_t rank(const Matrix& m);

size_t nullity(const Matrix& m);

/// Canonical basis of { v : m v = 0 }, one vector per free column.
std::vector<Vector> null_space(const Matrix& m);

/// Smallest subspace containing the seeds and closed under every action
/// matrix, as a canonical reduced basis.
RowSpace spin_space(const std::vector<Vector>& seeds, const std::vector<Matrix>& actions);
std::vector<Vector> spin(const Vector& seed, const std::vector<Matrix>& actions);

/// Canonical basis of { v : f(v) = 0 for all f in the dual subspace }.
std::vector<Vector> annihilator(const RowSpace& dual_subspace);

/// Canonical basis of the linear span of all words in the action matrices
/// (the enveloping algebra inside End(V)), matrices flattened row-major.
std::vector<Matrix> matrix_algebra_basis(const std::vector<Matrix>& actions, size_t dim);

struct NortonOptions {
  size_t word_length_cap = 6;
  size_t word_count_cap = 200;
  size_t combo_source_cap = 80;
  uint64_t null_enum_bound = uint64_t(1) << 20;
};

struct IrredResult {
  bool irreducible = false;
  std::vector<Vector> witness;  // proper nonzero invariant subspace when reducible
  std::string method;
};

/// Norton-test irreducibility oracle.  Deterministically searches the linear
/// span of the action matrices (words in length-lex order, then pairwise sums
/// and differences) for a singular pivot element; null vectors of the pivot
/// and of its transpose are spun to decide.  Nullity-1 pivots decide exactly;
/// larger nullities are certified by exhaustive null-vector enumeration over
/// GF(p) or by a Fitting-idempotent condensation over the rationals.
IrredResult is_irreducible(const std::vector<Matrix>& actions, size_t dim,
                           const NortonOptions& opts = {});

/// Independent oracle: spins every nonzero vector of GF(p)^dim (one
/// representative per line).  Requires p^dim within the bound.
bool brute_force_irreducible_gfp(const std::vector<Matrix>& actions, size_t dim,
                                 uint64_t bound = uint64_t(1) << 20);

}  // namespace augcheck
