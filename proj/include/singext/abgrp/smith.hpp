#pragma once

#include "singext/abgrp/int_matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace singext::abgrp {

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , di >= 0.
/// The inverses of U and V are carried along so callers can change basis
/// in both directions without re-solving.
struct SmithForm {
  IntMatrix U, D, V;
  IntMatrix U_inv, V_inv;
  std::size_t rank = 0;

  std::vector<Int> diagonal() const;
};

/// Deterministic pivoting: smallest nonzero absolute value in the active
/// submatrix, ties broken by row-major position.
SmithForm smith_normal_form(const IntMatrix& M);

/// Invariant factors from gcds of k x k minors. Exponential; used as an
/// oracle for small matrices only.
std::vector<Int> invariant_factors_by_minors(const IntMatrix& M);

/// Solves A z = b over the integers, and exposes an integer basis of ker A.
class IntSolver {
public:
  explicit IntSolver(const IntMatrix& A);

  std::optional<IntVec> solve(const IntVec& b) const;
  /// Columns form a basis of {z : A z = 0}.
  IntMatrix kernel_basis() const;
  std::size_t rank() const { return snf_.rank; }

private:
  IntMatrix A_;
  SmithForm snf_;
};

/// Sublattice of Z^n kept in row echelon form. Rows are added one at a time
/// and merged into existing pivots with extended gcd steps, so the basis
/// never exceeds n rows.
class Lattice {
public:
  explicit Lattice(std::size_t n) : n_(n) {}

  void add(IntVec v);
  bool contains(IntVec v) const;
  std::size_t dim() const { return n_; }
  const std::vector<IntVec>& basis() const { return rows_; }
  IntMatrix matrix() const { return IntMatrix::from_rows(rows_, n_); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Same contract as ModLattice::unit_pivots_in_prefix.
  bool unit_pivots_in_prefix(std::size_t k) const;
  /// Subtracts pivot rows so that coordinates 0..k-1 vanish; requires
  /// unit_pivots_in_prefix(k).
  IntVec reduce_prefix(IntVec v, std::size_t k) const;

private:
  IntVec reduce(IntVec v) const;

  std::size_t n_;
  std::vector<IntVec> rows_; // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

/// Sublattice of Z^n known to contain m * Z^n. Entries stay in [0, m) and
/// pivots divide m, so machine integers suffice. Callers must keep m below
/// 2^31.
class ModLattice {
public:
  ModLattice(std::size_t n, std::int64_t modulus);

  void add(std::vector<std::int64_t> v);
  std::size_t dim() const { return n_; }
  std::int64_t modulus() const { return m_; }
  /// Echelon rows plus the implicit m * e_i rows for pivot-free columns.
  IntMatrix matrix() const;
  /// True iff the projection of the lattice onto the first k coordinates is
  /// all of Z^k, i.e. each of those columns carries a unit pivot.
  bool unit_pivots_in_prefix(std::size_t k) const;
  IntVec reduce_prefix(IntVec v, std::size_t k) const;

private:
  void normalize(std::vector<std::int64_t>& v) const;

  std::size_t n_;
  std::int64_t m_;
  std::vector<std::vector<std::int64_t>> row_of_pivot_; // indexed by column, empty if none
};

} // namespace singext::abgrp
