#pragma once

#include "singext/abgrp/int_matrix.hpp"

#include <string>
#include <vector>

namespace singext::abgrp {

/// Finitely generated abelian group Z/d1 + ... + Z/dk + Z^r with d1 | d2 | ...
/// and every di >= 2. Torsion generators come first.
class FinAbGroup {
public:
  FinAbGroup() = default;
  FinAbGroup(std::vector<Int> torsion, std::size_t free_rank);

  static FinAbGroup cyclic(long n);
  static FinAbGroup free(std::size_t rank) { return FinAbGroup({}, rank); }

  const std::vector<Int>& torsion() const { return torsion_; }
  std::size_t free_rank() const { return free_rank_; }
  std::size_t ngens() const { return torsion_.size() + free_rank_; }
  bool finite() const { return free_rank_ == 0; }
  bool trivial() const { return ngens() == 0; }
  /// Throws InfiniteGroup for a group of positive rank.
  Int order() const;
  /// Order of generator i (0 for a free generator).
  Int gen_order(std::size_t i) const { return i < torsion_.size() ? torsion_[i] : Int(0); }

  std::vector<std::string>& basis_tags() { return tags_; }
  const std::vector<std::string>& basis_tags() const { return tags_; }

  IntVec zero() const { return IntVec(ngens()); }
  IntVec gen(std::size_t i) const;
  IntVec reduce(IntVec x) const;
  IntVec add(const IntVec& x, const IntVec& y) const;
  IntVec sub(const IntVec& x, const IntVec& y) const;
  IntVec neg(const IntVec& x) const;
  IntVec scale(const Int& k, const IntVec& x) const;
  bool is_zero(const IntVec& x) const;
  /// Additive order of an element (0 if infinite).
  Int element_order(const IntVec& x) const;

  /// "0", "Z/4", "Z/2+Z/4", "Z^2", "Z/2+Z"
  std::string describe() const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.torsion_ == b.torsion_ && a.free_rank_ == b.free_rank_;
  }

private:
  std::vector<Int> torsion_;
  std::size_t free_rank_ = 0;
  std::vector<std::string> tags_;
};

/// A group given as Z^n modulo relations, together with its normal form.
/// to_group maps old coordinates to normal-form coordinates (before reduction),
/// from_group maps each normal-form generator back to an old vector.
struct PresentedGroup {
  FinAbGroup group;
  IntMatrix to_group;   // ngens x n
  IntMatrix from_group; // n x ngens

  IntVec element(const IntVec& old) const { return group.reduce(to_group * old); }
  IntVec lift(const IntVec& x) const { return from_group * x; }
};

/// coker(R^T : Z^rows -> Z^cols); each row of R is a relation.
PresentedGroup group_from_presentation(const IntMatrix& R);
PresentedGroup group_from_presentation(const std::vector<IntVec>& relations, std::size_t ngens);

/// Every element exactly once, lexicographic in the coordinates. Throws
/// InfiniteGroup or BudgetExceeded (more than `cap` elements).
std::vector<IntVec> enumerate_elements(const FinAbGroup& G, std::size_t cap = 1'000'000);

/// G + H with injections and projections expressed in normal-form coordinates.
struct SumGroup {
  PresentedGroup sum; // old coordinates: those of G followed by those of H
  IntMatrix i1, i2, p1, p2;
};
SumGroup direct_sum(const FinAbGroup& G, const FinAbGroup& H);

/// G (x) H; the old coordinate of e_i (x) f_j is i * H.ngens() + j.
PresentedGroup tensor(const FinAbGroup& G, const FinAbGroup& H);

} // namespace singext::abgrp
