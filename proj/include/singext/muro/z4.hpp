#pragma once

#include "singext/category.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace singext::muro {

/// Matrix over Z/4, entries in [0, 3]. A morphism A -> B of F(Z/4) with
/// rank A = cols and rank B = rows.
class Z4Mat {
public:
  Z4Mat() = default;
  Z4Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}
  Z4Mat(std::size_t rows, std::size_t cols, const std::vector<int>& entries);

  static Z4Mat identity(std::size_t n);
  static Z4Mat scalar(std::size_t n, int k);
  /// "[[1,2],[2,2]]"; "[]" with explicit shape for empty matrices is "0x2".
  static Z4Mat parse(const std::string& text);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  int operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  void set(std::size_t i, std::size_t j, int v) { a_[i * c_ + j] = static_cast<std::uint8_t>(((v % 4) + 4) % 4); }

  Z4Mat operator*(const Z4Mat& o) const;
  Z4Mat operator+(const Z4Mat& o) const;
  Z4Mat operator-(const Z4Mat& o) const;
  Z4Mat operator-() const;
  Z4Mat scaled(int k) const;
  bool is_zero() const;
  Z4Mat transpose() const;
  Z4Mat block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void put(std::size_t r0, std::size_t c0, const Z4Mat& m);
  /// Invertible over Z/4 iff invertible mod 2 (square only).
  bool invertible() const;
  std::optional<Z4Mat> inverse() const;

  /// Row-major entries as group coordinates.
  IntVec coords() const;
  static Z4Mat from_coords(std::size_t rows, std::size_t cols, const IntVec& v);
  std::vector<long> longs() const;

  std::string to_string() const;

  auto operator<=>(const Z4Mat&) const = default;

private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<std::uint8_t> a_;
};

/// P M Q = D, D diagonal with ones, then twos, then zeros.
struct DiagForm {
  Z4Mat P, D, Q, P_inv, Q_inv;
  std::size_t ones = 0, twos = 0;
};
DiagForm z4_diagonal_form(const Z4Mat& M);

/// Kernel of a Z/4-linear map (Z/4)^n -> (Z/4)^m as a normal-form group.
class Z4Kernel {
public:
  Z4Kernel() = default;
  explicit Z4Kernel(const Z4Mat& M);

  const FinAbGroup& group() const { return group_; }
  std::size_t dim() const { return n_; }
  /// Ambient vector (length n) of a group element.
  std::vector<int> decode(const IntVec& x) const;
  /// Group element of an ambient vector lying in the kernel.
  IntVec encode(const std::vector<int>& v) const;
  const std::vector<std::vector<int>>& generators() const { return gens_; }

private:
  std::size_t n_ = 0;
  Z4Mat Q_, Q_inv_;
  std::size_t ones_ = 0, twos_ = 0;
  FinAbGroup group_;
  std::vector<std::vector<int>> gens_;
};

/// F(Z/4): objects are ranks, hom(n, m) = m x n matrices, identity translation.
class Z4Free : public CompCategory {
public:
  static Obj object(std::size_t n) { return {"z4", "", {}, {static_cast<long>(n)}}; }
  static std::size_t rank_of(const Obj& a);

  std::string name() const override { return "F(Z/4)"; }
  FinAbGroup hom(const Obj& a, const Obj& b) const override;
  Mor compose(const Obj& a, const Obj& b, const Obj& c, const Mor& g, const Mor& f) const override;
  Mor identity(const Obj& a) const override { return Z4Mat::identity(rank_of(a)).coords(); }
  std::vector<Obj> window(std::size_t rank_bound) const override;
  std::size_t rank(const Obj& a) const override { return rank_of(a); }
  std::string describe(const Obj& a, const Obj& b, const Mor& f) const override;
  Obj zero_object() const override { return object(0); }
  Biproduct direct_sum(const Obj& a, const Obj& b) const override;
  bool has_translation() const override { return true; }
  Obj translate(const Obj& a) const override { return a; }
  Mor translate_mor(const Obj&, const Obj&, const Mor& f) const override { return f; }

  static Z4Mat matrix(const Obj& a, const Obj& b, const Mor& f) {
    return Z4Mat::from_coords(rank_of(b), rank_of(a), f);
  }
};

} // namespace singext::muro
