#pragma once

#include "singext/category.hpp"

namespace singext::catops {

/// Finite formal sums of objects of S; morphisms are matrices over S.
class AdditiveCompletion : public CompCategory {
public:
  /// With identity_translation the translation functor is the identity.
  explicit AdditiveCompletion(const Preadditive& S, bool identity_translation = false)
      : S_(S), identity_translation_(identity_translation) {}

  Obj tuple(const std::vector<Obj>& parts) const { return {"sum", "", parts, {}}; }
  /// n copies of a single object.
  Obj power(const Obj& x, std::size_t n) const { return tuple(std::vector<Obj>(n, x)); }
  const Preadditive& base() const { return S_; }

  /// Entry (i, j) : A_j -> B_i
  Mor entry(const Obj& a, const Obj& b, const Mor& f, std::size_t i, std::size_t j) const;
  Mor from_entries(const Obj& a, const Obj& b, const std::vector<std::vector<Mor>>& m) const;

  std::string name() const override { return "F(" + S_.name() + ")"; }
  FinAbGroup hom(const Obj& a, const Obj& b) const override { return layout(a, b).group(); }
  Mor compose(const Obj& a, const Obj& b, const Obj& c, const Mor& g, const Mor& f) const override;
  Mor identity(const Obj& a) const override;
  std::vector<Obj> window(std::size_t rank_bound) const override;
  std::size_t rank(const Obj& a) const override { return a.parts.size(); }
  std::string describe(const Obj& a, const Obj& b, const Mor& f) const override;

  Obj zero_object() const override { return tuple({}); }
  Biproduct direct_sum(const Obj& a, const Obj& b) const override;
  bool has_translation() const override { return identity_translation_; }
  Obj translate(const Obj& a) const override;
  Mor translate_mor(const Obj& a, const Obj& b, const Mor& f) const override;

private:
  const BlockSum& layout(const Obj& a, const Obj& b) const;

  const Preadditive& S_;
  bool identity_translation_;
  Memo<std::pair<Obj, Obj>, BlockSum> layouts_;
};

} // namespace singext::catops
