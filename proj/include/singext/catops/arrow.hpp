#pragma once

#include "singext/category.hpp"

namespace singext::catops {

/// C^[1]: objects are morphisms f: A -> B of C, morphisms are pairs (a, b)
/// with f' a = b f. Koszul translation f -> -f[1] when C has a translation.
class ArrowCategory : public CompCategory {
public:
  explicit ArrowCategory(const CompCategory& C) : C_(C) {}

  const CompCategory& base() const { return C_; }
  Obj arrow(const Obj& a, const Obj& b, const Mor& f) const;
  static const Obj& source(const Obj& f) { return f.parts.at(0); }
  static const Obj& target(const Obj& f) { return f.parts.at(1); }
  Mor morphism(const Obj& f) const;

  /// (a, b) components of a morphism f -> f'
  std::pair<Mor, Mor> components(const Obj& f, const Obj& g, const Mor& x) const;
  /// Throws ContractViolation if (a, b) does not commute.
  Mor pair(const Obj& f, const Obj& g, const Mor& a, const Mor& b) const;
  bool commutes(const Obj& f, const Obj& g, const Mor& a, const Mor& b) const;

  std::string name() const override { return C_.name() + "^[1]"; }
  FinAbGroup hom(const Obj& f, const Obj& g) const override { return layout(f, g).group(); }
  Mor compose(const Obj& f, const Obj& g, const Obj& h, const Mor& y, const Mor& x) const override;
  Mor identity(const Obj& f) const override;
  /// All arrows between window objects of C with rank(A) + rank(B) <= bound.
  std::vector<Obj> window(std::size_t rank_bound) const override;
  std::size_t rank(const Obj& f) const override { return C_.rank(source(f)) + C_.rank(target(f)); }
  std::string describe(const Obj& f, const Obj& g, const Mor& x) const override;

  Obj zero_object() const override;
  Biproduct direct_sum(const Obj& f, const Obj& g) const override;
  bool has_translation() const override { return C_.has_translation(); }
  Obj translate(const Obj& f) const override;
  Mor translate_mor(const Obj& f, const Obj& g, const Mor& x) const override;

private:
  const SubBlockSum& layout(const Obj& f, const Obj& g) const;

  const CompCategory& C_;
  Memo<std::pair<Obj, Obj>, SubBlockSum> layouts_;
};

} // namespace singext::catops
