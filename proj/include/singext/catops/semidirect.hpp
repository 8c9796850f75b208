#pragma once

#include "singext/catops/bifunctor.hpp"

namespace singext::catops {

/// B x D with (f,a) o (g,b) = (fg, f_*(b) + g^*(a)).
class SemidirectProduct : public CompCategory {
public:
  SemidirectProduct(const CompCategory& B, const Bifunctor& D) : B_(B), D_(D) {}

  const CompCategory& base() const { return B_; }
  const Bifunctor& bifunctor() const { return D_; }
  Mor pair(const Obj& a, const Obj& b, const Mor& f, const IntVec& x) const {
    return layout(a, b).join({f, x});
  }
  std::pair<Mor, IntVec> components(const Obj& a, const Obj& b, const Mor& m) const;

  std::string name() const override { return B_.name() + " x " + D_.name(); }
  FinAbGroup hom(const Obj& a, const Obj& b) const override { return layout(a, b).group(); }
  Mor compose(const Obj& a, const Obj& b, const Obj& c, const Mor& g, const Mor& f) const override;
  Mor identity(const Obj& a) const override { return pair(a, a, B_.identity(a), D_.value(a, a).zero()); }
  std::vector<Obj> window(std::size_t rank_bound) const override { return B_.window(rank_bound); }
  std::size_t rank(const Obj& a) const override { return B_.rank(a); }
  std::string describe(const Obj& a, const Obj& b, const Mor& f) const override;
  Obj zero_object() const override { return B_.zero_object(); }
  Biproduct direct_sum(const Obj& a, const Obj& b) const override;

private:
  const BlockSum& layout(const Obj& a, const Obj& b) const;

  const CompCategory& B_;
  const Bifunctor& D_;
  Memo<std::pair<Obj, Obj>, BlockSum> layouts_;
};

/// (f, a) -> f
class SemidirectProjection : public Functor {
public:
  explicit SemidirectProjection(const SemidirectProduct& S) : S_(S) {}
  Obj on_object(const Obj& a) const override { return a; }
  GroupMor on_hom(const Obj& a, const Obj& b) const override;

private:
  const SemidirectProduct& S_;
};

/// f -> (f, 0)
class SemidirectSection : public Functor {
public:
  explicit SemidirectSection(const SemidirectProduct& S) : S_(S) {}
  Obj on_object(const Obj& a) const override { return a; }
  GroupMor on_hom(const Obj& a, const Obj& b) const override;

private:
  const SemidirectProduct& S_;
};

} // namespace singext::catops
