#pragma once

#include "singext/catops/bifunctor.hpp"

#include <functional>

namespace singext::catops {

/// Per ordered pair, a subgroup of hom(A, B) given by generators.
class IdealData {
public:
  using Rule = std::function<std::vector<Mor>(const Obj&, const Obj&)>;

  IdealData(const CompCategory& owner, std::string label, Rule rule);

  const CompCategory& owner() const { return *owner_; }
  const std::string& label() const { return label_; }
  const std::vector<Mor>& generators(const Obj& a, const Obj& b) const;
  bool contains(const Obj& a, const Obj& b, const Mor& f) const;
  abgrp::Subgroup subgroup(const Obj& a, const Obj& b) const;

private:
  const CompCategory* owner_;
  std::string label_;
  Rule rule_;
  std::shared_ptr<Memo<std::pair<Obj, Obj>, std::vector<Mor>>> table_;
};

IdealData zero_ideal(const CompCategory& C);
IdealData full_ideal(const CompCategory& C);
/// n * hom
IdealData multiple_ideal(const CompCategory& C, long n);

/// IJ(A,B) generated by f o g with g in J(A,X), f in I(X,B), X in the
/// owner's window of the given rank.
IdealData ideal_product(const IdealData& I, const IdealData& J, std::size_t rank_bound);

/// Closure under pre- and post-composition by generators, on the window.
LawReport check_ideal(const IdealData& I, const std::vector<Obj>& window);
/// Every ideal value is zero on the window.
bool vanishes(const IdealData& I, const std::vector<Obj>& window);

/// C / I with quotient functor Q.
class QuotientCategory : public CompCategory, public Functor {
public:
  QuotientCategory(const CompCategory& C, IdealData I) : C_(C), I_(std::move(I)) {}

  const CompCategory& base() const { return C_; }
  const IdealData& ideal() const { return I_; }
  /// Preimage of a class.
  Mor lift(const Obj& a, const Obj& b, const Mor& f) const;

  std::string name() const override { return C_.name() + "/" + I_.label(); }
  FinAbGroup hom(const Obj& a, const Obj& b) const override { return data(a, b).group; }
  Mor compose(const Obj& a, const Obj& b, const Obj& c, const Mor& g, const Mor& f) const override;
  Mor identity(const Obj& a) const override;
  std::vector<Obj> window(std::size_t rank_bound) const override { return C_.window(rank_bound); }
  std::size_t rank(const Obj& a) const override { return C_.rank(a); }
  Obj zero_object() const override { return C_.zero_object(); }
  Biproduct direct_sum(const Obj& a, const Obj& b) const override;

  Obj on_object(const Obj& a) const override { return a; }
  GroupMor on_hom(const Obj& a, const Obj& b) const override { return data(a, b).projection; }

private:
  const abgrp::Quotient& data(const Obj& a, const Obj& b) const;

  const CompCategory& C_;
  IdealData I_;
  Memo<std::pair<Obj, Obj>, abgrp::Quotient> table_;
};

/// Kernel of Q on each window pair equals I (quotient followed by kernel recovery).
bool kernel_recovers_ideal(const QuotientCategory& Q, const std::vector<Obj>& window);

struct ReflectReport {
  std::size_t morphisms = 0;
  std::vector<std::string> failures;
};
/// For every morphism between window objects: f is an isomorphism iff Q(f) is.
ReflectReport check_reflects_isomorphisms(const QuotientCategory& Q, const std::vector<Obj>& window);

} // namespace singext::catops
