#pragma once

#include "singext/catops/arrow.hpp"

namespace singext::catops {

/// D : C^op x C -> Ab with optional tau-structure t : D(A,B) -> D(A[1],B[1]).
class Bifunctor {
public:
  virtual ~Bifunctor() = default;
  virtual const CompCategory& owner() const = 0;
  virtual std::string name() const = 0;
  virtual FinAbGroup value(const Obj& a, const Obj& b) const = 0;
  /// f : b -> b2 acting D(a,b) -> D(a,b2)
  virtual IntVec post(const Obj& a, const Obj& b, const Obj& b2, const Mor& f, const IntVec& x) const = 0;
  /// g : a2 -> a acting D(a,b) -> D(a2,b)
  virtual IntVec pre(const Obj& a2, const Obj& a, const Obj& b, const Mor& g, const IntVec& x) const = 0;
  virtual bool has_tau() const { return false; }
  virtual IntVec tau(const Obj& a, const Obj& b, const IntVec& x) const;

  GroupMor post_map(const Obj& a, const Obj& b, const Obj& b2, const Mor& f) const;
  GroupMor pre_map(const Obj& a2, const Obj& a, const Obj& b, const Mor& g) const;
  GroupMor tau_map(const Obj& a, const Obj& b) const;
};

/// hom itself, with t = translation on morphisms.
class HomBifunctor : public Bifunctor {
public:
  explicit HomBifunctor(const CompCategory& C) : C_(C) {}
  const CompCategory& owner() const override { return C_; }
  std::string name() const override { return "hom"; }
  FinAbGroup value(const Obj& a, const Obj& b) const override { return C_.hom(a, b); }
  IntVec post(const Obj& a, const Obj& b, const Obj& b2, const Mor& f, const IntVec& x) const override {
    return C_.compose(a, b, b2, f, x);
  }
  IntVec pre(const Obj& a2, const Obj& a, const Obj& b, const Mor& g, const IntVec& x) const override {
    return C_.compose(a2, a, b, x, g);
  }
  bool has_tau() const override { return C_.has_translation(); }
  IntVec tau(const Obj& a, const Obj& b, const IntVec& x) const override {
    return C_.translate_mor(a, b, x);
  }

private:
  const CompCategory& C_;
};

/// Toda bifunctor on C^[1]:
/// value(f, f') = hom(A[1], B') / (f'_* hom(A[1], A') + (f[1])^* hom(B[1], B')).
class TodaBifunctor : public Bifunctor {
public:
  explicit TodaBifunctor(const ArrowCategory& AC);

  const CompCategory& owner() const override { return AC_; }
  std::string name() const override { return "Toda"; }
  FinAbGroup value(const Obj& f, const Obj& g) const override { return data(f, g).group; }
  IntVec post(const Obj& f, const Obj& g, const Obj& g2, const Mor& y, const IntVec& x) const override;
  IntVec pre(const Obj& f2, const Obj& f, const Obj& g, const Mor& y, const IntVec& x) const override;
  bool has_tau() const override { return true; }
  IntVec tau(const Obj& f, const Obj& g, const IntVec& x) const override;

  /// Class of x : A[1] -> B' and a representative of a class.
  IntVec project(const Obj& f, const Obj& g, const Mor& x) const;
  Mor representative(const Obj& f, const Obj& g, const IntVec& v) const;

private:
  const abgrp::Quotient& data(const Obj& f, const Obj& g) const;

  const ArrowCategory& AC_;
  const CompCategory& C_;
  Memo<std::pair<Obj, Obj>, abgrp::Quotient> table_;
};

/// Natural transformation between two bifunctors on the same owner.
class Transformation {
public:
  virtual ~Transformation() = default;
  virtual const Bifunctor& source() const = 0;
  virtual const Bifunctor& target() const = 0;
  virtual GroupMor component(const Obj& a, const Obj& b) const = 0;
};

struct LawReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Functoriality of both actions, identity action, and commutation of the
/// two actions, on all generator morphisms among the window objects.
LawReport check_bifunctor(const Bifunctor& D, const std::vector<Obj>& window);
/// Naturality of t when D has a tau-structure.
LawReport check_tau_naturality(const Bifunctor& D, const std::vector<Obj>& window);
/// Both naturality squares of a transformation.
LawReport check_naturality(const Transformation& T, const std::vector<Obj>& window);

/// Covariant functor C -> Ab.
class GroupFunctor {
public:
  virtual ~GroupFunctor() = default;
  virtual FinAbGroup value(const Obj& x) const = 0;
  virtual GroupMor map(const Obj& x, const Obj& y, const Mor& f) const = 0;
};

class CovariantHom : public GroupFunctor {
public:
  CovariantHom(const CompCategory& C, Obj a) : C_(C), a_(std::move(a)) {}
  FinAbGroup value(const Obj& x) const override { return C_.hom(a_, x); }
  GroupMor map(const Obj& x, const Obj& y, const Mor& f) const override { return C_.post(a_, x, y, f); }

private:
  const CompCategory& C_;
  Obj a_;
};

/// X -> F(X) (x) F(X)
class TensorSquare : public GroupFunctor {
public:
  explicit TensorSquare(const GroupFunctor& F) : F_(F) {}
  FinAbGroup value(const Obj& x) const override;
  GroupMor map(const Obj& x, const Obj& y, const Mor& f) const override;

private:
  const GroupFunctor& F_;
};

GroupMor tensor_map(const GroupMor& f, const GroupMor& g);

/// cr2(F)(X1, X2) = Ker((F(r1), F(r2)) : F(X1 + X2) -> F(X1) + F(X2)).
abgrp::Subgroup cross_effect2(const CompCategory& C, const GroupFunctor& F, const Obj& x1,
                              const Obj& x2);

} // namespace singext::catops
