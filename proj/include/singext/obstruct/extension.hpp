#pragma once

#include "singext/catops/bifunctor.hpp"
#include "singext/errors.hpp"
#include "singext/prescat/functor.hpp"

#include <functional>
#include <memory>

namespace singext::obstruct {

class KernelNotSquareZero : public ContractViolation {
public:
  using ContractViolation::ContractViolation;
};
class ProjectionNotSurjective : public ContractViolation {
public:
  using ContractViolation::ContractViolation;
};
class NonNaturalTransformation : public ContractViolation {
public:
  using ContractViolation::ContractViolation;
};
class CompositeNotZero : public ContractViolation {
public:
  using ContractViolation::ContractViolation;
};

/// Kernel bifunctor value D(a, b) -> hom_total(a, b).
using KernelInclusion = std::function<GroupMor(const Obj&, const Obj&)>;

/// 0 -> D -> total -> base -> 0 on a finite object window.
struct ExtensionData {
  const CompCategory* total = nullptr;
  const CompCategory* base = nullptr;
  const Functor* projection = nullptr;
  const catops::Bifunctor* kernel = nullptr;
  KernelInclusion inclusion;
  std::vector<Obj> window;
  bool tau = false;
  /// Ker(projection) per window pair.
  std::map<std::pair<Obj, Obj>, abgrp::Subgroup> kernels;
  std::size_t checks = 0;
};

/// Validates surjectivity, the square-zero property, and (when a kernel
/// bifunctor is given) that its inclusion is the kernel with matching actions.
ExtensionData make_extension(const CompCategory& total, const CompCategory& base, const Functor& projection,
                             std::vector<Obj> window, const catops::Bifunctor* kernel = nullptr,
                             KernelInclusion inclusion = {}, bool tau = false);

class IdentityTransformation : public catops::Transformation {
public:
  explicit IdentityTransformation(const catops::Bifunctor& D) : D_(D) {}
  const catops::Bifunctor& source() const override { return D_; }
  const catops::Bifunctor& target() const override { return D_; }
  GroupMor component(const Obj& a, const Obj& b) const override { return GroupMor::identity(D_.value(a, b)); }

private:
  const catops::Bifunctor& D_;
};

class ScaleTransformation : public catops::Transformation {
public:
  ScaleTransformation(const catops::Bifunctor& D, long k) : D_(D), k_(k) {}
  const catops::Bifunctor& source() const override { return D_; }
  const catops::Bifunctor& target() const override { return D_; }
  GroupMor component(const Obj& a, const Obj& b) const override;

private:
  const catops::Bifunctor& D_;
  long k_;
};

/// second o first
class ComposedTransformation : public catops::Transformation {
public:
  ComposedTransformation(const catops::Transformation& first, const catops::Transformation& second)
      : first_(first), second_(second) {}
  const catops::Bifunctor& source() const override { return first_.source(); }
  const catops::Bifunctor& target() const override { return second_.target(); }
  GroupMor component(const Obj& a, const Obj& b) const override {
    return second_.component(a, b).after(first_.component(a, b));
  }

private:
  const catops::Transformation& first_;
  const catops::Transformation& second_;
};

/// coker(theta : D -> E) with the induced actions.
class CokernelBifunctor : public catops::Bifunctor {
public:
  explicit CokernelBifunctor(const catops::Transformation& theta) : theta_(theta), E_(theta.target()) {}
  const CompCategory& owner() const override { return E_.owner(); }
  std::string name() const override { return "coker(" + theta_.source().name() + "->" + E_.name() + ")"; }
  FinAbGroup value(const Obj& a, const Obj& b) const override { return data(a, b).group; }
  IntVec post(const Obj& a, const Obj& b, const Obj& b2, const Mor& f, const IntVec& x) const override;
  IntVec pre(const Obj& a2, const Obj& a, const Obj& b, const Mor& g, const IntVec& x) const override;
  bool has_tau() const override { return E_.has_tau(); }
  IntVec tau(const Obj& a, const Obj& b, const IntVec& x) const override;
  const abgrp::Quotient& data(const Obj& a, const Obj& b) const;

private:
  const catops::Transformation& theta_;
  const catops::Bifunctor& E_;
  Memo<std::pair<Obj, Obj>, abgrp::Quotient> table_;
};

/// E -> coker(theta)
class CokernelProjection : public catops::Transformation {
public:
  explicit CokernelProjection(const CokernelBifunctor& C, const catops::Bifunctor& E) : C_(C), E_(E) {}
  const catops::Bifunctor& source() const override { return E_; }
  const catops::Bifunctor& target() const override { return C_; }
  GroupMor component(const Obj& a, const Obj& b) const override { return C_.data(a, b).projection; }

private:
  const CokernelBifunctor& C_;
  const catops::Bifunctor& E_;
};

/// Total category of the pushforward along xi : D -> D1:
/// hom_1(a, b) = (hom(a, b) + D1(a, b)) / {(i(k), -xi(k))}.
class PushforwardCategory : public CompCategory {
public:
  PushforwardCategory(const ExtensionData& E, const catops::Transformation& xi) : E_(E), xi_(xi) {}

  const ExtensionData& source() const { return E_; }
  const catops::Bifunctor& bifunctor() const { return xi_.target(); }
  /// Class of (f, d).
  Mor pair(const Obj& a, const Obj& b, const Mor& f, const IntVec& d) const;
  std::pair<Mor, IntVec> components(const Obj& a, const Obj& b, const Mor& m) const;
  /// j : total -> total_1
  GroupMor comparison(const Obj& a, const Obj& b) const;
  GroupMor inclusion(const Obj& a, const Obj& b) const;
  GroupMor projection(const Obj& a, const Obj& b) const;

  std::string name() const override { return "pushforward(" + E_.total->name() + ")"; }
  FinAbGroup hom(const Obj& a, const Obj& b) const override { return data(a, b).quotient.group; }
  Mor compose(const Obj& a, const Obj& b, const Obj& c, const Mor& g, const Mor& f) const override;
  Mor identity(const Obj& a) const override;
  std::vector<Obj> window(std::size_t) const override { return E_.window; }
  std::size_t rank(const Obj& a) const override { return E_.total->rank(a); }
  std::string describe(const Obj& a, const Obj& b, const Mor& f) const override;
  Obj zero_object() const override { return E_.total->zero_object(); }
  Biproduct direct_sum(const Obj& a, const Obj& b) const override;

private:
  struct Data {
    BlockSum ambient;
    abgrp::Quotient quotient;
  };
  const Data& data(const Obj& a, const Obj& b) const;

  const ExtensionData& E_;
  const catops::Transformation& xi_;
  Memo<std::pair<Obj, Obj>, Data> table_;
};

class PushforwardProjection : public Functor {
public:
  explicit PushforwardProjection(const PushforwardCategory& P) : P_(P) {}
  Obj on_object(const Obj& a) const override { return a; }
  GroupMor on_hom(const Obj& a, const Obj& b) const override { return P_.projection(a, b); }

private:
  const PushforwardCategory& P_;
};

struct Pushforward {
  std::unique_ptr<PushforwardCategory> total;
  std::unique_ptr<PushforwardProjection> projection;
  ExtensionData data;
};

/// Throws NonNaturalTransformation if xi fails a naturality square on the window.
std::unique_ptr<Pushforward> pushforward(const ExtensionData& E, const catops::Transformation& xi);

/// Base category given by a presentation realized in E.base.
struct BaseRealization {
  prescat::QuiverPresentation presentation;
  prescat::FunctorData functor; // into E.base
};

enum class PushforwardVerdict { NotPushforward, NecessaryConditionPassed };
std::string to_string(PushforwardVerdict v);

struct PushforwardReport {
  PushforwardVerdict verdict = PushforwardVerdict::NecessaryConditionPassed;
  prescat::SectionResult certificate;
  std::vector<std::string> cokernel_table; // "a,b:group" for nonzero values
};

/// Pushes E forward along q = coker(theta) and searches for a section of the
/// resulting projection over the realized base. No section means E is not a
/// pushforward along theta; a section only passes the necessary condition.
PushforwardReport is_pushforward_along(const ExtensionData& E, const catops::Transformation& theta,
                                       const BaseRealization& base, Int budget = Int(100'000'000));

/// Preimage coset of y : a -> b under the projection of E.
prescat::Coset preimage_coset(const ExtensionData& E, const Obj& a, const Obj& b, const Mor& y);

} // namespace singext::obstruct
