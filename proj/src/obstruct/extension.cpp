#include "singext/obstruct/extension.hpp"

namespace singext::obstruct {

namespace {

std::string at(const Obj& a, const Obj& b) { return "(" + a.to_string() + ", " + b.to_string() + ")"; }

std::vector<Mor> gens(const FinAbGroup& G) {
  std::vector<Mor> out;
  for (std::size_t k = 0; k < G.ngens(); ++k)
    out.push_back(G.gen(k));
  return out;
}

std::vector<Mor> kernel_gens(const abgrp::Subgroup& K) {
  std::vector<Mor> out;
  for (std::size_t k = 0; k < K.group.ngens(); ++k)
    out.push_back(K.inclusion.apply(K.group.gen(k)));
  return out;
}

} // namespace

ExtensionData make_extension(const CompCategory& total, const CompCategory& base, const Functor& projection,
                             std::vector<Obj> window, const catops::Bifunctor* kernel,
                             KernelInclusion inclusion, bool tau) {
  ExtensionData E;
  E.total = &total;
  E.base = &base;
  E.projection = &projection;
  E.kernel = kernel;
  E.inclusion = std::move(inclusion);
  E.window = std::move(window);
  E.tau = tau;
  for (const auto& a : E.window)
    for (const auto& b : E.window) {
      const GroupMor p = projection.on_hom(a, b);
      ++E.checks;
      if (!abgrp::is_surjective(p))
        throw ProjectionNotSurjective("projection is not surjective on hom" + at(a, b));
      E.kernels[{a, b}] = abgrp::mor_kernel_image(p).kernel;
      if (kernel) {
        const GroupMor i = E.inclusion(a, b);
        ++E.checks;
        std::vector<Mor> image;
        for (const auto& g : gens(i.source))
          image.push_back(i.apply(g));
        if (!abgrp::is_injective(i) ||
            !abgrp::same_subgroup(total.hom(a, b), image, kernel_gens(E.kernels[{a, b}])))
          throw ContractViolation("kernel bifunctor does not include onto Ker(projection) at " + at(a, b));
      }
    }
  for (const auto& a : E.window)
    for (const auto& b : E.window) {
      const auto ker_ab = kernel_gens(E.kernels.at({a, b}));
      for (const auto& c : E.window) {
        const auto ker_bc = kernel_gens(E.kernels.at({b, c}));
        for (const auto& y : ker_bc)
          for (const auto& x : ker_ab) {
            ++E.checks;
            if (!total.hom(a, c).is_zero(total.compose(a, b, c, y, x)))
              throw KernelNotSquareZero("kernel is not square zero: nonzero composite " + at(a, b) + " then " +
                                        at(b, c));
          }
        if (!kernel)
          continue;
        // the kernel actions agree with composition in the total category
        const FinAbGroup Dab = kernel->value(a, b), Dbc = kernel->value(b, c);
        const GroupMor iab = E.inclusion(a, b), ibc = E.inclusion(b, c), iac = E.inclusion(a, c);
        for (const auto& g : gens(total.hom(b, c)))
          for (std::size_t k = 0; k < Dab.ngens(); ++k) {
            ++E.checks;
            const Mor lhs = total.compose(a, b, c, g, iab.apply(Dab.gen(k)));
            const Mor rhs = iac.apply(kernel->post(a, b, c, projection.apply(b, c, g), Dab.gen(k)));
            if (lhs != rhs)
              throw ContractViolation("kernel left action disagrees with composition at " + at(a, c));
          }
        for (const auto& f : gens(total.hom(a, b)))
          for (std::size_t k = 0; k < Dbc.ngens(); ++k) {
            ++E.checks;
            const Mor lhs = total.compose(a, b, c, ibc.apply(Dbc.gen(k)), f);
            const Mor rhs = iac.apply(kernel->pre(a, b, c, projection.apply(a, b, f), Dbc.gen(k)));
            if (lhs != rhs)
              throw ContractViolation("kernel right action disagrees with composition at " + at(a, c));
          }
      }
    }
  if (tau) {
    if (!total.has_translation() || !base.has_translation())
      throw ContractViolation("tau flag set but a category has no translation");
    for (const auto& a : E.window)
      for (const auto& b : E.window) {
        const Obj ta = total.translate(a), tb = total.translate(b);
        for (const auto& f : gens(total.hom(a, b))) {
          ++E.checks;
          if (projection.apply(ta, tb, total.translate_mor(a, b, f)) !=
              base.translate_mor(a, b, projection.apply(a, b, f)))
            throw ContractViolation("projection does not commute with translation at " + at(a, b));
        }
        if (kernel && kernel->has_tau()) {
          const FinAbGroup D = kernel->value(a, b);
          for (std::size_t k = 0; k < D.ngens(); ++k) {
            ++E.checks;
            if (E.inclusion(ta, tb).apply(kernel->tau(a, b, D.gen(k))) !=
                total.translate_mor(a, b, E.inclusion(a, b).apply(D.gen(k))))
              throw ContractViolation("kernel translation disagrees with the total one at " + at(a, b));
          }
        }
      }
  }
  return E;
}

GroupMor ScaleTransformation::component(const Obj& a, const Obj& b) const {
  const FinAbGroup V = D_.value(a, b);
  IntMatrix m(V.ngens(), V.ngens());
  for (std::size_t k = 0; k < V.ngens(); ++k)
    m(k, k) = k_;
  return GroupMor(V, V, std::move(m));
}

const abgrp::Quotient& CokernelBifunctor::data(const Obj& a, const Obj& b) const {
  return *table_.get({a, b}, [&] {
    const GroupMor t = theta_.component(a, b);
    std::vector<IntVec> im;
    for (std::size_t k = 0; k < t.source.ngens(); ++k)
      im.push_back(t.apply(t.source.gen(k)));
    return abgrp::quotient(E_.value(a, b), im);
  });
}

IntVec CokernelBifunctor::post(const Obj& a, const Obj& b, const Obj& b2, const Mor& f, const IntVec& x) const {
  const IntVec lift = E_.value(a, b).reduce(data(a, b).lift * x);
  return data(a, b2).projection.apply(E_.post(a, b, b2, f, lift));
}

IntVec CokernelBifunctor::pre(const Obj& a2, const Obj& a, const Obj& b, const Mor& g, const IntVec& x) const {
  const IntVec lift = E_.value(a, b).reduce(data(a, b).lift * x);
  return data(a2, b).projection.apply(E_.pre(a2, a, b, g, lift));
}

IntVec CokernelBifunctor::tau(const Obj& a, const Obj& b, const IntVec& x) const {
  const IntVec lift = E_.value(a, b).reduce(data(a, b).lift * x);
  const CompCategory& C = owner();
  return data(C.translate(a), C.translate(b)).projection.apply(E_.tau(a, b, lift));
}

const PushforwardCategory::Data& PushforwardCategory::data(const Obj& a, const Obj& b) const {
  return *table_.get({a, b}, [&] {
    Data d;
    d.ambient = BlockSum({E_.total->hom(a, b), bifunctor().value(a, b)});
    const GroupMor incl = E_.inclusion(a, b), xi = xi_.component(a, b);
    std::vector<IntVec> rels;
    for (std::size_t k = 0; k < incl.source.ngens(); ++k) {
      const IntVec g = incl.source.gen(k);
      rels.push_back(d.ambient.join({incl.apply(g), xi.target.neg(xi.apply(g))}));
    }
    d.quotient = abgrp::quotient(d.ambient.group(), rels);
    return d;
  });
}

Mor PushforwardCategory::pair(const Obj& a, const Obj& b, const Mor& f, const IntVec& d) const {
  const Data& D = data(a, b);
  return D.quotient.projection.apply(D.ambient.join({f, d}));
}

std::pair<Mor, IntVec> PushforwardCategory::components(const Obj& a, const Obj& b, const Mor& m) const {
  const Data& D = data(a, b);
  const auto parts = D.ambient.split(D.ambient.group().reduce(D.quotient.lift * m));
  return {parts[0], parts[1]};
}

GroupMor PushforwardCategory::comparison(const Obj& a, const Obj& b) const {
  const FinAbGroup src = E_.total->hom(a, b);
  IntMatrix m(hom(a, b).ngens(), src.ngens());
  for (std::size_t k = 0; k < src.ngens(); ++k)
    m.set_column(k, pair(a, b, src.gen(k), bifunctor().value(a, b).zero()));
  return GroupMor(src, hom(a, b), std::move(m));
}

GroupMor PushforwardCategory::inclusion(const Obj& a, const Obj& b) const {
  const FinAbGroup src = bifunctor().value(a, b);
  IntMatrix m(hom(a, b).ngens(), src.ngens());
  for (std::size_t k = 0; k < src.ngens(); ++k)
    m.set_column(k, pair(a, b, E_.total->zero(a, b), src.gen(k)));
  return GroupMor(src, hom(a, b), std::move(m));
}

GroupMor PushforwardCategory::projection(const Obj& a, const Obj& b) const {
  const FinAbGroup src = hom(a, b), dst = E_.base->hom(a, b);
  IntMatrix m(dst.ngens(), src.ngens());
  for (std::size_t k = 0; k < src.ngens(); ++k)
    m.set_column(k, E_.projection->apply(a, b, components(a, b, src.gen(k)).first));
  return GroupMor(src, dst, std::move(m));
}

Mor PushforwardCategory::compose(const Obj& a, const Obj& b, const Obj& c, const Mor& g, const Mor& f) const {
  const auto [f0, d0] = components(a, b, f);
  const auto [g0, e0] = components(b, c, g);
  const auto& D1 = bifunctor();
  const IntVec d = D1.value(a, c).add(D1.post(a, b, c, E_.projection->apply(b, c, g0), d0),
                                      D1.pre(a, b, c, E_.projection->apply(a, b, f0), e0));
  return pair(a, c, E_.total->compose(a, b, c, g0, f0), d);
}

Mor PushforwardCategory::identity(const Obj& a) const {
  return pair(a, a, E_.total->identity(a), bifunctor().value(a, a).zero());
}

std::string PushforwardCategory::describe(const Obj& a, const Obj& b, const Mor& f) const {
  const auto [f0, d0] = components(a, b, f);
  return "[" + E_.total->describe(a, b, f0) + " | " + abgrp::to_string(d0) + "]";
}

Biproduct PushforwardCategory::direct_sum(const Obj& a, const Obj& b) const {
  const Biproduct s = E_.total->direct_sum(a, b);
  const auto& D1 = bifunctor();
  return {s.sum, pair(a, s.sum, s.i1, D1.value(a, s.sum).zero()), pair(b, s.sum, s.i2, D1.value(b, s.sum).zero()),
          pair(s.sum, a, s.r1, D1.value(s.sum, a).zero()), pair(s.sum, b, s.r2, D1.value(s.sum, b).zero())};
}

std::unique_ptr<Pushforward> pushforward(const ExtensionData& E, const catops::Transformation& xi) {
  if (!E.kernel || !E.inclusion)
    throw ContractViolation("pushforward needs the kernel bifunctor of the extension");
  const catops::LawReport nat = catops::check_naturality(xi, E.window);
  if (!nat.ok())
    throw NonNaturalTransformation(nat.failures.front());
  auto P = std::make_unique<Pushforward>();
  P->total = std::make_unique<PushforwardCategory>(E, xi);
  P->projection = std::make_unique<PushforwardProjection>(*P->total);
  const PushforwardCategory* T = P->total.get();
  P->data = make_extension(*T, *E.base, *P->projection, E.window, &xi.target(),
                           [T](const Obj& a, const Obj& b) { return T->inclusion(a, b); });
  return P;
}

std::string to_string(PushforwardVerdict v) {
  return v == PushforwardVerdict::NotPushforward ? "NOT-PUSHFORWARD" : "INCONCLUSIVE-NECESSARY-CONDITION-PASSED";
}

prescat::Coset preimage_coset(const ExtensionData& E, const Obj& a, const Obj& b, const Mor& y) {
  const GroupMor p = E.projection->on_hom(a, b);
  std::vector<IntVec> cols;
  for (std::size_t k = 0; k < p.source.ngens(); ++k)
    cols.push_back(p.apply(p.source.gen(k)));
  const auto coef = abgrp::span_coefficients(p.target, cols, y);
  if (!coef)
    throw ProjectionNotSurjective("no preimage for a base morphism at " + at(a, b));
  prescat::Coset c;
  c.representative = p.source.reduce(*coef);
  c.kernel = kernel_gens(E.kernels.count({a, b}) ? E.kernels.at({a, b}) : abgrp::mor_kernel_image(p).kernel);
  return c;
}

PushforwardReport is_pushforward_along(const ExtensionData& E, const catops::Transformation& theta,
                                       const BaseRealization& base, Int budget) {
  const catops::LawReport nat = catops::check_naturality(theta, E.window);
  if (!nat.ok())
    throw NonNaturalTransformation(nat.failures.front());
  const CokernelBifunctor coker(theta);
  const CokernelProjection q(coker, theta.target());
  const auto P = pushforward(E, q);

  PushforwardReport rep;
  for (const auto& a : E.window)
    for (const auto& b : E.window)
      if (!coker.value(a, b).trivial())
        rep.cokernel_table.push_back(a.to_string() + "," + b.to_string() + ":" + coker.value(a, b).describe());

  std::map<std::string, Obj> objects;
  for (const auto& o : base.presentation.objects)
    objects[o] = base.functor.object_map.at(o);
  std::map<std::string, prescat::Coset> cosets;
  for (const auto& arr : base.presentation.arrows)
    cosets[arr.name] = preimage_coset(P->data, objects.at(arr.src), objects.at(arr.dst),
                                      base.functor.arrow_map.at(arr.name));
  rep.certificate = prescat::search_sections(base.presentation, *P->total, objects, cosets, budget);
  rep.verdict = rep.certificate.found ? PushforwardVerdict::NecessaryConditionPassed
                                      : PushforwardVerdict::NotPushforward;
  return rep;
}

} // namespace singext::obstruct
