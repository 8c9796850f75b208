#include "singext/catops/bifunctor.hpp"

#include "singext/errors.hpp"

namespace singext::catops {

IntVec Bifunctor::tau(const Obj&, const Obj&, const IntVec&) const {
  throw ContractViolation(name() + " has no tau-structure");
}

GroupMor Bifunctor::post_map(const Obj& a, const Obj& b, const Obj& b2, const Mor& f) const {
  const FinAbGroup S = value(a, b), T = value(a, b2);
  IntMatrix m(T.ngens(), S.ngens());
  for (std::size_t k = 0; k < S.ngens(); ++k)
    m.set_column(k, post(a, b, b2, f, S.gen(k)));
  return {S, T, std::move(m)};
}

GroupMor Bifunctor::pre_map(const Obj& a2, const Obj& a, const Obj& b, const Mor& g) const {
  const FinAbGroup S = value(a, b), T = value(a2, b);
  IntMatrix m(T.ngens(), S.ngens());
  for (std::size_t k = 0; k < S.ngens(); ++k)
    m.set_column(k, pre(a2, a, b, g, S.gen(k)));
  return {S, T, std::move(m)};
}

GroupMor Bifunctor::tau_map(const Obj& a, const Obj& b) const {
  const CompCategory& C = owner();
  const FinAbGroup S = value(a, b), T = value(C.translate(a), C.translate(b));
  IntMatrix m(T.ngens(), S.ngens());
  for (std::size_t k = 0; k < S.ngens(); ++k)
    m.set_column(k, tau(a, b, S.gen(k)));
  return {S, T, std::move(m)};
}

TodaBifunctor::TodaBifunctor(const ArrowCategory& AC) : AC_(AC), C_(AC.base()) {
  if (!C_.has_translation())
    throw ContractViolation("Toda bifunctor needs a translation");
}

const abgrp::Quotient& TodaBifunctor::data(const Obj& f, const Obj& g) const {
  return *table_.get({f, g}, [&] {
    const Obj &A = ArrowCategory::source(f), &B = ArrowCategory::target(f);
    const Obj &A2 = ArrowCategory::source(g), &B2 = ArrowCategory::target(g);
    const Obj A1 = C_.translate(A), B1 = C_.translate(B);
    const Mor f1 = C_.translate_mor(A, B, AC_.morphism(f));
    const FinAbGroup H = C_.hom(A1, B2);
    std::vector<IntVec> den;
    const GroupMor gs = C_.post(A1, A2, B2, AC_.morphism(g));
    for (std::size_t k = 0; k < gs.source.ngens(); ++k)
      den.push_back(gs.matrix.column(k));
    const GroupMor fs = C_.pre(A1, B1, B2, f1);
    for (std::size_t k = 0; k < fs.source.ngens(); ++k)
      den.push_back(fs.matrix.column(k));
    return abgrp::quotient(H, den);
  });
}

IntVec TodaBifunctor::project(const Obj& f, const Obj& g, const Mor& x) const {
  return data(f, g).projection.apply(x);
}

Mor TodaBifunctor::representative(const Obj& f, const Obj& g, const IntVec& v) const {
  const auto& q = data(f, g);
  return q.projection.source.reduce(q.lift * v);
}

IntVec TodaBifunctor::post(const Obj& f, const Obj& g, const Obj& g2, const Mor& y,
                           const IntVec& x) const {
  const Obj A1 = C_.translate(ArrowCategory::source(f));
  const Mor b = AC_.components(g, g2, y).second;
  const Mor r = representative(f, g, x);
  return project(f, g2,
                 C_.compose(A1, ArrowCategory::target(g), ArrowCategory::target(g2), b, r));
}

IntVec TodaBifunctor::pre(const Obj& f2, const Obj& f, const Obj& g, const Mor& y,
                          const IntVec& x) const {
  const Obj &A2 = ArrowCategory::source(f2), &A = ArrowCategory::source(f);
  const Mor a = AC_.components(f2, f, y).first;
  const Mor a1 = C_.translate_mor(A2, A, a);
  const Mor r = representative(f, g, x);
  return project(f2, g,
                 C_.compose(C_.translate(A2), C_.translate(A), ArrowCategory::target(g), r, a1));
}

IntVec TodaBifunctor::tau(const Obj& f, const Obj& g, const IntVec& x) const {
  const Obj A1 = C_.translate(ArrowCategory::source(f));
  const Mor r = representative(f, g, x);
  return project(AC_.translate(f), AC_.translate(g),
                 C_.translate_mor(A1, ArrowCategory::target(g), r));
}

namespace {

std::vector<Mor> gens(const CompCategory& C, const Obj& a, const Obj& b) {
  const FinAbGroup H = C.hom(a, b);
  std::vector<Mor> out;
  for (std::size_t k = 0; k < H.ngens(); ++k)
    out.push_back(H.gen(k));
  return out;
}

std::string at(const Obj& a, const Obj& b) { return a.to_string() + " -> " + b.to_string(); }

} // namespace

LawReport check_bifunctor(const Bifunctor& D, const std::vector<Obj>& window) {
  const CompCategory& C = D.owner();
  LawReport rep;
  for (const auto& a : window)
    for (const auto& b : window) {
      const FinAbGroup V = D.value(a, b);
      for (std::size_t k = 0; k < V.ngens(); ++k) {
        const IntVec x = V.gen(k);
        ++rep.checks;
        if (D.post(a, b, b, C.identity(b), x) != x || D.pre(a, a, b, C.identity(a), x) != x)
          rep.failures.push_back("identity action at " + at(a, b));
        for (const auto& b2 : window)
          for (const auto& f : gens(C, b, b2)) {
            for (const auto& b3 : window)
              for (const auto& g : gens(C, b2, b3)) {
                ++rep.checks;
                const IntVec lhs = D.post(a, b, b3, C.compose(b, b2, b3, g, f), x);
                const IntVec rhs = D.post(a, b2, b3, g, D.post(a, b, b2, f, x));
                if (lhs != rhs)
                  rep.failures.push_back("post functoriality at " + at(a, b));
              }
            for (const auto& a2 : window)
              for (const auto& h : gens(C, a2, a)) {
                ++rep.checks;
                const IntVec lhs = D.pre(a2, a, b2, h, D.post(a, b, b2, f, x));
                const IntVec rhs = D.post(a2, b, b2, f, D.pre(a2, a, b, h, x));
                if (lhs != rhs)
                  rep.failures.push_back("actions do not commute at " + at(a, b));
              }
          }
        for (const auto& a2 : window)
          for (const auto& h : gens(C, a2, a))
            for (const auto& a3 : window)
              for (const auto& h2 : gens(C, a3, a2)) {
                ++rep.checks;
                const IntVec lhs = D.pre(a3, a, b, C.compose(a3, a2, a, h, h2), x);
                const IntVec rhs = D.pre(a3, a2, b, h2, D.pre(a2, a, b, h, x));
                if (lhs != rhs)
                  rep.failures.push_back("pre functoriality at " + at(a, b));
              }
      }
    }
  return rep;
}

LawReport check_tau_naturality(const Bifunctor& D, const std::vector<Obj>& window) {
  const CompCategory& C = D.owner();
  LawReport rep;
  if (!D.has_tau())
    return rep;
  for (const auto& a : window)
    for (const auto& b : window) {
      const FinAbGroup V = D.value(a, b);
      const Obj ta = C.translate(a), tb = C.translate(b);
      for (std::size_t k = 0; k < V.ngens(); ++k) {
        const IntVec x = V.gen(k);
        for (const auto& b2 : window)
          for (const auto& f : gens(C, b, b2)) {
            ++rep.checks;
            const IntVec lhs = D.tau(a, b2, D.post(a, b, b2, f, x));
            const IntVec rhs =
                D.post(ta, tb, C.translate(b2), C.translate_mor(b, b2, f), D.tau(a, b, x));
            if (lhs != rhs)
              rep.failures.push_back("tau not natural in the second slot at " + at(a, b));
          }
        for (const auto& a2 : window)
          for (const auto& h : gens(C, a2, a)) {
            ++rep.checks;
            const IntVec lhs = D.tau(a2, b, D.pre(a2, a, b, h, x));
            const IntVec rhs =
                D.pre(C.translate(a2), ta, tb, C.translate_mor(a2, a, h), D.tau(a, b, x));
            if (lhs != rhs)
              rep.failures.push_back("tau not natural in the first slot at " + at(a, b));
          }
      }
    }
  return rep;
}

LawReport check_naturality(const Transformation& T, const std::vector<Obj>& window) {
  const Bifunctor &S = T.source(), &D = T.target();
  const CompCategory& C = S.owner();
  LawReport rep;
  for (const auto& a : window)
    for (const auto& b : window) {
      const GroupMor t_ab = T.component(a, b);
      const FinAbGroup V = S.value(a, b);
      for (std::size_t k = 0; k < V.ngens(); ++k) {
        const IntVec x = V.gen(k);
        for (const auto& b2 : window)
          for (const auto& f : gens(C, b, b2)) {
            ++rep.checks;
            if (T.component(a, b2).apply(S.post(a, b, b2, f, x)) != D.post(a, b, b2, f, t_ab.apply(x)))
              rep.failures.push_back("not natural in the second slot at " + at(a, b));
          }
        for (const auto& a2 : window)
          for (const auto& h : gens(C, a2, a)) {
            ++rep.checks;
            if (T.component(a2, b).apply(S.pre(a2, a, b, h, x)) != D.pre(a2, a, b, h, t_ab.apply(x)))
              rep.failures.push_back("not natural in the first slot at " + at(a, b));
          }
      }
    }
  return rep;
}

GroupMor tensor_map(const GroupMor& f, const GroupMor& g) {
  const abgrp::PresentedGroup S = abgrp::tensor(f.source, g.source);
  const abgrp::PresentedGroup T = abgrp::tensor(f.target, g.target);
  const std::size_t a = f.source.ngens(), b = g.source.ngens();
  const std::size_t a2 = f.target.ngens(), b2 = g.target.ngens();
  IntMatrix kron(a2 * b2, a * b);
  for (std::size_t r = 0; r < a2; ++r)
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t s = 0; s < b2; ++s)
        for (std::size_t j = 0; j < b; ++j)
          kron(r * b2 + s, i * b + j) = f.matrix(r, i) * g.matrix(s, j);
  IntMatrix m(T.group.ngens(), S.group.ngens());
  for (std::size_t k = 0; k < S.group.ngens(); ++k)
    m.set_column(k, T.element(kron * S.from_group.column(k)));
  return {S.group, T.group, std::move(m)};
}

FinAbGroup TensorSquare::value(const Obj& x) const {
  const FinAbGroup G = F_.value(x);
  return abgrp::tensor(G, G).group;
}

GroupMor TensorSquare::map(const Obj& x, const Obj& y, const Mor& f) const {
  const GroupMor g = F_.map(x, y, f);
  return tensor_map(g, g);
}

abgrp::Subgroup cross_effect2(const CompCategory& C, const GroupFunctor& F, const Obj& x1,
                              const Obj& x2) {
  const Biproduct s = C.direct_sum(x1, x2);
  const GroupMor p1 = F.map(s.sum, x1, s.r1), p2 = F.map(s.sum, x2, s.r2);
  const abgrp::SumGroup target = abgrp::direct_sum(p1.target, p2.target);
  IntMatrix m(target.sum.group.ngens(), p1.source.ngens());
  for (std::size_t k = 0; k < p1.source.ngens(); ++k) {
    const IntVec v = target.i1 * p1.matrix.column(k);
    const IntVec w = target.i2 * p2.matrix.column(k);
    IntVec t(v.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      t[i] = v[i] + w[i];
    m.set_column(k, target.sum.group.reduce(t));
  }
  return abgrp::mor_kernel_image(GroupMor(p1.source, target.sum.group, std::move(m))).kernel;
}

} // namespace singext::catops
