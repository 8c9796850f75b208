#include "singext/catops/arrow.hpp"

#include "singext/errors.hpp"

namespace singext::catops {

namespace {

std::vector<long> to_longs(const Mor& f) {
  std::vector<long> out;
  for (const auto& x : f)
    out.push_back(static_cast<long>(x));
  return out;
}

} // namespace

Obj ArrowCategory::arrow(const Obj& a, const Obj& b, const Mor& f) const {
  return {"arrow", "", {a, b}, to_longs(C_.hom(a, b).reduce(f))};
}

Mor ArrowCategory::morphism(const Obj& f) const {
  if (f.kind != "arrow")
    throw ContractViolation("not an object of " + name());
  return Mor(f.data.begin(), f.data.end());
}

const SubBlockSum& ArrowCategory::layout(const Obj& f, const Obj& g) const {
  return *layouts_.get({f, g}, [&] {
    const Obj &A = source(f), &B = target(f), &A2 = source(g), &B2 = target(g);
    BlockSum amb({C_.hom(A, A2), C_.hom(B, B2)});
    const FinAbGroup T = C_.hom(A, B2);
    const Mor fm = morphism(f), gm = morphism(g);
    IntMatrix m(T.ngens(), amb.group().ngens());
    for (std::size_t k = 0; k < amb.group().ngens(); ++k) {
      const auto ab = amb.split(amb.group().gen(k));
      m.set_column(k, T.sub(C_.compose(A, A2, B2, gm, ab[0]), C_.compose(A, B, B2, ab[1], fm)));
    }
    const GroupMor cond(amb.group(), T, std::move(m));
    return SubBlockSum(amb, abgrp::kernel_generators(cond));
  });
}

std::pair<Mor, Mor> ArrowCategory::components(const Obj& f, const Obj& g, const Mor& x) const {
  auto parts = layout(f, g).split(x);
  return {parts[0], parts[1]};
}

bool ArrowCategory::commutes(const Obj& f, const Obj& g, const Mor& a, const Mor& b) const {
  const Obj &A = source(f), &B = target(f), &A2 = source(g), &B2 = target(g);
  return C_.compose(A, A2, B2, morphism(g), a) == C_.compose(A, B, B2, b, morphism(f));
}

Mor ArrowCategory::pair(const Obj& f, const Obj& g, const Mor& a, const Mor& b) const {
  if (!commutes(f, g, a, b))
    throw ContractViolation("square does not commute");
  return layout(f, g).encode_parts({a, b});
}

Mor ArrowCategory::compose(const Obj& f, const Obj& g, const Obj& h, const Mor& y,
                           const Mor& x) const {
  const auto [a1, b1] = components(f, g, x);
  const auto [a2, b2] = components(g, h, y);
  return layout(f, h).encode_parts({C_.compose(source(f), source(g), source(h), a2, a1),
                                    C_.compose(target(f), target(g), target(h), b2, b1)});
}

Mor ArrowCategory::identity(const Obj& f) const {
  return layout(f, f).encode_parts({C_.identity(source(f)), C_.identity(target(f))});
}

std::vector<Obj> ArrowCategory::window(std::size_t rank_bound) const {
  std::vector<Obj> out;
  const auto objs = C_.window(rank_bound);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      if (C_.rank(a) + C_.rank(b) > rank_bound)
        continue;
      for (const auto& f : abgrp::enumerate_elements(C_.hom(a, b)))
        out.push_back(arrow(a, b, f));
    }
  return out;
}

std::string ArrowCategory::describe(const Obj& f, const Obj& g, const Mor& x) const {
  const auto [a, b] = components(f, g, x);
  return "(" + C_.describe(source(f), source(g), a) + ", " + C_.describe(target(f), target(g), b) +
         ")";
}

Obj ArrowCategory::zero_object() const {
  const Obj z = C_.zero_object();
  return arrow(z, z, C_.zero(z, z));
}

Biproduct ArrowCategory::direct_sum(const Obj& f, const Obj& g) const {
  const Obj &A = source(f), &B = target(f), &A2 = source(g), &B2 = target(g);
  const Biproduct sa = C_.direct_sum(A, A2), sb = C_.direct_sum(B, B2);
  const FinAbGroup H = C_.hom(sa.sum, sb.sum);
  const Mor t1 = C_.compose(sa.sum, A, sb.sum, C_.compose(A, B, sb.sum, sb.i1, morphism(f)), sa.r1);
  const Mor t2 = C_.compose(sa.sum, A2, sb.sum, C_.compose(A2, B2, sb.sum, sb.i2, morphism(g)), sa.r2);
  const Obj s = arrow(sa.sum, sb.sum, H.add(t1, t2));
  return {s, pair(f, s, sa.i1, sb.i1), pair(g, s, sa.i2, sb.i2), pair(s, f, sa.r1, sb.r1),
          pair(s, g, sa.r2, sb.r2)};
}

Obj ArrowCategory::translate(const Obj& f) const {
  const Obj A1 = C_.translate(source(f)), B1 = C_.translate(target(f));
  const Mor f1 = C_.translate_mor(source(f), target(f), morphism(f));
  return arrow(A1, B1, C_.hom(A1, B1).neg(f1));
}

Mor ArrowCategory::translate_mor(const Obj& f, const Obj& g, const Mor& x) const {
  const auto [a, b] = components(f, g, x);
  return pair(translate(f), translate(g), C_.translate_mor(source(f), source(g), a),
              C_.translate_mor(target(f), target(g), b));
}

} // namespace singext::catops
