#include "singext/catops/semidirect.hpp"

namespace singext::catops {

const BlockSum& SemidirectProduct::layout(const Obj& a, const Obj& b) const {
  return *layouts_.get({a, b}, [&] { return BlockSum({B_.hom(a, b), D_.value(a, b)}); });
}

std::pair<Mor, IntVec> SemidirectProduct::components(const Obj& a, const Obj& b, const Mor& m) const {
  auto parts = layout(a, b).split(m);
  return {parts[0], parts[1]};
}

Mor SemidirectProduct::compose(const Obj& a, const Obj& b, const Obj& c, const Mor& g,
                               const Mor& f) const {
  const auto [gf, ga] = components(b, c, g);
  const auto [ff, fa] = components(a, b, f);
  const FinAbGroup V = D_.value(a, c);
  return pair(a, c, B_.compose(a, b, c, gf, ff),
              V.add(D_.post(a, b, c, gf, fa), D_.pre(a, b, c, ff, ga)));
}

std::string SemidirectProduct::describe(const Obj& a, const Obj& b, const Mor& f) const {
  const auto [m, x] = components(a, b, f);
  return "(" + B_.describe(a, b, m) + ", " + abgrp::to_string(x) + ")";
}

Biproduct SemidirectProduct::direct_sum(const Obj& a, const Obj& b) const {
  const Biproduct s = B_.direct_sum(a, b);
  auto lift = [&](const Obj& x, const Obj& y, const Mor& f) { return pair(x, y, f, D_.value(x, y).zero()); };
  return {s.sum, lift(a, s.sum, s.i1), lift(b, s.sum, s.i2), lift(s.sum, a, s.r1),
          lift(s.sum, b, s.r2)};
}

GroupMor SemidirectProjection::on_hom(const Obj& a, const Obj& b) const {
  const FinAbGroup S = S_.hom(a, b), T = S_.base().hom(a, b);
  IntMatrix m(T.ngens(), S.ngens());
  for (std::size_t k = 0; k < S.ngens(); ++k)
    m.set_column(k, S_.components(a, b, S.gen(k)).first);
  return {S, T, std::move(m)};
}

GroupMor SemidirectSection::on_hom(const Obj& a, const Obj& b) const {
  const FinAbGroup S = S_.base().hom(a, b), T = S_.hom(a, b);
  const FinAbGroup V = S_.bifunctor().value(a, b);
  IntMatrix m(T.ngens(), S.ngens());
  for (std::size_t k = 0; k < S.ngens(); ++k)
    m.set_column(k, S_.pair(a, b, S.gen(k), V.zero()));
  return {S, T, std::move(m)};
}

} // namespace singext::catops
