#include "singext/catops/karoubi.hpp"

#include "singext/errors.hpp"

#include <cmath>
#include <set>

namespace singext::catops {

bool is_idempotent(const Preadditive& C, const Obj& a, const Mor& e) {
  return C.compose(a, a, a, e, e) == C.hom(a, a).reduce(e);
}

Obj KaroubiEnvelope::object(const Obj& a, const Mor& e) const {
  if (!is_idempotent(C_, a, e))
    throw ContractViolation("Karoubi object needs an idempotent");
  std::vector<long> d;
  for (const auto& x : C_.hom(a, a).reduce(e))
    d.push_back(static_cast<long>(x));
  return {"ka", "", {a}, d};
}

Mor KaroubiEnvelope::idempotent(const Obj& x) const {
  if (x.kind != "ka")
    throw ContractViolation("not an object of " + name());
  return Mor(x.data.begin(), x.data.end());
}

const SubBlockSum& KaroubiEnvelope::layout(const Obj& x, const Obj& y) const {
  return *layouts_.get({x, y}, [&] {
    const Obj &A = carrier(x), &B = carrier(y);
    const Mor e = idempotent(x), e2 = idempotent(y);
    const FinAbGroup H = C_.hom(A, B);
    std::vector<IntVec> gens;
    for (std::size_t k = 0; k < H.ngens(); ++k)
      gens.push_back(C_.compose(A, B, B, e2, C_.compose(A, A, B, H.gen(k), e)));
    return SubBlockSum(BlockSum({H}), gens);
  });
}

Mor KaroubiEnvelope::compose(const Obj& x, const Obj& y, const Obj& z, const Mor& g,
                             const Mor& f) const {
  return from_underlying(x, z, C_.compose(carrier(x), carrier(y), carrier(z), underlying(y, z, g),
                                          underlying(x, y, f)));
}

std::vector<Obj> KaroubiEnvelope::window(std::size_t rank_bound) const {
  std::vector<Obj> out;
  for (const auto& a : C_.window(rank_bound))
    for (const auto& e : abgrp::enumerate_elements(C_.hom(a, a)))
      if (is_idempotent(C_, a, e))
        out.push_back(object(a, e));
  return out;
}

Biproduct KaroubiEnvelope::direct_sum(const Obj& x, const Obj& y) const {
  const Obj &A = carrier(x), &B = carrier(y);
  const Biproduct s = C_.direct_sum(A, B);
  const Mor e = idempotent(x), e2 = idempotent(y);
  const FinAbGroup H = C_.hom(s.sum, s.sum);
  const Mor es = H.add(C_.compose(s.sum, A, s.sum, C_.compose(A, A, s.sum, s.i1, e), s.r1),
                       C_.compose(s.sum, B, s.sum, C_.compose(B, B, s.sum, s.i2, e2), s.r2));
  const Obj sum = object(s.sum, es);
  auto m = [&](const Obj& p, const Obj& q, const Mor& f) {
    const Obj &P = carrier(p), &Q = carrier(q);
    return from_underlying(p, q, C_.compose(P, Q, Q, idempotent(q), C_.compose(P, P, Q, f, idempotent(p))));
  };
  return {sum, m(x, sum, s.i1), m(y, sum, s.i2), m(sum, x, s.r1), m(sum, y, s.r2)};
}

std::optional<Splitting> find_splitting(const CompCategory& C, const Obj& a, const Mor& e,
                                        const std::vector<Obj>& window) {
  for (const auto& b : window)
    for (const auto& s : abgrp::enumerate_elements(C.hom(b, a))) {
      // r must satisfy r s = id_B and s r = e; r = r e, so search r among hom(A, B)
      for (const auto& r : abgrp::enumerate_elements(C.hom(a, b)))
        if (C.compose(b, a, b, r, s) == C.identity(b) && C.compose(a, b, a, s, r) == C.hom(a, a).reduce(e))
          return Splitting{b, s, r};
    }
  return std::nullopt;
}

std::optional<Obj> karoubi_iso_to_image(const KaroubiEnvelope& K, const Obj& x,
                                        const std::vector<Obj>& window) {
  for (const auto& b : window) {
    const Obj y = K.embed(b);
    for (const auto& f : abgrp::enumerate_elements(K.hom(y, x)))
      if (K.is_iso(y, x, f))
        return b;
  }
  return std::nullopt;
}

Mor lift_idempotent(const QuotientCategory& Q, const Obj& a, const Mor& f, std::size_t nilpotency) {
  if (!is_idempotent(Q, a, f))
    throw ContractViolation("lift_idempotent: input is not idempotent");
  const CompCategory& C = Q.base();
  const FinAbGroup H = C.hom(a, a);
  Mor e = Q.lift(a, a, f);
  std::size_t rounds = 1;
  for (std::size_t n = 1; n < nilpotency; n *= 2)
    ++rounds;
  for (std::size_t k = 0; k < rounds; ++k) {
    const Mor e2 = C.compose(a, a, a, e, e);
    const Mor e3 = C.compose(a, a, a, e2, e);
    e = H.sub(H.scale(3, e2), H.scale(2, e3));
  }
  if (!is_idempotent(C, a, e) || Q.apply(a, a, e) != Q.hom(a, a).reduce(f))
    throw ContractViolation("lift_idempotent did not converge; ideal is not nilpotent of the given order");
  return e;
}

ArrowSplitting split_arrow_idempotent(const ArrowCategory& AC, const Obj& f, const Mor& a,
                                      const Mor& b, const Splitting& sa, const Splitting& sb) {
  const CompCategory& C = AC.base();
  const Obj &A = ArrowCategory::source(f), &B = ArrowCategory::target(f);
  const Obj &A2 = sa.object, &B2 = sb.object;
  // a = d c with d = sa.section, c = sa.retraction; likewise b = t s
  const Mor &d = sa.section, &c = sa.retraction, &t = sb.section, &s = sb.retraction;
  if (C.compose(A2, A, A2, c, d) != C.identity(A2) || C.compose(A, A2, A, d, c) != C.hom(A, A).reduce(a) ||
      C.compose(B2, B, B2, s, t) != C.identity(B2) || C.compose(B, B2, B, t, s) != C.hom(B, B).reduce(b))
    throw ContractViolation("invalid splitting data");
  if (!AC.commutes(f, f, a, b) || !is_idempotent(C, A, a) || !is_idempotent(C, B, b))
    throw ContractViolation("(a, b) is not an idempotent of the arrow");
  const Mor g = C.compose(A2, B, B2, s, C.compose(A2, A, B, AC.morphism(f), d));
  const Obj go = AC.arrow(A2, B2, g);
  ArrowSplitting out{go, AC.pair(f, go, c, s), AC.pair(go, f, d, t)};
  if (AC.compose(f, go, f, out.from_g, out.to_g) != AC.pair(f, f, a, b) ||
      AC.compose(go, f, go, out.to_g, out.from_g) != AC.identity(go))
    throw ContractViolation("arrow splitting composites failed");
  return out;
}

Obj rho_embed(const KaroubiEnvelope& KA, const ArrowCategory& AC, const Obj& A, const Mor& e,
              const Obj& A2, const Mor& e2, const Mor& f) {
  const CompCategory& C = AC.base();
  if (C.compose(A, A, A2, f, e) != C.hom(A, A2).reduce(f) || C.compose(A, A2, A2, e2, f) != C.hom(A, A2).reduce(f))
    throw ContractViolation("malformed quintuple: need f e = f = e' f");
  const Obj arrow = AC.arrow(A, A2, f);
  return KA.object(arrow, AC.pair(arrow, arrow, e, e2));
}

bool rho_hom_agrees(const KaroubiEnvelope& KC, const ArrowCategory& AKC, const KaroubiEnvelope& KA,
                    const ArrowCategory& AC, const Obj& x, const Obj& y) {
  // x, y are objects of (C^[1])^Ka built by rho_embed
  auto quintuple_arrow = [&](const Obj& z) {
    const Obj& arrow = KaroubiEnvelope::carrier(z);
    const auto [e, e2] = AC.components(arrow, arrow, KA.idempotent(z));
    const Obj s = KC.object(ArrowCategory::source(arrow), e);
    const Obj t = KC.object(ArrowCategory::target(arrow), e2);
    return AKC.arrow(s, t, KC.from_underlying(s, t, AC.morphism(arrow)));
  };
  const Obj px = quintuple_arrow(x), py = quintuple_arrow(y);
  std::set<std::pair<Mor, Mor>> lhs, rhs;
  for (const auto& h : abgrp::enumerate_elements(AKC.hom(px, py))) {
    const auto [u, v] = AKC.components(px, py, h);
    lhs.emplace(KC.underlying(ArrowCategory::source(px), ArrowCategory::source(py), u),
                KC.underlying(ArrowCategory::target(px), ArrowCategory::target(py), v));
  }
  const Obj &ax = KaroubiEnvelope::carrier(x), &ay = KaroubiEnvelope::carrier(y);
  for (const auto& h : abgrp::enumerate_elements(KA.hom(x, y)))
    rhs.insert(AC.components(ax, ay, KA.underlying(x, y, h)));
  return lhs == rhs;
}

} // namespace singext::catops
