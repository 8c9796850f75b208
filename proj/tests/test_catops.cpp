#include <doctest.h>

#include "singext/abgrp/morphism.hpp"
#include "singext/catops/additive.hpp"
#include "singext/catops/arrow.hpp"
#include "singext/catops/bifunctor.hpp"
#include "singext/catops/ideal.hpp"
#include "singext/catops/karoubi.hpp"
#include "singext/catops/semidirect.hpp"
#include "singext/errors.hpp"
#include "singext/prescat/presented_category.hpp"

#include <random>

using namespace singext;
using namespace singext::catops;
using abgrp::Int;
using abgrp::IntVec;

namespace {

// F(Z/4) as the additive completion of the one-object category with End = Z/4.
struct Fixture {
  prescat::PresentedCategory F4 = prescat::compute_category(prescat::builtin("F4"));
  AdditiveCompletion A{F4, true};
  Obj s = F4.object("*");

  Obj sum(std::size_t n) const { return A.power(s, n); }
  Mor scalar(long k) const { return F4.hom(s, s).scale(Int(k), F4.identity(s)); }
  // matrix with rows indexed by the target
  Mor mat(std::size_t n, std::size_t m, const std::vector<std::vector<long>>& rows) const {
    std::vector<std::vector<Mor>> e(m, std::vector<Mor>(n));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        e[i][j] = scalar(rows[i][j]);
    return A.from_entries(sum(n), sum(m), e);
  }
};

} // namespace

TEST_CASE("additive completion: hom groups and biproduct identities") {
  Fixture fx;
  const auto& A = fx.A;
  CHECK(A.hom(fx.sum(2), fx.sum(3)).describe() == "Z/4+Z/4+Z/4+Z/4+Z/4+Z/4");
  CHECK(A.hom(fx.sum(0), fx.sum(2)).trivial());
  const auto win = A.window(2);
  CHECK(win.size() == 3);
  for (const auto& a : win)
    for (const auto& b : win) {
      const Biproduct B = A.direct_sum(a, b);
      CHECK(A.compose(a, B.sum, a, B.r1, B.i1) == A.identity(a));
      CHECK(A.compose(b, B.sum, b, B.r2, B.i2) == A.identity(b));
      CHECK(A.hom(a, b).is_zero(A.compose(a, B.sum, b, B.r2, B.i1)));
      CHECK(A.hom(b, a).is_zero(A.compose(b, B.sum, a, B.r1, B.i2)));
      const auto H = A.hom(B.sum, B.sum);
      CHECK(H.add(A.compose(B.sum, a, B.sum, B.i1, B.r1), A.compose(B.sum, b, B.sum, B.i2, B.r2)) ==
            A.identity(B.sum));
    }
}

TEST_CASE("arrow category of F(Z/4)") {
  Fixture fx;
  const ArrowCategory AC(fx.A);
  const Obj two = AC.arrow(fx.sum(1), fx.sum(1), fx.mat(1, 1, {{2}}));
  const Obj one = AC.arrow(fx.sum(1), fx.sum(1), fx.mat(1, 1, {{1}}));
  CHECK(AC.hom(two, two).describe() == "Z/2+Z/4");
  CHECK(AC.hom(one, one).describe() == "Z/4");
  CHECK(AC.commutes(two, two, fx.mat(1, 1, {{3}}), fx.mat(1, 1, {{1}})));
  CHECK(!AC.commutes(one, one, fx.mat(1, 1, {{1}}), fx.mat(1, 1, {{2}})));
  const Obj m = AC.translate(two);
  CHECK(AC.morphism(m) == fx.A.hom(fx.sum(1), fx.sum(1)).neg(AC.morphism(two)));
}

TEST_CASE("Toda bifunctor satisfies the bifunctor and tau laws") {
  Fixture fx;
  const ArrowCategory AC(fx.A);
  const TodaBifunctor Y(AC);
  const auto win = AC.window(2);
  const auto laws = check_bifunctor(Y, win);
  CHECK(laws.ok());
  CHECK(laws.checks > 0);
  CHECK(check_tau_naturality(Y, win).ok());
  const Obj two = AC.arrow(fx.sum(1), fx.sum(1), fx.mat(1, 1, {{2}}));
  CHECK(Y.value(two, two).describe() == "Z/2");
  const HomBifunctor Hm(AC);
  CHECK(check_bifunctor(Hm, win).ok());
}

TEST_CASE("ideals, quotients and reflection of isomorphisms") {
  Fixture fx;
  const auto& A = fx.A;
  const auto win = A.window(2);
  const IdealData I = multiple_ideal(A, 2);
  CHECK(check_ideal(I, win).ok());
  CHECK(vanishes(ideal_product(I, I, 2), win));
  CHECK(!vanishes(I, win));
  CHECK(vanishes(zero_ideal(A), win));
  const QuotientCategory Q(A, I);
  CHECK(Q.hom(fx.sum(1), fx.sum(1)).describe() == "Z/2");
  CHECK(kernel_recovers_ideal(Q, win));
  const auto rep = check_reflects_isomorphisms(Q, win);
  CHECK(rep.failures.empty());
  CHECK(rep.morphisms > 0);
}

TEST_CASE("idempotents lift exactly along a square-zero quotient") {
  Fixture fx;
  const auto& A = fx.A;
  const QuotientCategory Q(A, multiple_ideal(A, 2));
  const Obj a = fx.sum(2);
  const Mor f = Q.apply(a, a, fx.mat(2, 2, {{3, 1}, {2, 0}}));
  CHECK(is_idempotent(Q, a, f));
  CHECK(!is_idempotent(A, a, fx.mat(2, 2, {{3, 1}, {2, 0}})));
  const Mor e = lift_idempotent(Q, a, f, 2);
  CHECK(is_idempotent(A, a, e));
  CHECK(Q.apply(a, a, e) == f);
  // exhaustive over all idempotents of Q on s + s
  std::size_t lifted = 0;
  for (const auto& g : abgrp::enumerate_elements(Q.hom(a, a)))
    if (is_idempotent(Q, a, g)) {
      const Mor h = lift_idempotent(Q, a, g, 2);
      CHECK(is_idempotent(A, a, h));
      CHECK(Q.apply(a, a, h) == g);
      ++lifted;
    }
  CHECK(lifted == 8); // idempotent 2x2 matrices over F2
  CHECK_THROWS_AS(lift_idempotent(Q, a, Q.apply(a, a, fx.mat(2, 2, {{0, 1}, {0, 0}})), 2), ContractViolation);
}

TEST_CASE("semidirect product composition law") {
  Fixture fx;
  const auto& A = fx.A;
  const HomBifunctor D(A);
  const SemidirectProduct S(A, D);
  const Obj x = fx.sum(1), y = fx.sum(2), z = fx.sum(1);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d4(0, 3);
  auto rnd = [&](std::size_t n, std::size_t m) {
    std::vector<std::vector<long>> r(m, std::vector<long>(n));
    for (auto& row : r)
      for (auto& v : row)
        v = d4(rng);
    return fx.mat(n, m, r);
  };
  for (int trial = 0; trial < 20; ++trial) {
    const Mor g = rnd(1, 2), b = rnd(1, 2), f = rnd(2, 1), a = rnd(2, 1);
    const Mor fa = S.pair(y, z, f, a), gb = S.pair(x, y, g, b);
    const auto [fg, c] = S.components(x, z, S.compose(x, y, z, fa, gb));
    CHECK(fg == A.compose(x, y, z, f, g));
    const auto H = A.hom(x, z);
    CHECK(c == H.add(A.compose(x, y, z, f, b), A.compose(x, y, z, a, g)));
  }
  const SemidirectProjection P(S);
  const SemidirectSection Sec(S);
  const Mor f = rnd(2, 1);
  CHECK(P.apply(y, z, Sec.apply(y, z, f)) == f);
}

TEST_CASE("cross-effects: zero for additive functors, nonzero for a tensor square") {
  Fixture fx;
  const CovariantHom h(fx.A, fx.sum(1));
  CHECK(cross_effect2(fx.A, h, fx.sum(1), fx.sum(1)).group.trivial());
  CHECK(cross_effect2(fx.A, h, fx.sum(2), fx.sum(1)).group.trivial());
  const TensorSquare sq(h);
  CHECK(cross_effect2(fx.A, sq, fx.sum(1), fx.sum(1)).group.describe() == "Z/4+Z/4");
}

TEST_CASE("Karoubi envelope: split idempotents and splittings") {
  Fixture fx;
  const auto& A = fx.A;
  const KaroubiEnvelope K(A);
  const auto base = A.window(2);
  for (const auto& x : K.window(2))
    CHECK(karoubi_iso_to_image(K, x, base).has_value());
  const Obj a = fx.sum(2);
  const Mor e = fx.mat(2, 2, {{1, 1}, {0, 0}});
  const auto sp = find_splitting(A, a, e, base);
  REQUIRE(sp.has_value());
  CHECK(A.rank(sp->object) == 1);
  CHECK(A.compose(sp->object, a, sp->object, sp->retraction, sp->section) == A.identity(sp->object));
  CHECK(A.compose(a, sp->object, a, sp->section, sp->retraction) == e);
  const Obj ke = K.object(a, e);
  CHECK(K.hom(ke, ke).describe() == "Z/4");
  CHECK_THROWS_AS(K.object(a, fx.mat(2, 2, {{2, 0}, {0, 1}})), ContractViolation);
}

TEST_CASE("idempotents of arrows split through split components") {
  Fixture fx;
  const auto& A = fx.A;
  const ArrowCategory AC(A);
  const Obj a = fx.sum(2);
  const Obj f = AC.arrow(a, a, fx.mat(2, 2, {{1, 0}, {0, 2}}));
  const Mor p = fx.mat(2, 2, {{1, 0}, {0, 0}});
  const auto sa = find_splitting(A, a, p, A.window(2));
  REQUIRE(sa.has_value());
  const auto out = split_arrow_idempotent(AC, f, p, p, *sa, *sa);
  CHECK(A.rank(ArrowCategory::source(out.g)) == 1);
  CHECK(AC.morphism(out.g) == fx.mat(1, 1, {{1}}));
}

TEST_CASE("rho: hom sets of quintuples agree in both envelopes") {
  Fixture fx;
  const auto& A = fx.A;
  const KaroubiEnvelope KC(A);
  const ArrowCategory AKC(KC);
  const ArrowCategory AC(A);
  const KaroubiEnvelope KA(AC);
  const Obj a = fx.sum(2);
  const Mor e1 = fx.mat(2, 2, {{1, 0}, {0, 0}}), e2 = fx.mat(2, 2, {{1, 1}, {0, 0}}), id = A.identity(a);
  const Mor f = A.compose(a, a, a, e2, A.compose(a, a, a, fx.mat(2, 2, {{2, 1}, {3, 2}}), e1));
  const Obj x = rho_embed(KA, AC, a, e1, a, e2, f);
  const Obj y = rho_embed(KA, AC, a, id, a, e1, fx.mat(2, 2, {{2, 0}, {0, 0}}));
  CHECK(rho_hom_agrees(KC, AKC, KA, AC, x, y));
  CHECK(rho_hom_agrees(KC, AKC, KA, AC, y, x));
  CHECK(rho_hom_agrees(KC, AKC, KA, AC, x, x));
  CHECK_THROWS_AS(rho_embed(KA, AC, a, e1, a, e2, id), ContractViolation);
}
