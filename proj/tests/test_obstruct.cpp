#include <doctest.h>

#include "singext/abgrp/morphism.hpp"
#include "singext/catops/additive.hpp"
#include "singext/catops/ideal.hpp"
#include "singext/obstruct/k0.hpp"
#include "singext/obstruct/massey.hpp"
#include "singext/obstruct/verify.hpp"
#include "singext/parallel.hpp"

#include <nlohmann/json.hpp>

using namespace singext;
using namespace singext::obstruct;
using muro::Z4Mat;

namespace {

Z4Mat m1(int v) { return Z4Mat(1, 1, {v}); }

prescat::PresentedCategory cyclic_ring(long n) {
  auto P = prescat::builtin("F4");
  P.torsion = n;
  return prescat::compute_category(P);
}

class ZeroFunctor : public Functor {
public:
  ZeroFunctor(const Preadditive& src, const Preadditive& dst) : src_(src), dst_(dst) {}
  Obj on_object(const Obj& a) const override { return a; }
  GroupMor on_hom(const Obj& a, const Obj& b) const override {
    return GroupMor::zero(src_.hom(a, b), dst_.hom(a, b));
  }

private:
  const Preadditive& src_;
  const Preadditive& dst_;
};

// Identity of Theta except at one pair, where it is zero.
class PuncturedIdentity : public catops::Transformation {
public:
  PuncturedIdentity(const catops::Bifunctor& D, Obj a, Obj b) : D_(D), a_(std::move(a)), b_(std::move(b)) {}
  const catops::Bifunctor& source() const override { return D_; }
  const catops::Bifunctor& target() const override { return D_; }
  GroupMor component(const Obj& a, const Obj& b) const override {
    const FinAbGroup G = D_.value(a, b);
    return a == a_ && b == b_ ? GroupMor::zero(G, G) : GroupMor::identity(G);
  }

private:
  const catops::Bifunctor& D_;
  Obj a_, b_;
};

} // namespace

TEST_CASE("F(Z/4) -> F(Z/2) is a singular extension") {
  const auto F4 = cyclic_ring(4);
  const catops::AdditiveCompletion A(F4);
  const catops::QuotientCategory Q(A, catops::multiple_ideal(A, 2));
  const auto E = make_extension(A, Q, Q, A.window(2));
  CHECK(E.checks > 0);
  const Obj s = A.power(F4.object("*"), 1);
  CHECK(E.kernels.at({s, s}).group.describe() == "Z/2");
}

TEST_CASE("F(Z/8) -> F(Z/2) has a kernel that is not square zero") {
  const auto F8 = cyclic_ring(8);
  const catops::AdditiveCompletion A(F8);
  const catops::QuotientCategory Q(A, catops::multiple_ideal(A, 2));
  CHECK_THROWS_AS(make_extension(A, Q, Q, A.window(1)), KernelNotSquareZero);
}

TEST_CASE("a non-surjective projection is rejected") {
  const auto F4 = cyclic_ring(4);
  const catops::AdditiveCompletion A(F4);
  const catops::QuotientCategory Q(A, catops::multiple_ideal(A, 2));
  const ZeroFunctor Z(A, Q);
  CHECK_THROWS_AS(make_extension(A, Q, Z, A.window(1)), ProjectionNotSurjective);
}

TEST_CASE("the Triangles0 extension and its Karoubization") {
  const MuroSetup S;
  CHECK(S.extension.checks > 0);
  CHECK(S.extension.window.size() == S.T.window(2).size());
  CHECK(karoubized_extension(S, 1).ok());
}

TEST_CASE("equivalences F(R) -> Triangles0 and F(R2) -> arrow category") {
  const MuroSetup S;
  const auto R = prescat::compute_category(prescat::builtin("R"));
  const auto R2 = prescat::compute_category(prescat::builtin("R2"));
  CHECK(prescat::check_functor(S.equivalence_R(), R, S.T));
  CHECK(prescat::check_functor(S.equivalence_R2(), R2, S.AC));
  const prescat::PresentedFunctor FR(R, S.T, S.equivalence_R());
  for (const auto& a : R.objects())
    for (const auto& b : R.objects())
      CHECK(abgrp::is_isomorphism(FR.on_hom(a, b)));
  // a wrong assignment of xi breaks a relation
  auto bad = S.equivalence_R();
  const Obj t = muro::muro_object("t"), d = muro::muro_object("d");
  bad.arrow_map.at("xi") = S.T.zero(t, d);
  CHECK(!prescat::check_functor(bad, R, S.T));
}

TEST_CASE("pushforward along the cokernel of theta realizes R1") {
  const MuroSetup S;
  const CokernelBifunctor Q(S.theta);
  const CokernelProjection q(Q, S.Th);
  const auto P = pushforward(S.extension, q);
  const auto R1 = prescat::compute_category(prescat::builtin("R1"));
  for (const std::string a : {"d", "c", "i", "t"})
    for (const std::string b : {"d", "c", "i", "t"})
      CHECK(P->total->hom(muro::muro_object(a), muro::muro_object(b)) == R1.hom(R1.object(a), R1.object(b)));
  const PuncturedIdentity broken(S.Th, muro::muro_object("t"), muro::muro_object("t"));
  CHECK_THROWS_AS(pushforward(S.extension, broken), NonNaturalTransformation);
}

TEST_CASE("pushforward verdicts") {
  const MuroSetup S;
  const auto base = S.r2_realization(prescat::builtin("R2"));
  const auto rep = is_pushforward_along(S.extension, S.theta, base);
  CHECK(rep.verdict == PushforwardVerdict::NotPushforward);
  CHECK(!rep.certificate.found);
  CHECK(rep.certificate.candidates_checked == rep.certificate.space_size);
  CHECK(rep.cokernel_table.size() == 1);
  const IdentityTransformation id(S.Th);
  CHECK(is_pushforward_along(S.extension, id, base).verdict == PushforwardVerdict::NecessaryConditionPassed);
  CHECK(to_string(PushforwardVerdict::NotPushforward) == "NOT-PUSHFORWARD");
}

TEST_CASE("Massey product {2,2,2}") {
  const MuroSetup S;
  const auto m = massey(S.extension, S.theta, m1(2), m1(2), m1(2));
  CHECK(m.readable);
  CHECK(m.exhaustive);
  CHECK(m.independent);
  CHECK(m.lift_pairs == 4);
  REQUIRE(m.coset.size() == 2);
  // oracle: hom(Z/4, Z/4) modulo 2 hom + hom 2 is {1, 3} around the identity
  CHECK(m.ambient.describe() == "Z/4");
  std::set<int> residues;
  for (const auto& c : m.coset)
    residues.insert(static_cast<int>(c.at(0)));
  CHECK(residues == std::set<int>{1, 3});
  CHECK(m.contains(S.F.identity(muro::Z4Free::object(1))));
  CHECK_THROWS_AS(massey(S.extension, S.theta, m1(1), m1(2), m1(2)), CompositeNotZero);
  CHECK(massey_condition(S.extension, S.theta, S.T, m1(2)));
  CHECK(massey_condition(S.extension, S.theta, S.T, Z4Mat::parse("[[1,0],[0,2]]")));
}

TEST_CASE("Massey product under dominations") {
  const MuroSetup S;
  const ScaleTransformation neg(S.Th, -1);
  const auto P = pushforward(S.extension, neg);
  const ComposedTransformation read(S.theta, neg);
  const auto m = massey(P->data, read, m1(2), m1(2), m1(2));
  CHECK(m.readable);
  CHECK(m.independent);
  CHECK(m.coset.size() == 2);
  // the R1 pushforward kills Theta(c,d) and cannot read the product
  const CokernelBifunctor Q(S.theta);
  const CokernelProjection q(Q, S.Th);
  const auto P1 = pushforward(S.extension, q);
  const ComposedTransformation read1(S.theta, q);
  CHECK(!massey(P1->data, read1, m1(2), m1(2), m1(2)).readable);
}

TEST_CASE("K0 vanishes at rank bound 2") {
  const muro::Triangles0 T;
  const auto k = k0_muro(T, 2);
  CHECK(k.group.trivial());
  CHECK(k.generators.size() == 3);
  CHECK(k.excising_found > 0);
  // oracle: the relation lattice spans Z^3
  abgrp::Lattice L(3);
  for (const auto& v : k.relation_vectors)
    L.add(v);
  for (std::size_t i = 0; i < 3; ++i) {
    IntVec e(3);
    e[i] = 1;
    CHECK(L.contains(e));
  }
  CHECK_THROWS_AS(k0_muro(T, 2, 64, 1, 256, 10), BudgetExceeded);
}

TEST_CASE("ring isomorphism for End_R(t)") {
  const auto R = prescat::compute_category(prescat::builtin("R"));
  const auto iso = endt_ring_iso(R);
  REQUIRE(iso.has_value());
  CHECK(iso->size() == R.hom(R.object("t"), R.object("t")).ngens());
  const auto R2 = prescat::compute_category(prescat::builtin("R2"));
  CHECK(!endt_ring_iso(R2).has_value());
}

TEST_CASE("verify_muro passes and its controls fail where expected") {
  const auto r = verify_muro();
  CHECK(r.pass());
  CHECK(r.steps.size() == 6);
  VerifyOptions o;
  o.control = MuroControl::IdentityTheta;
  const auto c = verify_muro(o);
  CHECK(!c.pass());
  CHECK(!c.steps[5].pass());
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(c.steps[i].pass());
  o.control = MuroControl::DropR2Relation;
  const auto d = verify_muro(o);
  CHECK(!d.pass());
  CHECK(!d.steps[0].pass());
}

TEST_CASE("machine report is valid json and thread independent") {
  const std::size_t before = thread_count();
  set_thread_count(1);
  const std::string one = verify_muro().machine();
  set_thread_count(8);
  const std::string eight = verify_muro().machine();
  set_thread_count(before);
  CHECK(one == eight);
  const auto j = nlohmann::json::parse(one);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["steps"].size() == 6);
  for (const auto& s : j["steps"])
    for (const auto& c : s["checks"]) {
      CHECK(c.contains("id"));
      CHECK(c.contains("witness"));
      CHECK(c["verdict"] == "PASS");
    }
  CHECK(nlohmann::ordered_json::parse(one).dump(2) + "\n" == one);
}
