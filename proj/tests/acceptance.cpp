// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "singext/abgrp/smith.hpp"
#include "singext/catops/additive.hpp"
#include "singext/catops/ideal.hpp"
#include "singext/catops/karoubi.hpp"
#include "singext/obstruct/k0.hpp"
#include "singext/obstruct/massey.hpp"
#include "singext/obstruct/verify.hpp"
#include "singext/parallel.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace singext;
using namespace singext::obstruct;
using abgrp::Int;
using abgrp::IntMatrix;
using muro::Z4Mat;

namespace {

// Pinned limits, in seconds.
constexpr double kHomTableLimit = 10.0;
constexpr double kSectionLimit = 60.0;
constexpr double kVerifyLimit = 300.0;

constexpr std::size_t kSnfSamples = 1000;
constexpr std::size_t kDeterminismRuns = 5;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok)
      pass = false;
    notes.push_back((ok ? "ok   " : "FAIL ") + what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

const StepReport& step(const MuroReport& r, int n) { return r.steps.at(static_cast<std::size_t>(n - 1)); }

bool check_passed(const StepReport& s, const std::string& id) {
  for (const auto& c : s.checks)
    if (c.id == id)
      return c.verdict == "PASS";
  return false;
}

const CheckRecord* find_check(const StepReport& s, const std::string& prefix) {
  for (const auto& c : s.checks)
    if (c.statement.rfind(prefix, 0) == 0)
      return &c;
  return nullptr;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto R = prescat::compute_category(prescat::builtin("R"));
  const double dt = seconds_since(t0);
  const auto hom = [&](const char* x, const char* y) { return R.hom(R.object(x), R.object(y)).describe(); };
  for (const auto& [x, y] : {std::pair{"d", "c"}, {"c", "i"}, {"i", "d"}})
    o.require(hom(x, y) == "0", std::string("Hom_R(") + x + "," + y + ") = 0");
  for (const auto& [x, y] : {std::pair{"d", "i"}, {"d", "t"}, {"c", "d"}, {"c", "t"}, {"i", "c"}, {"i", "i"},
                             {"t", "d"}, {"t", "i"}, {"t", "c"}})
    o.require(hom(x, y) == "Z/4", std::string("Hom_R(") + x + "," + y + ") = Z/4");
  for (const char* x : {"d", "c"}) {
    const Obj a = R.object(x);
    const auto H = R.hom(a, a);
    // Z/4 as a ring: cyclic of order 4 generated by the unit
    o.require(H.describe() == "Z/4" && H.element_order(R.identity(a)) == 4,
              std::string("Hom_R(") + x + "," + x + ") = Z/4 as a ring");
  }
  o.require(dt < kHomTableLimit, "runtime " + fmt_seconds(dt) + " < 10 s");
  return o;
}

Outcome criterion2(const MuroReport& rep) {
  Outcome o;
  const auto R = prescat::compute_category(prescat::builtin("R"));
  const Obj t = R.object("t");
  const auto H = R.hom(t, t);
  const Mor gp = R.path_element({"gamma", "phi"}), dx = R.path_element({"delta", "xi"}),
            se = R.path_element({"sigma", "eta"});
  o.require(H.order() == 16, "order 16 (" + H.describe() + ")");
  o.require(H.element_order(R.identity(t)) == 4, "unital, id of additive order 4");
  o.require(H.element_order(gp) == 2 && H.element_order(dx) == 2 && H.element_order(se) == 2,
            "gamma.phi, delta.xi, sigma.eta have order 2");
  o.require(gp == H.add(dx, se), "gamma.phi = delta.xi + sigma.eta");
  o.require(endt_ring_iso(R).has_value(), "ring isomorphic to {(a,b,c) | a = b = c mod 2}");
  const CheckRecord* flag = find_check(step(rep, 1), "Hom_R(t,t) is isomorphic as a ring");
  o.require(flag && flag->witness.find("flagged") != std::string::npos &&
                flag->witness.find("order 8") != std::string::npos,
            "report flags the printed (mod 2) condition");
  return o;
}

Outcome criterion3(const MuroReport& rep) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto R = prescat::compute_category(prescat::builtin("R"));
  const auto R1 = prescat::compute_category(prescat::builtin("R1"));
  const auto R2 = prescat::compute_category(prescat::builtin("R2"));
  const auto p = prescat::section_search(prescat::quotient_functor(prescat::builtin("R1"), R2), R1, R2);
  const auto q = prescat::section_search(prescat::quotient_functor(prescat::builtin("R"), R2), R, R2);
  const double dt = seconds_since(t0);
  o.require(!p.found && p.candidates_checked == p.space_size,
            "p: R1 -> R2 NoSection, space " + p.space_size.str() + " exhausted");
  o.require(!q.found && q.candidates_checked == q.space_size,
            "q: R -> R2 NoSection, space " + q.space_size.str() + " exhausted");
  o.require(step(rep, 5).pass(), "verify-muro step 5");
  o.require(dt < kSectionLimit, "runtime " + fmt_seconds(dt) + " < 60 s");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const MuroSetup S;
  const std::vector<std::string> names = {"d", "c", "i", "t"};
  const auto up = [&](const std::string& x, const std::string& y) {
    return S.Y.value(muro::muro_object(x), muro::muro_object(y)).describe();
  };
  o.require(up("c", "d") == "Z/4", "Upsilon(c,d) = Z/4");
  o.require(up("t", "d") == "Z/2" && up("t", "t") == "Z/2" && up("c", "t") == "Z/2",
            "Upsilon(t,d) = Upsilon(t,t) = Upsilon(c,t) = Z/2");
  bool zeros = true, agree = true, iso = true;
  for (const auto& x : names)
    for (const auto& y : names) {
      const Obj X = muro::muro_object(x), Y = muro::muro_object(y);
      if (x == "i" || y == "i" || x == "d" || y == "c")
        zeros = zeros && up(x, y) == "0";
      agree = agree && S.Th.value(X, Y) == S.Y.value(X, Y);
      if (x != "t" || y != "t")
        iso = iso && abgrp::is_isomorphism(S.theta.component(X, Y));
    }
  o.require(zeros, "Upsilon(i,-) = Upsilon(-,i) = Upsilon(d,-) = Upsilon(-,c) = 0");
  o.require(agree, "Theta = Upsilon on all 16 pairs");
  const Obj t = muro::muro_object("t");
  o.require(S.theta.component(t, t).matrix.is_zero(), "theta(t,t) = 0");
  o.require(iso, "theta iso on every pair with a split argument");
  return o;
}

Outcome criterion5(const MuroReport& rep, double verify_seconds) {
  Outcome o;
  const auto& s6 = step(rep, 6);
  o.require(check_passed(s6, "6.1"), "is_pushforward_along = NOT-PUSHFORWARD");
  const std::string& w = s6.checks.at(0).witness;
  const auto cut = w.find("; coker");
  o.require(w.find("space 1, checked 1") != std::string::npos,
            "NoSection certificate for the R1 pushforward: " + w.substr(0, cut));
  o.require(rep.pass(), "verify-muro: 6/6 steps");
  o.require(verify_seconds < kVerifyLimit, "verify-muro runtime " + fmt_seconds(verify_seconds) + " < 300 s");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const muro::Triangles0 T;
  std::size_t pairs = 0;
  const auto rep = muro::square_zero_check(T, 2, &pairs);
  o.require(rep.ok(), std::to_string(muro::arrows_between(2).size()) + " middle arrows, " + std::to_string(pairs) +
                          " generator pairs, " + std::to_string(rep.failures.size()) + " violations");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const MuroSetup S;
  const Z4Mat two(1, 1, {2});
  const auto m = massey(S.extension, S.theta, two, two, two);
  std::string coset;
  for (const auto& c : m.coset)
    coset += " " + abgrp::to_string(c);
  o.require(m.readable && m.coset.size() == 2 && m.coset[0] == IntVec{1} && m.coset[1] == IntVec{3},
            "{2,2,2} = {1,3} in Z/4:" + coset);
  o.require(m.contains(S.F.identity(muro::Z4Free::object(1))), "contains id");
  o.require(m.exhaustive && m.independent, "same coset for all " + std::to_string(m.lift_pairs) + " lift pairs");

  // dominations (xi iso on split arguments) leave the product unchanged
  const ScaleTransformation neg(S.Th, -1);
  const auto Pn = pushforward(S.extension, neg);
  const ComposedTransformation read_neg(S.theta, neg);
  const auto mn = massey(Pn->data, read_neg, two, two, two);
  o.require(mn.readable && mn.coset == m.coset, "unchanged under the domination -1");

  // the clause as stated: pushforward to R1
  const CokernelBifunctor Q(S.theta);
  const CokernelProjection q(Q, S.Th);
  const auto P1 = pushforward(S.extension, q);
  const ComposedTransformation read1(S.theta, q);
  const auto m1 = massey(P1->data, read1, two, two, two);
  o.require(m1.readable && m1.coset == m.coset,
            std::string("stable across the R1 pushforward: ") +
                (m1.readable ? "readable" : "unreadable, Theta1(c,d) = 0 so q is not a domination"));

  std::size_t total = 0, held = 0;
  for (const auto& f : muro::arrows_between(2)) {
    ++total;
    held += massey_condition(S.extension, S.theta, S.T, muro::arrow_mat(f));
  }
  o.require(held == total, "massey_condition on " + std::to_string(held) + "/" + std::to_string(total) + " arrows");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const muro::Triangles0 T;
  for (std::size_t r : {2, 3}) {
    const auto k = k0_muro(T, r);
    o.require(k.group.trivial(), "rank bound " + std::to_string(r) + ": K0 = " + k.group.describe() + " from " +
                                     std::to_string(k.relations.size()) + " relations");
  }
  return o;
}

bool snf_ok(const IntMatrix& M) {
  const auto S = abgrp::smith_normal_form(M);
  if (S.U * M * S.V != S.D)
    return false;
  const Int du = S.U.determinant(), dv = S.V.determinant();
  if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
    return false;
  const auto d = S.diagonal();
  for (std::size_t i = 0; i < S.D.rows(); ++i)
    for (std::size_t j = 0; j < S.D.cols(); ++j)
      if (i != j && S.D(i, j) != 0)
        return false;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] < 0)
      return false;
    if (d[i] == 0 ? d[i + 1] != 0 : d[i + 1] % d[i] != 0)
      return false;
  }
  return true;
}

Outcome criterion9() {
  Outcome o;
  {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<long> entry(-50, 50);
    std::size_t good = 0;
    for (std::size_t k = 0; k < kSnfSamples; ++k) {
      IntMatrix M(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
      for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
          M(i, j) = Int(k % 3 == 0 ? entry(rng) % 3 : entry(rng));
      good += snf_ok(M);
    }
    o.require(good == kSnfSamples, "SNF U M V = D, unimodular, divisibility: " + std::to_string(good) + "/1000");
  }
  const muro::Triangles0 T;
  const auto win = T.window(2);
  {
    std::size_t bad = 0, n = 0;
    for (const auto& a : win)
      for (const auto& b : win) {
        const Biproduct B = T.direct_sum(a, b);
        const auto H = T.hom(B.sum, B.sum);
        ++n;
        if (T.compose(a, B.sum, a, B.r1, B.i1) != T.identity(a) || T.compose(b, B.sum, b, B.r2, B.i2) != T.identity(b) ||
            !T.hom(a, b).is_zero(T.compose(a, B.sum, b, B.r2, B.i1)) ||
            !T.hom(b, a).is_zero(T.compose(b, B.sum, a, B.r1, B.i2)) ||
            H.add(T.compose(B.sum, a, B.sum, B.i1, B.r1), T.compose(B.sum, b, B.sum, B.i2, B.r2)) !=
                T.identity(B.sum))
          ++bad;
      }
    o.require(bad == 0, "Triangles0 biproduct identities on " + std::to_string(n) + " pairs");
  }
  {
    std::size_t checks = 0, failures = 0;
    for (std::size_t x = 0; x <= 2; ++x) {
      const auto rep = muro::homology_check(T, x, win);
      checks += rep.checks;
      failures += rep.failures.size();
    }
    o.require(failures == 0, "homology Exactness and Excision for hom(^X!,-): " + std::to_string(checks) + " checks");
  }
  {
    std::size_t bad = 0, n = 0;
    for (const auto& f : muro::arrows_between(2)) {
      ++n;
      bad += !muro::is_acyclic(muro::cone(muro::arrow_mat(f)));
    }
    o.require(bad == 0, "acyclicity of " + std::to_string(n) + " cone outputs");
  }
  {
    std::size_t checks = 0, failures = 0;
    for (const auto& f : muro::arrows_between(2))
      for (std::size_t x = 0; x <= 2; ++x) {
        const auto rep = muro::conrep_check(T, f, x);
        checks += rep.checks;
        failures += rep.failures.size();
      }
    o.require(failures == 0, "conrep bijections elementwise: " + std::to_string(checks) + " checks");
  }
  const auto F4 = prescat::compute_category(prescat::builtin("F4"));
  const catops::AdditiveCompletion A(F4);
  const catops::QuotientCategory Q(A, catops::multiple_ideal(A, 2));
  {
    std::size_t n = 0, bad = 0;
    for (const auto& a : A.window(2))
      for (const auto& f : abgrp::enumerate_elements(Q.hom(a, a)))
        if (catops::is_idempotent(Q, a, f)) {
          ++n;
          const Mor e = catops::lift_idempotent(Q, a, f, 2);
          bad += !catops::is_idempotent(A, a, e) || Q.apply(a, a, e) != f;
        }
    o.require(bad == 0, "idempotent lifts exact: " + std::to_string(n) + " idempotents of F(Z/2)");
  }
  {
    const catops::KaroubiEnvelope K(A);
    const auto base = A.window(2);
    std::size_t n = 0, split = 0;
    for (const auto& x : K.window(2)) {
      ++n;
      split += catops::karoubi_iso_to_image(K, x, base).has_value();
    }
    const MuroSetup S;
    o.require(split == n && karoubized_extension(S, 1).ok(),
              "Karoubi split-idempotent criterion: " + std::to_string(split) + "/" + std::to_string(n));
  }
  {
    const auto rep = catops::check_reflects_isomorphisms(Q, A.window(2));
    const muro::Z4Free F;
    const catops::ArrowCategory AC(F);
    const MuroSetup S;
    // Triangles0 -> F(Z/4)^[1] is a quotient by the square-zero ideal Theta
    std::size_t n = 0, bad = 0;
    for (const auto& f : win)
      for (const auto& g : win) {
        if (f != g)
          continue;
        for (const auto& x : abgrp::enumerate_elements(T.hom(f, g), 1 << 12)) {
          ++n;
          bad += T.is_iso(f, g, x) != AC.is_iso(f, g, S.pi.apply(f, g, x));
        }
      }
    o.require(rep.failures.empty() && bad == 0, "quotients reflect isomorphisms: " + std::to_string(rep.morphisms) +
                                                    " in F(Z/4), " + std::to_string(n) + " in Triangles0");
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  const std::size_t before = thread_count();
  std::vector<std::string> runs;
  for (std::size_t k = 0; k < kDeterminismRuns; ++k) {
    set_thread_count(k % 2 == 0 ? 1 : 8);
    runs.push_back(verify_muro().machine());
  }
  set_thread_count(8);
  const std::string eight = verify_muro().machine();
  set_thread_count(1);
  const std::string one = verify_muro().machine();
  set_thread_count(before);
  bool same = true;
  for (const auto& r : runs)
    same = same && r == runs.front();
  o.require(same, std::to_string(kDeterminismRuns) + " runs byte-identical (" + std::to_string(runs.front().size()) +
                      " bytes)");
  o.require(one == eight && one == runs.front(), "1-thread and 8-thread reports byte-identical");
  return o;
}

} // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const MuroReport rep = verify_muro();
  const double verify_seconds = seconds_since(t0);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"hom-table reproduction", criterion1},
      {"End_R(t) brute force and flagged discrepancy", [&] { return criterion2(rep); }},
      {"section non-existence", [&] { return criterion3(rep); }},
      {"bifunctor tables", criterion4},
      {"obstruction verdict", [&] { return criterion5(rep, verify_seconds); }},
      {"square-zero kernel", criterion6},
      {"Massey product", criterion7},
      {"K0 vanishes", criterion8},
      {"property suites", criterion9},
      {"determinism", criterion10},
  };
  std::size_t failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << "\n";
    for (const auto& n : o.notes)
      std::cout << "       " << n << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
