#include <doctest.h>

#include "singext/abgrp/morphism.hpp"
#include "singext/abgrp/smith.hpp"
#include "singext/errors.hpp"
#include "singext/prescat/functor.hpp"
#include "singext/prescat/presented_category.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace singext;
using namespace singext::prescat;
using abgrp::Int;
using abgrp::IntMatrix;
using abgrp::IntVec;

namespace {

// Quiver of Muro's R typed in by hand: (name, source, target).
struct QArrow {
  const char* name;
  char src, dst;
};
const QArrow kArrows[] = {{"delta", 'd', 't'}, {"xi", 't', 'd'},  {"phi", 't', 'i'},
                          {"gamma", 'i', 't'}, {"eta", 't', 'c'}, {"sigma", 'c', 't'}};

// Paths in written order (last applied first), with endpoints.
struct OPath {
  std::vector<std::string> names;
  char src, dst;
};

std::vector<OPath> paths_upto(std::size_t L) {
  std::vector<OPath> out;
  for (char o : std::string("dcit"))
    out.push_back({{}, o, o});
  std::vector<OPath> frontier = out;
  for (std::size_t len = 1; len <= L; ++len) {
    std::vector<OPath> next;
    for (const auto& p : frontier)
      for (const auto& a : kArrows)
        if (a.src == p.dst) {
          OPath q = p;
          q.names.insert(q.names.begin(), a.name);
          q.dst = a.dst;
          next.push_back(q);
        }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// A relation term as (coefficient, written path, source, target).
struct ORel {
  std::vector<std::pair<long, std::vector<std::string>>> terms;
  char src, dst;
};

std::vector<ORel> muro_relations() {
  return {
      {{{2, {"delta", "xi"}}}, 't', 't'},
      {{{2, {"sigma", "eta"}}}, 't', 't'},
      {{{1, {"eta", "delta"}}}, 'd', 'c'},
      {{{1, {"phi", "sigma"}}}, 'c', 'i'},
      {{{1, {"xi", "gamma"}}}, 'i', 'd'},
      {{{1, {"xi", "delta"}}, {-2, {}}}, 'd', 'd'},
      {{{1, {"eta", "sigma"}}, {-2, {}}}, 'c', 'c'},
      {{{1, {"phi", "gamma"}}, {-2, {}}}, 'i', 'i'},
      {{{1, {"gamma", "phi"}}, {-1, {"delta", "xi"}}, {-1, {"sigma", "eta"}}}, 't', 't'},
  };
}

// End(t) of R computed from scratch: paths t -> t of length <= L modulo
// 4 * path and every p r q of length <= L, restricted to the subgroup
// generated by paths of length <= S.
struct Oracle {
  std::vector<std::vector<std::string>> basis; // paths t -> t
  abgrp::PresentedGroup quotient;
  abgrp::Subgroup shortpart;

  std::size_t index(const std::vector<std::string>& p) const {
    return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), p) - basis.begin());
  }
  IntVec element(const std::vector<std::string>& p) const {
    IntVec v(basis.size());
    v[index(p)] = 1;
    return quotient.element(v);
  }
};

Oracle endt_oracle(std::size_t L, std::size_t S) {
  Oracle o;
  const auto all = paths_upto(L);
  for (const auto& p : all)
    if (p.src == 't' && p.dst == 't')
      o.basis.push_back(p.names);
  const std::size_t n = o.basis.size();
  std::vector<IntVec> rels;
  for (std::size_t k = 0; k < n; ++k) {
    IntVec v(n);
    v[k] = 4;
    rels.push_back(v);
  }
  for (const auto& r : muro_relations())
    for (const auto& pre : all) // applied after r: r.dst -> t
      for (const auto& post : all) { // applied before r: t -> r.src
        if (pre.src != r.dst || pre.dst != 't' || post.src != 't' || post.dst != r.src)
          continue;
        IntVec v(n);
        bool fits = true;
        for (const auto& [c, path] : r.terms) {
          std::vector<std::string> w = pre.names;
          w.insert(w.end(), path.begin(), path.end());
          w.insert(w.end(), post.names.begin(), post.names.end());
          if (w.size() > L) {
            fits = false;
            break;
          }
          v[o.index(w)] += c;
        }
        if (fits)
          rels.push_back(v);
      }
  // dense Smith form of the full relation matrix
  IntMatrix M = IntMatrix::from_rows(rels, n);
  const auto snf = abgrp::smith_normal_form(M);
  CHECK(snf.U * M * snf.V == snf.D);
  o.quotient = abgrp::group_from_presentation(M);
  std::vector<IntVec> gens;
  for (const auto& p : o.basis)
    if (p.size() <= S)
      gens.push_back(o.element(p));
  o.shortpart = abgrp::subgroup_generated(o.quotient.group, gens);
  return o;
}

} // namespace

TEST_CASE("presentation json round trip is bit exact") {
  for (const auto& name : builtin_names()) {
    const auto P = builtin(name);
    const std::string text = serialize_presentation(P);
    const auto Q = parse_presentation(text);
    CHECK(Q == P);
    CHECK(serialize_presentation(Q) == text);
  }
}

TEST_CASE("malformed presentations are rejected") {
  CHECK_THROWS_AS(parse_presentation("{"), InvalidInput);
  CHECK_THROWS_AS(parse_presentation(R"({"objects":["x"],"arrows":[{"name":"a","src":"x","dst":"y"}],"relations":[]})")
                      .validate(),
                  InvalidInput);
  auto P = builtin("R");
  P.relations.push_back({{Int(1), {"delta", "delta"}}});
  CHECK_THROWS_AS(P.validate(), InvalidInput);
  CHECK_THROWS_AS(builtin("S"), InvalidInput);
}

TEST_CASE("hom groups of R") {
  const auto R = compute_category(builtin("R"));
  CHECK(R.truncation_used() <= 6);
  const std::map<std::string, std::string> zero = {{"d", "c"}, {"c", "i"}, {"i", "d"}};
  for (const std::string x : {"d", "c", "i", "t"})
    for (const std::string y : {"d", "c", "i", "t"}) {
      const auto g = R.hom(R.object(x), R.object(y)).describe();
      if (zero.count(x) && zero.at(x) == y)
        CHECK(g == "0");
      else if (x == "t" && y == "t")
        CHECK(g == "Z/2+Z/2+Z/4");
      else
        CHECK(g == "Z/4");
    }
}

TEST_CASE("End_R(t) against a brute-force path oracle") {
  const Oracle o = endt_oracle(6, 3);
  CHECK(o.shortpart.group.describe() == "Z/2+Z/2+Z/4");
  CHECK(o.shortpart.group.order() == 16);
  const auto& G = o.quotient.group;
  const IntVec gp = o.element({"gamma", "phi"}), dx = o.element({"delta", "xi"}), se = o.element({"sigma", "eta"});
  CHECK(G.element_order(gp) == 2);
  CHECK(G.element_order(dx) == 2);
  CHECK(G.element_order(se) == 2);
  CHECK(G.element_order(o.element({})) == 4);
  CHECK(G.is_zero(G.sub(gp, G.add(dx, se))));
  CHECK(!G.is_zero(G.sub(dx, se)));

  const auto R = compute_category(builtin("R"));
  const Obj t = R.object("t");
  CHECK(R.hom(t, t) == o.shortpart.group);
  CHECK(R.hom(t, t).element_order(R.path_element({"gamma", "phi"})) == 2);
  CHECK(R.path_element({"gamma", "phi"}) ==
        R.hom(t, t).add(R.path_element({"delta", "xi"}), R.path_element({"sigma", "eta"})));
}

TEST_CASE("R1 and R2 differ from R where expected") {
  const auto R1 = compute_category(builtin("R1")), R2 = compute_category(builtin("R2"));
  CHECK(R1.truncation_used() <= 6);
  CHECK(R2.truncation_used() <= 6);
  CHECK(R1.hom(R1.object("t"), R1.object("d")).describe() == "Z/2");
  CHECK(R2.hom(R2.object("t"), R2.object("t")).order() == 8);
  CHECK(R1.hom(R1.object("t"), R1.object("t")).order() == 16);
  CHECK(R2.hom(R2.object("c"), R2.object("d")).describe() == "0");
}

TEST_CASE("composition is bilinear and associative on generators") {
  const auto R = compute_category(builtin("R"));
  const auto objs = R.objects();
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& c : objs) {
        const auto Hab = R.hom(a, b), Hbc = R.hom(b, c), Hac = R.hom(a, c);
        for (std::size_t i = 0; i < Hab.ngens(); ++i)
          for (std::size_t j = 0; j < Hbc.ngens(); ++j) {
            const auto f = Hab.gen(i), g = Hbc.gen(j);
            CHECK(R.compose(a, b, c, g, Hab.add(f, f)) == Hac.add(R.compose(a, b, c, g, f), R.compose(a, b, c, g, f)));
            for (const auto& d : objs) {
              const auto Hcd = R.hom(c, d);
              for (std::size_t k = 0; k < Hcd.ngens(); ++k) {
                const auto h = Hcd.gen(k);
                CHECK(R.compose(a, c, d, h, R.compose(a, b, c, g, f)) ==
                      R.compose(a, b, d, R.compose(b, c, d, h, g), f));
              }
            }
          }
      }
}

TEST_CASE("hom normal forms do not depend on presentation order") {
  const auto P = builtin("R");
  const auto R = compute_category(P);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    auto Q = P;
    std::shuffle(Q.arrows.begin(), Q.arrows.end(), rng);
    std::shuffle(Q.relations.begin(), Q.relations.end(), rng);
    const auto S = compute_category(Q);
    for (const auto& x : P.objects)
      for (const auto& y : P.objects)
        CHECK(S.hom(S.object(x), S.object(y)) == R.hom(R.object(x), R.object(y)));
  }
}

TEST_CASE("F4 and global torsion") {
  const auto F = compute_category(builtin("F4"));
  const Obj s = F.object("*");
  CHECK(F.hom(s, s).describe() == "Z/4");
  auto P = builtin("F4");
  P.torsion = 8;
  CHECK(compute_category(P).hom(s, s).describe() == "Z/8");
}

TEST_CASE("no stabilization is reported, not guessed") {
  QuiverPresentation P;
  P.objects = {"x"};
  P.arrows = {{"a", "x", "x"}};
  P.torsion = 2;
  CHECK_THROWS_AS(compute_category(P, 5), NoStabilization);
}

TEST_CASE("functor checks accept the quotient functors and reject a wrong assignment") {
  const auto R = compute_category(builtin("R")), R2 = compute_category(builtin("R2"));
  const auto q = quotient_functor(builtin("R"), R2);
  CHECK(check_functor(q, R, R2));
  auto bad = q;
  std::swap(bad.arrow_map.at("delta"), bad.arrow_map.at("gamma"));
  bad.arrow_map.at("delta") = R2.arrow_element("delta");
  bad.arrow_map.at("gamma") = R2.hom(R2.object("i"), R2.object("t")).scale(Int(2), R2.arrow_element("gamma"));
  CHECK(!check_functor(bad, R, R2));
}

TEST_CASE("section search: no section of R1 -> R2 nor of R -> R2") {
  const auto R = compute_category(builtin("R")), R1 = compute_category(builtin("R1")),
             R2 = compute_category(builtin("R2"));
  const auto p = section_search(quotient_functor(builtin("R1"), R2), R1, R2);
  CHECK(!p.found);
  CHECK(p.candidates_checked == p.space_size);
  const auto q = section_search(quotient_functor(builtin("R"), R2), R, R2);
  CHECK(!q.found);
  CHECK(q.candidates_checked == q.space_size);
  // identity of R2 has a section
  const auto id = section_search(quotient_functor(builtin("R2"), R2), R2, R2);
  CHECK(id.found);
}

TEST_CASE("Hom_R(t,d) -> Hom_R2(t,d) has no additive section") {
  const auto R = compute_category(builtin("R")), R2 = compute_category(builtin("R2"));
  const auto q = PresentedFunctor(R, R2, quotient_functor(builtin("R"), R2));
  const auto m = q.on_hom(R.object("t"), R.object("d"));
  CHECK(m.source.describe() == "Z/4");
  CHECK(m.target.describe() == "Z/2");
  CHECK(abgrp::is_surjective(m));
  // a section would send the generator of Z/2 to an element of order <= 2 mapping onto it
  std::size_t sections = 0;
  for (const auto& x : abgrp::enumerate_elements(m.source))
    if (m.source.element_order(x) <= 2 && m.apply(x) == m.target.gen(0))
      ++sections;
  CHECK(sections == 0);
}
