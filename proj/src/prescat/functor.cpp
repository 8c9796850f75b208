#include "singext/prescat/functor.hpp"

#include "singext/errors.hpp"

namespace singext::prescat {

Mor evaluate_path(const FunctorData& F, const QuiverPresentation& src, const Preadditive& dst,
                  const std::vector<std::string>& path) {
  const auto [s, t] = src.path_ends(path);
  if (parse_identity(path.front()))
    return dst.identity(F.object_map.at(s));
  const Arrow& first = src.arrows[src.arrow_index(path.back())];
  Obj cur = F.object_map.at(first.src);
  Mor v = dst.identity(cur);
  for (std::size_t k = path.size(); k-- > 0;) {
    const Arrow& a = src.arrows[src.arrow_index(path[k])];
    const Obj nxt = F.object_map.at(a.dst);
    v = dst.compose(F.object_map.at(s), cur, nxt, F.arrow_map.at(a.name), v);
    cur = nxt;
  }
  return v;
}

Mor evaluate_relation(const FunctorData& F, const QuiverPresentation& src, const Preadditive& dst,
                      const Relation& r) {
  const auto [s, t] = src.path_ends(r.front().path);
  const FinAbGroup H = dst.hom(F.object_map.at(s), F.object_map.at(t));
  IntVec sum = H.zero();
  for (const auto& term : r)
    sum = H.add(sum, H.scale(term.coef, evaluate_path(F, src, dst, term.path)));
  return sum;
}

bool check_functor(const FunctorData& F, const QuiverPresentation& src, const Preadditive& dst) {
  for (const auto& o : src.objects)
    if (!F.object_map.count(o))
      return false;
  for (const auto& a : src.arrows) {
    auto it = F.arrow_map.find(a.name);
    if (it == F.arrow_map.end())
      return false;
    const FinAbGroup H = dst.hom(F.object_map.at(a.src), F.object_map.at(a.dst));
    if (it->second.size() != H.ngens())
      return false;
    if (src.torsion && !H.is_zero(H.scale(*src.torsion, it->second)))
      return false;
  }
  if (src.torsion)
    for (const auto& o : src.objects) {
      const Obj x = F.object_map.at(o);
      const FinAbGroup H = dst.hom(x, x);
      if (!H.is_zero(H.scale(*src.torsion, dst.identity(x))))
        return false;
    }
  for (const auto& r : src.relations) {
    const auto [s, t] = src.path_ends(r.front().path);
    if (!dst.hom(F.object_map.at(s), F.object_map.at(t)).is_zero(evaluate_relation(F, src, dst, r)))
      return false;
  }
  return true;
}

GroupMor PresentedFunctor::on_hom(const Obj& a, const Obj& b) const {
  const auto& P = src_.presentation();
  const std::size_t x = P.object_index(a.name), y = P.object_index(b.name);
  const FinAbGroup S = src_.hom(x, y);
  const FinAbGroup T = dst_.hom(on_object(a), on_object(b));
  IntMatrix m(T.ngens(), S.ngens());
  for (std::size_t k = 0; k < S.ngens(); ++k) {
    IntVec v = T.zero();
    for (const auto& [c, p] : src_.generator_lift(x, y, k)) {
      std::vector<std::string> names;
      if (p.arrows.empty())
        names.push_back(identity_name(P.objects[p.src]));
      for (auto ai : p.arrows)
        names.push_back(P.arrows[ai].name);
      v = T.add(v, T.scale(c, evaluate_path(F_, P, dst_, names)));
    }
    m.set_column(k, v);
  }
  return {S, T, std::move(m)};
}

QuotientPresentation quotient_presentation(const QuiverPresentation& P,
                                           const std::vector<Relation>& extra) {
  QuotientPresentation q{P, {}};
  for (const auto& r : extra)
    q.presentation.relations.push_back(r);
  try {
    q.presentation.validate();
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("malformed relation: ") + e.what());
  }
  for (const auto& o : P.objects)
    q.functor.object_map.emplace(o, Obj::named("obj", o));
  return q;
}

FunctorData quotient_functor(const QuiverPresentation& src, const PresentedCategory& dst) {
  FunctorData F;
  for (const auto& o : src.objects)
    F.object_map.emplace(o, dst.object(o));
  for (const auto& a : src.arrows)
    F.arrow_map.emplace(a.name, dst.arrow_element(a.name));
  return F;
}

SectionResult search_sections(const QuiverPresentation& base, const Preadditive& total,
                              const std::map<std::string, Obj>& objects,
                              const std::map<std::string, Coset>& cosets, Int budget) {
  SectionResult res;
  std::vector<std::vector<Mor>> choices;
  res.space_size = 1;
  for (const auto& a : base.arrows) {
    const Coset& c = cosets.at(a.name);
    const FinAbGroup H = total.hom(objects.at(a.src), objects.at(a.dst));
    const abgrp::Subgroup K = abgrp::subgroup_generated(H, c.kernel);
    std::vector<Mor> elems;
    for (const auto& k : abgrp::enumerate_elements(K.group))
      elems.push_back(H.add(c.representative, K.inclusion.apply(k)));
    res.coset_sizes.push_back(a.name + ":" + std::to_string(elems.size()));
    res.space_size *= elems.size();
    choices.push_back(std::move(elems));
  }
  if (res.space_size > budget)
    throw BudgetExceeded("section search space " + res.space_size.str() + " exceeds budget " +
                         budget.str());
  FunctorData F;
  F.object_map = objects;
  std::vector<std::size_t> idx(choices.size(), 0);
  if (res.space_size == 0)
    return res;
  for (;;) {
    for (std::size_t k = 0; k < choices.size(); ++k)
      F.arrow_map[base.arrows[k].name] = choices[k][idx[k]];
    ++res.candidates_checked;
    if (check_functor(F, base, total)) {
      res.found = true;
      res.section = F;
      return res;
    }
    std::size_t k = choices.size();
    while (k-- > 0) {
      if (++idx[k] < choices[k].size())
        break;
      idx[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1))
      return res;
  }
}

SectionResult section_search(const FunctorData& F, const PresentedCategory& src,
                             const PresentedCategory& dst, Int budget) {
  const PresentedFunctor PF(src, dst, F);
  const auto& B = dst.presentation();
  std::map<std::string, Obj> objects;
  for (const auto& o : B.objects) {
    const Obj so = src.object(o);
    if (!(PF.on_object(so) == dst.object(o)))
      throw InvalidInput("section_search needs an identity-on-objects functor");
    objects.emplace(o, so);
  }
  std::map<std::string, Coset> cosets;
  for (const auto& a : B.arrows) {
    const GroupMor h = PF.on_hom(objects.at(a.src), objects.at(a.dst));
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < h.source.ngens(); ++j)
      cols.push_back(h.matrix.column(j));
    auto z = abgrp::span_coefficients(h.target, cols, dst.arrow_element(a.name));
    if (!z)
      throw InvalidInput("functor is not full: arrow " + a.name + " has no preimage");
    cosets.emplace(a.name, Coset{h.source.reduce(*z), abgrp::kernel_generators(h)});
  }
  return search_sections(B, src, objects, cosets, budget);
}

} // namespace singext::prescat
