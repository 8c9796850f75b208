#include "singext/catops/ideal.hpp"

#include "singext/errors.hpp"

namespace singext::catops {

IdealData::IdealData(const CompCategory& owner, std::string label, Rule rule)
    : owner_(&owner), label_(std::move(label)), rule_(std::move(rule)),
      table_(std::make_shared<Memo<std::pair<Obj, Obj>, std::vector<Mor>>>()) {}

const std::vector<Mor>& IdealData::generators(const Obj& a, const Obj& b) const {
  return *table_->get({a, b}, [&] { return rule_(a, b); });
}

bool IdealData::contains(const Obj& a, const Obj& b, const Mor& f) const {
  return abgrp::in_span(owner_->hom(a, b), generators(a, b), f);
}

abgrp::Subgroup IdealData::subgroup(const Obj& a, const Obj& b) const {
  return abgrp::subgroup_generated(owner_->hom(a, b), generators(a, b));
}

IdealData zero_ideal(const CompCategory& C) {
  return {C, "0", [](const Obj&, const Obj&) { return std::vector<Mor>{}; }};
}

IdealData full_ideal(const CompCategory& C) {
  return {C, "hom", [&C](const Obj& a, const Obj& b) {
            const FinAbGroup H = C.hom(a, b);
            std::vector<Mor> g;
            for (std::size_t k = 0; k < H.ngens(); ++k)
              g.push_back(H.gen(k));
            return g;
          }};
}

IdealData multiple_ideal(const CompCategory& C, long n) {
  return {C, std::to_string(n) + "hom", [&C, n](const Obj& a, const Obj& b) {
            const FinAbGroup H = C.hom(a, b);
            std::vector<Mor> g;
            for (std::size_t k = 0; k < H.ngens(); ++k) {
              Mor x = H.scale(n, H.gen(k));
              if (!H.is_zero(x))
                g.push_back(std::move(x));
            }
            return g;
          }};
}

IdealData ideal_product(const IdealData& I, const IdealData& J, std::size_t rank_bound) {
  if (&I.owner() != &J.owner())
    throw ContractViolation("ideal product of ideals with different owners");
  const CompCategory& C = I.owner();
  return {C, I.label() + "*" + J.label(), [I, J, &C, rank_bound](const Obj& a, const Obj& b) {
            std::vector<Mor> out;
            const FinAbGroup H = C.hom(a, b);
            for (const auto& x : C.window(rank_bound))
              for (const auto& f : I.generators(x, b))
                for (const auto& g : J.generators(a, x)) {
                  Mor h = C.compose(a, x, b, f, g);
                  if (!H.is_zero(h))
                    out.push_back(std::move(h));
                }
            return out;
          }};
}

LawReport check_ideal(const IdealData& I, const std::vector<Obj>& window) {
  const CompCategory& C = I.owner();
  LawReport rep;
  for (const auto& a : window)
    for (const auto& b : window)
      for (const auto& f : I.generators(a, b)) {
        for (const auto& c : window) {
          const FinAbGroup Hbc = C.hom(b, c), Hca = C.hom(c, a);
          for (std::size_t k = 0; k < Hbc.ngens(); ++k) {
            ++rep.checks;
            if (!I.contains(a, c, C.compose(a, b, c, Hbc.gen(k), f)))
              rep.failures.push_back("not closed under post-composition at " + a.to_string());
          }
          for (std::size_t k = 0; k < Hca.ngens(); ++k) {
            ++rep.checks;
            if (!I.contains(c, b, C.compose(c, a, b, f, Hca.gen(k))))
              rep.failures.push_back("not closed under pre-composition at " + a.to_string());
          }
        }
      }
  return rep;
}

bool vanishes(const IdealData& I, const std::vector<Obj>& window) {
  for (const auto& a : window)
    for (const auto& b : window)
      for (const auto& f : I.generators(a, b))
        if (!I.owner().hom(a, b).is_zero(f))
          return false;
  return true;
}

const abgrp::Quotient& QuotientCategory::data(const Obj& a, const Obj& b) const {
  return *table_.get({a, b}, [&] { return abgrp::quotient(C_.hom(a, b), I_.generators(a, b)); });
}

Mor QuotientCategory::lift(const Obj& a, const Obj& b, const Mor& f) const {
  const auto& q = data(a, b);
  return q.projection.source.reduce(q.lift * f);
}

Mor QuotientCategory::compose(const Obj& a, const Obj& b, const Obj& c, const Mor& g,
                              const Mor& f) const {
  return data(a, c).projection.apply(C_.compose(a, b, c, lift(b, c, g), lift(a, b, f)));
}

Mor QuotientCategory::identity(const Obj& a) const {
  return data(a, a).projection.apply(C_.identity(a));
}

Biproduct QuotientCategory::direct_sum(const Obj& a, const Obj& b) const {
  const Biproduct s = C_.direct_sum(a, b);
  return {s.sum, on_hom(a, s.sum).apply(s.i1), on_hom(b, s.sum).apply(s.i2),
          on_hom(s.sum, a).apply(s.r1), on_hom(s.sum, b).apply(s.r2)};
}

bool kernel_recovers_ideal(const QuotientCategory& Q, const std::vector<Obj>& window) {
  for (const auto& a : window)
    for (const auto& b : window) {
      const auto ker = abgrp::kernel_generators(Q.on_hom(a, b));
      if (!abgrp::same_subgroup(Q.base().hom(a, b), ker, Q.ideal().generators(a, b)))
        return false;
    }
  return true;
}

ReflectReport check_reflects_isomorphisms(const QuotientCategory& Q, const std::vector<Obj>& window) {
  const CompCategory& C = Q.base();
  ReflectReport rep;
  for (const auto& a : window)
    for (const auto& b : window) {
      for (const auto& f : abgrp::enumerate_elements(C.hom(a, b))) {
        ++rep.morphisms;
        const bool up = C.is_iso(a, b, f);
        const bool down = Q.is_iso(a, b, Q.apply(a, b, f));
        if (up != down)
          rep.failures.push_back(a.to_string() + " -> " + b.to_string() + " " + C.describe(a, b, f));
      }
    }
  return rep;
}

} // namespace singext::catops
