#include "singext/obstruct/k0.hpp"

#include "singext/errors.hpp"

#include <random>
#include <set>

namespace singext::obstruct {

using muro::Z4Mat;

namespace {

std::vector<Obj> diagonal_arrows(std::size_t r) {
  std::vector<Obj> out;
  for (std::size_t n = 0; n <= r; ++n)
    for (std::size_t m = 0; m <= r; ++m)
      for (std::size_t ones = 0; ones <= std::min(n, m); ++ones)
        for (std::size_t twos = 0; ones + twos <= std::min(n, m); ++twos) {
          Z4Mat d(m, n);
          for (std::size_t k = 0; k < ones + twos; ++k)
            d.set(k, k, k < ones ? 1 : 2);
          out.push_back(muro::arrow_obj(d));
        }
  return out;
}

} // namespace

K0Result k0_muro(const muro::Triangles0& T, std::size_t rank_bound, std::size_t samples, std::uint64_t seed,
                 std::size_t full_enum, std::size_t budget, bool paranoid) {
  K0Result res;
  res.rank_bound = rank_bound;
  const std::size_t ngen = rank_bound + 1;
  for (std::size_t n = 0; n < ngen; ++n)
    res.generators.push_back("[Z/4^" + std::to_string(n) + "]");

  std::set<IntVec> seen;
  auto add = [&](IntVec v, const std::string& why) {
    IntVec neg(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
      neg[k] = -v[k];
    bool zero = true;
    for (const auto& x : v)
      zero = zero && x == 0;
    if (zero || seen.count(v) || seen.count(neg))
      return;
    seen.insert(v);
    res.relation_vectors.push_back(v);
    res.relations.push_back(why);
  };
  IntVec k1(ngen);
  k1[0] = 1;
  add(k1, "K1: [0] = 0");

  const auto reps = diagonal_arrows(rank_bound);
  std::mt19937_64 rng(seed);
  for (const auto& f : reps)
    for (const auto& g : reps) {
      const auto &S = T.triangle(f), &D = T.triangle(g);
      if (S.c() != D.c())
        continue;
      ++res.pairs_searched;
      const FinAbGroup H = T.hom(f, g);
      std::vector<Mor> cands;
      if (H.order() <= Int(full_enum))
        cands = abgrp::enumerate_elements(H);
      else
        for (std::size_t s = 0; s < samples; ++s) {
          Mor x(H.ngens());
          for (std::size_t k = 0; k < H.ngens(); ++k)
            x[k] = Int(rng() % static_cast<std::uint64_t>(H.gen_order(k)));
          cands.push_back(std::move(x));
        }
      for (const auto& x : cands) {
        if (++res.morphisms_tested > budget)
          throw BudgetExceeded("K0 search exceeded " + std::to_string(budget) + " morphisms");
        if (!(paranoid ? muro::is_excising_paranoid(T, f, g, x, rank_bound) : muro::is_excising(T, f, g, x)))
          continue;
        ++res.excising_found;
        IntVec v(ngen);
        v[S.a()] += 1;
        v[D.b()] += 1;
        v[D.a()] -= 1;
        v[S.b()] -= 1;
        add(v, "K3: [Z/4^" + std::to_string(S.a()) + "]+[Z/4^" + std::to_string(D.b()) + "]=[Z/4^" +
                   std::to_string(D.a()) + "]+[Z/4^" + std::to_string(S.b()) + "] via " + T.describe(f, g, x) +
                   " : " + muro::arrow_mat(f).to_string() + " -> " + muro::arrow_mat(g).to_string());
      }
    }
  res.group = abgrp::group_from_presentation(res.relation_vectors, ngen).group;
  return res;
}

} // namespace singext::obstruct
