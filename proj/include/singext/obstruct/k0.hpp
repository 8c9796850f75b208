#pragma once

#include "singext/muro/triangles.hpp"

#include <cstdint>

namespace singext::obstruct {

struct K0Result {
  std::size_t rank_bound = 0;
  /// [Z/4^n] for n = 0 .. rank_bound
  std::vector<std::string> generators;
  /// One line per distinct relation, with the witness that produced it.
  std::vector<std::string> relations;
  std::vector<IntVec> relation_vectors;
  FinAbGroup group;
  std::size_t pairs_searched = 0;
  std::size_t morphisms_tested = 0;
  std::size_t excising_found = 0;
};

/// K0 of Muro's F(Z/4) from K1 ([0] = 0), K2 (isomorphic objects agree; the
/// rank classifies objects) and K3 ([A] + [B'] = [A'] + [B] for each
/// excising [f] -> [g]) found among diagonal-form arrows with source and
/// target of rank <= rank_bound. Hom groups up to `full_enum` elements are
/// enumerated, larger ones sampled `samples` times from a seeded generator.
/// With `paranoid`, excision is tested by the quantified definition.
K0Result k0_muro(const muro::Triangles0& T, std::size_t rank_bound, std::size_t samples = 64,
                 std::uint64_t seed = 1, std::size_t full_enum = 256, std::size_t budget = 10'000'000,
                 bool paranoid = false);

} // namespace singext::obstruct
