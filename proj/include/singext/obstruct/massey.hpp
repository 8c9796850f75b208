#pragma once

#include "singext/muro/triangles.hpp"
#include "singext/obstruct/extension.hpp"

namespace singext::obstruct {

/// {h, g, f} read in hom(X[1], W) modulo h_* hom(X[1], Z) + f^* hom(Y[1], W).
struct MasseyResult {
  FinAbGroup ambient;
  Mor representative;
  std::vector<Mor> denominator;
  /// Every element of representative + denominator, in enumeration order.
  std::vector<Mor> coset;
  std::size_t lift_pairs = 0;
  bool exhaustive = false;
  bool independent = false;
  /// The read-out D(^X!, !_W) -> hom_total(^X!, !_W) is an isomorphism, so
  /// wx names an element of hom(X[1], W).
  bool readable = false;
  bool contains(const Mor& m) const;
};

/// Lifts x : ^X! -> [g] of (f, 0) and w : [g] -> !_W of (0, h) in E.total,
/// which must be an extension of the arrow category of F(Z/4); readout is a
/// transformation from the Toda bifunctor to the kernel of E. All lift pairs
/// are enumerated when there are at most exhaust_cap of them, otherwise
/// independence is checked on kernel generators.
MasseyResult massey(const ExtensionData& E, const catops::Transformation& readout, const muro::Z4Mat& f,
                    const muro::Z4Mat& g, const muro::Z4Mat& h, std::size_t exhaust_cap = 1 << 16);

/// id_{A[1]} in {v_f, u_f, f}.
bool massey_condition(const ExtensionData& E, const catops::Transformation& readout, const muro::Triangles0& T,
                      const muro::Z4Mat& f);

} // namespace singext::obstruct
