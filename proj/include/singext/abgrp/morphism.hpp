#pragma once

#include "singext/abgrp/group.hpp"

#include <optional>

namespace singext::abgrp {

/// Homomorphism given by its matrix on normal-form coordinates
/// (target.ngens() x source.ngens()).
struct GroupMor {
  FinAbGroup source, target;
  IntMatrix matrix;

  GroupMor() = default;
  GroupMor(FinAbGroup s, FinAbGroup t, IntMatrix m);

  static GroupMor identity(const FinAbGroup& G);
  static GroupMor zero(const FinAbGroup& S, const FinAbGroup& T);

  IntVec apply(const IntVec& x) const { return target.reduce(matrix * x); }
  /// this after g
  GroupMor after(const GroupMor& g) const;
  /// Checks d * image(g) = 0 for every source generator g of order d.
  bool well_defined() const;
};

/// A subgroup together with its inclusion.
struct Subgroup {
  FinAbGroup group;
  GroupMor inclusion;
};

/// A quotient together with its projection and a set-theoretic lift matrix.
struct Quotient {
  FinAbGroup group;
  GroupMor projection;
  IntMatrix lift; // ambient coordinates of each quotient generator
};

/// Subgroup of H generated by the given elements (H coordinates).
Subgroup subgroup_generated(const FinAbGroup& H, const std::vector<IntVec>& gens);
/// H / <gens>
Quotient quotient(const FinAbGroup& H, const std::vector<IntVec>& gens);
/// y in <gens> ?
bool in_span(const FinAbGroup& H, const std::vector<IntVec>& gens, const IntVec& y);
/// Coefficients z with sum z_i gens_i = y in H, if any.
std::optional<IntVec> span_coefficients(const FinAbGroup& H, const std::vector<IntVec>& gens,
                                        const IntVec& y);

struct KernelImage {
  Subgroup kernel;
  Subgroup image;
  Quotient cokernel;
};

KernelImage mor_kernel_image(const GroupMor& h);

/// Generators (source coordinates) of ker h.
std::vector<IntVec> kernel_generators(const GroupMor& h);

bool same_subgroup(const FinAbGroup& H, const std::vector<IntVec>& a, const std::vector<IntVec>& b);

/// im f = ker g ?
bool is_exact_at(const GroupMor& f, const GroupMor& g);

bool is_injective(const GroupMor& h);
bool is_surjective(const GroupMor& h);
inline bool is_isomorphism(const GroupMor& h) { return is_injective(h) && is_surjective(h); }

} // namespace singext::abgrp
