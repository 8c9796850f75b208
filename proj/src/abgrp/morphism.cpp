#include "singext/abgrp/morphism.hpp"

#include "singext/abgrp/smith.hpp"
#include "singext/errors.hpp"

namespace singext::abgrp {

GroupMor::GroupMor(FinAbGroup s, FinAbGroup t, IntMatrix m)
    : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
  if (matrix.rows() != target.ngens() || matrix.cols() != source.ngens())
    throw ContractViolation("morphism matrix shape does not match groups");
}

GroupMor GroupMor::identity(const FinAbGroup& G) {
  return {G, G, IntMatrix::identity(G.ngens())};
}

GroupMor GroupMor::zero(const FinAbGroup& S, const FinAbGroup& T) {
  return {S, T, IntMatrix(T.ngens(), S.ngens())};
}

GroupMor GroupMor::after(const GroupMor& g) const {
  if (!(g.target == source))
    throw ContractViolation("composing morphisms with mismatched groups");
  IntMatrix m = matrix * g.matrix;
  for (std::size_t j = 0; j < m.cols(); ++j)
    m.set_column(j, target.reduce(m.column(j)));
  return {g.source, target, std::move(m)};
}

bool GroupMor::well_defined() const {
  for (std::size_t i = 0; i < source.torsion().size(); ++i)
    if (!target.is_zero(target.scale(source.torsion()[i], matrix.column(i))))
      return false;
  return true;
}

namespace {

// [gens | diag(torsion of H)]
IntMatrix span_matrix(const FinAbGroup& H, const std::vector<IntVec>& gens) {
  const std::size_t n = H.ngens(), t = H.torsion().size();
  IntMatrix A(n, gens.size() + t);
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      A(i, j) = gens[j].at(i);
  for (std::size_t i = 0; i < t; ++i)
    A(i, gens.size() + i) = H.torsion()[i];
  return A;
}

} // namespace

Subgroup subgroup_generated(const FinAbGroup& H, const std::vector<IntVec>& gens) {
  const std::size_t k = gens.size();
  const IntMatrix K = IntSolver(span_matrix(H, gens)).kernel_basis();
  std::vector<IntVec> rel;
  for (std::size_t c = 0; c < K.cols(); ++c) {
    IntVec r(k);
    for (std::size_t i = 0; i < k; ++i)
      r[i] = K(i, c);
    rel.push_back(std::move(r));
  }
  PresentedGroup p = group_from_presentation(rel, k);
  IntMatrix G(H.ngens(), k);
  for (std::size_t j = 0; j < k; ++j)
    G.set_column(j, gens[j]);
  IntMatrix incl = G * p.from_group;
  for (std::size_t j = 0; j < incl.cols(); ++j)
    incl.set_column(j, H.reduce(incl.column(j)));
  return {p.group, GroupMor(p.group, H, std::move(incl))};
}

Quotient quotient(const FinAbGroup& H, const std::vector<IntVec>& gens) {
  std::vector<IntVec> rel;
  for (std::size_t i = 0; i < H.torsion().size(); ++i) {
    IntVec r(H.ngens());
    r[i] = H.torsion()[i];
    rel.push_back(std::move(r));
  }
  for (const auto& g : gens)
    rel.push_back(g);
  PresentedGroup p = group_from_presentation(rel, H.ngens());
  Quotient q{p.group, GroupMor(H, p.group, p.to_group), p.from_group};
  for (std::size_t j = 0; j < q.projection.matrix.cols(); ++j)
    q.projection.matrix.set_column(j, p.group.reduce(q.projection.matrix.column(j)));
  return q;
}

std::optional<IntVec> span_coefficients(const FinAbGroup& H, const std::vector<IntVec>& gens,
                                        const IntVec& y) {
  auto z = IntSolver(span_matrix(H, gens)).solve(y);
  if (!z)
    return std::nullopt;
  z->resize(gens.size());
  return z;
}

bool in_span(const FinAbGroup& H, const std::vector<IntVec>& gens, const IntVec& y) {
  if (H.is_zero(y))
    return true;
  return span_coefficients(H, gens, y).has_value();
}

std::vector<IntVec> kernel_generators(const GroupMor& h) {
  const std::size_t n = h.source.ngens();
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < n; ++j)
    cols.push_back(h.matrix.column(j));
  const IntMatrix K = IntSolver(span_matrix(h.target, cols)).kernel_basis();
  std::vector<IntVec> out;
  for (std::size_t c = 0; c < K.cols(); ++c) {
    IntVec x(n);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = K(i, c);
    x = h.source.reduce(std::move(x));
    if (!h.source.is_zero(x))
      out.push_back(std::move(x));
  }
  return out;
}

KernelImage mor_kernel_image(const GroupMor& h) {
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < h.source.ngens(); ++j)
    cols.push_back(h.apply(h.source.gen(j)));
  return {subgroup_generated(h.source, kernel_generators(h)), subgroup_generated(h.target, cols),
          quotient(h.target, cols)};
}

bool same_subgroup(const FinAbGroup& H, const std::vector<IntVec>& a,
                   const std::vector<IntVec>& b) {
  for (const auto& x : a)
    if (!in_span(H, b, x))
      return false;
  for (const auto& x : b)
    if (!in_span(H, a, x))
      return false;
  return true;
}

bool is_exact_at(const GroupMor& f, const GroupMor& g) {
  if (!(f.target == g.source))
    throw InvalidInput("is_exact_at: target of f differs from source of g");
  std::vector<IntVec> im;
  for (std::size_t j = 0; j < f.source.ngens(); ++j)
    im.push_back(f.apply(f.source.gen(j)));
  return same_subgroup(f.target, im, kernel_generators(g));
}

bool is_injective(const GroupMor& h) { return kernel_generators(h).empty(); }

bool is_surjective(const GroupMor& h) {
  std::vector<IntVec> im;
  for (std::size_t j = 0; j < h.source.ngens(); ++j)
    im.push_back(h.apply(h.source.gen(j)));
  for (std::size_t i = 0; i < h.target.ngens(); ++i)
    if (!in_span(h.target, im, h.target.gen(i)))
      return false;
  return true;
}

} // namespace singext::abgrp
