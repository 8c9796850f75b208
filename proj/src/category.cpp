#include "singext/category.hpp"

#include "singext/abgrp/smith.hpp"
#include "singext/errors.hpp"

#include <sstream>

namespace singext {

std::string Obj::to_string() const {
  std::ostringstream os;
  os << kind;
  if (!name.empty())
    os << ":" << name;
  if (!data.empty()) {
    os << "[";
    for (std::size_t i = 0; i < data.size(); ++i)
      os << (i ? "," : "") << data[i];
    os << "]";
  }
  if (!parts.empty()) {
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
      os << (i ? "," : "") << parts[i].to_string();
    os << ")";
  }
  return os.str();
}

std::strong_ordering Obj::operator<=>(const Obj& o) const {
  if (auto c = kind <=> o.kind; c != 0)
    return c;
  if (auto c = name <=> o.name; c != 0)
    return c;
  if (auto c = data <=> o.data; c != 0)
    return c;
  const std::size_t n = std::min(parts.size(), o.parts.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = parts[i] <=> o.parts[i]; c != 0)
      return c;
  return parts.size() <=> o.parts.size();
}

bool Obj::operator==(const Obj& o) const { return (*this <=> o) == 0; }

std::string Preadditive::describe(const Obj&, const Obj&, const Mor& f) const {
  return abgrp::to_string(f);
}

GroupMor Preadditive::post(const Obj& x, const Obj& a, const Obj& b, const Mor& f) const {
  const FinAbGroup S = hom(x, a), T = hom(x, b);
  IntMatrix m(T.ngens(), S.ngens());
  for (std::size_t j = 0; j < S.ngens(); ++j)
    m.set_column(j, compose(x, a, b, f, S.gen(j)));
  return {S, T, std::move(m)};
}

GroupMor Preadditive::pre(const Obj& a, const Obj& b, const Obj& y, const Mor& f) const {
  const FinAbGroup S = hom(b, y), T = hom(a, y);
  IntMatrix m(T.ngens(), S.ngens());
  for (std::size_t j = 0; j < S.ngens(); ++j)
    m.set_column(j, compose(a, b, y, S.gen(j), f));
  return {S, T, std::move(m)};
}

std::optional<Mor> Preadditive::inverse(const Obj& a, const Obj& b, const Mor& f) const {
  const GroupMor fs = post(b, a, b, f);
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < fs.source.ngens(); ++j)
    cols.push_back(fs.matrix.column(j));
  auto z = abgrp::span_coefficients(fs.target, cols, identity(b));
  if (!z)
    return std::nullopt;
  Mor g = fs.source.reduce(*z);
  if (compose(a, b, a, g, f) != identity(a))
    return std::nullopt;
  return g;
}

bool Preadditive::is_iso(const Obj& a, const Obj& b, const Mor& f) const {
  return inverse(a, b, f).has_value();
}

Obj CompCategory::translate(const Obj&) const {
  throw ContractViolation(name() + " has no translation");
}

Mor CompCategory::translate_mor(const Obj&, const Obj&, const Mor&) const {
  throw ContractViolation(name() + " has no translation");
}

FunctorTable tabulate(const Functor& F, const std::vector<Obj>& window) {
  FunctorTable t;
  for (const auto& a : window)
    t.objects.emplace(a, F.on_object(a));
  for (const auto& a : window)
    for (const auto& b : window)
      t.homs.emplace(std::make_pair(a, b), F.on_hom(a, b));
  return t;
}

BlockSum::BlockSum(std::vector<FinAbGroup> blocks) : blocks_(std::move(blocks)) {
  std::size_t n = 0;
  std::vector<IntVec> rel;
  for (const auto& b : blocks_) {
    offsets_.push_back(n);
    n += b.ngens();
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    for (std::size_t i = 0; i < blocks_[k].torsion().size(); ++i) {
      IntVec r(n);
      r[offsets_[k] + i] = blocks_[k].torsion()[i];
      rel.push_back(std::move(r));
    }
  pres_ = abgrp::group_from_presentation(rel, n);
}

std::vector<IntVec> BlockSum::split(const IntVec& x) const {
  const IntVec old = pres_.lift(x);
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    IntVec part(old.begin() + static_cast<std::ptrdiff_t>(offsets_[k]),
                old.begin() + static_cast<std::ptrdiff_t>(offsets_[k] + blocks_[k].ngens()));
    out.push_back(blocks_[k].reduce(std::move(part)));
  }
  return out;
}

IntVec BlockSum::join(const std::vector<IntVec>& parts) const {
  if (parts.size() != blocks_.size())
    throw ContractViolation("block count mismatch");
  IntVec old;
  for (const auto& p : parts)
    old.insert(old.end(), p.begin(), p.end());
  return pres_.element(old);
}

SubBlockSum::SubBlockSum(BlockSum ambient, const std::vector<IntVec>& generators)
    : ambient_(std::move(ambient)), sub_(abgrp::subgroup_generated(ambient_.group(), generators)) {
  const FinAbGroup& H = ambient_.group();
  const std::size_t k = sub_.group.ngens(), t = H.torsion().size();
  IntMatrix A(H.ngens(), k + t);
  for (std::size_t j = 0; j < k; ++j)
    A.set_column(j, sub_.inclusion.matrix.column(j));
  for (std::size_t i = 0; i < t; ++i)
    A(i, k + i) = H.torsion()[i];
  solver_ = std::make_shared<abgrp::IntSolver>(A);
}

Mor SubBlockSum::encode(const IntVec& y) const {
  auto z = solver_->solve(ambient_.group().reduce(y));
  if (!z)
    throw ContractViolation("element does not lie in the subgroup");
  z->resize(sub_.group.ngens());
  return sub_.group.reduce(*z);
}

} // namespace singext
