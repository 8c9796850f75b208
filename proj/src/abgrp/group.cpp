#include "singext/abgrp/group.hpp"

#include "singext/abgrp/smith.hpp"
#include "singext/errors.hpp"

#include <sstream>

namespace singext::abgrp {

FinAbGroup::FinAbGroup(std::vector<Int> torsion, std::size_t free_rank)
    : torsion_(std::move(torsion)), free_rank_(free_rank) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw ContractViolation("torsion coefficient below 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw ContractViolation("torsion coefficients do not form a divisibility chain");
  }
}

FinAbGroup FinAbGroup::cyclic(long n) {
  if (n == 0)
    return free(1);
  if (n == 1 || n == -1)
    return {};
  return FinAbGroup({Int(n < 0 ? -n : n)}, 0);
}

Int FinAbGroup::order() const {
  if (!finite())
    throw InfiniteGroup("group " + describe() + " is infinite");
  Int n = 1;
  for (const auto& d : torsion_)
    n *= d;
  return n;
}

IntVec FinAbGroup::gen(std::size_t i) const {
  IntVec x(ngens());
  x.at(i) = 1;
  return x;
}

IntVec FinAbGroup::reduce(IntVec x) const {
  if (x.size() != ngens())
    throw ContractViolation("element has " + std::to_string(x.size()) + " coordinates, group " +
                            describe() + " has " + std::to_string(ngens()));
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    x[i] = mod_floor(x[i], torsion_[i]);
  return x;
}

IntVec FinAbGroup::add(const IntVec& x, const IntVec& y) const {
  IntVec z(x);
  for (std::size_t i = 0; i < z.size(); ++i)
    z[i] += y.at(i);
  return reduce(std::move(z));
}

IntVec FinAbGroup::sub(const IntVec& x, const IntVec& y) const {
  IntVec z(x);
  for (std::size_t i = 0; i < z.size(); ++i)
    z[i] -= y.at(i);
  return reduce(std::move(z));
}

IntVec FinAbGroup::neg(const IntVec& x) const { return scale(-1, x); }

IntVec FinAbGroup::scale(const Int& k, const IntVec& x) const {
  IntVec z(x);
  for (auto& c : z)
    c *= k;
  return reduce(std::move(z));
}

bool FinAbGroup::is_zero(const IntVec& x) const {
  for (const auto& c : reduce(x))
    if (c != 0)
      return false;
  return true;
}

Int FinAbGroup::element_order(const IntVec& x) const {
  const IntVec r = reduce(x);
  Int n = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0)
      continue;
    if (i >= torsion_.size())
      return 0;
    const Int o = torsion_[i] / gcd(torsion_[i], r[i]);
    n = n / gcd(n, o) * o;
  }
  return n;
}

std::string FinAbGroup::describe() const {
  if (trivial())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& d : torsion_) {
    os << (first ? "" : "+") << "Z/" << d;
    first = false;
  }
  if (free_rank_ > 0) {
    os << (first ? "" : "+") << "Z";
    if (free_rank_ > 1)
      os << "^" << free_rank_;
  }
  return os.str();
}

PresentedGroup group_from_presentation(const IntMatrix& R) {
  const std::size_t n = R.cols();
  const SmithForm s = smith_normal_form(R);
  std::vector<Int> torsion;
  std::vector<std::size_t> keep_t, keep_f;
  for (std::size_t k = 0; k < n; ++k) {
    if (k < s.rank) {
      const Int& d = s.D(k, k);
      if (d == 1)
        continue;
      torsion.push_back(d);
      keep_t.push_back(k);
    } else {
      keep_f.push_back(k);
    }
  }
  std::vector<std::size_t> keep = keep_t;
  keep.insert(keep.end(), keep_f.begin(), keep_f.end());

  PresentedGroup out;
  out.group = FinAbGroup(std::move(torsion), keep_f.size());
  out.to_group = IntMatrix(keep.size(), n);
  out.from_group = IntMatrix(n, keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    const std::size_t k = keep[a];
    for (std::size_t j = 0; j < n; ++j) {
      out.to_group(a, j) = s.V(j, k);
      out.from_group(j, a) = s.V_inv(k, j);
    }
  }
  return out;
}

PresentedGroup group_from_presentation(const std::vector<IntVec>& relations, std::size_t ngens) {
  return group_from_presentation(IntMatrix::from_rows(relations, ngens));
}

std::vector<IntVec> enumerate_elements(const FinAbGroup& G, std::size_t cap) {
  if (!G.finite())
    throw InfiniteGroup("cannot enumerate infinite group " + G.describe());
  if (G.order() > cap)
    throw BudgetExceeded("group " + G.describe() + " has more than " + std::to_string(cap) +
                         " elements");
  const std::size_t total = static_cast<std::size_t>(G.order());
  std::vector<IntVec> out;
  out.reserve(total);
  IntVec x = G.zero();
  for (std::size_t count = 0; count < total; ++count) {
    out.push_back(x);
    for (std::size_t i = x.size(); i-- > 0;) {
      if (++x[i] < G.torsion()[i])
        break;
      x[i] = 0;
    }
  }
  return out;
}

SumGroup direct_sum(const FinAbGroup& G, const FinAbGroup& H) {
  const std::size_t a = G.ngens(), b = H.ngens();
  std::vector<IntVec> rel;
  for (std::size_t i = 0; i < G.torsion().size(); ++i) {
    IntVec r(a + b);
    r[i] = G.torsion()[i];
    rel.push_back(r);
  }
  for (std::size_t i = 0; i < H.torsion().size(); ++i) {
    IntVec r(a + b);
    r[a + i] = H.torsion()[i];
    rel.push_back(r);
  }
  SumGroup out{group_from_presentation(rel, a + b), {}, {}, {}, {}};
  const std::size_t m = out.sum.group.ngens();
  out.i1 = IntMatrix(m, a);
  out.i2 = IntMatrix(m, b);
  for (std::size_t j = 0; j < a; ++j)
    for (std::size_t k = 0; k < m; ++k)
      out.i1(k, j) = out.sum.to_group(k, j);
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t k = 0; k < m; ++k)
      out.i2(k, j) = out.sum.to_group(k, a + j);
  out.p1 = IntMatrix(a, m);
  out.p2 = IntMatrix(b, m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < a; ++j)
      out.p1(j, k) = out.sum.from_group(j, k);
    for (std::size_t j = 0; j < b; ++j)
      out.p2(j, k) = out.sum.from_group(a + j, k);
  }
  return out;
}

PresentedGroup tensor(const FinAbGroup& G, const FinAbGroup& H) {
  const std::size_t a = G.ngens(), b = H.ngens();
  std::vector<IntVec> rel;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      const Int g = gcd(G.gen_order(i), H.gen_order(j));
      if (g == 0)
        continue;
      IntVec r(a * b);
      r[i * b + j] = g;
      rel.push_back(r);
    }
  return group_from_presentation(rel, a * b);
}

} // namespace singext::abgrp
