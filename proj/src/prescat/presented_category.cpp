#include "singext/prescat/presented_category.hpp"

#include "singext/abgrp/smith.hpp"
#include "singext/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <variant>

namespace singext::prescat {

using Path = PresentedCategory::Path;
using PathCombination = PresentedCategory::PathCombination;

namespace {

Path concat(const Path& p, const Path& mid, const Path& q) {
  Path r{q.src, p.dst, p.arrows};
  r.arrows.insert(r.arrows.end(), mid.arrows.begin(), mid.arrows.end());
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

Path to_path(const QuiverPresentation& P, const std::vector<std::string>& names) {
  const auto [s, t] = P.path_ends(names);
  Path p{P.object_index(s), P.object_index(t), {}};
  if (!parse_identity(names.front()))
    for (const auto& n : names)
      p.arrows.push_back(P.arrow_index(n));
  return p;
}

std::string path_string(const QuiverPresentation& P, const Path& p) {
  if (p.arrows.empty())
    return identity_name(P.objects[p.src]);
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k)
    s += (k ? "." : "") + P.arrows[p.arrows[k]].name;
  return s;
}

class AnyLattice {
public:
  AnyLattice(std::size_t n, const std::optional<long>& torsion) {
    if (torsion && *torsion > 1)
      impl_.emplace<abgrp::ModLattice>(n, *torsion);
    else if (torsion)
      trivial_ = true;
    if (!torsion)
      impl_.emplace<abgrp::Lattice>(n);
    n_ = n;
  }
  void add(const IntVec& v) {
    if (trivial_)
      return;
    if (auto* m = std::get_if<abgrp::ModLattice>(&impl_)) {
      std::vector<std::int64_t> w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = static_cast<std::int64_t>(abgrp::mod_floor(v[i], m->modulus()));
      m->add(std::move(w));
    } else {
      std::get<abgrp::Lattice>(impl_).add(v);
    }
  }
  bool unit_prefix(std::size_t k) const {
    if (trivial_)
      return true;
    if (auto* m = std::get_if<abgrp::ModLattice>(&impl_))
      return m->unit_pivots_in_prefix(k);
    return std::get<abgrp::Lattice>(impl_).unit_pivots_in_prefix(k);
  }
  IntMatrix matrix() const {
    if (trivial_)
      return IntMatrix::identity(n_);
    if (auto* m = std::get_if<abgrp::ModLattice>(&impl_))
      return m->matrix();
    return std::get<abgrp::Lattice>(impl_).matrix();
  }
  IntVec reduce_prefix(IntVec v, std::size_t k) const {
    if (trivial_)
      return IntVec(v.size());
    if (auto* m = std::get_if<abgrp::ModLattice>(&impl_))
      return m->reduce_prefix(std::move(v), k);
    return std::get<abgrp::Lattice>(impl_).reduce_prefix(std::move(v), k);
  }

private:
  std::variant<std::monostate, abgrp::ModLattice, abgrp::Lattice> impl_;
  bool trivial_ = false;
  std::size_t n_ = 0;
};

struct PairData {
  std::vector<Path> cols;
  std::map<Path, std::size_t> col;
  std::size_t nlong = 0;
  abgrp::PresentedGroup pg;
  std::vector<PathCombination> lifts;

  IntVec evaluate(const PathCombination& c) const {
    IntVec v(cols.size());
    for (const auto& [k, p] : c)
      v.at(col.at(p)) += k;
    return pg.element(v);
  }
};

struct Level {
  std::size_t L = 0;
  bool ok = true;
  std::string failure;
  std::vector<PairData> pairs; // x * n + y
  std::vector<IntMatrix> arrow_action;
};

struct Builder {
  const QuiverPresentation& P;
  std::size_t n;
  std::vector<std::vector<Path>> by_len; // all paths of each length

  explicit Builder(const QuiverPresentation& p) : P(p), n(p.objects.size()) {
    std::vector<Path> ids;
    for (std::size_t o = 0; o < n; ++o)
      ids.push_back({o, o, {}});
    by_len.push_back(std::move(ids));
  }

  void ensure_paths(std::size_t L) {
    constexpr std::size_t budget = 2'000'000;
    while (by_len.size() <= L) {
      std::vector<Path> next;
      for (const auto& p : by_len.back())
        for (std::size_t a = 0; a < P.arrows.size(); ++a)
          if (P.object_index(P.arrows[a].src) == p.dst) {
            Path q{p.src, P.object_index(P.arrows[a].dst), {a}};
            q.arrows.insert(q.arrows.end(), p.arrows.begin(), p.arrows.end());
            next.push_back(std::move(q));
          }
      if (next.size() > budget)
        throw BudgetExceeded("too many paths at length " + std::to_string(by_len.size()));
      std::sort(next.begin(), next.end());
      by_len.push_back(std::move(next));
    }
  }

  Level level(std::size_t L) {
    ensure_paths(L);
    Level lv;
    lv.L = L;
    lv.pairs.resize(n * n);
    for (std::size_t len = L + 1; len-- > 0;)
      for (const auto& p : by_len[len]) {
        PairData& d = lv.pairs[p.src * n + p.dst];
        d.col.emplace(p, d.cols.size());
        d.cols.push_back(p);
        if (len == L)
          ++d.nlong;
      }
    std::vector<AnyLattice> lat;
    for (std::size_t k = 0; k < n * n; ++k)
      lat.emplace_back(lv.pairs[k].cols.size(), P.torsion);

    for (const auto& rel : P.relations) {
      std::vector<std::pair<Int, Path>> terms;
      std::size_t len = 0;
      for (const auto& t : rel) {
        terms.emplace_back(t.coef, to_path(P, t.path));
        len = std::max(len, terms.back().second.arrows.size());
      }
      if (len > L)
        continue;
      const std::size_t a = terms.front().second.src, b = terms.front().second.dst;
      for (std::size_t lq = 0; lq + len <= L; ++lq)
        for (const auto& q : by_len[lq]) {
          if (q.dst != a)
            continue;
          for (std::size_t lp = 0; lp + lq + len <= L; ++lp)
            for (const auto& p : by_len[lp]) {
              if (p.src != b)
                continue;
              PairData& d = lv.pairs[q.src * n + p.dst];
              IntVec v(d.cols.size());
              for (const auto& [c, t] : terms)
                v[d.col.at(concat(p, t, q))] += c;
              lat[q.src * n + p.dst].add(v);
            }
        }
    }

    for (std::size_t k = 0; k < n * n; ++k) {
      PairData& d = lv.pairs[k];
      if (!lat[k].unit_prefix(d.nlong)) {
        lv.ok = false;
        lv.failure = "paths of length " + std::to_string(L) + " from " + P.objects[k / n] + " to " +
                     P.objects[k % n] + " are not reducible to shorter paths";
        return lv;
      }
      d.pg = abgrp::group_from_presentation(lat[k].matrix());
      for (std::size_t g = 0; g < d.pg.group.ngens(); ++g) {
        const IntVec v = lat[k].reduce_prefix(d.pg.from_group.column(g), d.nlong);
        PathCombination c;
        for (std::size_t j = d.nlong; j < v.size(); ++j)
          if (v[j] != 0)
            c.emplace_back(v[j], d.cols[j]);
        d.lifts.push_back(std::move(c));
      }
    }

    lv.arrow_action.resize(P.arrows.size() * n);
    for (std::size_t a = 0; a < P.arrows.size(); ++a) {
      const std::size_t y = P.object_index(P.arrows[a].src), z = P.object_index(P.arrows[a].dst);
      const Path ap{y, z, {a}};
      for (std::size_t x = 0; x < n; ++x) {
        const PairData &from = lv.pairs[x * n + y], &to = lv.pairs[x * n + z];
        IntMatrix m(to.pg.group.ngens(), from.pg.group.ngens());
        for (std::size_t g = 0; g < from.lifts.size(); ++g) {
          PathCombination c;
          for (const auto& [k, p] : from.lifts[g])
            c.emplace_back(k, concat(ap, Path{x, y, {}}, p));
          m.set_column(g, to.evaluate(c));
        }
        lv.arrow_action[a * n + x] = std::move(m);
      }
    }
    return lv;
  }
};

IntMatrix reduce_columns(IntMatrix m, const FinAbGroup& G) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    m.set_column(j, G.reduce(m.column(j)));
  return m;
}

// Natural map from level lo to level hi on one pair.
IntMatrix natural_map(const PairData& lo, const PairData& hi) {
  IntMatrix m(hi.pg.group.ngens(), lo.pg.group.ngens());
  for (std::size_t g = 0; g < lo.lifts.size(); ++g)
    m.set_column(g, hi.evaluate(lo.lifts[g]));
  return m;
}

bool levels_agree(const QuiverPresentation& P, std::size_t n, const Level& lo, const Level& hi) {
  std::vector<IntMatrix> nat(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const FinAbGroup &A = lo.pairs[k].pg.group, &B = hi.pairs[k].pg.group;
    if (!(A == B))
      return false;
    nat[k] = natural_map(lo.pairs[k], hi.pairs[k]);
    if (!abgrp::is_isomorphism(GroupMor(A, B, nat[k])))
      return false;
  }
  for (std::size_t a = 0; a < P.arrows.size(); ++a) {
    const std::size_t y = P.object_index(P.arrows[a].src), z = P.object_index(P.arrows[a].dst);
    for (std::size_t x = 0; x < n; ++x) {
      const FinAbGroup& T = hi.pairs[x * n + z].pg.group;
      const IntMatrix left = reduce_columns(nat[x * n + z] * lo.arrow_action[a * n + x], T);
      const IntMatrix right = reduce_columns(hi.arrow_action[a * n + x] * nat[x * n + y], T);
      if (!(left == right))
        return false;
    }
  }
  return true;
}

} // namespace

PresentedCategory compute_category(const QuiverPresentation& P, std::size_t lmax) {
  P.validate();
  if (lmax < 2)
    throw InvalidInput("truncation bound must be at least 2");
  Builder b(P);
  const std::size_t n = b.n;
  std::optional<Level> prev;
  std::string reason = "no level computed";
  for (std::size_t L = 1; L <= lmax; ++L) {
    Level cur = b.level(L);
    if (!cur.ok) {
      reason = cur.failure;
      prev.reset();
      continue;
    }
    if (prev && levels_agree(P, n, *prev, cur)) {
      PresentedCategory C;
      C.pres_ = P;
      C.n_ = n;
      C.truncation_ = prev->L;
      for (auto& d : prev->pairs) {
        PresentedCategory::HomEntry e{d.pg.group, d.lifts};
        for (const auto& c : e.lifts) {
          std::ostringstream os;
          for (std::size_t i = 0; i < c.size(); ++i)
            os << (i ? "+" : "") << (c[i].first == 1 ? "" : c[i].first.str() + "*")
               << path_string(P, c[i].second);
          e.group.basis_tags().push_back(os.str());
        }
        C.hom_.push_back(std::move(e));
      }
      C.arrow_action_ = prev->arrow_action;
      for (std::size_t x = 0; x < n; ++x)
        C.identities_.push_back(prev->pairs[x * n + x].evaluate({{Int(1), Path{x, x, {}}}}));
      C.mult_.resize(n * n * n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            const FinAbGroup &S = C.hom(x, y), &T = C.hom(x, z);
            auto& out = C.mult_[(x * n + y) * n + z];
            for (const auto& lift : C.hom_[y * n + z].lifts) {
              IntMatrix total(T.ngens(), S.ngens());
              for (const auto& [k, p] : lift) {
                IntMatrix m = IntMatrix::identity(S.ngens());
                for (std::size_t j = p.arrows.size(); j-- > 0;) {
                  const std::size_t a = p.arrows[j];
                  const std::size_t nxt = P.object_index(P.arrows[a].dst);
                  m = reduce_columns(C.arrow_action_[a * n + x] * m, C.hom(x, nxt));
                }
                for (std::size_t r = 0; r < T.ngens(); ++r)
                  for (std::size_t c = 0; c < S.ngens(); ++c)
                    total(r, c) += k * m(r, c);
              }
              out.push_back(reduce_columns(std::move(total), T));
            }
          }
      return C;
    }
    prev = std::move(cur);
  }
  throw NoStabilization("hom groups of " + (P.name.empty() ? std::string("presentation") : P.name) +
                        " did not stabilize up to path length " + std::to_string(lmax) + " (" +
                        reason + ")");
}

std::vector<Obj> PresentedCategory::objects() const {
  std::vector<Obj> out;
  for (const auto& o : pres_.objects)
    out.push_back(object(o));
  return out;
}

std::size_t PresentedCategory::index(const Obj& a) const {
  if (a.kind != "obj")
    throw ContractViolation("object " + a.to_string() + " does not belong to " + name());
  return pres_.object_index(a.name);
}

FinAbGroup PresentedCategory::hom(const Obj& a, const Obj& b) const { return hom(index(a), index(b)); }

const IntMatrix& PresentedCategory::left_mult(std::size_t x, std::size_t y, std::size_t z,
                                              std::size_t k) const {
  return mult_.at((x * n_ + y) * n_ + z).at(k);
}

Mor PresentedCategory::compose(const Obj& a, const Obj& b, const Obj& c, const Mor& g,
                               const Mor& f) const {
  const std::size_t x = index(a), y = index(b), z = index(c);
  const FinAbGroup T = hom(x, z);
  IntVec out(T.ngens());
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] == 0)
      continue;
    const IntVec v = left_mult(x, y, z, k) * f;
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += g[k] * v[i];
  }
  return T.reduce(std::move(out));
}

Mor PresentedCategory::path_element(const std::vector<std::string>& names) const {
  const Path p = to_path(pres_, names);
  IntVec v = identities_.at(p.src);
  for (std::size_t j = p.arrows.size(); j-- > 0;) {
    const std::size_t a = p.arrows[j];
    const std::size_t nxt = pres_.object_index(pres_.arrows[a].dst);
    v = hom(p.src, nxt).reduce(arrow_action_[a * n_ + p.src] * v);
  }
  return v;
}

Mor PresentedCategory::identity(const Obj& a) const { return identities_.at(index(a)); }

std::vector<Obj> PresentedCategory::window(std::size_t) const { return objects(); }

std::string PresentedCategory::describe(const Obj& a, const Obj& b, const Mor& f) const {
  const FinAbGroup H = hom_.at(index(a) * n_ + index(b)).group;
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0)
      continue;
    os << (first ? "" : " + ") << (f[k] == 1 ? "" : f[k].str() + "*") << "[" << H.basis_tags()[k]
       << "]";
    first = false;
  }
  return first ? "0" : os.str();
}

} // namespace singext::prescat
