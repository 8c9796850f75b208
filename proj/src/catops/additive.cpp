#include "singext/catops/additive.hpp"

#include "singext/errors.hpp"

#include <sstream>

namespace singext::catops {

const BlockSum& AdditiveCompletion::layout(const Obj& a, const Obj& b) const {
  if (a.kind != "sum" || b.kind != "sum")
    throw ContractViolation("not an object of " + name());
  return *layouts_.get({a, b}, [&] {
    std::vector<FinAbGroup> blocks;
    for (const auto& bi : b.parts)
      for (const auto& aj : a.parts)
        blocks.push_back(S_.hom(aj, bi));
    return BlockSum(std::move(blocks));
  });
}

Mor AdditiveCompletion::entry(const Obj& a, const Obj& b, const Mor& f, std::size_t i,
                              std::size_t j) const {
  return layout(a, b).split(f).at(i * a.parts.size() + j);
}

Mor AdditiveCompletion::from_entries(const Obj& a, const Obj& b,
                                     const std::vector<std::vector<Mor>>& m) const {
  std::vector<IntVec> parts;
  for (std::size_t i = 0; i < b.parts.size(); ++i)
    for (std::size_t j = 0; j < a.parts.size(); ++j)
      parts.push_back(m.at(i).at(j));
  return layout(a, b).join(parts);
}

Mor AdditiveCompletion::compose(const Obj& a, const Obj& b, const Obj& c, const Mor& g,
                                const Mor& f) const {
  const auto fs = layout(a, b).split(f), gs = layout(b, c).split(g);
  const std::size_t na = a.parts.size(), nb = b.parts.size(), nc = c.parts.size();
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t k = 0; k < na; ++k) {
      const FinAbGroup H = S_.hom(a.parts[k], c.parts[i]);
      IntVec sum = H.zero();
      for (std::size_t j = 0; j < nb; ++j)
        sum = H.add(sum, S_.compose(a.parts[k], b.parts[j], c.parts[i], gs[i * nb + j], fs[j * na + k]));
      out.push_back(std::move(sum));
    }
  return layout(a, c).join(out);
}

Mor AdditiveCompletion::identity(const Obj& a) const {
  const std::size_t n = a.parts.size();
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.push_back(i == j ? S_.identity(a.parts[i]) : S_.zero(a.parts[j], a.parts[i]));
  return layout(a, a).join(out);
}

std::vector<Obj> AdditiveCompletion::window(std::size_t rank_bound) const {
  const std::vector<Obj> base = S_.window(1);
  std::vector<Obj> out{tuple({})};
  // nondecreasing index tuples: one representative per multiset
  std::vector<std::vector<std::size_t>> level{{}};
  for (std::size_t r = 1; r <= rank_bound; ++r) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : level)
      for (std::size_t k = t.empty() ? 0 : t.back(); k < base.size(); ++k) {
        auto u = t;
        u.push_back(k);
        std::vector<Obj> parts;
        for (auto i : u)
          parts.push_back(base[i]);
        out.push_back(tuple(parts));
        next.push_back(std::move(u));
      }
    level = std::move(next);
  }
  return out;
}

std::string AdditiveCompletion::describe(const Obj& a, const Obj& b, const Mor& f) const {
  const auto fs = layout(a, b).split(f);
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < b.parts.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < a.parts.size(); ++j)
      os << (j ? "," : "") << S_.describe(a.parts[j], b.parts[i], fs[i * a.parts.size() + j]);
    os << "]";
  }
  os << "]";
  return os.str();
}

Biproduct AdditiveCompletion::direct_sum(const Obj& a, const Obj& b) const {
  std::vector<Obj> parts = a.parts;
  parts.insert(parts.end(), b.parts.begin(), b.parts.end());
  const Obj s = tuple(parts);
  const std::size_t na = a.parts.size();
  auto block = [&](const Obj& src, const Obj& dst, std::size_t row0, std::size_t col0) {
    std::vector<std::vector<Mor>> m(dst.parts.size(), std::vector<Mor>(src.parts.size()));
    for (std::size_t i = 0; i < dst.parts.size(); ++i)
      for (std::size_t j = 0; j < src.parts.size(); ++j) {
        const bool diag = i >= row0 && j >= col0 && i - row0 == j - col0;
        m[i][j] = diag ? S_.identity(src.parts[j]) : S_.zero(src.parts[j], dst.parts[i]);
      }
    return from_entries(src, dst, m);
  };
  return {s, block(a, s, 0, 0), block(b, s, na, 0), block(s, a, 0, 0), block(s, b, 0, na)};
}

Obj AdditiveCompletion::translate(const Obj& a) const {
  if (!identity_translation_)
    return CompCategory::translate(a);
  return a;
}

Mor AdditiveCompletion::translate_mor(const Obj& a, const Obj& b, const Mor& f) const {
  if (!identity_translation_)
    return CompCategory::translate_mor(a, b, f);
  return f;
}

} // namespace singext::catops
