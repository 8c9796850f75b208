#include "singext/obstruct/massey.hpp"

#include <algorithm>

namespace singext::obstruct {

using muro::Z4Mat;

namespace {

std::vector<Mor> subgroup_elements(const FinAbGroup& H, const std::vector<Mor>& gens) {
  const abgrp::Subgroup S = abgrp::subgroup_generated(H, gens);
  std::vector<Mor> out;
  for (const auto& e : abgrp::enumerate_elements(S.group))
    out.push_back(S.inclusion.apply(e));
  return out;
}

} // namespace

bool MasseyResult::contains(const Mor& m) const { return std::find(coset.begin(), coset.end(), m) != coset.end(); }

MasseyResult massey(const ExtensionData& E, const catops::Transformation& readout, const Z4Mat& f, const Z4Mat& g,
                    const Z4Mat& h, std::size_t exhaust_cap) {
  const auto* AC = dynamic_cast<const catops::ArrowCategory*>(E.base);
  const auto* Y = dynamic_cast<const catops::TodaBifunctor*>(&readout.source());
  if (!AC || !Y)
    throw ContractViolation("massey needs an extension of an arrow category read through the Toda bifunctor");
  if (f.rows() != g.cols() || g.rows() != h.cols())
    throw InvalidInput("massey: morphisms do not compose");
  if (!(g * f).is_zero() || !(h * g).is_zero())
    throw CompositeNotZero("massey: g f and h g must vanish");
  const std::size_t X = f.cols(), Yr = f.rows(), Z = g.rows(), W = h.rows();
  const Obj hx = muro::hat(X), go = muro::arrow_obj(g), bw = muro::bang(W);
  const CompCategory& T = *E.total;

  const prescat::Coset cx = preimage_coset(E, hx, go, AC->pair(hx, go, f.coords(), Z4Mat(Z, 0).coords()));
  const prescat::Coset cw = preimage_coset(E, go, bw, AC->pair(go, bw, Z4Mat(0, Yr).coords(), h.coords()));

  MasseyResult r;
  const muro::Z4Free F;
  const Obj ox = muro::Z4Free::object(X), ow = muro::Z4Free::object(W);
  r.ambient = F.hom(ox, ow);
  for (std::size_t k = 0; k < Z * X; ++k) {
    Z4Mat e(Z, X);
    e.set(k / X, k % X, 1);
    r.denominator.push_back((h * e).coords());
  }
  for (std::size_t k = 0; k < W * Yr; ++k) {
    Z4Mat e(W, Yr);
    e.set(k / Yr, k % Yr, 1);
    r.denominator.push_back((e * f).coords());
  }

  // read-out D(^X!, !_W) -> hom_total(^X!, !_W)
  const GroupMor incl = E.inclusion(hx, bw).after(readout.component(hx, bw));
  r.readable = abgrp::is_isomorphism(incl);
  std::vector<IntVec> cols;
  for (std::size_t k = 0; k < incl.source.ngens(); ++k)
    cols.push_back(incl.apply(incl.source.gen(k)));
  const FinAbGroup Hxw = T.hom(hx, bw);
  auto read = [&](const Mor& wx) -> Mor {
    const auto y = abgrp::span_coefficients(Hxw, cols, wx);
    if (!y)
      throw ContractViolation("massey: composite does not lie in the kernel");
    return r.ambient.reduce(Y->representative(hx, bw, incl.source.reduce(*y)));
  };

  const Mor x0 = cx.representative, w0 = cw.representative;
  const Mor base = T.compose(hx, go, bw, w0, x0);
  if (r.readable)
    r.representative = read(base);
  auto same_class = [&](const Mor& wx) {
    if (!r.readable)
      return Hxw.is_zero(Hxw.sub(wx, base));
    return abgrp::in_span(r.ambient, r.denominator, r.ambient.sub(read(wx), r.representative));
  };

  const FinAbGroup Hx = T.hom(hx, go), Hw = T.hom(go, bw);
  const abgrp::Subgroup Kx = abgrp::subgroup_generated(Hx, cx.kernel);
  const abgrp::Subgroup Kw = abgrp::subgroup_generated(Hw, cw.kernel);
  const Int pairs = Kx.group.order() * Kw.group.order();
  r.independent = true;
  if (pairs <= Int(exhaust_cap)) {
    r.exhaustive = true;
    const auto ex = subgroup_elements(Hx, cx.kernel), ew = subgroup_elements(Hw, cw.kernel);
    for (const auto& kx : ex)
      for (const auto& kw : ew) {
        ++r.lift_pairs;
        const Mor wx = T.compose(hx, go, bw, Hw.add(w0, kw), Hx.add(x0, kx));
        if (!same_class(wx))
          r.independent = false;
      }
  } else {
    // bilinearity: wx - w0 x0 = w0 k + k' x0 + k' k with k' k = 0
    for (const auto& k : cx.kernel) {
      ++r.lift_pairs;
      if (!same_class(Hxw.add(base, T.compose(hx, go, bw, w0, k))))
        r.independent = false;
      for (const auto& k2 : cw.kernel)
        if (!Hxw.is_zero(T.compose(hx, go, bw, k2, k)))
          r.independent = false;
    }
    for (const auto& k2 : cw.kernel) {
      ++r.lift_pairs;
      if (!same_class(Hxw.add(base, T.compose(hx, go, bw, k2, x0))))
        r.independent = false;
    }
  }
  if (r.readable)
    for (const auto& d : subgroup_elements(r.ambient, r.denominator))
      r.coset.push_back(r.ambient.add(r.representative, d));
  std::sort(r.coset.begin(), r.coset.end());
  return r;
}

bool massey_condition(const ExtensionData& E, const catops::Transformation& readout, const muro::Triangles0& T,
                      const Z4Mat& f) {
  const muro::TriangleData& D = T.triangle(muro::arrow_obj(f));
  const MasseyResult r = massey(E, readout, D.f, D.u, D.v);
  return r.readable && r.independent && r.contains(Z4Mat::identity(f.cols()).coords());
}

} // namespace singext::obstruct
