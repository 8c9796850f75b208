#pragma once

#include "singext/muro/triangles.hpp"
#include "singext/obstruct/extension.hpp"

namespace singext::obstruct {

/// The Muro categories and the extension 0 -> Theta -> Triangles0 -> F(Z/4)^[1] -> 0.
class MuroSetup {
public:
  explicit MuroSetup(std::size_t rank_bound = 2);
  MuroSetup(const MuroSetup&) = delete;
  MuroSetup& operator=(const MuroSetup&) = delete;

  muro::Z4Free F;
  catops::ArrowCategory AC{F};
  muro::Triangles0 T;
  catops::TodaBifunctor Y{AC};
  muro::ThetaBifunctor Th{T, AC};
  muro::ThetaTransformation theta{Y, Th, T};
  muro::PiFunctor pi{T, AC};
  ExtensionData extension;

  /// F(R) -> Triangles0 and F(R2) -> F(Z/4)^[1] on generators.
  prescat::FunctorData equivalence_R() const;
  prescat::FunctorData equivalence_R2() const;
  /// R2 realized in the arrow category, for section searches.
  BaseRealization r2_realization(const prescat::QuiverPresentation& R2) const;
};

} // namespace singext::obstruct
