#pragma once

#include "singext/muro/triangles.hpp"
#include "singext/obstruct/muro_setup.hpp"

#include <string>
#include <vector>

namespace singext::obstruct {

struct CheckRecord {
  std::string id, statement, window, verdict, witness;
};

struct StepReport {
  int number = 0;
  std::string title;
  std::vector<CheckRecord> checks;
  bool pass() const;
};

struct MuroReport {
  std::vector<StepReport> steps;
  bool pass() const;
  std::string text() const;
  /// Stable JSON document, one record per check.
  std::string machine() const;
};

/// Perturbations used as control experiments.
enum class MuroControl {
  None,
  /// R2 without gamma phi = 2 id_t
  DropR2Relation,
  /// theta replaced by the identity of Theta
  IdentityTheta,
};

struct VerifyOptions {
  std::size_t lmax = 8;
  Int budget = Int(100'000'000);
  MuroControl control = MuroControl::None;
};

/// Hom tables, equivalences, bifunctor tables, exact columns, section
/// searches and the pushforward verdict for Muro's F(Z/4).
MuroReport verify_muro(const VerifyOptions& opts = {});

/// Karoubi envelopes of Triangles0 and of the arrow category, with the
/// induced projection, form a singular extension on the window.
muro::CheckReport karoubized_extension(const MuroSetup& S, std::size_t rank_bound = 2);

/// Ring isomorphism Hom_R(t,t) -> {(a,b,c) in (Z/4)^3 | a = b = c mod 2},
/// found by exhaustive search; returns the images of the group generators.
std::optional<std::vector<std::array<int, 3>>> endt_ring_iso(const prescat::PresentedCategory& R);

} // namespace singext::obstruct
