#pragma once

#include "singext/prescat/presented_category.hpp"

#include <map>

namespace singext::prescat {

/// A functor out of a presented category, given by generator images.
struct FunctorData {
  std::map<std::string, Obj> object_map;
  std::map<std::string, Mor> arrow_map;
};

/// Evaluates a written path of the source presentation in the target.
Mor evaluate_path(const FunctorData& F, const QuiverPresentation& src, const Preadditive& dst,
                  const std::vector<std::string>& path);
Mor evaluate_relation(const FunctorData& F, const QuiverPresentation& src, const Preadditive& dst,
                      const Relation& r);

/// Every source relation (and the global torsion) maps to zero.
bool check_functor(const FunctorData& F, const QuiverPresentation& src, const Preadditive& dst);
inline bool check_functor(const FunctorData& F, const PresentedCategory& src, const Preadditive& dst) {
  return check_functor(F, src.presentation(), dst);
}

/// The functor determined by F on hom groups, via generator lifts.
class PresentedFunctor : public Functor {
public:
  PresentedFunctor(const PresentedCategory& src, const Preadditive& dst, FunctorData F)
      : src_(src), dst_(dst), F_(std::move(F)) {}
  Obj on_object(const Obj& a) const override { return F_.object_map.at(a.name); }
  GroupMor on_hom(const Obj& a, const Obj& b) const override;
  const FunctorData& data() const { return F_; }

private:
  const PresentedCategory& src_;
  const Preadditive& dst_;
  FunctorData F_;
};

struct QuotientPresentation {
  QuiverPresentation presentation;
  /// Identity on objects, arrows to their classes; filled by bind().
  FunctorData functor;
};

/// Appends relations; the functor needs the computed target to give
/// arrow images, see quotient_functor.
QuotientPresentation quotient_presentation(const QuiverPresentation& P,
                                           const std::vector<Relation>& extra);
FunctorData quotient_functor(const QuiverPresentation& src, const PresentedCategory& dst);

/// A preimage coset for one generating arrow: rep + <kernel>.
struct Coset {
  Mor representative;
  std::vector<Mor> kernel;
};

struct SectionResult {
  bool found = false;
  FunctorData section;       // valid when found
  Int space_size = 0;        // number of candidate tuples in the full product
  Int candidates_checked = 0;
  std::vector<std::string> coset_sizes; // per arrow "name:size"
};

/// Searches assignments of the base presentation's arrows inside the given
/// cosets of the total category for which every base relation vanishes.
/// `objects` realizes the base objects in the total category.
SectionResult search_sections(const QuiverPresentation& base, const Preadditive& total,
                              const std::map<std::string, Obj>& objects,
                              const std::map<std::string, Coset>& cosets, Int budget);

/// Section of an identity-on-objects full functor F: src -> dst.
SectionResult section_search(const FunctorData& F, const PresentedCategory& src,
                             const PresentedCategory& dst, Int budget = Int(100'000'000));

} // namespace singext::prescat
