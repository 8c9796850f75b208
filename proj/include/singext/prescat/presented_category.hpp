#pragma once

#include "singext/category.hpp"
#include "singext/prescat/presentation.hpp"

namespace singext::prescat {

/// Hom groups and composition of a quiver-with-relations presentation,
/// computed by path-length truncation.
class PresentedCategory : public Preadditive {
public:
  struct Path {
    std::size_t src = 0, dst = 0;
    std::vector<std::size_t> arrows; // written order
    auto operator<=>(const Path&) const = default;
  };
  /// A generator expressed as an integer combination of short paths.
  using PathCombination = std::vector<std::pair<Int, Path>>;

  const QuiverPresentation& presentation() const { return pres_; }
  std::size_t truncation_used() const { return truncation_; }

  Obj object(const std::string& name) const { return Obj::named("obj", name); }
  std::vector<Obj> objects() const;
  FinAbGroup hom(std::size_t x, std::size_t y) const { return hom_.at(x * n_ + y).group; }
  const PathCombination& generator_lift(std::size_t x, std::size_t y, std::size_t k) const {
    return hom_.at(x * n_ + y).lifts.at(k);
  }
  /// Class of a written path (names, or {"id(X)"}).
  Mor path_element(const std::vector<std::string>& path) const;
  Mor arrow_element(const std::string& arrow) const { return path_element({arrow}); }
  /// Left multiplication by generator k of hom(y, z), as a matrix hom(x, y) -> hom(x, z).
  const IntMatrix& left_mult(std::size_t x, std::size_t y, std::size_t z, std::size_t k) const;

  std::string name() const override { return pres_.name.empty() ? "presented" : pres_.name; }
  FinAbGroup hom(const Obj& a, const Obj& b) const override;
  Mor compose(const Obj& a, const Obj& b, const Obj& c, const Mor& g, const Mor& f) const override;
  Mor identity(const Obj& a) const override;
  std::vector<Obj> window(std::size_t rank_bound) const override;
  std::string describe(const Obj& a, const Obj& b, const Mor& f) const override;

private:
  friend PresentedCategory compute_category(const QuiverPresentation&, std::size_t);

  struct HomEntry {
    FinAbGroup group;
    std::vector<PathCombination> lifts;
  };

  std::size_t index(const Obj& a) const;

  QuiverPresentation pres_;
  std::size_t n_ = 0;
  std::size_t truncation_ = 0;
  std::vector<HomEntry> hom_;               // x * n + y
  std::vector<std::vector<IntMatrix>> mult_; // (x * n + y) * n + z, per generator of hom(y, z)
  std::vector<IntMatrix> arrow_action_;
  std::vector<Mor> identities_;     // arrow a: y -> z, indexed a * n + x : hom(x,y) -> hom(x,z)
};

/// Throws NoStabilization when no level L with L + 1 <= lmax passes both
/// certificate conditions, InvalidInput for malformed presentations.
PresentedCategory compute_category(const QuiverPresentation& P, std::size_t lmax = 8);

} // namespace singext::prescat
