#pragma once

#include "singext/catops/arrow.hpp"
#include "singext/catops/bifunctor.hpp"
#include "singext/muro/z4.hpp"

#include <optional>

namespace singext::muro {

/// Lexicographically smallest x with M x = y, if any.
std::optional<std::vector<int>> z4_solve_min(const Z4Mat& M, const std::vector<int>& y);
/// log2 of |ker M| for M acting on column vectors.
std::size_t log2_kernel(const Z4Mat& M);

/// Chosen triangle A -f-> B -u-> C_f -v-> A.
struct TriangleData {
  Z4Mat f, u, v;
  std::size_t a() const { return f.cols(); }
  std::size_t b() const { return f.rows(); }
  std::size_t c() const { return u.rows(); }
};

TriangleData cone(const Z4Mat& f);

/// hom(X, -) and hom(-, X) long sequences exact for all X of rank <= test_rank.
bool is_acyclic(const Z4Mat& f, const Z4Mat& u, const Z4Mat& v, std::size_t test_rank = 2);
inline bool is_acyclic(const TriangleData& T, std::size_t test_rank = 2) {
  return is_acyclic(T.f, T.u, T.v, test_rank);
}
/// TR3 rotation (u, v, -f).
TriangleData rotate(const TriangleData& T);

/// Objects of the arrow category of F(Z/4).
Obj arrow_obj(const Z4Mat& f);
Z4Mat arrow_mat(const Obj& f);
/// !_X = (0 -> X) and ^X! = (X -> 0).
Obj bang(std::size_t rank);
Obj hat(std::size_t rank);
/// The four generating objects d, c, i, t.
Obj muro_object(const std::string& name);
/// Every arrow A -> B with rank A, rank B <= r.
std::vector<Obj> arrows_between(std::size_t r);

struct Triple {
  Z4Mat a, b, c;
};

/// Triangles_0 of Muro's F(Z/4): objects are arrows with their chosen
/// triangles, morphisms are commuting triples.
class Triangles0 : public CompCategory {
public:
  const TriangleData& triangle(const Obj& f) const;

  Triple components(const Obj& f, const Obj& g, const Mor& x) const;
  /// Throws ContractViolation if a square fails.
  Mor triple(const Obj& f, const Obj& g, const Triple& t) const;
  bool valid(const Obj& f, const Obj& g, const Triple& t) const;

  /// Koszul comparison psi_f : C_f -> C_{-f}, the TR5 lift of (id, id)
  /// from (-f, -u_f, -v_f) to the chosen triangle of -f.
  const Z4Mat& psi(const Obj& f) const;

  std::string name() const override { return "Triangles0(F(Z/4))"; }
  FinAbGroup hom(const Obj& f, const Obj& g) const override { return kernel(f, g).group(); }
  Mor compose(const Obj& f, const Obj& g, const Obj& h, const Mor& y, const Mor& x) const override;
  Mor identity(const Obj& f) const override;
  std::vector<Obj> window(std::size_t rank_bound) const override;
  std::size_t rank(const Obj& f) const override;
  std::string describe(const Obj& f, const Obj& g, const Mor& x) const override;
  Obj zero_object() const override { return arrow_obj(Z4Mat(0, 0)); }
  Biproduct direct_sum(const Obj& f, const Obj& g) const override;
  bool has_translation() const override { return true; }
  Obj translate(const Obj& f) const override { return arrow_obj(-arrow_mat(f)); }
  Mor translate_mor(const Obj& f, const Obj& g, const Mor& x) const override;

private:
  const Z4Kernel& kernel(const Obj& f, const Obj& g) const;

  Memo<Obj, TriangleData> triangles_;
  Memo<Obj, Z4Mat> psis_;
  Memo<std::pair<Obj, Obj>, Z4Kernel> kernels_;
};

/// Deterministic TR5 lift c with u' b = c u and v' c = a v. Throws
/// ContractViolation("NonCommutingSquare") if f' a != b f.
Z4Mat lift_tr5(const Triangles0& T, const Obj& f, const Obj& g, const Z4Mat& a, const Z4Mat& b);
Mor lift_tr5_mor(const Triangles0& T, const Obj& f, const Obj& g, const Z4Mat& a, const Z4Mat& b);

/// {c : C_f -> C_g | c u_f = 0, v_g c = 0}
Z4Kernel theta_kernel(const Triangles0& T, const Obj& f, const Obj& g);

/// pi : Triangles0 -> F(Z/4)^[1], (a, b, c) -> (a, b).
class PiFunctor : public Functor {
public:
  PiFunctor(const Triangles0& T, const catops::ArrowCategory& AC) : T_(T), AC_(AC) {}
  Obj on_object(const Obj& f) const override { return f; }
  GroupMor on_hom(const Obj& f, const Obj& g) const override;

private:
  const Triangles0& T_;
  const catops::ArrowCategory& AC_;
};

/// Theta(f, f') = {c : C_f -> C_f' | c u_f = 0, v_f' c = 0} as a bifunctor on
/// the arrow category; actions go through TR5 lifts.
class ThetaBifunctor : public catops::Bifunctor {
public:
  ThetaBifunctor(const Triangles0& T, const catops::ArrowCategory& AC) : T_(T), AC_(AC) {}

  const CompCategory& owner() const override { return AC_; }
  std::string name() const override { return "Theta"; }
  FinAbGroup value(const Obj& f, const Obj& g) const override { return kernel(f, g).group(); }
  IntVec post(const Obj& f, const Obj& g, const Obj& g2, const Mor& y, const IntVec& x) const override;
  IntVec pre(const Obj& f2, const Obj& f, const Obj& g, const Mor& y, const IntVec& x) const override;
  bool has_tau() const override { return true; }
  IntVec tau(const Obj& f, const Obj& g, const IntVec& x) const override;

  Z4Mat element(const Obj& f, const Obj& g, const IntVec& x) const;
  IntVec encode(const Obj& f, const Obj& g, const Z4Mat& c) const;
  /// The kernel triple (0, 0, c) in Triangles0.
  Mor to_total(const Obj& f, const Obj& g, const IntVec& x) const;

private:
  const Z4Kernel& kernel(const Obj& f, const Obj& g) const;

  const Triangles0& T_;
  const catops::ArrowCategory& AC_;
  Memo<std::pair<Obj, Obj>, Z4Kernel> kernels_;
};

/// theta : Toda -> Theta, x -> u_f' x v_f.
class ThetaTransformation : public catops::Transformation {
public:
  ThetaTransformation(const catops::TodaBifunctor& Y, const ThetaBifunctor& Th, const Triangles0& T)
      : Y_(Y), Th_(Th), T_(T) {}
  const catops::Bifunctor& source() const override { return Y_; }
  const catops::Bifunctor& target() const override { return Th_; }
  GroupMor component(const Obj& f, const Obj& g) const override;

private:
  const catops::TodaBifunctor& Y_;
  const ThetaBifunctor& Th_;
  const Triangles0& T_;
};

/// Excising: the c-component is an isomorphism. The paranoid form checks
/// that hom(^X!, x) is bijective for all X of rank <= test_rank.
bool is_excising(const Triangles0& T, const Obj& f, const Obj& g, const Mor& x);
bool is_excising_paranoid(const Triangles0& T, const Obj& f, const Obj& g, const Mor& x,
                          std::size_t test_rank = 2);

struct Pretriangle {
  Obj bang_a, bang_b, f, bang_a1;
  Mor bang_f, i_f, j_f;
  /// Lifts of (0, f) and (0, id_B) are unique.
  bool unique_lifts = false;
};
Pretriangle pretriangle(const Triangles0& T, const Obj& f);

struct CheckReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> lines;
  bool ok() const { return failures.empty(); }
  void record(bool pass, const std::string& what);
};

/// Exactness of hom(^X!, -) on each pretriangle, at both middle spots and at
/// the j_f spot, and invariance under a sampled excising morphism.
CheckReport homology_check(const Triangles0& T, std::size_t x_rank, const std::vector<Obj>& instances);

/// Every composite of two pi-kernel triples vanishes, over all arrows between
/// rank <= r objects. `pairs` receives the number of generator pairs covered.
CheckReport square_zero_check(const Triangles0& T, std::size_t r, std::size_t* pairs = nullptr);

/// hom([f], !_X) <-> hom(C_f, X) via c -> (0, c u_f, c), and
/// hom(^X!, [f]) <-> hom(X, C_f) via c -> (-v_f c, 0, c).
CheckReport conrep_check(const Triangles0& T, const Obj& f, std::size_t x_rank);

} // namespace singext::muro
