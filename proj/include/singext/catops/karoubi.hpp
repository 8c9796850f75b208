#pragma once

#include "singext/catops/arrow.hpp"
#include "singext/catops/ideal.hpp"

namespace singext::catops {

/// Objects (A, e) with e idempotent; hom((A,e),(A',e')) = {f : f e = e' f = f}.
class KaroubiEnvelope : public CompCategory {
public:
  explicit KaroubiEnvelope(const CompCategory& C) : C_(C) {}

  const CompCategory& base() const { return C_; }
  /// Throws ContractViolation if e is not idempotent.
  Obj object(const Obj& a, const Mor& e) const;
  Obj embed(const Obj& a) const { return object(a, C_.identity(a)); }
  static const Obj& carrier(const Obj& x) { return x.parts.at(0); }
  Mor idempotent(const Obj& x) const;
  /// The underlying morphism of C.
  Mor underlying(const Obj& x, const Obj& y, const Mor& f) const { return layout(x, y).split(f)[0]; }
  Mor from_underlying(const Obj& x, const Obj& y, const Mor& f) const {
    return layout(x, y).encode_parts({f});
  }

  std::string name() const override { return C_.name() + "^Ka"; }
  FinAbGroup hom(const Obj& x, const Obj& y) const override { return layout(x, y).group(); }
  Mor compose(const Obj& x, const Obj& y, const Obj& z, const Mor& g, const Mor& f) const override;
  Mor identity(const Obj& x) const override { return from_underlying(x, x, idempotent(x)); }
  /// Every idempotent on every window object of C.
  std::vector<Obj> window(std::size_t rank_bound) const override;
  std::size_t rank(const Obj& x) const override { return C_.rank(carrier(x)); }
  std::string describe(const Obj& x, const Obj& y, const Mor& f) const override {
    return C_.describe(carrier(x), carrier(y), underlying(x, y, f));
  }
  Obj zero_object() const override { return embed(C_.zero_object()); }
  Biproduct direct_sum(const Obj& x, const Obj& y) const override;

private:
  const SubBlockSum& layout(const Obj& x, const Obj& y) const;

  const CompCategory& C_;
  Memo<std::pair<Obj, Obj>, SubBlockSum> layouts_;
};

bool is_idempotent(const Preadditive& C, const Obj& a, const Mor& e);

/// Splitting data of an idempotent e on A through B: r s = id_B, s r = e.
struct Splitting {
  Obj object;
  Mor section; // s : B -> A
  Mor retraction; // r : A -> B
};

/// Exhaustive search over the window for a splitting of e.
std::optional<Splitting> find_splitting(const CompCategory& C, const Obj& a, const Mor& e,
                                        const std::vector<Obj>& window);

/// (A, e) is isomorphic in the envelope to an embedded (B, id) for some window B.
std::optional<Obj> karoubi_iso_to_image(const KaroubiEnvelope& K, const Obj& x,
                                        const std::vector<Obj>& window);

/// e with Q(e) = f and e^2 = e, by iterating e -> 3e^2 - 2e^3 from a preimage.
/// nilpotency is n with I^n = 0.
Mor lift_idempotent(const QuotientCategory& Q, const Obj& a, const Mor& f, std::size_t nilpotency);

struct ArrowSplitting {
  Obj g;             // g = s f d : A' -> B'
  Mor to_g;          // (c, s) : f -> g
  Mor from_g;        // (d, t) : g -> f
};

/// Given an idempotent (a, b) on f : A -> B and splittings a = d c, c d = id,
/// b = t s, s t = id, returns the splitting of (a, b) in C^[1].
ArrowSplitting split_arrow_idempotent(const ArrowCategory& AC, const Obj& f, const Mor& a,
                                      const Mor& b, const Splitting& sa, const Splitting& sb);

/// rho((A, e, A', e', f)) = [A, f, A', e, e'] as an object of (C^[1])^Ka.
Obj rho_embed(const KaroubiEnvelope& KA, const ArrowCategory& AC, const Obj& A, const Mor& e,
              const Obj& A2, const Mor& e2, const Mor& f);

/// Compares, as sets of pairs, hom between two quintuples computed in
/// (C^Ka)^[1] and in (C^[1])^Ka.
bool rho_hom_agrees(const KaroubiEnvelope& KC, const ArrowCategory& AKC, const KaroubiEnvelope& KA,
                    const ArrowCategory& AC, const Obj& x, const Obj& y);

} // namespace singext::catops
