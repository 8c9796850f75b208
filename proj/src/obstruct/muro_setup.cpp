#include "singext/obstruct/muro_setup.hpp"

namespace singext::obstruct {

namespace {

struct Assignment {
  const char* arrow;
  const char* src;
  const char* dst;
  int a, b, c;
};

// phi -> (2,1,0), eta -> (1,0,2), delta -> (0,1,2), gamma -> (1,2,0), sigma -> (2,0,1), xi -> (0,2,1)
constexpr Assignment kAssignments[] = {
    {"phi", "t", "i", 2, 1, 0},   {"eta", "t", "c", 1, 0, 2}, {"delta", "d", "t", 0, 1, 2},
    {"gamma", "i", "t", 1, 2, 0}, {"sigma", "c", "t", 2, 0, 1}, {"xi", "t", "d", 0, 2, 1},
};

muro::Z4Mat entry(std::size_t rows, std::size_t cols, int v) {
  muro::Z4Mat m(rows, cols);
  if (rows == 1 && cols == 1)
    m.set(0, 0, v);
  return m;
}

} // namespace

MuroSetup::MuroSetup(std::size_t rank_bound) {
  const muro::Triangles0* Tp = &T;
  const muro::ThetaBifunctor* Thp = &Th;
  extension = make_extension(
      T, AC, pi, T.window(rank_bound), &Th,
      [Tp, Thp](const Obj& a, const Obj& b) {
        const FinAbGroup V = Thp->value(a, b), H = Tp->hom(a, b);
        IntMatrix m(H.ngens(), V.ngens());
        for (std::size_t k = 0; k < V.ngens(); ++k)
          m.set_column(k, Thp->to_total(a, b, V.gen(k)));
        return GroupMor(V, H, std::move(m));
      },
      true);
}

prescat::FunctorData MuroSetup::equivalence_R() const {
  prescat::FunctorData F;
  for (const char* o : {"d", "c", "i", "t"})
    F.object_map[o] = muro::muro_object(o);
  for (const auto& s : kAssignments) {
    const Obj x = muro::muro_object(s.src), y = muro::muro_object(s.dst);
    const auto &S = T.triangle(x), &D = T.triangle(y);
    F.arrow_map[s.arrow] =
        T.triple(x, y, {entry(D.a(), S.a(), s.a), entry(D.b(), S.b(), s.b), entry(D.c(), S.c(), s.c)});
  }
  return F;
}

prescat::FunctorData MuroSetup::equivalence_R2() const {
  prescat::FunctorData F;
  for (const char* o : {"d", "c", "i", "t"})
    F.object_map[o] = muro::muro_object(o);
  for (const auto& s : kAssignments) {
    const Obj x = muro::muro_object(s.src), y = muro::muro_object(s.dst);
    const muro::Z4Mat f = muro::arrow_mat(x), g = muro::arrow_mat(y);
    F.arrow_map[s.arrow] =
        AC.pair(x, y, entry(g.cols(), f.cols(), s.a).coords(), entry(g.rows(), f.rows(), s.b).coords());
  }
  return F;
}

BaseRealization MuroSetup::r2_realization(const prescat::QuiverPresentation& R2) const {
  return {R2, equivalence_R2()};
}

} // namespace singext::obstruct
