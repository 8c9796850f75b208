#include <doctest.h>

#include "singext/abgrp/morphism.hpp"
#include "singext/abgrp/smith.hpp"
#include "singext/errors.hpp"

#include <random>
#include <set>

using namespace singext;
using namespace singext::abgrp;

namespace {

bool is_diagonal_chain(const IntMatrix& D) {
  for (std::size_t i = 0; i < D.rows(); ++i)
    for (std::size_t j = 0; j < D.cols(); ++j)
      if (i != j && D(i, j) != 0)
        return false;
  const std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (D(i, i) < 0)
      return false;
    if (i + 1 < k && D(i + 1, i + 1) != 0 && (D(i, i) == 0 || D(i + 1, i + 1) % D(i, i) != 0))
      return false;
    if (i + 1 < k && D(i, i) == 0 && D(i + 1, i + 1) != 0)
      return false;
  }
  return true;
}

// group order by brute force: count distinct residues of Z^n / rowspace, for tiny cases
std::size_t brute_order(const GroupMor& h) {
  return enumerate_elements(h.source).size();
}

} // namespace

TEST_CASE("snf of small matrices") {
  CHECK(smith_normal_form(IntMatrix{{0}}).D == IntMatrix{{0}});
  CHECK(smith_normal_form(IntMatrix::identity(2)).D == IntMatrix::identity(2));
  const IntMatrix M{{2, 4}, {6, 8}};
  const auto s = smith_normal_form(M);
  CHECK(s.D == IntMatrix{{2, 0}, {0, 4}});
  CHECK(s.U * M * s.V == s.D);
  // oracle: gcd of entries is 2, |det| = 8
  CHECK(invariant_factors_by_minors(M) == std::vector<Int>{2, 4});
}

TEST_CASE("snf random identities") {
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<int> dim(1, 5), ent(-9, 9);
  for (int t = 0; t < 300; ++t) {
    IntMatrix M(dim(rng), dim(rng));
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j)
        M(i, j) = ent(rng);
    const auto s = smith_normal_form(M);
    REQUIRE(s.U * M * s.V == s.D);
    CHECK(abs(s.U.determinant()) == 1);
    CHECK(abs(s.V.determinant()) == 1);
    CHECK(s.U * s.U_inv == IntMatrix::identity(M.rows()));
    CHECK(s.V * s.V_inv == IntMatrix::identity(M.cols()));
    CHECK(is_diagonal_chain(s.D));
    if (M.rows() <= 4 && M.cols() <= 4)
      CHECK(s.diagonal() == invariant_factors_by_minors(M));
  }
}

TEST_CASE("solver and kernel") {
  const IntMatrix A{{2, 4}, {6, 8}};
  IntSolver solver(A);
  auto z = solver.solve({2, 6});
  REQUIRE(z);
  CHECK(A * *z == IntVec{2, 6});
  CHECK_FALSE(solver.solve({1, 0}));
  const IntMatrix B{{1, 2, 3}};
  const IntMatrix K = IntSolver(B).kernel_basis();
  CHECK(K.cols() == 2);
  CHECK((B * K).is_zero());
}

TEST_CASE("lattices") {
  Lattice L(2);
  L.add({4, 0});
  L.add({6, 2});
  CHECK(L.contains({2, 2}));
  CHECK(L.contains({0, 4}));
  CHECK_FALSE(L.contains({1, 0}));
  ModLattice M(3, 4);
  M.add({2, 1, 0});
  M.add({1, 0, 0});
  CHECK(M.unit_pivots_in_prefix(2));
  CHECK_FALSE(M.unit_pivots_in_prefix(3));
  const auto g = group_from_presentation(M.matrix());
  CHECK(g.group.describe() == "Z/4");
}

TEST_CASE("group from presentation") {
  CHECK(group_from_presentation(IntMatrix{{4}}).group.describe() == "Z/4");
  CHECK(group_from_presentation(IntMatrix{{2, 0}, {0, 3}}).group.describe() == "Z/6");
  CHECK(group_from_presentation(IntMatrix(0, 2)).group.describe() == "Z^2");
  // permuting generators and adding a derived relation changes nothing
  const auto a = group_from_presentation(IntMatrix{{2, 4, 0}, {0, 6, 3}});
  const auto b = group_from_presentation(IntMatrix{{0, 4, 2}, {3, 6, 0}, {3, 10, 2}});
  CHECK(a.group == b.group);
  // old generators map consistently
  const auto p = group_from_presentation(IntMatrix{{2, 0}, {0, 3}});
  CHECK(p.group.element_order(p.element({1, 0})) == 2);
  CHECK(p.group.element_order(p.element({0, 1})) == 3);
  CHECK(p.element(p.lift(p.group.gen(0))) == p.group.gen(0));
}

TEST_CASE("enumerate") {
  CHECK(enumerate_elements(FinAbGroup::cyclic(2)) == std::vector<IntVec>{{0}, {1}});
  CHECK(enumerate_elements(FinAbGroup({2, 2}, 0)).size() == 4);
  CHECK_THROWS_AS(enumerate_elements(FinAbGroup::free(1)), InfiniteGroup);
  CHECK_THROWS_AS(enumerate_elements(FinAbGroup({1024, 1024}, 0), 1000), BudgetExceeded);
}

TEST_CASE("kernel image cokernel of times two on Z/4") {
  const FinAbGroup Z4 = FinAbGroup::cyclic(4);
  const GroupMor two(Z4, Z4, IntMatrix{{2}});
  const auto k = mor_kernel_image(two);
  CHECK(k.kernel.group.describe() == "Z/2");
  CHECK(k.image.group.describe() == "Z/2");
  CHECK(k.cokernel.group.describe() == "Z/2");
  // oracle: enumerate the four elements
  int in_kernel = 0;
  std::set<IntVec> image;
  for (const auto& x : enumerate_elements(Z4)) {
    if (Z4.is_zero(two.apply(x)))
      ++in_kernel;
    image.insert(two.apply(x));
  }
  CHECK(in_kernel == 2);
  CHECK(image.size() == 2);
  CHECK(k.kernel.group.order() * k.image.group.order() == brute_order(two));
  CHECK(k.kernel.inclusion.after(GroupMor::identity(k.kernel.group)).matrix.rows() == 1);
  CHECK((two.after(k.kernel.inclusion)).matrix.is_zero());
}

TEST_CASE("identity and zero maps") {
  const FinAbGroup Z2 = FinAbGroup::free(2);
  const auto k = mor_kernel_image(GroupMor::identity(Z2));
  CHECK(k.kernel.group.trivial());
  CHECK(k.cokernel.group.trivial());
  const FinAbGroup Z4 = FinAbGroup::cyclic(4);
  const auto z = mor_kernel_image(GroupMor::zero(Z4, Z4));
  CHECK(z.kernel.group.describe() == "Z/4");
  CHECK(z.cokernel.group.describe() == "Z/4");
}

TEST_CASE("exactness") {
  const FinAbGroup Z4 = FinAbGroup::cyclic(4);
  const GroupMor two(Z4, Z4, IntMatrix{{2}});
  CHECK(is_exact_at(two, two));
  CHECK(is_exact_at(GroupMor::zero(FinAbGroup(), Z4), GroupMor::identity(Z4)));
  CHECK_FALSE(is_exact_at(GroupMor::zero(Z4, Z4), GroupMor::zero(Z4, Z4)));
  CHECK_THROWS_AS(is_exact_at(two, GroupMor::zero(FinAbGroup::cyclic(2), Z4)), InvalidInput);
}

TEST_CASE("random kernel-image counts") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> ent(0, 11);
  const FinAbGroup S({2, 6}, 0), T({3, 12}, 0);
  for (int t = 0; t < 50; ++t) {
    IntMatrix m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        m(i, j) = ent(rng);
    GroupMor h(S, T, m);
    if (!h.well_defined())
      continue;
    const auto k = mor_kernel_image(h);
    std::set<IntVec> image;
    std::size_t ker = 0;
    for (const auto& x : enumerate_elements(S)) {
      image.insert(h.apply(x));
      ker += T.is_zero(h.apply(x));
    }
    CHECK(k.kernel.group.order() == ker);
    CHECK(k.image.group.order() == image.size());
    CHECK(k.cokernel.group.order() * image.size() == 36);
  }
}

TEST_CASE("sums and tensors") {
  const auto s = direct_sum(FinAbGroup::cyclic(2), FinAbGroup::cyclic(3));
  CHECK(s.sum.group.describe() == "Z/6");
  CHECK(tensor(FinAbGroup::cyclic(4), FinAbGroup::cyclic(6)).group.describe() == "Z/2");
  CHECK(tensor(FinAbGroup::cyclic(2), FinAbGroup({2, 2}, 0)).group.describe() == "Z/2+Z/2");
}
