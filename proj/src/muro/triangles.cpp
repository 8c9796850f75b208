#include "singext/muro/triangles.hpp"

#include "singext/errors.hpp"
#include "singext/parallel.hpp"

#include <algorithm>
#include <set>

namespace singext::muro {

namespace {

/// Matrix of X -> L X R on row-major vectorizations.
Z4Mat sandwich(const Z4Mat& L, const Z4Mat& R) {
  const std::size_t p = L.cols(), q = R.rows();
  Z4Mat m(L.rows() * R.cols(), p * q);
  for (std::size_t i = 0; i < L.rows(); ++i)
    for (std::size_t j = 0; j < R.cols(); ++j)
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l)
          m.set(i * R.cols() + j, k * q + l, L(i, k) * R(l, j));
  return m;
}

Z4Mat vstack(const std::vector<Z4Mat>& ms, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& m : ms)
    rows += m.rows();
  Z4Mat out(rows, cols);
  std::size_t r = 0;
  for (const auto& m : ms) {
    out.put(r, 0, m);
    r += m.rows();
  }
  return out;
}

Z4Mat hstack(const std::vector<Z4Mat>& ms) {
  std::size_t cols = 0;
  for (const auto& m : ms)
    cols += m.cols();
  Z4Mat out(ms.empty() ? 0 : ms[0].rows(), cols);
  std::size_t c = 0;
  for (const auto& m : ms) {
    out.put(0, c, m);
    c += m.cols();
  }
  return out;
}

std::vector<int> vec(const Z4Mat& m) {
  std::vector<int> v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      v.push_back(m(i, j));
  return v;
}

Z4Mat unvec(std::size_t rows, std::size_t cols, const std::vector<int>& v, std::size_t offset = 0) {
  Z4Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, v.at(offset + i * cols + j));
  return m;
}

Z4Mat kron_id_right(const Z4Mat& M, std::size_t k) { return sandwich(M, Z4Mat::identity(k)); }
Z4Mat kron_pre(const Z4Mat& M, std::size_t k) { return sandwich(Z4Mat::identity(k), M); }

/// X -M-> Y -N-> Z exact at Y
bool exact_pair(const Z4Mat& M, const Z4Mat& N) {
  if (!(N * M).is_zero())
    return false;
  return log2_kernel(N) == 2 * M.cols() - log2_kernel(M);
}

/// c with c u_s = u_d b and v_d c = a v_s
std::optional<Z4Mat> solve_third(const Z4Mat& us, const Z4Mat& vs, const Z4Mat& ud, const Z4Mat& vd,
                                 const Z4Mat& a, const Z4Mat& b) {
  const std::size_t cs = us.rows(), cd = ud.rows();
  const Z4Mat M = vstack({sandwich(Z4Mat::identity(cd), us), sandwich(vd, Z4Mat::identity(cs))}, cd * cs);
  std::vector<int> y = vec(ud * b);
  const auto y2 = vec(a * vs);
  y.insert(y.end(), y2.begin(), y2.end());
  const auto x = z4_solve_min(M, y);
  if (!x)
    return std::nullopt;
  return unvec(cd, cs, *x);
}

std::vector<Z4Mat> all_matrices(std::size_t rows, std::size_t cols) {
  std::vector<Z4Mat> out;
  const std::size_t n = rows * cols;
  std::vector<int> digits(n, 0);
  while (true) {
    out.emplace_back(rows, cols, digits);
    std::size_t k = n;
    while (k > 0 && digits[k - 1] == 3)
      digits[--k] = 0;
    if (k == 0)
      break;
    ++digits[k - 1];
  }
  return out;
}

} // namespace

std::optional<std::vector<int>> z4_solve_min(const Z4Mat& M, const std::vector<int>& y) {
  const std::size_t n = M.cols();
  if (y.size() != M.rows())
    throw ContractViolation("right-hand side has the wrong length");
  const DiagForm d = z4_diagonal_form(M);
  std::vector<int> py(M.rows(), 0);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    int s = 0;
    for (std::size_t j = 0; j < M.rows(); ++j)
      s += d.P(i, j) * y[j];
    py[i] = s & 3;
  }
  std::vector<int> z(n, 0);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (i < d.ones)
      z[i] = py[i];
    else if (i >= n) {
      if (py[i] != 0)
        return std::nullopt;
    }
    else if (i < d.ones + d.twos) {
      if (py[i] % 2)
        return std::nullopt;
      z[i] = py[i] / 2;
    } else if (py[i] != 0)
      return std::nullopt;
  }
  std::vector<int> x(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int s = 0;
    for (std::size_t j = 0; j < n; ++j)
      s += d.Q(i, j) * z[j];
    x[i] = s & 3;
  }
  // greedy lexicographic minimization over x + ker M
  std::vector<std::vector<int>> gens = Z4Kernel(M).generators();
  for (std::size_t j = 0; j < n && !gens.empty(); ++j) {
    std::size_t best = gens.size();
    int best_val = x[j], best_scale = 0;
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (int s = 1; s < 4; ++s) {
        const int v = (x[j] + s * gens[k][j]) & 3;
        if (v < best_val) {
          best_val = v;
          best = k;
          best_scale = s;
        }
      }
    if (best < gens.size())
      for (std::size_t i = 0; i < n; ++i)
        x[i] = (x[i] + best_scale * gens[best][i]) & 3;
    Z4Mat row(1, gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k)
      row.set(0, k, gens[k][j]);
    std::vector<std::vector<int>> next;
    const Z4Kernel K(row);
    for (const auto& kappa : K.generators()) {
      std::vector<int> g(n, 0);
      for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
          g[i] = (g[i] + kappa[k] * gens[k][i]) & 3;
      if (std::any_of(g.begin(), g.end(), [](int v) { return v != 0; }))
        next.push_back(std::move(g));
    }
    gens = std::move(next);
  }
  return x;
}

std::size_t log2_kernel(const Z4Mat& M) {
  const DiagForm d = z4_diagonal_form(M);
  return d.twos + 2 * (M.cols() - d.ones - d.twos);
}

TriangleData cone(const Z4Mat& f) {
  const std::size_t m = f.rows(), n = f.cols();
  const DiagForm d = z4_diagonal_form(f);
  struct Summand {
    std::size_t b = SIZE_MAX, a = SIZE_MAX; // coordinate index in B' / A'
    int u = 0, v = 0;
  };
  std::vector<Summand> sums;
  for (std::size_t k = 0; k < std::max(m, n); ++k) {
    if (k < m && k < n) {
      const int e = d.D(k, k);
      if (e == 2)
        sums.push_back({k, k, 2, 2});
      else if (e == 0) {
        sums.push_back({k, SIZE_MAX, 1, 0});
        sums.push_back({SIZE_MAX, k, 0, 3});
      }
    } else if (k < m)
      sums.push_back({k, SIZE_MAX, 1, 0});
    else
      sums.push_back({SIZE_MAX, k, 0, 3});
  }
  Z4Mat uD(sums.size(), m), vD(n, sums.size());
  for (std::size_t s = 0; s < sums.size(); ++s) {
    if (sums[s].b != SIZE_MAX)
      uD.set(s, sums[s].b, sums[s].u);
    if (sums[s].a != SIZE_MAX)
      vD.set(sums[s].a, s, sums[s].v);
  }
  return {f, uD * d.P, d.Q * vD};
}

bool is_acyclic(const Z4Mat& f, const Z4Mat& u, const Z4Mat& v, std::size_t test_rank) {
  if (!(u * f).is_zero() || !(v * u).is_zero() || !(f * v).is_zero())
    return false;
  const Z4Mat nf = -f;
  for (std::size_t k = 0; k <= test_rank; ++k) {
    // hom(X, -)
    if (!exact_pair(kron_id_right(f, k), kron_id_right(u, k)) ||
        !exact_pair(kron_id_right(u, k), kron_id_right(v, k)) ||
        !exact_pair(kron_id_right(v, k), kron_id_right(nf, k)))
      return false;
    // hom(-, X)
    if (!exact_pair(kron_pre(v, k), kron_pre(u, k)) || !exact_pair(kron_pre(u, k), kron_pre(f, k)) ||
        !exact_pair(kron_pre(nf, k), kron_pre(v, k)))
      return false;
  }
  return true;
}

TriangleData rotate(const TriangleData& T) { return {T.u, T.v, -T.f}; }

Obj arrow_obj(const Z4Mat& f) {
  return {"arrow", "", {Z4Free::object(f.cols()), Z4Free::object(f.rows())}, f.longs()};
}

Z4Mat arrow_mat(const Obj& f) {
  if (f.kind != "arrow" || f.parts.size() != 2)
    throw ContractViolation("not an arrow of F(Z/4): " + f.to_string());
  const std::size_t n = Z4Free::rank_of(f.parts[0]), m = Z4Free::rank_of(f.parts[1]);
  std::vector<int> e(f.data.begin(), f.data.end());
  return Z4Mat(m, n, e);
}

Obj bang(std::size_t rank) { return arrow_obj(Z4Mat(rank, 0)); }
Obj hat(std::size_t rank) { return arrow_obj(Z4Mat(0, rank)); }

Obj muro_object(const std::string& name) {
  if (name == "d")
    return bang(1);
  if (name == "c")
    return hat(1);
  if (name == "i")
    return arrow_obj(Z4Mat(1, 1, {1}));
  if (name == "t")
    return arrow_obj(Z4Mat(1, 1, {2}));
  throw InvalidInput("unknown object '" + name + "' (expected d, c, i or t)");
}

std::vector<Obj> arrows_between(std::size_t r) {
  std::vector<Obj> out;
  for (std::size_t n = 0; n <= r; ++n)
    for (std::size_t m = 0; m <= r; ++m)
      for (const auto& f : all_matrices(m, n))
        out.push_back(arrow_obj(f));
  return out;
}

const TriangleData& Triangles0::triangle(const Obj& f) const {
  return *triangles_.get(f, [&] { return cone(arrow_mat(f)); });
}

const Z4Kernel& Triangles0::kernel(const Obj& f, const Obj& g) const {
  return *kernels_.get({f, g}, [&] {
    const TriangleData &S = triangle(f), &D = triangle(g);
    const std::size_t na = D.a() * S.a(), nb = D.b() * S.b(), nc = D.c() * S.c();
    const std::size_t n = na + nb + nc;
    // f' a - b f, u' b - c u, v' c - a v
    Z4Mat e1 = hstack({sandwich(D.f, Z4Mat::identity(S.a())), -sandwich(Z4Mat::identity(D.b()), S.f),
                       Z4Mat(D.b() * S.a(), nc)});
    Z4Mat e2 = hstack({Z4Mat(D.c() * S.b(), na), sandwich(D.u, Z4Mat::identity(S.b())),
                       -sandwich(Z4Mat::identity(D.c()), S.u)});
    Z4Mat e3 = hstack({-sandwich(Z4Mat::identity(D.a()), S.v), Z4Mat(D.a() * S.c(), nb),
                       sandwich(D.v, Z4Mat::identity(S.c()))});
    return Z4Kernel(vstack({e1, e2, e3}, n));
  });
}

Triple Triangles0::components(const Obj& f, const Obj& g, const Mor& x) const {
  const TriangleData &S = triangle(f), &D = triangle(g);
  const auto v = kernel(f, g).decode(x);
  const std::size_t na = D.a() * S.a(), nb = D.b() * S.b();
  return {unvec(D.a(), S.a(), v, 0), unvec(D.b(), S.b(), v, na), unvec(D.c(), S.c(), v, na + nb)};
}

bool Triangles0::valid(const Obj& f, const Obj& g, const Triple& t) const {
  const TriangleData &S = triangle(f), &D = triangle(g);
  if (t.a.rows() != D.a() || t.a.cols() != S.a() || t.b.rows() != D.b() || t.b.cols() != S.b() ||
      t.c.rows() != D.c() || t.c.cols() != S.c())
    return false;
  return D.f * t.a == t.b * S.f && D.u * t.b == t.c * S.u && D.v * t.c == t.a * S.v;
}

Mor Triangles0::triple(const Obj& f, const Obj& g, const Triple& t) const {
  if (!valid(f, g, t))
    throw ContractViolation("triple (" + t.a.to_string() + ";" + t.b.to_string() + ";" + t.c.to_string() +
                            ") is not a morphism of Triangles0");
  std::vector<int> v = vec(t.a);
  for (const auto* m : {&t.b, &t.c}) {
    const auto w = vec(*m);
    v.insert(v.end(), w.begin(), w.end());
  }
  return kernel(f, g).encode(v);
}

const Z4Mat& Triangles0::psi(const Obj& f) const {
  return *psis_.get(f, [&] {
    const TriangleData& S = triangle(f);
    const TriangleData& D = triangle(translate(f));
    auto c = solve_third(-S.u, -S.v, D.u, D.v, Z4Mat::identity(S.a()), Z4Mat::identity(S.b()));
    if (!c || !c->invertible())
      throw ContractViolation("no invertible comparison for the translated triangle");
    return *c;
  });
}

Mor Triangles0::compose(const Obj& f, const Obj& g, const Obj& h, const Mor& y, const Mor& x) const {
  const Triple s = components(f, g, x), t = components(g, h, y);
  return triple(f, h, {t.a * s.a, t.b * s.b, t.c * s.c});
}

Mor Triangles0::identity(const Obj& f) const {
  const TriangleData& S = triangle(f);
  return triple(f, f, {Z4Mat::identity(S.a()), Z4Mat::identity(S.b()), Z4Mat::identity(S.c())});
}

std::vector<Obj> Triangles0::window(std::size_t rank_bound) const {
  std::vector<Obj> out;
  for (std::size_t n = 0; n <= rank_bound; ++n)
    for (std::size_t m = 0; n + m <= rank_bound; ++m)
      for (const auto& f : all_matrices(m, n))
        out.push_back(arrow_obj(f));
  return out;
}

std::size_t Triangles0::rank(const Obj& f) const {
  const Z4Mat m = arrow_mat(f);
  return m.rows() + m.cols();
}

std::string Triangles0::describe(const Obj& f, const Obj& g, const Mor& x) const {
  const Triple t = components(f, g, x);
  return "(" + t.a.to_string() + ";" + t.b.to_string() + ";" + t.c.to_string() + ")";
}

Biproduct Triangles0::direct_sum(const Obj& f, const Obj& g) const {
  const TriangleData &S = triangle(f), &D = triangle(g);
  Z4Mat s(S.b() + D.b(), S.a() + D.a());
  s.put(0, 0, S.f);
  s.put(S.b(), S.a(), D.f);
  const Obj so = arrow_obj(s);
  const TriangleData& T = triangle(so);
  Z4Mat us(S.c() + D.c(), S.b() + D.b()), vs(S.a() + D.a(), S.c() + D.c());
  us.put(0, 0, S.u);
  us.put(S.c(), S.b(), D.u);
  vs.put(0, 0, S.v);
  vs.put(S.a(), S.c(), D.v);
  const auto psi = solve_third(us, vs, T.u, T.v, Z4Mat::identity(S.a() + D.a()), Z4Mat::identity(S.b() + D.b()));
  if (!psi)
    throw ContractViolation("sum triangle does not map to the chosen triangle");
  const auto psi_inv = psi->inverse();
  if (!psi_inv)
    throw ContractViolation("comparison with the chosen triangle is not invertible");
  auto inj = [](std::size_t total, std::size_t off, std::size_t k) {
    Z4Mat m(total, k);
    m.put(off, 0, Z4Mat::identity(k));
    return m;
  };
  auto proj = [](std::size_t total, std::size_t off, std::size_t k) {
    Z4Mat m(k, total);
    m.put(0, off, Z4Mat::identity(k));
    return m;
  };
  const std::size_t A = S.a() + D.a(), B = S.b() + D.b(), C = S.c() + D.c();
  const Mor i1 = triple(f, so, {inj(A, 0, S.a()), inj(B, 0, S.b()), *psi * inj(C, 0, S.c())});
  const Mor i2 = triple(g, so, {inj(A, S.a(), D.a()), inj(B, S.b(), D.b()), *psi * inj(C, S.c(), D.c())});
  const Mor r1 = triple(so, f, {proj(A, 0, S.a()), proj(B, 0, S.b()), proj(C, 0, S.c()) * *psi_inv});
  const Mor r2 = triple(so, g, {proj(A, S.a(), D.a()), proj(B, S.b(), D.b()), proj(C, S.c(), D.c()) * *psi_inv});
  return {so, i1, i2, r1, r2};
}

Mor Triangles0::translate_mor(const Obj& f, const Obj& g, const Mor& x) const {
  const Triple t = components(f, g, x);
  const Z4Mat pf_inv = *psi(f).inverse();
  return triple(translate(f), translate(g), {t.a, t.b, psi(g) * t.c * pf_inv});
}

Z4Mat lift_tr5(const Triangles0& T, const Obj& f, const Obj& g, const Z4Mat& a, const Z4Mat& b) {
  const TriangleData &S = T.triangle(f), &D = T.triangle(g);
  if (a.rows() != D.a() || a.cols() != S.a() || b.rows() != D.b() || b.cols() != S.b())
    throw ContractViolation("square components have the wrong shape");
  if (!(D.f * a == b * S.f))
    throw ContractViolation("NonCommutingSquare: f' a != b f");
  const auto c = solve_third(S.u, S.v, D.u, D.v, a, b);
  if (!c)
    throw ContractViolation("no TR5 lift exists");
  return *c;
}

Mor lift_tr5_mor(const Triangles0& T, const Obj& f, const Obj& g, const Z4Mat& a, const Z4Mat& b) {
  return T.triple(f, g, {a, b, lift_tr5(T, f, g, a, b)});
}

Z4Kernel theta_kernel(const Triangles0& T, const Obj& f, const Obj& g) {
  const TriangleData &S = T.triangle(f), &D = T.triangle(g);
  return Z4Kernel(vstack({sandwich(Z4Mat::identity(D.c()), S.u), sandwich(D.v, Z4Mat::identity(S.c()))},
                         D.c() * S.c()));
}

GroupMor PiFunctor::on_hom(const Obj& f, const Obj& g) const {
  const FinAbGroup src = T_.hom(f, g), dst = AC_.hom(f, g);
  IntMatrix m(dst.ngens(), src.ngens());
  for (std::size_t k = 0; k < src.ngens(); ++k) {
    const Triple t = T_.components(f, g, src.gen(k));
    m.set_column(k, AC_.pair(f, g, t.a.coords(), t.b.coords()));
  }
  return GroupMor(src, dst, std::move(m));
}

const Z4Kernel& ThetaBifunctor::kernel(const Obj& f, const Obj& g) const {
  return *kernels_.get({f, g}, [&] { return theta_kernel(T_, f, g); });
}

Z4Mat ThetaBifunctor::element(const Obj& f, const Obj& g, const IntVec& x) const {
  return unvec(T_.triangle(g).c(), T_.triangle(f).c(), kernel(f, g).decode(x));
}

IntVec ThetaBifunctor::encode(const Obj& f, const Obj& g, const Z4Mat& c) const {
  return kernel(f, g).encode(vec(c));
}

Mor ThetaBifunctor::to_total(const Obj& f, const Obj& g, const IntVec& x) const {
  const TriangleData &S = T_.triangle(f), &D = T_.triangle(g);
  return T_.triple(f, g, {Z4Mat(D.a(), S.a()), Z4Mat(D.b(), S.b()), element(f, g, x)});
}

IntVec ThetaBifunctor::post(const Obj& f, const Obj& g, const Obj& g2, const Mor& y, const IntVec& x) const {
  const auto [a, b] = AC_.components(g, g2, y);
  const Z4Mat gamma = lift_tr5(T_, g, g2, Z4Free::matrix(catops::ArrowCategory::source(g),
                                                          catops::ArrowCategory::source(g2), a),
                               Z4Free::matrix(catops::ArrowCategory::target(g), catops::ArrowCategory::target(g2), b));
  return encode(f, g2, gamma * element(f, g, x));
}

IntVec ThetaBifunctor::pre(const Obj& f2, const Obj& f, const Obj& g, const Mor& y, const IntVec& x) const {
  const auto [a, b] = AC_.components(f2, f, y);
  const Z4Mat gamma = lift_tr5(T_, f2, f, Z4Free::matrix(catops::ArrowCategory::source(f2),
                                                          catops::ArrowCategory::source(f), a),
                               Z4Free::matrix(catops::ArrowCategory::target(f2), catops::ArrowCategory::target(f), b));
  return encode(f2, g, element(f, g, x) * gamma);
}

IntVec ThetaBifunctor::tau(const Obj& f, const Obj& g, const IntVec& x) const {
  const Z4Mat c = T_.psi(g) * element(f, g, x) * *T_.psi(f).inverse();
  return encode(T_.translate(f), T_.translate(g), c);
}

GroupMor ThetaTransformation::component(const Obj& f, const Obj& g) const {
  const FinAbGroup src = Y_.value(f, g), dst = Th_.value(f, g);
  const TriangleData &S = T_.triangle(f), &D = T_.triangle(g);
  IntMatrix m(dst.ngens(), src.ngens());
  for (std::size_t k = 0; k < src.ngens(); ++k) {
    const Mor rep = Y_.representative(f, g, src.gen(k));
    const Z4Mat x = Z4Mat::from_coords(D.b(), S.a(), rep);
    m.set_column(k, Th_.encode(f, g, D.u * x * S.v));
  }
  return GroupMor(src, dst, std::move(m));
}

bool is_excising(const Triangles0& T, const Obj& f, const Obj& g, const Mor& x) {
  const Z4Mat c = T.components(f, g, x).c;
  return c.rows() == c.cols() && c.invertible();
}

bool is_excising_paranoid(const Triangles0& T, const Obj& f, const Obj& g, const Mor& x,
                          std::size_t test_rank) {
  for (std::size_t k = 0; k <= test_rank; ++k)
    if (!abgrp::is_isomorphism(T.post(hat(k), f, g, x)))
      return false;
  return true;
}

Pretriangle pretriangle(const Triangles0& T, const Obj& f) {
  const TriangleData& S = T.triangle(f);
  Pretriangle p;
  p.f = f;
  p.bang_a = bang(S.a());
  p.bang_b = bang(S.b());
  p.bang_a1 = bang(S.a());
  p.bang_f = lift_tr5_mor(T, p.bang_a, p.bang_b, Z4Mat(0, 0), S.f);
  p.i_f = lift_tr5_mor(T, p.bang_b, f, Z4Mat(S.a(), 0), Z4Mat::identity(S.b()));
  p.j_f = T.triple(f, p.bang_a1, {Z4Mat(0, S.a()), Z4Mat(S.a(), S.b()), S.v});
  p.unique_lifts = theta_kernel(T, p.bang_a, p.bang_b).group().trivial() &&
                   theta_kernel(T, p.bang_b, f).group().trivial();
  return p;
}

void CheckReport::record(bool pass, const std::string& what) {
  ++checks;
  lines.push_back((pass ? "PASS " : "FAIL ") + what);
  if (!pass)
    failures.push_back(what);
}

CheckReport homology_check(const Triangles0& T, std::size_t x_rank, const std::vector<Obj>& instances) {
  CheckReport rep;
  const Obj X = hat(x_rank);
  const auto window = T.window(2);
  for (const auto& f : instances) {
    const std::string tag = "f=" + arrow_mat(f).to_string() + " X=" + std::to_string(x_rank);
    const Pretriangle p = pretriangle(T, f);
    const Obj bang_b1 = bang(T.triangle(f).b());
    const Mor bang_next = lift_tr5_mor(T, p.bang_a1, bang_b1, Z4Mat(0, 0), -T.triangle(f).f);
    const GroupMor e1 = T.post(X, p.bang_a, p.bang_b, p.bang_f);
    const GroupMor e2 = T.post(X, p.bang_b, f, p.i_f);
    const GroupMor e3 = T.post(X, f, p.bang_a1, p.j_f);
    const GroupMor e4 = T.post(X, p.bang_a1, bang_b1, bang_next);
    rep.record(abgrp::is_exact_at(e1, e2), "exactness at E(!_B) " + tag);
    rep.record(abgrp::is_exact_at(e2, e3), "exactness at E([f]) " + tag);
    rep.record(abgrp::is_exact_at(e3, e4), "exactness at E(!_A[1]) " + tag);

    // sampled excising morphism out of [f], other than the identity
    std::optional<std::pair<Obj, Mor>> sample;
    for (const auto& g : window) {
      if (g == f)
        continue;
      const FinAbGroup H = T.hom(f, g);
      if (H.order() > 4096)
        continue;
      for (const auto& x : abgrp::enumerate_elements(H))
        if (is_excising(T, f, g, x)) {
          sample = {{g, x}};
          break;
        }
      if (sample)
        break;
    }
    if (!sample)
      sample = {{f, T.identity(f)}};
    const auto& [g, x] = *sample;
    rep.record(abgrp::is_isomorphism(T.post(X, f, g, x)),
               "excision " + tag + " via " + T.describe(f, g, x) + " to " + arrow_mat(g).to_string());
  }
  return rep;
}

CheckReport square_zero_check(const Triangles0& T, std::size_t r, std::size_t* pairs) {
  const auto objs = arrows_between(r);
  const std::size_t n = objs.size();
  for (const auto& f : objs)
    T.triangle(f);
  std::vector<std::size_t> covered(n, 0);
  std::vector<std::string> bad(n);
  parallel_for(n, [&](std::size_t gi) {
    const Obj& g = objs[gi];
    const std::size_t cg = T.triangle(g).c();
    std::set<std::vector<int>> cols, rows;
    std::size_t in = 0, out = 0;
    for (const auto& f : objs) {
      const Z4Kernel K = theta_kernel(T, f, g);
      const std::size_t cf = T.triangle(f).c();
      for (const auto& v : K.generators()) {
        ++in;
        const Z4Mat c = unvec(cg, cf, v);
        for (std::size_t j = 0; j < cf; ++j) {
          std::vector<int> col(cg);
          for (std::size_t i = 0; i < cg; ++i)
            col[i] = c(i, j);
          cols.insert(col);
        }
      }
      const Z4Kernel K2 = theta_kernel(T, g, f);
      for (const auto& v : K2.generators()) {
        ++out;
        const Z4Mat c = unvec(cf, cg, v);
        for (std::size_t i = 0; i < cf; ++i) {
          std::vector<int> row(cg);
          for (std::size_t j = 0; j < cg; ++j)
            row[j] = c(i, j);
          rows.insert(row);
        }
      }
    }
    covered[gi] = in * out;
    for (const auto& row : rows)
      for (const auto& col : cols) {
        int s = 0;
        for (std::size_t k = 0; k < cg; ++k)
          s += row[k] * col[k];
        if (s & 3) {
          bad[gi] = "nonzero composite through " + arrow_mat(g).to_string();
          return;
        }
      }
  });
  CheckReport rep;
  std::size_t total = 0;
  for (std::size_t gi = 0; gi < n; ++gi) {
    total += covered[gi];
    rep.record(bad[gi].empty(), bad[gi].empty() ? "middle " + arrow_mat(objs[gi]).to_string() : bad[gi]);
  }
  if (pairs)
    *pairs = total;
  return rep;
}

CheckReport conrep_check(const Triangles0& T, const Obj& f, std::size_t x_rank) {
  CheckReport rep;
  const TriangleData& S = T.triangle(f);
  const std::string tag = "f=" + arrow_mat(f).to_string() + " X=" + std::to_string(x_rank);

  const Obj bx = bang(x_rank), hx = hat(x_rank);
  auto to_bang = [&](const Z4Mat& c) {
    return T.triple(f, bx, {Z4Mat(0, S.a()), c * S.u, c});
  };
  auto from_hat = [&](const Z4Mat& c) {
    return T.triple(hx, f, {-(S.v * c), Z4Mat(S.b(), 0), c});
  };
  for (int side = 0; side < 2; ++side) {
    const std::size_t rows = side == 0 ? x_rank : S.c(), cols = side == 0 ? S.c() : x_rank;
    const FinAbGroup H = side == 0 ? T.hom(f, bx) : T.hom(hx, f);
    const auto all = all_matrices(rows, cols);
    std::set<Mor> images;
    bool valid = true;
    for (const auto& c : all) {
      try {
        images.insert(side == 0 ? to_bang(c) : from_hat(c));
      } catch (const ContractViolation&) {
        valid = false;
      }
    }
    const std::string what = side == 0 ? "hom([f],!_X) ~ hom(C_f,X) " : "hom(^X!,[f]) ~ hom(X,C_f) ";
    rep.record(valid && images.size() == all.size() && Int(all.size()) == H.order(), what + "bijective " + tag);
    bool additive = true;
    for (std::size_t p = 0; p < all.size() && additive; p += std::max<std::size_t>(1, all.size() / 16))
      for (std::size_t q = 0; q < all.size(); q += std::max<std::size_t>(1, all.size() / 16)) {
        const auto& c1 = all[p];
        const auto& c2 = all[q];
        const Mor lhs = side == 0 ? to_bang(c1 + c2) : from_hat(c1 + c2);
        const Mor rhs = H.add(side == 0 ? to_bang(c1) : from_hat(c1), side == 0 ? to_bang(c2) : from_hat(c2));
        if (lhs != rhs) {
          additive = false;
          break;
        }
      }
    rep.record(additive, what + "additive " + tag);
  }
  return rep;
}

} // namespace singext::muro
