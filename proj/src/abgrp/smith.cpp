#include "singext/abgrp/smith.hpp"

#include "singext/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace singext::abgrp {

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  const std::size_t k = std::min(D.rows(), D.cols());
  d.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    d.push_back(D(i, i));
  return d;
}

namespace {

struct SnfState {
  IntMatrix A, U, Uinv, V, Vinv;

  void swap_rows(std::size_t i, std::size_t j) {
    A.swap_rows(i, j);
    U.swap_rows(i, j);
    Uinv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    A.swap_cols(i, j);
    V.swap_cols(i, j);
    Vinv.swap_rows(i, j);
  }
  // row i += k row j
  void add_row(std::size_t i, std::size_t j, const Int& k) {
    A.add_row_multiple(i, j, k);
    U.add_row_multiple(i, j, k);
    Uinv.add_col_multiple(j, i, -k);
  }
  // col i += k col j
  void add_col(std::size_t i, std::size_t j, const Int& k) {
    A.add_col_multiple(i, j, k);
    V.add_col_multiple(i, j, k);
    Vinv.add_row_multiple(j, i, -k);
  }
  void negate_row(std::size_t i) {
    A.negate_row(i);
    U.negate_row(i);
    Uinv.negate_col(i);
  }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
  const std::size_t r = M.rows(), c = M.cols();
  SnfState s{M, IntMatrix::identity(r), IntMatrix::identity(r), IntMatrix::identity(c),
             IntMatrix::identity(c)};
  std::size_t rank = 0;
  for (std::size_t k = 0; k < std::min(r, c); ++k) {
    for (;;) {
      // pivot: smallest nonzero |entry|, first in row-major order
      bool found = false;
      std::size_t pi = 0, pj = 0;
      Int best;
      for (std::size_t i = k; i < r; ++i)
        for (std::size_t j = k; j < c; ++j) {
          const Int& x = s.A(i, j);
          if (x == 0)
            continue;
          Int ax = abs(x);
          if (!found || ax < best) {
            found = true;
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (!found)
        goto done;
      s.swap_rows(k, pi);
      s.swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < r; ++i) {
        if (s.A(i, k) == 0)
          continue;
        Int q = s.A(i, k) / s.A(k, k);
        s.add_row(i, k, -q);
        if (s.A(i, k) != 0)
          clean = false;
      }
      for (std::size_t j = k + 1; j < c; ++j) {
        if (s.A(k, j) == 0)
          continue;
        Int q = s.A(k, j) / s.A(k, k);
        s.add_col(j, k, -q);
        if (s.A(k, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // divisibility of the remaining block by the pivot
      bool divides = true;
      for (std::size_t i = k + 1; i < r && divides; ++i)
        for (std::size_t j = k + 1; j < c; ++j)
          if (s.A(i, j) % s.A(k, k) != 0) {
            s.add_row(k, i, 1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (s.A(k, k) < 0)
      s.negate_row(k);
    ++rank;
  }
done:
  SmithForm out;
  out.U = std::move(s.U);
  out.U_inv = std::move(s.Uinv);
  out.D = std::move(s.A);
  out.V = std::move(s.V);
  out.V_inv = std::move(s.Vinv);
  out.rank = rank;
  return out;
}

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Int> invariant_factors_by_minors(const IntMatrix& M) {
  const std::size_t kmax = std::min(M.rows(), M.cols());
  std::vector<Int> minor_gcd; // g_k for k = 1..kmax
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    combinations(M.rows(), k, 0, cur, rs);
    combinations(M.cols(), k, 0, cur, cs);
    Int g = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        IntMatrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b)
            sub(a, b) = M(ri[a], ci[b]);
        g = gcd(g, abs(sub.determinant()));
      }
    minor_gcd.push_back(g);
  }
  std::vector<Int> d;
  Int prev = 1;
  for (const auto& g : minor_gcd) {
    if (g == 0) {
      d.push_back(0);
      prev = 0;
      continue;
    }
    d.push_back(g / prev);
    prev = g;
  }
  return d;
}

IntSolver::IntSolver(const IntMatrix& A) : A_(A), snf_(smith_normal_form(A)) {}

std::optional<IntVec> IntSolver::solve(const IntVec& b) const {
  if (b.size() != A_.rows())
    throw InvalidInput("right-hand side has wrong length");
  const IntVec ub = snf_.U * b;
  IntVec w(A_.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < snf_.rank) {
      const Int& d = snf_.D(i, i);
      if (ub[i] % d != 0)
        return std::nullopt;
      w[i] = ub[i] / d;
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf_.V * w;
}

IntMatrix IntSolver::kernel_basis() const {
  const std::size_t p = A_.cols();
  IntMatrix K(p, p - snf_.rank);
  for (std::size_t j = snf_.rank; j < p; ++j)
    for (std::size_t i = 0; i < p; ++i)
      K(i, j - snf_.rank) = snf_.V(i, j);
  return K;
}

// ---------------------------------------------------------------- Lattice

IntVec Lattice::reduce(IntVec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p] == 0)
      continue;
    const Int q = v[p] / rows_[k][p];
    if (q != 0)
      for (std::size_t j = p; j < n_; ++j)
        v[j] -= q * rows_[k][j];
  }
  return v;
}

void Lattice::add(IntVec v) {
  if (v.size() != n_)
    throw InvalidInput("lattice vector has wrong length");
  std::deque<IntVec> queue{std::move(v)};
  while (!queue.empty()) {
    IntVec w = std::move(queue.front());
    queue.pop_front();
    std::size_t k = 0;
    for (std::size_t c = 0; c < n_; ++c) {
      if (w[c] == 0)
        continue;
      while (k < pivots_.size() && pivots_[k] < c)
        ++k;
      if (k < pivots_.size() && pivots_[k] == c) {
        IntVec& row = rows_[k];
        auto [g, s, t] = ext_gcd(row[c], w[c]);
        const Int a = row[c] / g, b = w[c] / g;
        IntVec merged(n_), rest(n_);
        for (std::size_t j = c; j < n_; ++j) {
          merged[j] = s * row[j] + t * w[j];
          rest[j] = a * w[j] - b * row[j];
        }
        row = std::move(merged);
        w = std::move(rest);
        continue;
      }
      if (w[c] < 0)
        for (auto& x : w)
          x = -x;
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), std::move(w));
      pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(k), c);
      break;
    }
  }
}

bool Lattice::contains(IntVec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    for (std::size_t c = (k ? pivots_[k - 1] + 1 : 0); c < p; ++c)
      if (v[c] != 0)
        return false;
    if (v[p] % rows_[k][p] != 0)
      return false;
    const Int q = v[p] / rows_[k][p];
    for (std::size_t j = p; j < n_; ++j)
      v[j] -= q * rows_[k][j];
  }
  for (const auto& x : v)
    if (x != 0)
      return false;
  return true;
}

bool Lattice::unit_pivots_in_prefix(std::size_t k) const {
  for (std::size_t c = 0; c < k; ++c) {
    auto it = std::find(pivots_.begin(), pivots_.end(), c);
    if (it == pivots_.end() || rows_[static_cast<std::size_t>(it - pivots_.begin())][c] != 1)
      return false;
  }
  return true;
}

IntVec Lattice::reduce_prefix(IntVec v, std::size_t k) const {
  for (std::size_t r = 0; r < rows_.size() && pivots_[r] < k; ++r) {
    const Int q = v[pivots_[r]] / rows_[r][pivots_[r]];
    if (q != 0)
      for (std::size_t j = pivots_[r]; j < n_; ++j)
        v[j] -= q * rows_[r][j];
  }
  return v;
}

// ------------------------------------------------------------- ModLattice

namespace {

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

// (g, s, t) with s a + t b = g = gcd(a, b) > 0; a, b not both zero.
void egcd64(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t r = a - q * b;
    a = b;
    b = r;
    r = s0 - q * s1;
    s0 = s1;
    s1 = r;
    r = t0 - q * t1;
    t0 = t1;
    t1 = r;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  g = a;
  s = s0;
  t = t0;
}

} // namespace

ModLattice::ModLattice(std::size_t n, std::int64_t modulus)
    : n_(n), m_(modulus), row_of_pivot_(n) {
  if (modulus < 1 || modulus >= (std::int64_t{1} << 31))
    throw InvalidInput("ModLattice modulus out of range");
}

void ModLattice::normalize(std::vector<std::int64_t>& v) const {
  for (auto& x : v)
    x = mod64(x, m_);
}

void ModLattice::add(std::vector<std::int64_t> v) {
  if (v.size() != n_)
    throw InvalidInput("lattice vector has wrong length");
  normalize(v);
  std::deque<std::vector<std::int64_t>> queue{std::move(v)};
  while (!queue.empty()) {
    auto w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t c = 0; c < n_; ++c) {
      if (w[c] == 0)
        continue;
      auto& row = row_of_pivot_[c];
      if (!row.empty()) {
        std::int64_t g, s, t;
        egcd64(row[c], w[c], g, s, t);
        const std::int64_t a = row[c] / g, b = w[c] / g;
        for (std::size_t j = c; j < n_; ++j) {
          const std::int64_t merged = s * row[j] + t * w[j];
          const std::int64_t rest = a * w[j] - b * row[j];
          row[j] = merged;
          w[j] = rest;
        }
        normalize(row);
        if (row[c] == 0)
          row[c] = m_; // cannot happen for g | m, g < m; kept for safety of the invariant
        normalize(w);
        continue;
      }
      // new pivot: merge with the implicit m * e_c
      std::int64_t g, s, t;
      egcd64(w[c], m_, g, s, t);
      std::vector<std::int64_t> pivot_row(n_, 0), rest(n_, 0);
      for (std::size_t j = c; j < n_; ++j) {
        pivot_row[j] = s * w[j];
        rest[j] = (m_ / g) * w[j];
      }
      pivot_row[c] = g;
      rest[c] = 0;
      for (std::size_t j = c + 1; j < n_; ++j)
        pivot_row[j] = mod64(pivot_row[j], m_);
      normalize(rest);
      if (g == m_) {
        // w[c] is a multiple of m: nothing new in this column
        w = std::move(rest);
        continue;
      }
      row = std::move(pivot_row);
      queue.push_back(std::move(rest));
      break;
    }
  }
}

IntMatrix ModLattice::matrix() const {
  std::vector<IntVec> rows;
  for (std::size_t c = 0; c < n_; ++c) {
    IntVec r(n_);
    if (row_of_pivot_[c].empty()) {
      r[c] = m_;
    } else {
      for (std::size_t j = 0; j < n_; ++j)
        r[j] = row_of_pivot_[c][j];
    }
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows, n_);
}

IntVec ModLattice::reduce_prefix(IntVec v, std::size_t k) const {
  for (std::size_t c = 0; c < k && c < n_; ++c) {
    const auto& row = row_of_pivot_[c];
    if (row.empty() || v[c] == 0)
      continue;
    const Int q = v[c] / row[c];
    for (std::size_t j = c; j < n_; ++j)
      v[j] -= q * row[j];
  }
  for (auto& x : v)
    x = mod_floor(x, m_);
  return v;
}

bool ModLattice::unit_pivots_in_prefix(std::size_t k) const {
  if (m_ == 1)
    return true;
  for (std::size_t c = 0; c < k && c < n_; ++c)
    if (row_of_pivot_[c].empty() || row_of_pivot_[c][c] != 1)
      return false;
  return true;
}

} // namespace singext::abgrp
