#include "singext/muro/z4.hpp"

#include "singext/errors.hpp"

#include <sstream>

namespace singext::muro {

namespace {

int m4(int v) { return ((v % 4) + 4) % 4; }

} // namespace

Z4Mat::Z4Mat(std::size_t rows, std::size_t cols, const std::vector<int>& entries) : Z4Mat(rows, cols) {
  if (entries.size() != rows * cols)
    throw InvalidInput("matrix entry count does not match shape");
  for (std::size_t k = 0; k < entries.size(); ++k)
    a_[k] = static_cast<std::uint8_t>(m4(entries[k]));
}

Z4Mat Z4Mat::identity(std::size_t n) { return scalar(n, 1); }

Z4Mat Z4Mat::scalar(std::size_t n, int k) {
  Z4Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i, k);
  return m;
}

Z4Mat Z4Mat::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s += ch;
  auto x = s.find('x');
  if (x != std::string::npos && s.find('[') == std::string::npos) {
    try {
      return Z4Mat(std::stoul(s.substr(0, x)), std::stoul(s.substr(x + 1)));
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse shape '" + text + "'");
    }
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw InvalidInput("matrix must look like [[a,b],[c,d]]: '" + text + "'");
  std::vector<std::vector<int>> rows;
  std::size_t pos = 1;
  while (pos < s.size() - 1) {
    if (s[pos] == ',') {
      ++pos;
      continue;
    }
    if (s[pos] != '[')
      throw InvalidInput("malformed matrix '" + text + "'");
    const auto close = s.find(']', pos);
    if (close == std::string::npos)
      throw InvalidInput("malformed matrix '" + text + "'");
    std::vector<int> row;
    std::stringstream ss(s.substr(pos + 1, close - pos - 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoi(tok, &used));
        if (used != tok.size())
          throw InvalidInput("bad entry");
      } catch (const std::exception&) {
        throw InvalidInput("bad matrix entry '" + tok + "'");
      }
    }
    rows.push_back(std::move(row));
    pos = close + 1;
  }
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (r.size() != c)
      throw InvalidInput("ragged matrix '" + text + "'");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Z4Mat(rows.size(), c, flat);
}

Z4Mat Z4Mat::operator*(const Z4Mat& o) const {
  if (c_ != o.r_)
    throw ContractViolation("matrix shapes do not compose");
  Z4Mat m(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const int x = a_[i * c_ + k];
      if (!x)
        continue;
      for (std::size_t j = 0; j < o.c_; ++j)
        m.a_[i * o.c_ + j] = static_cast<std::uint8_t>((m.a_[i * o.c_ + j] + x * o.a_[k * o.c_ + j]) & 3);
    }
  return m;
}

Z4Mat Z4Mat::operator+(const Z4Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_)
    throw ContractViolation("matrix shapes differ");
  Z4Mat m(*this);
  for (std::size_t k = 0; k < a_.size(); ++k)
    m.a_[k] = static_cast<std::uint8_t>((a_[k] + o.a_[k]) & 3);
  return m;
}

Z4Mat Z4Mat::operator-(const Z4Mat& o) const { return *this + (-o); }

Z4Mat Z4Mat::operator-() const { return scaled(3); }

Z4Mat Z4Mat::scaled(int k) const {
  Z4Mat m(*this);
  for (auto& x : m.a_)
    x = static_cast<std::uint8_t>(m4(x * k));
  return m;
}

bool Z4Mat::is_zero() const {
  for (auto x : a_)
    if (x)
      return false;
  return true;
}

Z4Mat Z4Mat::transpose() const {
  Z4Mat m(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      m.a_[j * r_ + i] = a_[i * c_ + j];
  return m;
}

Z4Mat Z4Mat::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  Z4Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.a_[i * cols + j] = a_[(r0 + i) * c_ + c0 + j];
  return m;
}

void Z4Mat::put(std::size_t r0, std::size_t c0, const Z4Mat& m) {
  for (std::size_t i = 0; i < m.r_; ++i)
    for (std::size_t j = 0; j < m.c_; ++j)
      a_[(r0 + i) * c_ + c0 + j] = m.a_[i * m.c_ + j];
}

bool Z4Mat::invertible() const { return inverse().has_value(); }

std::optional<Z4Mat> Z4Mat::inverse() const {
  if (r_ != c_)
    return std::nullopt;
  const DiagForm d = z4_diagonal_form(*this);
  if (d.ones != r_)
    return std::nullopt;
  // P M Q = I  =>  M^{-1} = Q P
  return d.Q * d.P;
}

IntVec Z4Mat::coords() const {
  IntVec v;
  v.reserve(a_.size());
  for (auto x : a_)
    v.emplace_back(static_cast<int>(x));
  return v;
}

Z4Mat Z4Mat::from_coords(std::size_t rows, std::size_t cols, const IntVec& v) {
  if (v.size() != rows * cols)
    throw ContractViolation("coordinate count does not match matrix shape");
  Z4Mat m(rows, cols);
  for (std::size_t k = 0; k < v.size(); ++k)
    m.a_[k] = static_cast<std::uint8_t>(static_cast<int>(abgrp::mod_floor(v[k], 4)));
  return m;
}

std::vector<long> Z4Mat::longs() const { return {a_.begin(), a_.end()}; }

std::string Z4Mat::to_string() const {
  if (r_ == 0 || c_ == 0)
    return std::to_string(r_) + "x" + std::to_string(c_);
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < c_; ++j)
      os << (j ? "," : "") << static_cast<int>(a_[i * c_ + j]);
    os << "]";
  }
  os << "]";
  return os.str();
}

DiagForm z4_diagonal_form(const Z4Mat& M) {
  const std::size_t m = M.rows(), n = M.cols();
  DiagForm out{Z4Mat::identity(m), M, Z4Mat::identity(n), Z4Mat::identity(m), Z4Mat::identity(n), 0, 0};
  Z4Mat& A = out.D;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t c = 0; c < n; ++c) {
      const int t = A(i, c);
      A.set(i, c, A(j, c));
      A.set(j, c, t);
    }
    for (std::size_t c = 0; c < m; ++c) {
      int t = out.P(i, c);
      out.P.set(i, c, out.P(j, c));
      out.P.set(j, c, t);
      t = out.P_inv(c, i);
      out.P_inv.set(c, i, out.P_inv(c, j));
      out.P_inv.set(c, j, t);
    }
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t r = 0; r < m; ++r) {
      const int t = A(r, i);
      A.set(r, i, A(r, j));
      A.set(r, j, t);
    }
    for (std::size_t r = 0; r < n; ++r) {
      int t = out.Q(r, i);
      out.Q.set(r, i, out.Q(r, j));
      out.Q.set(r, j, t);
      t = out.Q_inv(i, r);
      out.Q_inv.set(i, r, out.Q_inv(j, r));
      out.Q_inv.set(j, r, t);
    }
  };
  // row i += k row j
  auto add_row = [&](std::size_t i, std::size_t j, int k) {
    for (std::size_t c = 0; c < n; ++c)
      A.set(i, c, A(i, c) + k * A(j, c));
    for (std::size_t c = 0; c < m; ++c) {
      out.P.set(i, c, out.P(i, c) + k * out.P(j, c));
      out.P_inv.set(c, j, out.P_inv(c, j) - k * out.P_inv(c, i));
    }
  };
  // col i += k col j
  auto add_col = [&](std::size_t i, std::size_t j, int k) {
    for (std::size_t r = 0; r < m; ++r)
      A.set(r, i, A(r, i) + k * A(r, j));
    for (std::size_t r = 0; r < n; ++r) {
      out.Q.set(r, i, out.Q(r, i) + k * out.Q(r, j));
      out.Q_inv.set(j, r, out.Q_inv(j, r) - k * out.Q_inv(i, r));
    }
  };
  auto scale_row = [&](std::size_t i, int u) { // u a unit, u = u^{-1}
    for (std::size_t c = 0; c < n; ++c)
      A.set(i, c, A(i, c) * u);
    for (std::size_t c = 0; c < m; ++c) {
      out.P.set(i, c, out.P(i, c) * u);
      out.P_inv.set(c, i, out.P_inv(c, i) * u);
    }
  };

  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    std::size_t pi = m, pj = n;
    for (int want : {1, 2}) {
      for (std::size_t i = k; i < m && pi == m; ++i)
        for (std::size_t j = k; j < n; ++j)
          if ((want == 1 && A(i, j) % 2 == 1) || (want == 2 && A(i, j) == 2)) {
            pi = i;
            pj = j;
            break;
          }
      if (pi != m)
        break;
    }
    if (pi == m)
      break;
    swap_rows(k, pi);
    swap_cols(k, pj);
    if (A(k, k) == 3)
      scale_row(k, 3);
    const int p = A(k, k);
    for (std::size_t i = k + 1; i < m; ++i)
      if (A(i, k))
        add_row(i, k, -(A(i, k) / p));
    for (std::size_t j = k + 1; j < n; ++j)
      if (A(k, j))
        add_col(j, k, -(A(k, j) / p));
    if (p == 1)
      ++out.ones;
    else
      ++out.twos;
  }
  return out;
}

Z4Kernel::Z4Kernel(const Z4Mat& M) : n_(M.cols()) {
  const DiagForm d = z4_diagonal_form(M);
  Q_ = d.Q;
  Q_inv_ = d.Q_inv;
  ones_ = d.ones;
  twos_ = d.twos;
  const std::size_t free = n_ - ones_ - twos_;
  std::vector<Int> tors(twos_, Int(2));
  tors.insert(tors.end(), free, Int(4));
  group_ = FinAbGroup(std::move(tors), 0);
  for (std::size_t k = 0; k < twos_ + free; ++k) {
    IntVec e(twos_ + free);
    e[k] = 1;
    gens_.push_back(decode(e));
  }
}

std::vector<int> Z4Kernel::decode(const IntVec& x) const {
  std::vector<int> y(n_, 0);
  for (std::size_t k = 0; k < twos_; ++k)
    y[ones_ + k] = 2 * static_cast<int>(abgrp::mod_floor(x.at(k), 2));
  for (std::size_t k = ones_ + twos_; k < n_; ++k)
    y[k] = static_cast<int>(abgrp::mod_floor(x.at(k - ones_), 4));
  std::vector<int> v(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    int s = 0;
    for (std::size_t j = 0; j < n_; ++j)
      s += Q_(i, j) * y[j];
    v[i] = s & 3;
  }
  return v;
}

IntVec Z4Kernel::encode(const std::vector<int>& v) const {
  std::vector<int> y(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    int s = 0;
    for (std::size_t j = 0; j < n_; ++j)
      s += Q_inv_(i, j) * v.at(j);
    y[i] = s & 3;
  }
  for (std::size_t k = 0; k < ones_; ++k)
    if (y[k] != 0)
      throw ContractViolation("vector is not in the kernel");
  IntVec x(n_ - ones_);
  for (std::size_t k = 0; k < twos_; ++k) {
    if (y[ones_ + k] % 2 != 0)
      throw ContractViolation("vector is not in the kernel");
    x[k] = y[ones_ + k] / 2;
  }
  for (std::size_t k = ones_ + twos_; k < n_; ++k)
    x[k - ones_] = y[k];
  return x;
}

std::size_t Z4Free::rank_of(const Obj& a) {
  if (a.kind != "z4" || a.data.size() != 1 || a.data[0] < 0)
    throw ContractViolation("not an object of F(Z/4): " + a.to_string());
  return static_cast<std::size_t>(a.data[0]);
}

FinAbGroup Z4Free::hom(const Obj& a, const Obj& b) const {
  return FinAbGroup(std::vector<Int>(rank_of(a) * rank_of(b), Int(4)), 0);
}

Mor Z4Free::compose(const Obj& a, const Obj& b, const Obj& c, const Mor& g, const Mor& f) const {
  return (matrix(b, c, g) * matrix(a, b, f)).coords();
}

std::vector<Obj> Z4Free::window(std::size_t rank_bound) const {
  std::vector<Obj> out;
  for (std::size_t n = 0; n <= rank_bound; ++n)
    out.push_back(object(n));
  return out;
}

std::string Z4Free::describe(const Obj& a, const Obj& b, const Mor& f) const {
  return matrix(a, b, f).to_string();
}

Biproduct Z4Free::direct_sum(const Obj& a, const Obj& b) const {
  const std::size_t n = rank_of(a), m = rank_of(b);
  Z4Mat i1(n + m, n), i2(n + m, m), r1(n, n + m), r2(m, n + m);
  i1.put(0, 0, Z4Mat::identity(n));
  i2.put(n, 0, Z4Mat::identity(m));
  r1.put(0, 0, Z4Mat::identity(n));
  r2.put(0, n, Z4Mat::identity(m));
  return {object(n + m), i1.coords(), i2.coords(), r1.coords(), r2.coords()};
}

} // namespace singext::muro
