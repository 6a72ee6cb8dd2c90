#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "affint/rational.hpp"

namespace affint {

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;  // row-major
using ZVec = std::vector<Z>;
using ZMat = std::vector<ZVec>;

inline std::size_t rank(QMat m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Solves sum_i x_i * vecs[i] = target for a linearly independent family.
class SpanSolver {
 public:
  SpanSolver() = default;

  SpanSolver(const std::vector<QVec>& vecs, std::size_t dim) : vecs_(vecs) {
    n_ = vecs.size();
    dim_ = dim;
    // Row-reduce the dim x n matrix with columns vecs, augmented by identity on the row side.
    QMat a(dim_, QVec(n_, Q(0)));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t r = 0; r < dim_; ++r) a[r][i] = vecs[i][r];
    QMat ops(dim_, QVec(dim_, Q(0)));
    for (std::size_t r = 0; r < dim_; ++r) ops[r][r] = 1;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t p = row;
      while (p < dim_ && a[p][c] == 0) ++p;
      if (p == dim_) throw std::invalid_argument("family is linearly dependent");
      std::swap(a[p], a[row]);
      std::swap(ops[p], ops[row]);
      Q inv = 1 / a[row][c];
      for (auto& x : a[row]) x *= inv;
      for (auto& x : ops[row]) x *= inv;
      for (std::size_t i = 0; i < dim_; ++i) {
        if (i == row || a[i][c] == 0) continue;
        Q f = a[i][c];
        for (std::size_t j = 0; j < n_; ++j) a[i][j] -= f * a[row][j];
        for (std::size_t j = 0; j < dim_; ++j) ops[i][j] -= f * ops[row][j];
      }
      ++row;
    }
    ops_ = std::move(ops);
  }

  std::size_t size() const { return n_; }

  // nullopt when target is outside the span.
  std::optional<QVec> solve(const QVec& target) const {
    if (target.size() != dim_) throw std::invalid_argument("dimension mismatch");
    QVec x(n_, Q(0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (ops_[i][j] != 0 && target[j] != 0) x[i] += ops_[i][j] * target[j];
    for (std::size_t r = 0; r < dim_; ++r) {
      Q acc = 0;
      for (std::size_t i = 0; i < n_; ++i)
        if (x[i] != 0) acc += x[i] * vecs_[i][r];
      if (acc != target[r]) return std::nullopt;
    }
    return x;
  }

 private:
  std::vector<QVec> vecs_;
  QMat ops_;
  std::size_t n_ = 0, dim_ = 0;
};

// Row Hermite normal form; zero rows dropped.
inline ZMat hermite_normal_form(ZMat m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (m[i][c] != 0 && (best == rows || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == rows) break;
      std::swap(m[r], m[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Z f;
        mpz_fdiv_q(f.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r == rows || m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Z f;
      mpz_fdiv_q(f.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (f != 0)
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

// The Z-span of rational row vectors as (1/scale) * H with H in Hermite normal form
// and scale minimal.
struct Lattice {
  Z scale = 1;
  ZMat hnf;
  std::size_t dim = 0;

  static Lattice span(const std::vector<QVec>& gens, std::size_t dim) {
    Lattice L;
    L.dim = dim;
    Z den = 1;
    for (const auto& g : gens)
      for (const auto& x : g) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    ZMat m;
    for (const auto& g : gens) {
      ZVec row(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        Q y = g[j] * Q(den);
        row[j] = y.get_num();
      }
      m.push_back(std::move(row));
    }
    Z content = 0;
    for (const auto& row : m)
      for (const auto& x : row) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    Z g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), den.get_mpz_t());
    if (g > 1) {
      for (auto& row : m)
        for (auto& x : row) x /= g;
      den /= g;
    }
    L.scale = den;
    L.hnf = hermite_normal_form(std::move(m));
    return L;
  }

  std::size_t rank() const { return hnf.size(); }

  std::vector<QVec> basis() const {
    std::vector<QVec> b;
    for (const auto& row : hnf) {
      QVec v;
      for (const auto& x : row) {
        Q y(x, scale);
        y.canonicalize();
        v.push_back(y);
      }
      b.push_back(std::move(v));
    }
    return b;
  }

  bool contains(const QVec& v) const {
    ZVec w(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Q y = v[j] * Q(scale);
      if (!is_integer(y)) return false;
      w[j] = y.get_num();
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim; ++c) {
      if (r < hnf.size() && hnf[r][c] != 0) {
        if (w[c] % hnf[r][c] != 0) return false;
        Z f = w[c] / hnf[r][c];
        for (std::size_t j = c; j < dim; ++j) w[j] -= f * hnf[r][j];
        ++r;
      } else if (w[c] != 0) {
        return false;
      }
    }
    return true;
  }

  bool contains(const Lattice& o) const {
    for (const auto& v : o.basis())
      if (!contains(v)) return false;
    return true;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim == b.dim && a.scale == b.scale && a.hnf == b.hnf;
  }
};

}  // namespace affint
