#pragma once

#include <stdexcept>
#include <vector>

#include "affint/rational.hpp"

namespace affint {

// Power series in one variable u cut after u^N, coefficients in a ring R
// (R needs R(Q), +, -, *, and R * Q).
template <class R>
class Series {
 public:
  Series() = default;
  explicit Series(int n) : c_(static_cast<std::size_t>(n) + 1, R(Q(0))) {
    if (n < 0) throw std::invalid_argument("negative truncation");
  }

  static Series one(int n) {
    Series s(n);
    s.c_[0] = R(Q(1));
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  R& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<R>& coeffs() const { return c_; }

  Series& operator+=(const Series& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Q& s) {
    for (auto& x : a.c_) x = x * s;
    return a;
  }

  friend Series operator*(const Series& a, const Series& b) {
    a.check(b);
    Series r(a.order());
    for (int i = 0; i <= a.order(); ++i)
      for (int j = 0; i + j <= a.order(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  // u -> s * u^k
  Series substitute(const Q& s, int k) const {
    Series r(order());
    Q sp = 1;
    for (int i = 0; i * k <= order(); ++i) {
      r.c_[i * k] = c_[i] * sp;
      sp *= s;
    }
    return r;
  }

  template <class F>
  Series map(F&& f) const {
    Series r(order());
    for (int i = 0; i <= order(); ++i) r.c_[i] = f(c_[i]);
    return r;
  }

 private:
  void check(const Series& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("truncation mismatch");
  }
  std::vector<R> c_;
};

template <class R>
bool has_unit_constant(const Series<R>& s) {
  return s[0] == R(Q(1));
}

// exp(L) for L without constant term; k E_k = sum_j j L_j E_{k-j}.
// Valid when the coefficients of L commute pairwise.
template <class R>
Series<R> series_exp(const Series<R>& L) {
  if (!(L[0] == R(Q(0)))) throw std::invalid_argument("exp needs zero constant term");
  int n = L.order();
  Series<R> E = Series<R>::one(n);
  for (int k = 1; k <= n; ++k) {
    R acc(Q(0));
    for (int j = 1; j <= k; ++j) acc = acc + L[j] * E[k - j] * Q(j);
    E[k] = acc * Q(1, k);
  }
  return E;
}

// (1 + A)^alpha for A without constant term:
// P_k = (1/k) sum_{j=1..k} ((alpha+1) j - k) A_j P_{k-j}.
template <class R>
Series<R> series_pow(const Series<R>& s, const Q& alpha) {
  if (!has_unit_constant(s)) throw std::invalid_argument("power needs constant term 1");
  int n = s.order();
  Series<R> P = Series<R>::one(n);
  for (int k = 1; k <= n; ++k) {
    R acc(Q(0));
    for (int j = 1; j <= k; ++j) {
      Q w = (alpha + 1) * j - k;
      if (w != 0) acc = acc + s[j] * P[k - j] * w;
    }
    P[k] = acc * Q(1, k);
  }
  return P;
}

template <class R>
Series<R> series_inverse(const Series<R>& s) {
  return series_pow(s, Q(-1));
}

}  // namespace affint
