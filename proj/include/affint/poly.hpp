#pragma once

#include <map>
#include <string>

#include "affint/partition.hpp"
#include "affint/rational.hpp"

namespace affint {

// Sparse element of Q[h_1, h_2, ...]; the monomial prod h_r^{e_r} is keyed by its partition.
class Poly {
 public:
  using Terms = std::map<Partition, Q>;

  Poly() = default;
  Poly(const Q& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) t_[Partition{}] = c;
  }
  Poly(long c) : Poly(Q(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly h(int r, const Q& c = 1) { return monomial(Partition::single(r), c); }
  static Poly monomial(const Partition& p, const Q& c = 1) {
    Poly x;
    if (c != 0) x.t_[p] = c;
    return x;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  Q coeff(const Partition& p) const {
    auto it = t_.find(p);
    return it == t_.end() ? Q(0) : it->second;
  }

  void add_term(const Partition& p, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [p, c] : o.t_) add_term(p, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [p, c] : o.t_) add_term(p, -c);
    return *this;
  }
  Poly& operator*=(const Q& s) {
    if (s == 0) {
      t_.clear();
    } else {
      for (auto& [p, c] : t_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Q(-1); }
  friend Poly operator*(Poly a, const Q& s) { return a *= s; }
  friend Poly operator*(const Q& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [p, c] : a.t_)
      for (const auto& [q, d] : b.t_) r.add_term(p * q, c * d);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly&, const Poly&) = default;

  // -1 for the zero polynomial.
  long max_degree() const { return t_.empty() ? -1 : t_.rbegin()->first.degree(); }

  bool is_homogeneous(long d) const {
    for (const auto& [p, c] : t_)
      if (p.degree() != d) return false;
    return true;
  }

  Poly component(long d) const {
    Poly r;
    for (const auto& [p, c] : t_)
      if (p.degree() == d) r.t_.emplace(p, c);
    return r;
  }

  // Canonical text: terms in increasing graded order, e.g. "1/2*h1^2 + 1/2*h2".
  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = t_.begin(); it != t_.end(); ++it) {
      Q c = it->second;
      bool neg = c < 0;
      if (neg) c = -c;
      if (first) {
        s += neg ? "-" : "";
      } else {
        s += neg ? " - " : " + ";
      }
      first = false;
      if (it->first.empty()) {
        s += c.get_str();
      } else {
        if (c != 1) s += c.get_str() + "*";
        s += it->first.monomial_str();
      }
    }
    return s;
  }

 private:
  Terms t_;
};

inline Poly pow(const Poly& p, int k) {
  Poly r(1);
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

// Algebra endomorphism h_r -> h_{mr}.
inline Poly lambda_shift(int m, const Poly& p) {
  if (m < 1) throw std::invalid_argument("lambda_shift needs m >= 1");
  Poly r;
  for (const auto& [part, c] : p.terms()) r.add_term(part.scaled(m), c);
  return r;
}

// Involution h_r -> (-1)^{r-1} h_r.
inline Poly alternate(const Poly& p) {
  Poly r;
  for (const auto& [part, c] : p.terms()) {
    long even = 0;
    for (auto [x, m] : part.entries())
      if (x % 2 == 0) even += m;
    r.add_term(part, even % 2 ? -c : c);
  }
  return r;
}

}  // namespace affint
