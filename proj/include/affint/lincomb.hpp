#pragma once

#include <map>
#include <string>

#include "affint/rational.hpp"

namespace affint {

// Finite Q-linear combination of keys.
template <class K>
class LinComb {
 public:
  using Map = std::map<K, Q>;

  LinComb() = default;
  LinComb(const K& k, const Q& c = 1) { add(k, c); }  // NOLINT(google-explicit-constructor)

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  Q coeff(const K& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Q(0) : it->second;
  }

  void add(const K& k, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.t_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.t_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Q& s) {
    if (s == 0) t_.clear();
    for (auto& [k, c] : t_) c *= s;
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Q(-1); }
  friend LinComb operator*(const Q& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const Q& s) { return a *= s; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

  template <class F>
  std::string str(F&& name) const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : t_) {
      Q a = c;
      bool neg = a < 0;
      if (neg) a = -a;
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (a != 1) s += a.get_str() + "*";
      s += name(k);
    }
    return s;
  }

 private:
  Map t_;
};

// Bilinear extension of a bracket on keys.
template <class K, class F>
LinComb<K> bilinear(const LinComb<K>& a, const LinComb<K>& b, F&& br) {
  LinComb<K> r;
  for (const auto& [x, c] : a.terms())
    for (const auto& [y, d] : b.terms()) r += br(x, y) * (c * d);
  return r;
}

}  // namespace affint
