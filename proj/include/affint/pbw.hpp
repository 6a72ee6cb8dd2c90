#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affint/hat.hpp"
#include "affint/lincomb.hpp"

namespace affint {

// Enveloping algebra of a Lie algebra with a totally ordered basis Idx (operator< is the PBW
// order). Elements are kept in PBW normal form: combinations of ordered monomials.
template <class Idx>
class Uea {
 public:
  using Mono = std::vector<std::pair<Idx, int>>;
  using Elem = LinComb<Mono>;
  using Lie = LinComb<Idx>;
  using Bracket = std::function<Lie(const Idx&, const Idx&)>;

  explicit Uea(Bracket br) : br_(std::move(br)) {}

  static Elem one() { return Elem(Mono{}); }
  static Elem atom(const Idx& x, const Q& c = 1) { return Elem(Mono{{x, 1}}, c); }
  static Elem lie(const Lie& l) {
    Elem e;
    for (const auto& [x, c] : l.terms()) e.add(Mono{{x, 1}}, c);
    return e;
  }

  // x^k / k!
  static Elem divided_power(const Idx& x, int k) {
    if (k < 0) throw std::invalid_argument("negative divided power");
    if (k == 0) return one();
    return Elem(Mono{{x, k}}, Q(1) / Q(factorial(static_cast<unsigned>(k))));
  }

  const Lie& bracket(const Idx& a, const Idx& b) {
    auto key = std::make_pair(a, b);
    auto it = br_cache_.find(key);
    if (it != br_cache_.end()) return it->second;
    return br_cache_.emplace(key, br_(a, b)).first->second;
  }

  // x * m in normal form. For x > y (y the first atom of m):
  // x y m' = y (x m') + [x,y] m'.
  const Elem& mul_atom(const Idx& x, const Mono& m) {
    auto key = std::make_pair(x, m);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Elem out;
    if (m.empty() || x < m.front().first) {
      Mono n;
      n.reserve(m.size() + 1);
      n.push_back({x, 1});
      n.insert(n.end(), m.begin(), m.end());
      out.add(n, 1);
    } else if (x == m.front().first) {
      Mono n = m;
      ++n.front().second;
      out.add(n, 1);
    } else {
      Idx y = m.front().first;
      Mono rest = m;
      if (--rest.front().second == 0) rest.erase(rest.begin());
      Elem xr = mul_atom(x, rest);
      for (const auto& [mono, c] : xr.terms()) out += mul_atom(y, mono) * c;
      Lie b = bracket(x, y);
      for (const auto& [z, c] : b.terms()) out += mul_atom(z, rest) * c;
    }
    return cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  Elem mul_atom(const Idx& x, const Elem& e) {
    Elem out;
    for (const auto& [m, c] : e.terms()) out += mul_atom(x, m) * c;
    return out;
  }

  Elem mul(const Elem& a, const Elem& b) {
    Elem out;
    for (const auto& [m, c] : a.terms()) {
      Elem cur = b;
      for (auto it = m.rbegin(); it != m.rend(); ++it)
        for (int k = 0; k < it->second; ++k) cur = mul_atom(it->first, cur);
      out += cur * c;
    }
    return out;
  }

  Elem pow(const Elem& a, int k) {
    Elem r = one();
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  // Normal form of a word by rewriting a randomly chosen adjacent inversion each step,
  // with no memoization; used to spot-check independence of the reduction order.
  Elem straighten_random(const std::vector<Idx>& word, std::mt19937& rng) {
    std::map<std::vector<Idx>, Q> work{{word, Q(1)}};
    Elem out;
    while (!work.empty()) {
      auto node = work.extract(work.begin());
      std::vector<Idx> w = node.key();
      Q c = node.mapped();
      if (c == 0) continue;
      std::vector<std::size_t> inv;
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] < w[i]) inv.push_back(i);
      if (inv.empty()) {
        Mono m;
        for (const auto& x : w) {
          if (!m.empty() && m.back().first == x)
            ++m.back().second;
          else
            m.push_back({x, 1});
        }
        out.add(m, c);
        continue;
      }
      std::size_t i = inv[std::uniform_int_distribution<std::size_t>(0, inv.size() - 1)(rng)];
      std::vector<Idx> s = w;
      std::swap(s[i], s[i + 1]);
      work[s] += c;
      for (const auto& [z, d] : bracket(w[i], w[i + 1]).terms()) {
        std::vector<Idx> t(w.begin(), w.begin() + static_cast<long>(i));
        t.push_back(z);
        t.insert(t.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        work[t] += c * d;
      }
    }
    return out;
  }

  std::size_t cache_size() const { return cache_.size(); }

 private:
  Bracket br_;
  std::map<std::pair<Idx, Idx>, Lie> br_cache_;
  std::map<std::pair<Idx, Mono>, Elem> cache_;
};

template <class Idx, class F>
std::string uea_str(const LinComb<typename Uea<Idx>::Mono>& e, F&& name) {
  return e.str([&](const typename Uea<Idx>::Mono& m) {
    if (m.empty()) return std::string("1");
    std::string s;
    for (const auto& [x, k] : m) {
      if (!s.empty()) s += "*";
      s += name(x);
      if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
  });
}

// Series in u, v over U, truncated at total degree N.
template <class Idx>
class Series2 {
 public:
  using Elem = typename Uea<Idx>::Elem;
  using Key = std::pair<int, int>;

  explicit Series2(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative truncation");
  }
  static Series2 one(int n) {
    Series2 s(n);
    s.add(0, 0, Uea<Idx>::one());
    return s;
  }
  // e * u^i v^j
  static Series2 term(int n, int i, int j, const Elem& e) {
    Series2 s(n);
    s.add(i, j, e);
    return s;
  }

  int order() const { return n_; }
  const std::map<Key, Elem>& coeffs() const { return c_; }

  Elem at(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? Elem{} : it->second;
  }

  void add(int i, int j, const Elem& e) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
    if (i + j > n_ || e.is_zero()) return;
    auto& slot = c_[{i, j}];
    slot += e;
    if (slot.is_zero()) c_.erase({i, j});
  }

  bool has_constant_term() const { return c_.count({0, 0}) > 0; }

  Series2& operator+=(const Series2& o) {
    for (const auto& [k, e] : o.c_) add(k.first, k.second, e);
    return *this;
  }
  Series2& operator-=(const Series2& o) {
    for (const auto& [k, e] : o.c_) add(k.first, k.second, -e);
    return *this;
  }
  Series2& operator*=(const Q& s) {
    if (s == 0) c_.clear();
    for (auto& [k, e] : c_) e *= s;
    return *this;
  }
  friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
  friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }
  friend Series2 operator*(const Q& s, Series2 a) { return a *= s; }
  friend bool operator==(const Series2& a, const Series2& b) { return a.c_ == b.c_; }

 private:
  int n_;
  std::map<Key, Elem> c_;
};

// s * u^a v^b
template <class Idx>
Series2<Idx> sshift(const Series2<Idx>& s, int a, int b) {
  Series2<Idx> r(s.order());
  for (const auto& [k, e] : s.coeffs()) r.add(k.first + a, k.second + b, e);
  return r;
}

template <class Idx>
Series2<Idx> smul(Uea<Idx>& U, const Series2<Idx>& a, const Series2<Idx>& b) {
  int n = std::min(a.order(), b.order());
  Series2<Idx> r(n);
  for (const auto& [ka, ea] : a.coeffs())
    for (const auto& [kb, eb] : b.coeffs()) {
      int i = ka.first + kb.first, j = ka.second + kb.second;
      if (i + j <= n) r.add(i, j, U.mul(ea, eb));
    }
  return r;
}

template <class Idx>
Series2<Idx> sprod(Uea<Idx>& U, std::initializer_list<Series2<Idx>> fs) {
  if (fs.size() == 0) throw std::invalid_argument("empty product");
  auto it = fs.begin();
  Series2<Idx> r = *it;
  for (++it; it != fs.end(); ++it) r = smul(U, r, *it);
  return r;
}

// S^k / k!
template <class Idx>
Series2<Idx> sdivided_power(Uea<Idx>& U, const Series2<Idx>& s, int k) {
  Series2<Idx> r = Series2<Idx>::one(s.order());
  for (int i = 1; i <= k; ++i) r = Q(1, i) * smul(U, r, s);
  return r;
}

// exp(S) for S without constant term.
template <class Idx>
Series2<Idx> sexp(Uea<Idx>& U, const Series2<Idx>& s) {
  if (s.has_constant_term()) throw std::invalid_argument("exp needs zero constant term");
  Series2<Idx> r = Series2<Idx>::one(s.order()), t = r;
  for (int k = 1; k <= s.order(); ++k) {
    t = Q(1, k) * smul(U, t, s);
    if (t.coeffs().empty()) break;
    r += t;
  }
  return r;
}

// exp(c x u^a v^b) = sum_k c^k x^(k) u^{ak} v^{bk}.
template <class Idx>
Series2<Idx> exp_gen(const Idx& x, int a, int b, int n, const Q& c = 1) {
  if (a + b < 1) throw std::invalid_argument("exp weight must be positive");
  Series2<Idx> r(n);
  Q ck = 1;
  for (int k = 0; k * (a + b) <= n; ++k) {
    r.add(a * k, b * k, Uea<Idx>::divided_power(x, k) * ck);
    ck *= c;
  }
  return r;
}

// A commutative polynomial in the h_r placed in U through r -> idx(r); the images must commute.
template <class Idx>
typename Uea<Idx>::Elem poly_to_uea(const Poly& p, const std::function<Idx(int)>& idx) {
  typename Uea<Idx>::Elem e;
  for (const auto& [part, c] : p.terms()) {
    typename Uea<Idx>::Mono m;
    for (auto [r, k] : part.entries()) m.push_back({idx(r), k});
    std::sort(m.begin(), m.end());
    e.add(m, c);
  }
  return e;
}

// sum_k s_k (alpha u^a v^b)^k for a univariate series of h-polynomials.
template <class Idx>
Series2<Idx> poly_series_to_uea(const PolySeries& s, const std::function<Idx(int)>& idx, const Q& alpha,
                                int a, int b, int n) {
  Series2<Idx> r(n);
  Q ak = 1;
  for (int k = 0; k <= s.order() && k * (a + b) <= n; ++k) {
    r.add(a * k, b * k, poly_to_uea<Idx>(s[k], idx) * ak);
    ak *= alpha;
  }
  if (s.order() * (a + b) < n && a + b > 0)
    throw std::invalid_argument("commutative series too short for the truncation");
  return r;
}

// binom(E, k) = E (E-1) ... (E-k+1) / k! for E in a commutative Cartan part.
template <class Idx>
typename Uea<Idx>::Elem binom_uea(Uea<Idx>& U, const typename Uea<Idx>::Elem& E, int k) {
  auto r = Uea<Idx>::one();
  for (int j = 0; j < k; ++j) r = U.mul(r, E - Uea<Idx>::one() * Q(j)) * Q(1, j + 1);
  return r;
}

// (1 + beta u^a v^b)^E = sum_k binom(E, k) beta^k u^{ak} v^{bk}; E must commute with U's Cartan part.
template <class Idx, class Pred>
Series2<Idx> central_binomial(Uea<Idx>& U, const Q& beta, int a, int b, const typename Uea<Idx>::Elem& E,
                              int n, Pred&& is_cartan0) {
  for (const auto& [m, c] : E.terms())
    for (const auto& [x, k] : m)
      if (!is_cartan0(x)) throw std::invalid_argument("non-Cartan exponent");
  if (a + b < 1) throw std::invalid_argument("binomial weight must be positive");
  Series2<Idx> r(n);
  Q bk = 1;
  for (int k = 0; k * (a + b) <= n; ++k) {
    r.add(a * k, b * k, binom_uea(U, E, k) * bk);
    bk *= beta;
  }
  return r;
}

// Power series in u, v whose coefficients are Laurent polynomials in an operator T.
class OpSeries {
 public:
  using Key = std::pair<int, int>;
  explicit OpSeries(int n) : n_(n) {}
  static OpSeries identity(int n) {
    OpSeries s(n);
    s.add(0, 0, 0, 1);
    return s;
  }
  // (1 + gamma T^p u^a v^b)^m, m rational.
  static OpSeries binomial(int n, const Q& gamma, int p, int a, int b, const Q& m) {
    if (a + b < 1) throw std::invalid_argument("operator weight must be positive");
    OpSeries s(n);
    Q coef = 1;
    for (int k = 0; k * (a + b) <= n; ++k) {
      s.add(a * k, b * k, p * k, coef);
      coef = coef * (m - k) / (k + 1) * gamma;
    }
    return s;
  }

  void add(int i, int j, int p, const Q& c) {
    if (i + j > n_ || c == 0) return;
    auto& slot = c_[{i, j}][p];
    slot += c;
    if (slot == 0) {
      c_[{i, j}].erase(p);
      if (c_[{i, j}].empty()) c_.erase({i, j});
    }
  }

  friend OpSeries operator*(const OpSeries& a, const OpSeries& b) {
    OpSeries r(std::min(a.n_, b.n_));
    for (const auto& [ka, ta] : a.c_)
      for (const auto& [kb, tb] : b.c_)
        for (const auto& [pa, ca] : ta)
          for (const auto& [pb, cb] : tb) r.add(ka.first + kb.first, ka.second + kb.second, pa + pb, ca * cb);
    return r;
  }

  const std::map<Key, std::map<int, Q>>& coeffs() const { return c_; }
  int order() const { return n_; }

 private:
  int n_;
  std::map<Key, std::map<int, Q>> c_;
};

// Apply an operator series to a Lie element: coefficient (i, j) becomes sum_p c_p T^p(x).
template <class Idx>
Series2<Idx> apply_op(const OpSeries& op, const LinComb<Idx>& x,
                      const std::function<LinComb<Idx>(int, const LinComb<Idx>&)>& tpow) {
  Series2<Idx> r(op.order());
  for (const auto& [k, tp] : op.coeffs())
    for (const auto& [p, c] : tp) r.add(k.first, k.second, Uea<Idx>::lie(tpow(p, x)) * c);
  return r;
}

// First coefficient where two series differ.
template <class Idx>
struct SeriesDiff {
  int i = 0, j = 0;
  typename Uea<Idx>::Elem lhs, rhs;
};

template <class Idx>
std::optional<SeriesDiff<Idx>> first_difference(const Series2<Idx>& a, const Series2<Idx>& b) {
  int n = std::min(a.order(), b.order());
  for (int d = 0; d <= n; ++d)
    for (int i = d; i >= 0; --i) {
      int j = d - i;
      auto x = a.at(i, j), y = b.at(i, j);
      if (x != y) return SeriesDiff<Idx>{i, j, x, y};
    }
  return std::nullopt;
}

}  // namespace affint
