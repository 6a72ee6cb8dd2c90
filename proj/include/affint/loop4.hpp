#pragma once

#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "affint/lie22.hpp"
#include "affint/linalg.hpp"

namespace affint {

// 5x5 rational matrices, row-major, 1-based accessors.
using Mat5 = std::array<Q, 25>;

inline Mat5 mat_zero() {
  Mat5 m;
  m.fill(Q(0));
  return m;
}
inline Mat5 unit(int i, int j) {
  Mat5 m = mat_zero();
  m[(i - 1) * 5 + (j - 1)] = 1;
  return m;
}
inline bool is_zero(const Mat5& m) {
  for (const auto& x : m)
    if (x != 0) return false;
  return true;
}
inline Mat5 operator+(Mat5 a, const Mat5& b) {
  for (int k = 0; k < 25; ++k) a[k] += b[k];
  return a;
}
inline Mat5 operator-(Mat5 a, const Mat5& b) {
  for (int k = 0; k < 25; ++k) a[k] -= b[k];
  return a;
}
inline Mat5 operator*(const Q& s, Mat5 a) {
  for (auto& x : a) x *= s;
  return a;
}
inline Mat5 operator*(const Mat5& a, const Mat5& b) {
  Mat5 m = mat_zero();
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) {
      if (a[i * 5 + k] == 0) continue;
      for (int j = 0; j < 5; ++j) m[i * 5 + j] += a[i * 5 + k] * b[k * 5 + j];
    }
  return m;
}
inline Mat5 commutator(const Mat5& a, const Mat5& b) { return a * b - b * a; }
inline Q trace(const Mat5& a) { return a[0] + a[6] + a[12] + a[18] + a[24]; }
inline Q trace_product(const Mat5& a, const Mat5& b) {
  Q t = 0;
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) t += a[i * 5 + k] * b[k * 5 + i];
  return t;
}

// The order-2 automorphism X -> -J X^T J, J = antidiag(1,-1,1,-1,1). Its fixed part is so5.
inline Mat5 twist(const Mat5& x) {
  static const int s[5] = {1, -1, 1, -1, 1};
  Mat5 m = mat_zero();
  // (J X^T J)_{ij} = s_i s_{4-j} X_{4-j, 4-i} (0-based)
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m[i * 5 + j] = -Q(s[i] * s[4 - j]) * x[(4 - j) * 5 + (4 - i)];
  return m;
}

// Twisted loop element: sum of M_r t^r plus a multiple of c.
struct LoopElement {
  std::map<int, Mat5> loop;
  Q c = 0;

  LoopElement() = default;
  LoopElement(int r, const Mat5& m) {
    if (!affint::is_zero(m)) loop.emplace(r, m);
  }
  static LoopElement central(const Q& k) {
    LoopElement e;
    e.c = k;
    return e;
  }

  bool is_zero() const { return loop.empty() && c == 0; }

  LoopElement& operator+=(const LoopElement& o) {
    for (const auto& [r, m] : o.loop) {
      auto [it, fresh] = loop.try_emplace(r, m);
      if (!fresh) {
        it->second = it->second + m;
        if (affint::is_zero(it->second)) loop.erase(it);
      }
    }
    c += o.c;
    return *this;
  }
  LoopElement& operator*=(const Q& s) {
    if (s == 0) return *this = LoopElement{};
    for (auto& [r, m] : loop) m = s * m;
    c *= s;
    return *this;
  }
  friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
  friend LoopElement operator-(LoopElement a, const LoopElement& b) {
    return a += LoopElement(b) *= Q(-1);
  }
  friend LoopElement operator-(LoopElement a) { return a *= Q(-1); }
  friend LoopElement operator*(const Q& s, LoopElement a) { return a *= s; }
  friend bool operator==(const LoopElement& a, const LoopElement& b) {
    return (a - b).is_zero();
  }

  // Degree-j part lies in the (-1)^j eigenspace of the twist.
  bool twisted() const {
    for (const auto& [r, m] : loop)
      if (twist(m) != (r % 2 == 0 ? m : Q(-1) * m)) return false;
    return true;
  }
};

// Loop bracket with cocycle r delta_{r+s,0} tr(ab)/4 c.
inline LoopElement bracket4(const LoopElement& a, const LoopElement& b) {
  LoopElement out;
  for (const auto& [r, x] : a.loop)
    for (const auto& [s, y] : b.loop) {
      out += LoopElement(r + s, commutator(x, y));
      if (r + s == 0) out.c += Q(r) * trace_product(x, y) / 4;
    }
  return out;
}

// Drinfeld generators of A4(2) in the twisted loop realization.
// Node 1 is the short simple root, node 2 the long one.
class A4Realization {
 public:
  static const A4Realization& get() {
    static const A4Realization R;
    return R;
  }

  // Matrix part of x^pm_{i,r}; depends on i, sign and the parity of r.
  const Mat5& xmat(int i, int sign, int r) const {
    check_node(i);
    int p = parity(r);
    return sign > 0 ? xp_[i - 1][p] : xm_[i - 1][p];
  }

  LoopElement xp(int i, int r) const { return {r, xmat(i, 1, r)}; }
  LoopElement xm(int i, int r) const { return {r, xmat(i, -1, r)}; }
  LoopElement x(int i, int sign, int r) const { return sign > 0 ? xp(i, r) : xm(i, r); }
  LoopElement h(int i, int r) const { return bracket4(xp(i, r), xm(i, 0)); }
  LoopElement c() const { return LoopElement::central(1); }
  // X^pm_{1,r} = pm[x^pm_{1,r}, x^pm_{1,0}], r odd.
  LoopElement X1(int sign, int r) const {
    if (parity(r) != 1) throw std::invalid_argument("X_{1,r} needs odd r");
    return Q(sign) * bracket4(x(1, sign, r), x(1, sign, 0));
  }

  // Normalization 2c/d_j appearing in [x^+_{j,r}, x^-_{j,-r}] = h_{j,0} + r (2/d_j) c.
  Q central_scale(int j) const {
    check_node(j);
    return j == 1 ? Q(1) : q(1, 2);
  }

  static int parity(int r) { return r % 2 == 0 ? 0 : 1; }

 private:
  A4Realization() {
    auto sym = [](const Mat5& m) { return m + twist(m); };
    auto anti = [](const Mat5& m) { return m - twist(m); };
    xp_[0][0] = sym(unit(2, 3));
    xm_[0][0] = Q(2) * sym(unit(3, 2));
    xp_[0][1] = anti(unit(2, 3));
    xm_[0][1] = Q(2) * anti(unit(3, 2));
    xp_[1][0] = sym(unit(1, 2));
    xm_[1][0] = sym(unit(2, 1));
    // Odd node-2 vectors are fixed by [h_{1,1}, x^pm_{2,0}] = -+2 x^pm_{2,1}.
    Mat5 h11 = commutator(xp_[0][1], xm_[0][0]);
    xp_[1][1] = q(-1, 2) * commutator(h11, xp_[1][0]);
    xm_[1][1] = q(1, 2) * commutator(h11, xm_[1][0]);
  }

  static void check_node(int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("A4(2) has nodes 1 and 2");
  }

  Mat5 xp_[2][2], xm_[2][2];
};

// Cartan entries a_{ij} of the finite part for rank n: a_12 = -2, a_21 = -1, tridiagonal -1 else.
inline int cartan_entry(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("Cartan index out of range");
  if (i == j) return 2;
  if (i == 1 && j == 2) return -2;
  if (std::abs(i - j) == 1) return -1;
  return 0;
}

// a_{i,j;r}: 2(2 + (-1)^{r-1}) on (1,1), a_{ij} otherwise.
inline int loop_cartan(int i, int j, int r) {
  if (i == 1 && j == 1) return 2 * (2 - (r % 2 == 0 ? 1 : -1));
  return cartan_entry(2, i, j);
}

template <class E>
using BracketFn = std::function<E(const E&, const E&)>;

// exp(ad e)(y), evaluated until the series terminates.
template <class E>
E exp_ad(const E& e, const E& y, const BracketFn<E>& br, const Q& scale = 1, int cap = 6) {
  E sum = y, term = y;
  for (int k = 1;; ++k) {
    term = Q(scale / k) * br(e, term);
    if (term.is_zero()) return sum;
    if (k >= cap) throw std::runtime_error("exp did not terminate");
    sum = sum + term;
  }
}

// tau = exp(ad e) exp(-ad f) exp(ad e).
template <class E>
E tau_with(const E& e, const E& f, const E& y, const BracketFn<E>& br, int cap = 6) {
  E a = exp_ad(e, y, br, Q(1), cap);
  E b = exp_ad(f, a, br, Q(-1), cap);
  return exp_ad(e, b, br, Q(1), cap);
}

inline LoopElement tau4(int i, const LoopElement& y, int cap = 6) {
  const auto& R = A4Realization::get();
  return tau_with<LoopElement>(R.xp(i, 0), R.xm(i, 0), y, bracket4, cap);
}

inline A22Element tau22(const A22Element& y, int cap = 6) {
  BracketFn<A22Element> br = [](const A22Element& a, const A22Element& b) { return bracket22(a, b); };
  return tau_with<A22Element>(A22Element(A22Index::xp(0)), A22Element(A22Index::xm(0)), y, br, cap);
}

// X^pm_{2,r} = tau_2(X^pm_{1,r}).
inline LoopElement X2(int sign, int r) { return tau4(2, A4Realization::get().X1(sign, r)); }

namespace detail {

struct CheckLog {
  LieCheck v;
  bool operator()(bool ok, const std::string& what) {
    ++v.checked;
    if (!ok && v.pass) {
      v.pass = false;
      v.failure = what;
    }
    return ok;
  }
};

inline std::string rs(int r, int s) { return " r=" + std::to_string(r) + " s=" + std::to_string(s); }

}  // namespace detail

// Every defining relation of A4(2) for |r|,|s| <= window.
inline LieCheck verify_a4_relations(int window) {
  const auto& R = A4Realization::get();
  detail::CheckLog ok;
  const LoopElement zero;
  for (int r = -window; r <= window; ++r)
    for (int s = -window; s <= window; ++s) {
      std::string at = detail::rs(r, s);
      ok(bracket4(R.c(), R.xp(1, r)).is_zero() && bracket4(R.c(), R.h(2, r)).is_zero(), "c central" + at);
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
          std::string ij = " i=" + std::to_string(i) + " j=" + std::to_string(j) + at;
          Q a = loop_cartan(i, j, r);
          LoopElement hh = r + s == 0 ? LoopElement::central(Q(r) * a * R.central_scale(j)) : zero;
          ok(bracket4(R.h(i, r), R.h(j, s)) == hh, "[h,h]" + ij);
          LoopElement pm;
          if (i == j) {
            pm = R.h(i, r + s);
            if (r + s == 0) pm.c += Q(r) * R.central_scale(j);
          }
          ok(bracket4(R.xp(i, r), R.xm(j, s)) == pm, "[x+,x-]" + ij);
          ok(bracket4(R.h(i, r), R.xp(j, s)) == a * R.xp(j, r + s), "[h,x+]" + ij);
          ok(bracket4(R.h(i, r), R.xm(j, s)) == -a * R.xm(j, r + s), "[h,x-]" + ij);
          ok(R.xp(i, r).twisted() && R.xm(i, r).twisted() && R.h(i, r).twisted(), "twist" + ij);
        }
      for (int sg : {1, -1}) {
        std::string sgs = sg > 0 ? " (+)" : " (-)";
        LoopElement x11 = bracket4(R.x(1, sg, r), R.x(1, sg, s));
        if ((r + s) % 2 != 0)
          ok(x11 == Q(sg * (s % 2 == 0 ? 1 : -1)) * R.X1(sg, r + s), "[x1,x1]" + sgs + at);
        else
          ok(x11.is_zero(), "[x1,x1] even" + sgs + at);
        if (s % 2 != 0) ok(bracket4(R.x(1, sg, r), R.X1(sg, s)).is_zero(), "[x1,X1]" + sgs + at);
        ok(bracket4(R.x(2, sg, r), R.x(2, sg, s)).is_zero(), "[x2,x2]" + sgs + at);
        // (ad x_{i,r})^{1-a_ij} x_{j,s} = 0 for i != j.
        LoopElement y = R.x(2, sg, s);
        for (int k = 0; k < 3; ++k) y = bracket4(R.x(1, sg, r), y);
        ok(y.is_zero(), "Serre 1->2" + sgs + at);
        y = R.x(1, sg, s);
        for (int k = 0; k < 2; ++k) y = bracket4(R.x(2, sg, r), y);
        ok(y.is_zero(), "Serre 2->1" + sgs + at);
      }
      ok(bracket4(R.xp(1, r), bracket4(R.xp(1, r), R.xp(2, s))) ==
             -bracket4(R.xp(1, r + 1), bracket4(R.xp(1, r + 1), R.xp(2, s - 2))),
         "[x1,[x1,x2]] shift" + at);
    }
  return ok.v;
}

// The eight ad-identities on x^+_{2,r} and X^+_{1,r} for |r| <= window.
inline LieCheck verify_techuno(int window) {
  const auto& R = A4Realization::get();
  detail::CheckLog ok;
  auto br = bracket4;
  LoopElement e1 = R.xp(1, 0), f1 = R.xm(1, 0), e2 = R.xp(2, 0), f2 = R.xm(2, 0);
  for (int r = -window; r <= window; ++r) {
    std::string at = " r=" + std::to_string(r);
    LoopElement x2 = R.xp(2, r), x1 = R.xp(1, r);
    ok(br(f1, br(e1, x2)) == Q(2) * x2, "A" + at);
    ok(br(f1, br(e1, br(e1, x2))) == Q(2) * br(e1, x2), "B" + at);
    ok(br(f1, br(f1, br(e1, br(e1, x2)))) == Q(4) * x2, "C" + at);
    ok(br(f2, br(e2, x1)) == x1, "D" + at);
    if (r % 2 == 0) continue;
    LoopElement X = R.X1(1, r);
    ok(br(R.h(2, 0), X) == Q(-2) * X, "E" + at);
    ok(br(f2, br(e2, X)) == Q(2) * X, "F" + at);
    ok(br(f2, br(e2, br(e2, X))) == Q(2) * br(e2, X), "G" + at);
    ok(br(f2, br(f2, br(e2, br(e2, X)))) == Q(4) * X, "H" + at);
  }
  return ok.v;
}

// tau_1(x^+_{2,r}), tau_2(x^+_{1,r}), tau_2(X^+_{1,r}) in closed form, |r| <= window.
// tau_2(X^+_{1,r}) = k [x^+_{2,0},[x^+_{2,0},X^+_{1,r}]] holds with k = 1/2; the printed k = 1/4 fails.
inline LieCheck verify_tau_closed_forms(int window, const Q& k = q(1, 2)) {
  const auto& R = A4Realization::get();
  detail::CheckLog ok;
  LoopElement e1 = R.xp(1, 0), e2 = R.xp(2, 0);
  for (int r = -window; r <= window; ++r) {
    std::string at = " r=" + std::to_string(r);
    ok(tau4(1, R.xp(2, r)) == q(1, 2) * bracket4(e1, bracket4(e1, R.xp(2, r))), "tau1(x2)" + at);
    ok(tau4(2, R.xp(1, r)) == bracket4(e2, R.xp(1, r)), "tau2(x1)" + at);
    if (r % 2 != 0)
      ok(tau4(2, R.X1(1, r)) == k * bracket4(e2, bracket4(e2, R.X1(1, r))), "tau2(X1)" + at);
  }
  return ok.v;
}

// ---- Root system of A_{2n}^{(2)} ----

struct AffineRoot {
  std::vector<int> fin;  // coefficients on alpha_1..alpha_n
  int delta = 0;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < fin.size(); ++i) {
      if (fin[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (fin[i] != 1) s += std::to_string(fin[i]);
      s += "a" + std::to_string(i + 1);
    }
    if (s.empty()) s = "0";
    if (delta != 0) s += (delta > 0 ? "+" : "") + std::to_string(delta) + "d";
    return s;
  }
};

enum class RootClass { SHORT, MEDIUM, LONG };

inline std::string root_class_name(RootClass k) {
  return k == RootClass::SHORT ? "s" : k == RootClass::MEDIUM ? "m" : "l";
}

// Positive finite roots alpha_i + ... + alpha_j.
inline std::vector<std::vector<int>> finite_roots_s(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      std::vector<int> v(n, 0);
      for (int k = i; k <= j; ++k) v[k - 1] = 1;
      out.push_back(v);
    }
  return out;
}

// Positive finite roots 2alpha_1 + ... + 2alpha_i + alpha_{i+1} + ... + alpha_j, i < j.
inline std::vector<std::vector<int>> finite_roots_m(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> v(n, 0);
      for (int k = 1; k <= j; ++k) v[k - 1] = k <= i ? 2 : 1;
      out.push_back(v);
    }
  return out;
}

// alpha_1 + ... + alpha_j: the roots whose doubles are roots (at odd loop degree).
inline std::vector<std::vector<int>> finite_roots_doubling(int n) {
  std::vector<std::vector<int>> out;
  for (int j = 1; j <= n; ++j) {
    std::vector<int> v(n, 0);
    for (int k = 1; k <= j; ++k) v[k - 1] = 1;
    out.push_back(v);
  }
  return out;
}

struct ClassifiedRoot {
  AffineRoot root;
  RootClass cls;
};

// Positive real roots with finite height <= height_cap and |delta| <= window.
inline std::vector<ClassifiedRoot> enumerate_roots(int n, int height_cap, int window) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  auto height = [](const std::vector<int>& v) {
    int h = 0;
    for (int x : v) h += x;
    return h;
  };
  std::vector<ClassifiedRoot> out;
  for (int r = -window; r <= window; ++r) {
    for (const auto& a : finite_roots_s(n))
      if (height(a) <= height_cap) out.push_back({{a, r}, RootClass::SHORT});
    for (const auto& a : finite_roots_m(n))
      if (height(a) <= height_cap) out.push_back({{a, r}, RootClass::MEDIUM});
    if (r % 2 != 0)
      for (auto a : finite_roots_doubling(n)) {
        for (auto& x : a) x *= 2;
        if (height(a) <= height_cap) out.push_back({{a, r}, RootClass::LONG});
      }
  }
  return out;
}

// s_i(beta) = beta - beta(h_i) alpha_i with beta(h_i) = sum_j b_j a_ij.
inline AffineRoot weyl_reflect(int i, const AffineRoot& b) {
  int n = static_cast<int>(b.fin.size());
  int p = 0;
  for (int j = 1; j <= n; ++j) p += b.fin[j - 1] * cartan_entry(n, i, j);
  AffineRoot out = b;
  out.fin[i - 1] -= p;
  return out;
}

// Pairing beta(h_i).
inline int root_pairing(const std::vector<int>& fin, int i) {
  int n = static_cast<int>(fin.size());
  int p = 0;
  for (int j = 1; j <= n; ++j) p += fin[j - 1] * cartan_entry(n, i, j);
  return p;
}

// Root vector x^pm_{beta,r} for n = 2, beta = a1 alpha_1 + a2 alpha_2.
// alpha_1+alpha_2 = tau_2(alpha_1), 2alpha_1+alpha_2 = tau_1(alpha_2), 2alpha_1+2alpha_2 = tau_2(2alpha_1).
inline LoopElement root_vector(int sign, int a1, int a2, int r) {
  const auto& R = A4Realization::get();
  if (a1 == 1 && a2 == 0) return R.x(1, sign, r);
  if (a1 == 0 && a2 == 1) return R.x(2, sign, r);
  if (a1 == 1 && a2 == 1) return tau4(2, R.x(1, sign, r));
  if (a1 == 2 && a2 == 1) return tau4(1, R.x(2, sign, r));
  if (a1 == 2 && a2 == 0) return R.X1(sign, r);
  if (a1 == 2 && a2 == 2) return X2(sign, r);
  throw std::invalid_argument("unsupported root");
}

// Every positive real root vector in the window is an ad h_{i,0} eigenvector with eigenvalue beta(h_i).
inline LieCheck verify_root_weights(int window) {
  const auto& R = A4Realization::get();
  detail::CheckLog ok;
  for (const auto& cr : enumerate_roots(2, 4, window))
    for (int sign : {1, -1}) {
      const auto& f = cr.root.fin;
      LoopElement x = root_vector(sign, f[0], f[1], cr.root.delta);
      ok(!x.is_zero(), "nonzero " + cr.root.str());
      for (int i = 1; i <= 2; ++i)
        ok(bracket4(R.h(i, 0), x) == Q(sign * root_pairing(f, i)) * x,
           "weight " + cr.root.str() + " h" + std::to_string(i));
    }
  return ok.v;
}

// ---- Embeddings ----

// psi_bar: A2(2) -> node 1 of A4(2).
inline LoopElement psi_bar(const A22Index& i) {
  const auto& R = A4Realization::get();
  if (i.is_c()) return R.c();
  if (i.is_h()) return R.h(1, i.r);
  if (i.is_xp()) return R.xp(1, i.r);
  if (i.is_xm()) return R.xm(1, i.r);
  if (i.is_XP()) return R.X1(1, i.r);
  return R.X1(-1, i.r);
}

inline LoopElement psi_bar(const A22Element& e) {
  LoopElement out;
  for (const auto& [k, c] : e.terms()) out += c * psi_bar(k);
  return out;
}

// Untwisted affine sl2: c, h_r, x^pm_r with [h_r,h_s] = 2r delta c, [x^+_r, x^-_s] = h_{r+s} + r delta c.
struct A11Index {
  enum class Tag { XM, H, C, XP };
  Tag tag = Tag::C;
  int r = 0;
  friend auto operator<=>(const A11Index&, const A11Index&) = default;
  static A11Index c() { return {Tag::C, 0}; }
  static A11Index h(int r) { return {Tag::H, r}; }
  static A11Index xp(int r) { return {Tag::XP, r}; }
  static A11Index xm(int r) { return {Tag::XM, r}; }
  int sign() const { return tag == Tag::XP ? 1 : tag == Tag::XM ? -1 : 0; }
  std::string str() const {
    std::string R = std::to_string(r);
    switch (tag) {
      case Tag::C: return "c";
      case Tag::H: return "h" + R;
      case Tag::XP: return "x+" + R;
      case Tag::XM: return "x-" + R;
    }
    return "?";
  }
};
using A11Element = LinComb<A11Index>;

inline A11Element bracket11(const A11Index& a, const A11Index& b) {
  using I = A11Index;
  using T = I::Tag;
  int r = a.r, s = b.r;
  if (a.tag == T::C || b.tag == T::C) return {};
  if (a.tag == T::H && b.tag == T::H) return r + s == 0 ? A11Element(I::c(), Q(2 * r)) : A11Element{};
  if (a.tag == T::H) return A11Element(b.tag == T::XP ? I::xp(r + s) : I::xm(r + s), Q(2 * b.sign()));
  if (b.tag == T::H) return -bracket11(b, a);
  if (a.tag == b.tag) return {};
  if (a.tag == T::XP) {
    A11Element e(I::h(r + s));
    if (r + s == 0) e.add(I::c(), Q(r));
    return e;
  }
  return -bracket11(b, a);
}

inline std::vector<A11Index> basis11(int window) {
  std::vector<A11Index> v{A11Index::c()};
  for (int r = -window; r <= window; ++r) {
    v.push_back(A11Index::h(r));
    v.push_back(A11Index::xp(r));
    v.push_back(A11Index::xm(r));
  }
  return v;
}

// psi_tilde: affine sl2 -> node 2. Its central element lands on (2/d_2) c = c/2.
inline LoopElement psi_tilde(const A11Index& i) {
  const auto& R = A4Realization::get();
  switch (i.tag) {
    case A11Index::Tag::C: return R.central_scale(2) * R.c();
    case A11Index::Tag::H: return R.h(2, i.r);
    case A11Index::Tag::XP: return R.xp(2, i.r);
    case A11Index::Tag::XM: return R.xm(2, i.r);
  }
  throw std::invalid_argument("psi_tilde");
}

inline LoopElement psi_tilde(const A11Element& e) {
  LoopElement out;
  for (const auto& [k, c] : e.terms()) out += c * psi_tilde(k);
  return out;
}

enum class Embedding { PSI_BAR, PSI_TILDE };

// phi([a,b]) = [phi(a), phi(b)] on all basis pairs of the window.
inline LieCheck check_embedding(Embedding m, int window) {
  detail::CheckLog ok;
  if (m == Embedding::PSI_BAR) {
    auto B = basis22(window);
    for (const auto& a : B)
      for (const auto& b : B)
        ok(psi_bar(bracket22(a, b)) == bracket4(psi_bar(a), psi_bar(b)),
           "psi_bar on [" + a.str() + ", " + b.str() + "]");
  } else {
    auto B = basis11(window);
    for (const auto& a : B)
      for (const auto& b : B)
        ok(psi_tilde(bracket11(a, b)) == bracket4(psi_tilde(a), psi_tilde(b)),
           "psi_tilde on [" + a.str() + ", " + b.str() + "]");
  }
  return ok.v;
}

}  // namespace affint
