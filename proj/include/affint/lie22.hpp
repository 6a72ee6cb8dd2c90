#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affint/lincomb.hpp"

namespace affint {

// Basis of A2(2): c, h_r, x_r^+-, X_r^+- (r odd).
struct A22Index {
  enum class Tag { XM_ODD, XXM, XM_EVEN, H_NEG, H0, C, H_POS, XP_ODD, XXP, XP_EVEN };
  Tag tag = Tag::C;
  int r = 0;

  // The tag order is the PBW block order; the loop index refines it.
  friend auto operator<=>(const A22Index&, const A22Index&) = default;

  static A22Index c() { return {Tag::C, 0}; }
  static A22Index h(int r) { return {r < 0 ? Tag::H_NEG : r == 0 ? Tag::H0 : Tag::H_POS, r}; }
  static A22Index xp(int r) { return {odd(r) ? Tag::XP_ODD : Tag::XP_EVEN, r}; }
  static A22Index xm(int r) { return {odd(r) ? Tag::XM_ODD : Tag::XM_EVEN, r}; }
  static A22Index XP(int r) {
    if (!odd(r)) throw std::invalid_argument("X_r needs odd r");
    return {Tag::XXP, r};
  }
  static A22Index XM(int r) {
    if (!odd(r)) throw std::invalid_argument("X_r needs odd r");
    return {Tag::XXM, r};
  }

  bool is_h() const { return tag == Tag::H_NEG || tag == Tag::H0 || tag == Tag::H_POS; }
  bool is_xp() const { return tag == Tag::XP_ODD || tag == Tag::XP_EVEN; }
  bool is_xm() const { return tag == Tag::XM_ODD || tag == Tag::XM_EVEN; }
  bool is_XP() const { return tag == Tag::XXP; }
  bool is_XM() const { return tag == Tag::XXM; }
  bool is_c() const { return tag == Tag::C; }
  // +1 for positive root vectors, -1 for negative, 0 for Cartan/central.
  int sign() const { return (is_xp() || is_XP()) ? 1 : (is_xm() || is_XM()) ? -1 : 0; }

  std::string str() const {
    std::string R = std::to_string(r);
    if (is_c()) return "c";
    if (is_h()) return "h" + R;
    if (is_xp()) return "x+" + R;
    if (is_xm()) return "x-" + R;
    if (is_XP()) return "X+" + R;
    return "X-" + R;
  }

  static bool odd(int r) { return r % 2 != 0; }
};

using A22Element = LinComb<A22Index>;

inline std::string str(const A22Element& e) {
  return e.str([](const A22Index& i) { return i.str(); });
}

namespace detail {

inline int sgn_pow(int r) { return r % 2 == 0 ? 1 : -1; }  // (-1)^r
inline Q a11(int r) { return Q(2 * (2 - sgn_pow(r))); }      // 2(2 + (-1)^{r-1})

// Bracket on (a, b) with a <= b in a fixed case order; handles each unordered pair once.
inline std::optional<A22Element> bracket22_oriented(const A22Index& a, const A22Index& b) {
  using I = A22Index;
  const int r = a.r, s = b.r;
  if (a.is_c() || b.is_c()) return A22Element{};
  if (a.is_h() && b.is_h())
    return r + s == 0 ? A22Element(I::c(), Q(2 * r) * (2 - sgn_pow(r))) : A22Element{};
  if (a.is_h() && (b.is_xp() || b.is_xm()))
    return A22Element(b.is_xp() ? I::xp(r + s) : I::xm(r + s), a11(r) * b.sign());
  if (a.is_h() && (b.is_XP() || b.is_XM())) {
    if (r % 2 != 0) return A22Element{};
    return A22Element(b.is_XP() ? I::XP(r + s) : I::XM(r + s), Q(4 * b.sign()));
  }
  if ((a.is_xp() && b.is_xp()) || (a.is_xm() && b.is_xm())) {
    if ((r + s) % 2 == 0) return A22Element{};
    int sg = a.sign() * sgn_pow(s);
    return A22Element(a.is_xp() ? I::XP(r + s) : I::XM(r + s), Q(sg));
  }
  if ((a.is_xp() && b.is_XP()) || (a.is_xm() && b.is_XM()) || (a.is_XP() && b.is_XP()) ||
      (a.is_XM() && b.is_XM()))
    return A22Element{};
  if (a.is_xp() && b.is_xm()) {
    A22Element e(I::h(r + s));
    if (r + s == 0) e.add(I::c(), Q(r));
    return e;
  }
  if ((a.is_xp() && b.is_XM()) || (a.is_xm() && b.is_XP()))
    return A22Element(a.is_xp() ? I::xm(r + s) : I::xp(r + s), Q(4 * a.sign() * sgn_pow(r)));
  if (a.is_XP() && b.is_XM()) {
    A22Element e(I::h(r + s), Q(8));
    if (r + s == 0) e.add(I::c(), Q(4 * r));
    return e;
  }
  return std::nullopt;
}

}  // namespace detail

inline A22Element bracket22(const A22Index& a, const A22Index& b) {
  if (auto e = detail::bracket22_oriented(a, b)) return *e;
  if (auto e = detail::bracket22_oriented(b, a)) return -*e;
  throw std::logic_error("bracket22: unhandled pair " + a.str() + ", " + b.str());
}

inline A22Element bracket22(const A22Element& a, const A22Element& b) {
  return bilinear(a, b, [](const A22Index& x, const A22Index& y) { return bracket22(x, y); });
}

inline std::vector<A22Index> basis22(int window) {
  std::vector<A22Index> v{A22Index::c()};
  for (int r = -window; r <= window; ++r) {
    v.push_back(A22Index::h(r));
    v.push_back(A22Index::xp(r));
    v.push_back(A22Index::xm(r));
    if (r % 2 != 0) {
      v.push_back(A22Index::XP(r));
      v.push_back(A22Index::XM(r));
    }
  }
  return v;
}

struct LieCheck {
  bool pass = true;
  long checked = 0;
  std::string failure;
};

inline LieCheck jacobi_exhaust22(int window) {
  LieCheck v;
  auto B = basis22(window);
  for (const auto& a : B) {
    ++v.checked;
    if (!bracket22(a, a).is_zero()) return {false, v.checked, "[" + a.str() + "," + a.str() + "] != 0"};
    for (const auto& b : B)
      if (bracket22(a, b) != -bracket22(b, a))
        return {false, v.checked, "antisymmetry fails on " + a.str() + ", " + b.str()};
  }
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j)
      for (std::size_t k = j + 1; k < B.size(); ++k) {
        ++v.checked;
        A22Element x(B[i]), y(B[j]), z(B[k]);
        A22Element s = bracket22(x, bracket22(y, z)) + bracket22(y, bracket22(z, x)) +
                       bracket22(z, bracket22(x, y));
        if (!s.is_zero())
          return {false, v.checked,
                  "Jacobi fails on " + B[i].str() + ", " + B[j].str() + ", " + B[k].str()};
      }
  return v;
}

// SIGMA: antiautomorphism x -> x, X -> -X, h -> -h, c -> -c.
// OMEGA: antiautomorphism x_r^+- -> x_{-r}^-+, X likewise, h_r -> h_{-r}, c -> c.
// T: automorphism x_r^+- -> x_{r-+1}^+-, X_r^+- -> -X_{r-+2}^+-, h_r -> h_r - delta_{r,0} c.
// SIGMA_PRINTED and T_PRINTED are the assignments as printed (h -> h for sigma;
// x_r^+- -> x_{r-+1}^-+, h_r -> h_{-r} - r delta_{r,0} c for T); they fail the morphism check.
enum class Morphism22 { SIGMA, OMEGA, T, T_INV, SIGMA_PRINTED, T_PRINTED };

inline bool is_anti(Morphism22 m) {
  return m == Morphism22::SIGMA || m == Morphism22::OMEGA || m == Morphism22::SIGMA_PRINTED;
}

inline std::string morphism_name(Morphism22 m) {
  switch (m) {
    case Morphism22::SIGMA: return "SIGMA";
    case Morphism22::OMEGA: return "OMEGA";
    case Morphism22::T: return "T";
    case Morphism22::T_INV: return "T_INV";
    case Morphism22::SIGMA_PRINTED: return "SIGMA_PRINTED";
    case Morphism22::T_PRINTED: return "T_PRINTED";
  }
  return "?";
}

inline A22Element morphism22(Morphism22 m, const A22Index& i) {
  using I = A22Index;
  const int r = i.r;
  switch (m) {
    case Morphism22::SIGMA:
    case Morphism22::SIGMA_PRINTED:
      if (i.is_XP() || i.is_XM() || i.is_c()) return A22Element(i, Q(-1));
      if (i.is_h()) return A22Element(i, Q(m == Morphism22::SIGMA ? -1 : 1));
      return A22Element(i);
    case Morphism22::OMEGA:
      if (i.is_c()) return A22Element(i);
      if (i.is_h()) return A22Element(I::h(-r));
      if (i.is_xp()) return A22Element(I::xm(-r));
      if (i.is_xm()) return A22Element(I::xp(-r));
      if (i.is_XP()) return A22Element(I::XM(-r));
      return A22Element(I::XP(-r));
    case Morphism22::T:
    case Morphism22::T_INV: {
      int e = m == Morphism22::T ? 1 : -1;
      if (i.is_c()) return A22Element(i);
      if (i.is_h()) {
        A22Element h(i);
        if (r == 0) h.add(I::c(), Q(-e));
        return h;
      }
      if (i.is_xp()) return A22Element(I::xp(r - e));
      if (i.is_xm()) return A22Element(I::xm(r + e));
      if (i.is_XP()) return A22Element(I::XP(r - 2 * e), Q(-1));
      return A22Element(I::XM(r + 2 * e), Q(-1));
    }
    case Morphism22::T_PRINTED:
      if (i.is_c()) return A22Element(i);
      if (i.is_h()) return A22Element(I::h(-r));  // the r*delta_{r,0} c term vanishes
      if (i.is_xp()) return A22Element(I::xm(r - 1));
      if (i.is_xm()) return A22Element(I::xp(r + 1));
      if (i.is_XP()) return A22Element(I::XM(r - 2), Q(-1));
      return A22Element(I::XP(r + 2), Q(-1));
  }
  throw std::invalid_argument("unknown morphism");
}

inline A22Element morphism22(Morphism22 m, const A22Element& e) {
  A22Element r;
  for (const auto& [k, c] : e.terms()) r += morphism22(m, k) * c;
  return r;
}

inline LieCheck check_morphism22(Morphism22 m, int window) {
  LieCheck v;
  auto B = basis22(window);
  for (const auto& a : B)
    for (const auto& b : B) {
      ++v.checked;
      A22Element lhs = morphism22(m, bracket22(a, b));
      A22Element fa = morphism22(m, a), fb = morphism22(m, b);
      A22Element rhs = is_anti(m) ? bracket22(fb, fa) : bracket22(fa, fb);
      if (lhs != rhs) {
        v.pass = false;
        v.failure = morphism_name(m) + " on [" + a.str() + ", " + b.str() + "]: " + str(lhs) +
                    " vs " + str(rhs);
        return v;
      }
    }
  return v;
}

}  // namespace affint
