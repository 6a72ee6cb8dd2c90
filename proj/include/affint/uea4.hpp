#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "affint/linalg.hpp"
#include "affint/loop4.hpp"
#include "affint/pbw.hpp"

namespace affint {

// PBW basis of A4(2). Positive and negative root vectors use the convex order
// alpha_2 < alpha_1+alpha_2 < 2alpha_1+2alpha_2 < 2alpha_1+alpha_2 < 2alpha_1 < alpha_1,
// refined by the loop degree. CENTER holds c (kind 0) and h_{i,0} (kind i).
struct A4Index {
  enum class Part { NEG, H_NEG, CENTER, H_POS, POS };
  Part part = Part::CENTER;
  int kind = 0;
  int r = 0;

  friend auto operator<=>(const A4Index&, const A4Index&) = default;

  static constexpr std::array<std::array<int, 2>, 6> kRoots{{{0, 1}, {1, 1}, {2, 2}, {2, 1}, {2, 0}, {1, 0}}};

  static int kind_of(int a1, int a2) {
    for (int k = 0; k < 6; ++k)
      if (kRoots[k][0] == a1 && kRoots[k][1] == a2) return k;
    throw std::invalid_argument("unsupported root");
  }
  static bool doubled(int kind) { return kind == 2 || kind == 4; }

  static A4Index c() { return {Part::CENTER, 0, 0}; }
  static A4Index h(int i, int r) {
    if (i != 1 && i != 2) throw std::invalid_argument("A4(2) has nodes 1 and 2");
    if (r == 0) return {Part::CENTER, i, 0};
    return {r < 0 ? Part::H_NEG : Part::H_POS, i, r};
  }
  static A4Index root(int sign, int a1, int a2, int r) {
    int k = kind_of(a1, a2);
    if (doubled(k) && r % 2 == 0) throw std::invalid_argument("doubled root needs odd degree");
    return {sign > 0 ? Part::POS : Part::NEG, k, r};
  }
  static A4Index x(int i, int sign, int r) { return i == 1 ? root(sign, 1, 0, r) : root(sign, 0, 1, r); }
  static A4Index X1(int sign, int r) { return root(sign, 2, 0, r); }
  static A4Index X2(int sign, int r) { return root(sign, 2, 2, r); }

  bool is_cartan0() const { return part == Part::CENTER; }
  int sign() const { return part == Part::POS ? 1 : part == Part::NEG ? -1 : 0; }

  std::string str() const {
    std::string R = std::to_string(r);
    switch (part) {
      case Part::CENTER: return kind == 0 ? "c" : "h" + std::to_string(kind) + ",0";
      case Part::H_NEG:
      case Part::H_POS: return "h" + std::to_string(kind) + "," + R;
      default: {
        auto [a1, a2] = kRoots[static_cast<std::size_t>(kind)];
        return std::string(part == Part::POS ? "x+" : "x-") + "[" + std::to_string(a1) + "," +
               std::to_string(a2) + "]" + R;
      }
    }
  }
};

using A4Lie = LinComb<A4Index>;

// Loop realization of each basis vector.
inline LoopElement realize4(const A4Index& i) {
  const auto& R = A4Realization::get();
  switch (i.part) {
    case A4Index::Part::CENTER: return i.kind == 0 ? R.c() : R.h(i.kind, 0);
    case A4Index::Part::H_NEG:
    case A4Index::Part::H_POS: return R.h(i.kind, i.r);
    default: {
      auto [a1, a2] = A4Index::kRoots[static_cast<std::size_t>(i.kind)];
      return root_vector(i.sign(), a1, a2, i.r);
    }
  }
}

inline LoopElement realize4(const A4Lie& e) {
  LoopElement out;
  for (const auto& [k, c] : e.terms()) out += c * realize4(k);
  return out;
}

namespace detail {

inline QVec flatten(const Mat5& m) { return QVec(m.begin(), m.end()); }

// Coordinates of a degree-d matrix in the basis of the (-1)^d twist eigenspace.
class A4Decomposer {
 public:
  static const A4Decomposer& get() {
    static const A4Decomposer D;
    return D;
  }

  A4Lie decompose(const LoopElement& e) const {
    A4Lie out;
    if (e.c != 0) out.add(A4Index::c(), e.c);
    for (const auto& [d, m] : e.loop) {
      int p = A4Realization::parity(d);
      auto x = solver_[p].solve(flatten(m));
      if (!x) throw std::logic_error("matrix outside the twisted loop algebra");
      for (std::size_t k = 0; k < x->size(); ++k) {
        if ((*x)[k] == 0) continue;
        const auto& t = templ_[p][k];
        A4Index idx = t.part == A4Index::Part::H_POS ? A4Index::h(t.kind, d) : A4Index{t.part, t.kind, d};
        out.add(idx, (*x)[k]);
      }
    }
    return out;
  }

 private:
  A4Decomposer() {
    for (int p = 0; p < 2; ++p) {
      std::vector<QVec> vecs;
      for (int sign : {-1, 1})
        for (int k = 0; k < 6; ++k) {
          if (A4Index::doubled(k) && p == 0) continue;
          A4Index i{sign > 0 ? A4Index::Part::POS : A4Index::Part::NEG, k, p};
          templ_[p].push_back(i);
          vecs.push_back(flatten(realize4(i).loop.at(p)));
        }
      for (int i = 1; i <= 2; ++i) {
        templ_[p].push_back({A4Index::Part::H_POS, i, p});
        vecs.push_back(flatten(A4Realization::get().h(i, p).loop.at(p)));
      }
      solver_[p] = SpanSolver(vecs, 25);
    }
  }

  std::vector<A4Index> templ_[2];
  SpanSolver solver_[2];
};

}  // namespace detail

inline A4Lie decompose4(const LoopElement& e) { return detail::A4Decomposer::get().decompose(e); }

inline A4Lie bracket4_index(const A4Index& a, const A4Index& b) {
  return decompose4(bracket4(realize4(a), realize4(b)));
}

using U4 = Uea<A4Index>;

inline U4& uea4() {
  static U4 U(bracket4_index);
  return U;
}

// T^p on x^+_{i,r} (-> x^+_{i,r-p}) and X^+_{1,r} (-> (-1)^p X^+_{1,r-2p}).
inline A4Lie shift4(int p, const A4Lie& e) {
  A4Lie out;
  for (const auto& [i, c] : e.terms()) {
    if (i.part != A4Index::Part::POS) throw std::invalid_argument("T implemented on positive generators only");
    if (i.kind == 5 || i.kind == 0)
      out.add({i.part, i.kind, i.r - p}, c);
    else if (i.kind == 4)
      out.add({i.part, i.kind, i.r - 2 * p}, p % 2 == 0 ? c : -c);
    else
      throw std::invalid_argument("T implemented on x_i and X_1 only");
  }
  return out;
}

}  // namespace affint
