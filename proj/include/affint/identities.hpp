#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <stdexcept>
#include <string>
#include <vector>

#include "affint/hat.hpp"
#include "affint/lie22.hpp"
#include "affint/pbw.hpp"
#include "affint/uea4.hpp"

namespace affint {

// Straightening identities in U[[u,v]] for A2(2) and A4(2).
//
// Every identity has a PRINTED reading (the formula as stated in the source) and an
// OPERATIVE reading (the minimally amended formula). When the two coincide the amendment
// text is empty. Cartan series use the alternating convention
// hhat(u) = exp(sum (-1)^{r-1} h_r u^r / r).
enum class Reading { PRINTED, OPERATIVE };

inline std::string reading_name(Reading r) { return r == Reading::PRINTED ? "printed" : "operative"; }

struct UeaParams {
  int r = 0, s = 0, k = 1, l = 1, sign = 1, i = 1, j = 1;
};

struct UeaVerdict {
  bool equal = false;
  std::string witness;  // first mismatching coefficient, empty when equal
};

struct IdentitySpec {
  std::string id;
  int default_n = 3;
  std::string amendment;  // empty: the printed formula is the operative one
  std::vector<UeaParams> grid;
  std::string params_str(const UeaParams& p) const;
};

namespace uea_detail {

constexpr Convention kConv = Convention::Alternating;

inline const std::vector<int>& grid() {
  static const std::vector<int> g{-1, 0, 1, 2};
  return g;
}

template <class Idx>
UeaVerdict compare(const Series2<Idx>& a, const Series2<Idx>& b) {
  auto d = first_difference(a, b);
  if (!d) return {true, ""};
  auto name = [](const Idx& x) { return x.str(); };
  return {false, "u^" + std::to_string(d->i) + " v^" + std::to_string(d->j) + ": lhs " +
                     uea_str<Idx>(d->lhs, name) + " | rhs " + uea_str<Idx>(d->rhs, name)};
}

// Truncated exp of a Lie series sum_k coef(k) * x(k) u^{a+ck} v^{b+dk}.
template <class Idx, class Gen>
Series2<Idx> exp_lie_geometric(Uea<Idx>& U, Gen&& term, int a, int b, int c, int d, int n) {
  Series2<Idx> s(n);
  for (int k = 0; a + b + k * (c + d) <= n; ++k) s.add(a + c * k, b + d * k, Uea<Idx>::lie(term(k)));
  return sexp(U, s);
}

// sum_k s_k (alpha u^a v^b)^k with h_r -> idx(r); s is hat/bar/check of the given order.
template <class Idx>
Series2<Idx> cartan(const PolySeries& s, const std::function<Idx(int)>& idx, const Q& alpha, int a, int b,
                    int n) {
  return poly_series_to_uea<Idx>(s, idx, alpha, a, b, n);
}

// hbar(z) = sum_k hbar_{2k} z^k, the even-argument bar series reindexed.
inline PolySeries bar_reindexed(int n) {
  PolySeries b = named_series(SeriesName::BAR, 2 * n, kConv), r(n);
  for (int k = 0; k <= n; ++k) r[k] = b[2 * k];
  return r;
}

// (1 + beta u^a v^b)^{e} for several factors, e a Cartan-zero element.
template <class Idx, class Pred>
Series2<Idx> binomials(Uea<Idx>& U, int n, Pred&& c0,
                       const std::vector<std::tuple<Q, int, int, typename Uea<Idx>::Elem>>& fs) {
  Series2<Idx> r = Series2<Idx>::one(n);
  for (const auto& [beta, a, b, e] : fs) r = smul(U, r, central_binomial(U, beta, a, b, e, n, c0));
  return r;
}

// ---- A2(2) ----

using I22 = A22Index;
using S22 = Series2<I22>;
using U22 = Uea<I22>;

inline U22& u22() {
  static U22 U([](const I22& a, const I22& b) { return bracket22(a, b); });
  return U;
}

inline A22Element shift22(int p, const A22Element& x) {
  A22Element y = x;
  for (int k = 0; k < std::abs(p); ++k) y = morphism22(p > 0 ? Morphism22::T : Morphism22::T_INV, y);
  return y;
}

inline bool c0_22(const I22& x) { return x.is_c() || x == I22::h(0); }

inline S22 hser22(SeriesName name, int mult, const Q& alpha, int a, int b, int n, const Q& power = 1) {
  PolySeries s = named_series(name, n, kConv);
  if (power != 1) s = series_pow(s, power);
  return cartan<I22>(s, [mult](int r) { return I22::h(mult * r); }, alpha, a, b, n);
}

inline S22 op22(const OpSeries& op, const A22Element& x, int a, int b) {
  return sshift(apply_op<I22>(op, x, shift22), a, b);
}

// exp(1/2 X u) exp(1/2 X' v) for the X-pair identities.
inline S22 xx_lhs(int r, int s, int n) {
  auto& U = u22();
  return smul(U, exp_gen(I22::XP(2 * r + 1), 1, 0, n, q(1, 2)), exp_gen(I22::XM(2 * s - 1), 0, 1, n, q(1, 2)));
}

inline std::pair<S22, S22> muzubuzubo(const std::string& which, int n, Reading rd) {
  auto& U = u22();
  auto c = U22::atom(I22::c());
  SeriesName plus = SeriesName::CHECK, minus = SeriesName::CHECK;
  std::vector<std::tuple<Q, int, int, U22::Elem>> printed, operative;
  if (which == "ETAETA") {
    printed = {{Q(-1), 1, 1, c}, {Q(1), 1, 1, c * q(-1, 2)}};
    operative = {{Q(-1), 1, 1, c * Q(-1)}, {Q(1), 1, 1, c * q(1, 2)}};
  } else if (which == "CAPCAP") {
    plus = minus = SeriesName::HAT;
    printed = {{Q(-1), 1, 1, c * Q(2)}, {Q(1), 1, 1, c * Q(-1)}};
    operative = {{Q(-1), 1, 1, c * Q(-4)}, {Q(1), 1, 1, c * Q(2)}};
  } else if (which == "BARBAR") {
    plus = minus = SeriesName::BAR;
    printed = {{Q(-1), 2, 2, c * Q(2)}, {Q(-1), 2, 2, c * Q(-1)}};
    operative = {{Q(-1), 2, 2, c * Q(-2)}, {Q(-1), 2, 2, c}};
  } else if (which == "CAPBAR") {
    plus = SeriesName::HAT;
    minus = SeriesName::BAR;
    printed = {{Q(-1), 2, 2, c}};
    operative = {{Q(-1), 2, 2, c * Q(-1)}};
  } else {
    throw std::invalid_argument("unknown identity");
  }
  S22 hp = hser22(plus, 1, 1, 1, 0, n), hm = hser22(minus, -1, 1, 0, 1, n);
  S22 f = binomials(U, n, c0_22, rd == Reading::PRINTED ? printed : operative);
  return {smul(U, hp, hm), sprod(U, {hm, f, hp})};
}

inline std::pair<S22, S22> buzaccazero(const UeaParams& p) {
  auto& U = u22();
  I22 X = p.sign > 0 ? I22::XP(2 * p.r + 1) : I22::XM(2 * p.r + 1);
  U22::Elem xk = U22::divided_power(X, p.k) * pow_q(q(1, 2), p.k);
  U22::Elem h0 = U22::atom(I22::h(0));
  auto lhs = U.mul(xk, binom_uea(U, h0, p.l));
  auto rhs = U.mul(binom_uea(U, h0 - U22::one() * Q(4 * p.sign * p.k), p.l), xk);
  return {S22::term(0, 0, 0, lhs), S22::term(0, 0, 0, rhs)};
}

// y^(k) S(u) = S(u) (Op y)^(k) with z = T^{-1}u (x-type) or w = T^{-1}u^2 (X-type).
inline std::pair<S22, S22> zeropiubarra(const std::string& which, const UeaParams& p, int n, Reading rd) {
  auto& U = u22();
  bool big = which == "COMMUPIETAGRANDE" || which == "HUNOO" || which == "BUNOO";
  SeriesName name = (which == "COMMUPIETA" || which == "COMMUPIETAGRANDE") ? SeriesName::CHECK
                    : (which == "HUNO" || which == "HUNOO")                ? SeriesName::HAT
                                                                           : SeriesName::BAR;
  int k = (which == "COMMUPIETA" || which == "COMMUPIETAGRANDE") ? 1 : p.k;
  bool pr = rd == Reading::PRINTED;
  auto Z = [n](const Q& g, int pw, const Q& m) { return OpSeries::binomial(n, g, -pw, pw, 0, m); };
  OpSeries op = OpSeries::identity(n);
  if (which == "COMMUPIETA")
    op = pr ? Z(-1, 1, 1) * Z(-1, 2, -3) : Z(-1, 1, 1) * Z(1, 1, -2);
  else if (which == "HUNO")
    op = pr ? Z(-1, 1, -2) * Z(-1, 2, -6) : Z(-1, 1, 2) * Z(1, 1, -4);
  else if (which == "BUNO")
    op = pr ? Z(-1, 2, -5) : Z(-1, 2, -1);
  else {
    // w = T^{-1} u^2 has operator power 1 and u-degree 2.
    Q m = which == "COMMUPIETAGRANDE" ? Q(-1) : Q(-2);
    op = OpSeries::binomial(n, pr ? Q(-1) : Q(1), -1, 2, 0, m);
  }
  A22Element y = big ? A22Element(I22::XP(2 * p.r + 1), which == "COMMUPIETAGRANDE" ? Q(1) : q(1, 2))
                     : A22Element(I22::xp(p.r));
  S22 S = hser22(name, 1, 1, 1, 0, n);
  S22 Y = op22(op, y, 0, 0);
  S22 yk = S22::term(n, 0, 0, U.pow(U22::lie(y), k) * (Q(1) / Q(factorial(static_cast<unsigned>(k)))));
  return {smul(U, yk, S), smul(U, S, sdivided_power(U, Y, k))};
}

inline std::pair<S22, S22> nuoveadd3(const UeaParams& p, int n, Reading rd) {
  auto& U = u22();
  int r = p.r, s = -p.r;
  A22Element e(I22::XP(2 * r + 1), q(1, 2)), f(I22::XM(2 * s - 1), q(1, 2));
  U22::Elem E = U22::atom(I22::h(0), q(1, 2)) + U22::atom(I22::c(), q(2 * r + 1, 4));
  S22 mid = central_binomial(U, Q(4), 1, 1, E, n, c0_22);
  Q ratio = rd == Reading::PRINTED ? Q(0) : Q(-4);
  auto geo = [&](const A22Element& x) {
    return [x, ratio](int k) { return pow_q(ratio, k) * x; };
  };
  S22 left = exp_lie_geometric<I22>(U, geo(f), 0, 1, 1, 1, n);
  S22 right = exp_lie_geometric<I22>(U, geo(e), 1, 0, 1, 1, n);
  return {xx_lhs(r, s, n), sprod(U, {left, mid, right})};
}

// Two right-hand sides for r + s != 0; the operative check requires both.
inline std::pair<S22, S22> nuoveadd2(const UeaParams& p, int n, Reading rd, int variant) {
  auto& U = u22();
  int r = p.r, s = p.s, m = r + s;
  if (m == 0) throw std::invalid_argument("NUOVEADD_2 needs r + s != 0");
  S22 left(n), right(n), mid(n);
  if (rd == Reading::PRINTED) {
    // 1/(1 + T^m uv) and 1/(1 + uv T^{-m}); u^r v^s is read as uv.
    left = sexp(U, op22(OpSeries::binomial(n, 1, m, 1, 1, -1), A22Element(I22::XM(2 * s - 1), q(1, 2)), 0, 1));
    right = sexp(U, op22(OpSeries::binomial(n, 1, -m, 1, 1, -1), A22Element(I22::XP(2 * r + 1), q(1, 2)), 1, 0));
    if (variant == 1)
      mid = cartan<I22>(series_pow(named_series(SeriesName::HAT, n, kConv), q(1, 2)),
                        [m](int k) { return I22::h(2 * m * k); }, 1, 2, 2, n);
    else
      mid = cartan<I22>(bar_reindexed(n), [m](int k) { return I22::h(m * k); }, -1, 1, 1, n);
  } else {
    left = exp_lie_geometric<I22>(
        U, [&](int k) { return pow_q(Q(-4), k) * A22Element(I22::XM(2 * s - 1 + 2 * k * m), q(1, 2)); }, 0, 1, 1,
        1, n);
    right = exp_lie_geometric<I22>(
        U, [&](int k) { return pow_q(Q(-4), k) * A22Element(I22::XP(2 * r + 1 + 2 * k * m), q(1, 2)); }, 1, 0, 1,
        1, n);
    if (variant == 1)
      mid = cartan<I22>(series_pow(named_series(SeriesName::HAT, n, kConv), q(1, 2)),
                        [m](int k) { return I22::h(2 * m * k); }, 4, 1, 1, n);
    else
      mid = cartan<I22>(bar_reindexed(n), [m](int k) { return I22::h(m * k); }, -4, 1, 1, n);
  }
  return {xx_lhs(r, s, n), sprod(U, {left, mid, right})};
}

// exp(x_0^+ u) exp(1/2 X_1^- v) as a product of seven factors.
inline std::pair<S22, S22> nuoveadd1(int n, Reading rd) {
  auto& U = u22();
  bool pr = rd == Reading::PRINTED;
  S22 lhs = smul(U, exp_gen(I22::xp(0), 1, 0, n), exp_gen(I22::XM(1), 0, 1, n, q(1, 2)));
  // (1 - 4 T^p u^4 v^2)^m as an operator series.
  auto D = [n](int p, const Q& m) { return OpSeries::binomial(n, -4, p, 4, 2, m); };
  auto lin = [n](const Q& g, int p) {
    OpSeries o(n);
    o.add(0, 0, 0, 1);
    o.add(4, 2, p, g);
    return o;
  };
  auto mono = [n](const Q& g, int p) {
    OpSeries o(n);
    o.add(0, 0, p, g);
    return o;
  };
  A22Element xm_a(pr ? I22::xm(0) : I22::xm(1)), xm_b(pr ? I22::xm(1) : I22::xm(0));
  A22Element xp_last(pr ? I22::xp(1) : I22::xp(0));
  S22 f1 = sexp(U, op22(mono(2, 0) * D(2, -1), xm_a, 1, 1));
  S22 f2 = sexp(U, op22(mono(-4, 2) * D(2, -1), xm_b, 3, 2));
  // Operative: T acts on X with a sign, so the X-series carry T -> -T.
  auto Dx = [n, pr](int p, const Q& m) { return OpSeries::binomial(n, pr ? -4 : 4, p, 4, 2, m); };
  Q sx = pr ? 1 : -1;
  S22 f3 = sexp(U, op22(lin(-12 * sx, 1) * Dx(1, -2), A22Element(I22::XM(1), q(1, 2)), 0, 1));
  S22 f4 = hser22(SeriesName::HAT, 1, 2, 2, 1, n, q(1, 2));
  S22 f5 = sexp(U, op22(lin(4 * sx, -1) * Dx(-1, -2), A22Element(I22::XP(1), q(1, 2)), 4, 1));
  S22 f6 = sexp(U, op22(mono(-2, 0) * D(-2, -1), A22Element(I22::xp(1)), 3, 1));
  S22 f7 = sexp(U, op22(D(-2, -1), xp_last, 1, 0));
  return {lhs, sprod(U, {f1, f2, f3, f4, f5, f6, f7})};
}

// ---- A4(2) ----

using I4 = A4Index;
using S4 = Series2<I4>;

inline bool c0_4(const I4& x) { return x.is_cartan0(); }

inline S4 hser4(SeriesName name, int node, int sign, int a, int b, int n) {
  return cartan<I4>(named_series(name, n, kConv), [node, sign](int r) { return I4::h(node, sign * r); }, 1, a, b,
                    n);
}

inline S4 op4(const OpSeries& op, const A4Lie& x) { return apply_op<I4>(op, x, shift4); }

inline I4 xa1a2(int a1, int a2, int r) { return I4::root(1, a1, a2, r); }

inline std::pair<S4, S4> commuplus(int which, const UeaParams& p, int n, Reading rd) {
  auto& U = uea4();
  bool pr = rd == Reading::PRINTED;
  int r = p.r, s = p.s;
  auto E = [n](const I4& x, int a, int b, const Q& c = 1) { return exp_gen(x, a, b, n, c); };
  switch (which) {
    case 1: {
      auto lhs = smul(U, E(I4::x(1, 1, r), 1, 0), E(I4::x(2, 1, s), 0, 1));
      Q sg = pr ? Q(1) : Q(-1);
      auto rhs = sprod(U, {E(I4::x(2, 1, s), 0, 1), E(I4::x(1, 1, r), 1, 0), E(xa1a2(1, 1, r + s), 1, 1, sg),
                           E(xa1a2(2, 1, 2 * r + s), 2, 1, Q(r % 2 == 0 ? -1 : 1))});
      return {lhs, rhs};
    }
    case 2: {
      auto lhs = smul(U, E(I4::x(1, 1, r), 1, 0), E(xa1a2(1, 1, s), 0, 1));
      Q c = Q(2 * (r % 2 == 0 ? 1 : -1)) * (pr ? Q(1) : Q(-1));
      auto rhs = sprod(U, {E(xa1a2(1, 1, pr ? r : s), 0, 1), E(xa1a2(2, 1, r + s), 1, 1, c), E(I4::x(1, 1, r), 1, 0)});
      return {lhs, rhs};
    }
    case 3: {
      auto lhs = smul(U, E(I4::X1(1, r), 1, 0, q(1, 2)), E(I4::x(2, 1, pr ? r : s), 0, 1));
      if (pr)
        return {lhs, sprod(U, {E(I4::x(2, 1, s), 0, 1), E(I4::X1(1, r), 1, 0, q(1, 2)), E(xa1a2(2, 1, r + s), 1, 1, 2)})};
      // [x_{2a1+a2}, x_2] does not vanish: a further factor in X_{2,r+2s} u v^2 appears.
      Q c = s % 2 == 0 ? q(1, 2) : q(-1, 2);
      auto rhs = sprod(U, {E(I4::x(2, 1, s), 0, 1), E(I4::X1(1, r), 1, 0, q(1, 2)), E(xa1a2(2, 1, r + s), 1, 1, -2),
                           E(I4::X2(1, r + 2 * s), 1, 2, c)});
      return {lhs, rhs};
    }
    case 4: {
      auto lhs = smul(U, E(I4::x(2, 1, r), 1, 0), E(xa1a2(2, 1, s), 0, 1));
      int a = pr ? r : s, b = pr ? s : r;
      Q c = pr ? q(-1, 2) : r % 2 == 0 ? q(1, 2) : q(-1, 2);
      auto rhs = sprod(U, {E(xa1a2(2, 1, a), 0, 1), E(I4::X2(1, r + s), 1, 1, c), E(I4::x(2, 1, b), 1, 0)});
      return {lhs, rhs};
    }
  }
  throw std::invalid_argument("unknown identity");
}

inline std::pair<S4, S4> menocartanpiu(int which, int n, Reading rd) {
  auto& U = uea4();
  SeriesName plus = which == 1 ? SeriesName::CHECK : which == 2 ? SeriesName::HAT : SeriesName::BAR;
  S4 hp = hser4(plus, 1, 1, 1, 0, n), hm = hser4(SeriesName::HAT, 2, -1, 0, 1, n);
  Q e = which == 2 ? Q(2) : Q(1);
  if (rd == Reading::OPERATIVE) e /= 2;
  int d = which == 3 ? 2 : 1;
  S4 f = central_binomial(U, Q(-1), d, d, U4::atom(I4::c(), e), n, c0_4);
  return {smul(U, hp, hm), sprod(U, {hm, f, hp})};
}

inline std::pair<S4, S4> commuzeropiupiu(int which, const UeaParams& p, int n, Reading rd) {
  auto& U = uea4();
  A4Lie y;
  OpSeries op(n);
  SeriesName name = SeriesName::HAT;
  int node = 2;
  if (which == 1) {
    y = A4Lie(I4::x(1, 1, p.r));
    op = OpSeries::binomial(n, 1, -1, 1, 0, 1);
  } else if (which == 2) {
    y = A4Lie(I4::x(2, 1, p.r));
    op = OpSeries::binomial(n, 1, -1, 1, 0, 1);
    name = SeriesName::CHECK;
    node = 1;
  } else {
    y = A4Lie(I4::X1(1, 2 * p.r + 1), q(1, 2));
    op = OpSeries::binomial(n, 1, rd == Reading::PRINTED ? 1 : -1, 2, 0, 1);
  }
  S4 S = hser4(name, node, 1, 1, 0, n);
  S4 yk = S4::term(n, 0, 0, U.pow(U4::lie(y), p.k) * (Q(1) / Q(factorial(static_cast<unsigned>(p.k)))));
  return {smul(U, yk, S), smul(U, S, sdivided_power(U, op4(op, y), p.k))};
}

// Eigenvalue of ad h_{j,0} on x_i (i = 1, 2) or on X_1 (i = 3).
inline int cartan_weight(int i, int j) {
  return i == 3 ? 2 * cartan_entry(2, j, 1) : cartan_entry(2, j, i);
}

inline std::pair<S4, S4> cartantutta(const UeaParams& p, Reading rd) {
  auto& U = uea4();
  I4 y = p.i == 3 ? I4::X1(1, 2 * p.r + 1) : I4::x(p.i, 1, p.r);
  U4::Elem yk = U4::divided_power(y, p.k) * (p.i == 3 ? pow_q(q(1, 2), p.k) : Q(1));
  U4::Elem h = U4::atom(I4::h(p.j, 0));
  Q shift = rd == Reading::PRINTED ? (p.i == 3 ? Q(2 * p.k) : Q(cartan_entry(2, p.i, p.j)))
                                   : Q(p.k * cartan_weight(p.i, p.j));
  auto lhs = U.mul(yk, binom_uea(U, h, p.l));
  auto rhs = U.mul(binom_uea(U, h - U4::one() * shift, p.l), yk);
  return {S4::term(0, 0, 0, lhs), S4::term(0, 0, 0, rhs)};
}

inline std::vector<UeaParams> grid_rs(bool odd_r, int parity_sum) {
  std::vector<UeaParams> v;
  for (int r : grid())
    for (int s : grid()) {
      if (odd_r && r % 2 == 0) continue;
      if (parity_sum == 1 && (r + s) % 2 == 0) continue;
      if (parity_sum == 2 && r + s == 0) continue;
      UeaParams p;
      p.r = r;
      p.s = s;
      v.push_back(p);
    }
  return v;
}

inline std::vector<UeaParams> grid_r(std::vector<int> ks = {1}) {
  std::vector<UeaParams> v;
  for (int r : grid())
    for (int k : ks) {
      UeaParams p;
      p.r = r;
      p.k = k;
      v.push_back(p);
    }
  return v;
}

}  // namespace uea_detail

// ---- Integer coordinates of root-vector divided powers ----

// Product of divided powers x_1^(k_1) x_2^(k_2) ... in the order written.
using DividedWord = std::vector<std::pair<A4Index, int>>;
using WordComb = std::map<DividedWord, Q>;

inline U4::Elem evaluate_words(const WordComb& w) {
  auto& U = uea4();
  U4::Elem out;
  for (const auto& [word, c] : w) {
    U4::Elem e = U4::one();
    for (const auto& [x, k] : word) e = U.mul(e, U4::divided_power(x, k));
    out += e * c;
  }
  return out;
}

struct IntegralCertificate {
  std::string target;
  WordComb words;           // combination of words in divided powers of x^+_{i,r}
  bool integral = false;    // every coefficient is an integer
  bool reproduces = false;  // the combination straightens to the target
};

enum class IntegralTarget { X_A1A2, X_2A1A2, HALF_X2 };

inline std::string integral_target_name(IntegralTarget t) {
  switch (t) {
    case IntegralTarget::X_A1A2: return "x_{a1+a2}";
    case IntegralTarget::X_2A1A2: return "x_{2a1+a2}";
    case IntegralTarget::HALF_X2: return "X_2/2";
  }
  return "?";
}

namespace uea_detail {

inline DividedWord join(std::initializer_list<std::pair<A4Index, int>> fs) {
  DividedWord w;
  for (const auto& f : fs)
    if (f.second > 0) w.push_back(f);
  return w;
}

// From exp(x_{1,0}u) exp(x_{2,R}v) = exp(x_{2,R}v) exp(x_{1,0}u) exp(-x_{a1+a2,R}uv) exp(-x_{2a1+a2,R}u^2v):
// the u^{pk} v^k coefficient of exp(-x_1u)exp(-x_2v)exp(x_1u)exp(x_2v) is (-1)^k times the target.
inline WordComb commutator_words(int R, int p, int k) {
  WordComb w;
  I4 x1 = I4::x(1, 1, 0), x2 = I4::x(2, 1, R);
  for (int a = 0; a <= p * k; ++a)
    for (int b = 0; b <= k; ++b) {
      int c = p * k - a, d = k - b;
      Q sg = ((a + b + k) % 2 == 0) ? Q(1) : Q(-1);
      w[join({{x1, a}, {x2, b}, {x1, c}, {x2, d}})] += sg;
    }
  return w;
}

inline WordComb substitute(const WordComb& w, const A4Index& x, const std::function<WordComb(int)>& repl) {
  WordComb out;
  for (const auto& [word, c] : w) {
    WordComb acc{{DividedWord{}, c}};
    for (const auto& [y, k] : word) {
      WordComb next;
      WordComb piece = y == x ? repl(k) : WordComb{{DividedWord{{y, k}}, Q(1)}};
      for (const auto& [u, cu] : acc)
        for (const auto& [v, cv] : piece) {
          DividedWord uv = u;
          uv.insert(uv.end(), v.begin(), v.end());
          next[uv] += cu * cv;
        }
      acc = std::move(next);
    }
    for (const auto& [u, cu] : acc) out[u] += cu;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace uea_detail

// (x_{a1+a2,R})^(k), (x_{2a1+a2,R})^(k) or (X_{2,2R+1}/2)^(k) as an integer combination of
// words in the divided powers (x^+_{i,r})^(m).
inline IntegralCertificate certify_integral(IntegralTarget t, int R, int k) {
  using namespace uea_detail;
  IntegralCertificate cert;
  cert.target = "(" + integral_target_name(t) + "," + std::to_string(t == IntegralTarget::HALF_X2 ? 2 * R + 1 : R) +
                ")^(" + std::to_string(k) + ")";
  U4::Elem target;
  if (t == IntegralTarget::X_A1A2) {
    cert.words = commutator_words(R, 1, k);
    target = U4::divided_power(xa1a2(1, 1, R), k);
  } else if (t == IntegralTarget::X_2A1A2) {
    cert.words = commutator_words(R, 2, k);
    target = U4::divided_power(xa1a2(2, 1, R), k);
  } else {
    // exp(-x_{2a1+a2,s}v) exp(x_{2,0}u) exp(x_{2a1+a2,s}v) exp(-x_{2,0}u) = exp(X_{2,s}uv / 2).
    int s = 2 * R + 1;
    I4 y = xa1a2(2, 1, s), x2 = I4::x(2, 1, 0);
    WordComb w;
    for (int b = 0; b <= k; ++b)
      for (int a = 0; a <= k; ++a) {
        int d = k - b, c = k - a;
        Q sg = ((b + c) % 2 == 0) ? Q(1) : Q(-1);
        w[join({{y, b}, {x2, a}, {y, d}, {x2, c}})] += sg;
      }
    cert.words = substitute(w, y, [s](int m) { return commutator_words(s, 2, m); });
    target = U4::divided_power(I4::X2(1, s), k) * pow_q(q(1, 2), k);
  }
  cert.integral = true;
  for (const auto& [word, c] : cert.words)
    if (!is_integer(c)) cert.integral = false;
  cert.reproduces = evaluate_words(cert.words) == target;
  return cert;
}

inline std::string IdentitySpec::params_str(const UeaParams& p) const {
  auto f = [](const char* k, int v) { return std::string(k) + "=" + std::to_string(v); };
  if (id.rfind("COMMUPLUS", 0) == 0 || id == "NUOVEADD_2") return f("r", p.r) + " " + f("s", p.s);
  if (id == "NUOVEADD_3") return f("r", p.r) + " " + f("s", -p.r);
  if (id.rfind("ZEROPIUBARRA", 0) == 0 || id.rfind("COMMUZEROPIUPIU", 0) == 0) return f("r", p.r) + " " + f("k", p.k);
  if (id == "BUZACCAZERO")
    return f("sign", p.sign) + " " + f("r", p.r) + " " + f("k", p.k) + " " + f("l", p.l);
  if (id == "CARTANTUTTA")
    return f("i", p.i) + " " + f("j", p.j) + " " + f("r", p.r) + " " + f("k", p.k) + " " + f("l", p.l);
  return "";
}

inline const std::vector<IdentitySpec>& uea_catalog() {
  using namespace uea_detail;
  static const std::vector<IdentitySpec> cat = [] {
    std::vector<IdentitySpec> c;
    UeaParams none;
    auto zk = grid_r({1, 2});
    c.push_back({"COMMUPLUS_1", 4, "coefficient of x_{a1+a2,r+s} uv is -1", grid_rs(false, 0)});
    c.push_back({"COMMUPLUS_2", 3, "x_{a1+a2,s} on the right; coefficient 2(-1)^{r+1}", grid_rs(false, 0)});
    c.push_back({"COMMUPLUS_3", 3, "exp(x_{2,s} v) on the left; coefficient -2; extra factor exp((-1)^s/2 X_{2,r+2s} uv^2); r odd", grid_rs(true, 0)});
    c.push_back({"COMMUPLUS_4", 3, "x_{2a1+a2,s} on the left, x_{2,r} on the right, coefficient (-1)^r/2", grid_rs(false, 1)});
    c.push_back({"NUOVEADD_1", 3,
                 "x_1^- in the uv factor, x_0^- in the u^3v^2 factor, x_0^+ in the last factor, T -> -T in both X factors", {none}});
    c.push_back({"NUOVEADD_2", 3,
                 "inner series sum_k (-4uv)^k X_{.+2k(r+s)}; middle lambda_{2(r+s)}(hhat(4uv)^{1/2}) "
                 "or lambda_{r+s}(hbar(-4uv))",
                 grid_rs(false, 2)});
    c.push_back({"NUOVEADD_3", 3, "X-arguments divided by (1+4uv)", grid_r()});
    c.push_back({"ZEROPIUBARRA_COMMUPIETA", 3, "operator (1-z)(1+z)^{-2}, z = T^{-1}u", grid_r()});
    c.push_back({"ZEROPIUBARRA_COMMUPIETAGRANDE", 3, "operator (1+w)^{-1}, w = T^{-1}u^2", grid_r()});
    c.push_back({"ZEROPIUBARRA_HUNO", 3, "operator (1-z)^2(1+z)^{-4}", zk});
    c.push_back({"ZEROPIUBARRA_HUNOO", 3, "operator (1+w)^{-2}", zk});
    c.push_back({"ZEROPIUBARRA_BUNO", 3, "operator (1-z^2)^{-1}", zk});
    c.push_back({"ZEROPIUBARRA_BUNOO", 3, "operator (1+w)^{-2}", zk});
    c.push_back({"MUZUBUZUBO_ETAETA", 3, "factor (1-uv)^{-c}(1+uv)^{c/2}", {none}});
    c.push_back({"MUZUBUZUBO_CAPCAP", 3, "factor (1-uv)^{-4c}(1+uv)^{2c}", {none}});
    c.push_back({"MUZUBUZUBO_BARBAR", 4, "factor (1-(uv)^2)^{-2c}(1-(uv)^2)^{c}", {none}});
    c.push_back({"MUZUBUZUBO_CAPBAR", 4, "factor (1-(uv)^2)^{-c}", {none}});
    std::vector<UeaParams> bz;
    for (int sign : {1, -1})
      for (int r : grid())
        for (int k = 0; k <= 2; ++k)
          for (int l = 0; l <= 2; ++l) {
            UeaParams p;
            p.sign = sign;
            p.r = r;
            p.k = k;
            p.l = l;
            bz.push_back(p);
          }
    c.push_back({"BUZACCAZERO", 0, "", bz});
    c.push_back({"MENOCARTANPIU_1", 3, "exponent c/2", {none}});
    c.push_back({"MENOCARTANPIU_2", 3, "exponent c", {none}});
    c.push_back({"MENOCARTANPIU_3", 4, "exponent c/2", {none}});
    c.push_back({"COMMUZEROPIUPIU_1", 3, "", zk});
    c.push_back({"COMMUZEROPIUPIU_2", 3, "", zk});
    c.push_back({"COMMUZEROPIUPIU_3", 3, "operator (1+T^{-1}u^2)", zk});
    std::vector<UeaParams> ct;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 2; ++j) {
        if (i == 3 && j == 1) continue;
        for (int r : grid())
          for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l) {
              UeaParams p;
              p.i = i;
              p.j = j;
              p.r = r;
              p.k = k;
              p.l = l;
              ct.push_back(p);
            }
      }
    c.push_back({"CARTANTUTTA", 0, "shift k*a_{ji}; +2k for X_1 against h_{2,0}", ct});
    return c;
  }();
  return cat;
}

inline const IdentitySpec& uea_identity(const std::string& id) {
  for (const auto& s : uea_catalog())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown identity " + id);
}

inline UeaVerdict verify_uea_identity(const std::string& id, const UeaParams& p, int n, Reading rd) {
  using namespace uea_detail;
  uea_identity(id);
  auto suffix = [&](const std::string& pre) { return id.substr(pre.size()); };
  if (id.rfind("COMMUPLUS_", 0) == 0) {
    auto [a, b] = commuplus(std::stoi(suffix("COMMUPLUS_")), p, n, rd);
    return compare(a, b);
  }
  if (id == "NUOVEADD_1") {
    auto [a, b] = nuoveadd1(n, rd);
    return compare(a, b);
  }
  if (id == "NUOVEADD_2") {
    UeaVerdict out{true, ""};
    for (int variant : {1, 2}) {
      auto [a, b] = nuoveadd2(p, n, rd, variant);
      auto v = compare(a, b);
      if (!v.equal && out.equal) out = {false, "alternative " + std::to_string(variant) + ": " + v.witness};
    }
    return out;
  }
  if (id == "NUOVEADD_3") {
    auto [a, b] = nuoveadd3(p, n, rd);
    return compare(a, b);
  }
  if (id.rfind("ZEROPIUBARRA_", 0) == 0) {
    auto [a, b] = zeropiubarra(suffix("ZEROPIUBARRA_"), p, n, rd);
    return compare(a, b);
  }
  if (id.rfind("MUZUBUZUBO_", 0) == 0) {
    auto [a, b] = muzubuzubo(suffix("MUZUBUZUBO_"), n, rd);
    return compare(a, b);
  }
  if (id == "BUZACCAZERO") {
    auto [a, b] = buzaccazero(p);
    return compare(a, b);
  }
  if (id.rfind("MENOCARTANPIU_", 0) == 0) {
    auto [a, b] = menocartanpiu(std::stoi(suffix("MENOCARTANPIU_")), n, rd);
    return compare(a, b);
  }
  if (id.rfind("COMMUZEROPIUPIU_", 0) == 0) {
    auto [a, b] = commuzeropiupiu(std::stoi(suffix("COMMUZEROPIUPIU_")), p, n, rd);
    return compare(a, b);
  }
  if (id == "CARTANTUTTA") {
    auto [a, b] = cartantutta(p, rd);
    return compare(a, b);
  }
  throw std::invalid_argument("unknown identity " + id);
}

}  // namespace affint
