#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affint/poly.hpp"
#include "affint/sequence.hpp"
#include "affint/series.hpp"

namespace affint {

using PolySeries = Series<Poly>;

// Plain: hhat^{a}(u) = exp(sum a_r h_r u^r / r).
// Alternating: hhat^{a}(u) = exp(sum (-1)^{r-1} a_r h_r u^r / r).
enum class Convention { Plain, Alternating };

inline Q convention_sign(Convention cv) { return cv == Convention::Plain ? Q(1) : Q(-1); }

inline PolySeries hat_log(const SequenceSpec& a, int n, Convention cv = Convention::Plain) {
  if (!a.defined_up_to(n)) throw std::invalid_argument("sequence underspecified");
  PolySeries L(n);
  for (int r = 1; r <= n; ++r) {
    Q c = a(r) / r;
    if (cv == Convention::Alternating && r % 2 == 0) c = -c;
    L[r] = Poly::h(r, c);
  }
  return L;
}

inline PolySeries expand_hat_series(const SequenceSpec& a, int n,
                                    Convention cv = Convention::Plain) {
  return series_exp(hat_log(a, n, cv));
}

inline PolySeries lambda_series(int m, const PolySeries& s) {
  return s.map([m](const Poly& p) { return lambda_shift(m, p); });
}

enum class SeriesName { HAT, BAR, CHECK, TILDE };

// TILDE = hhat(u) * lambda_4(hhat(e u^4)^{-1/2}), e the convention sign; this equals
// hhat(u) * lambda_2(hbar(u^2)^{-1}) in either convention.
inline PolySeries named_series(SeriesName name, int n, Convention cv = Convention::Plain) {
  switch (name) {
    case SeriesName::HAT: return expand_hat_series(SequenceSpec::one(), n, cv);
    case SeriesName::BAR: return expand_hat_series(SequenceSpec::half_one2(), n, cv);
    case SeriesName::CHECK: return expand_hat_series(SequenceSpec::half_one(), n, cv);
    case SeriesName::TILDE: {
      PolySeries hat = expand_hat_series(SequenceSpec::one(), n, cv);
      PolySeries inner = series_pow(hat.substitute(convention_sign(cv), 4), q(-1, 2));
      return hat * lambda_series(4, inner);
    }
  }
  throw std::invalid_argument("unknown series");
}

// Univariate polynomial over Q, coefficient i multiplies x^i.
using UPoly = std::vector<Q>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly specialize_b(const Poly& p) {
  UPoly r;
  for (const auto& [part, c] : p.terms()) {
    auto k = static_cast<std::size_t>(part.length());
    if (r.size() <= k) r.resize(k + 1, Q(0));
    r[k] += c;
  }
  trim(r);
  return r;
}

inline UPoly specialize_dp(const Poly& p) {
  UPoly r;
  for (const auto& [part, c] : p.terms()) {
    if (part.entries().size() > 1 || (!part.empty() && part.entries()[0].first != 1)) continue;
    auto k = static_cast<std::size_t>(part.length());
    if (r.size() <= k) r.resize(k + 1, Q(0));
    r[k] += c;
  }
  trim(r);
  return r;
}

inline std::string upoly_str(const UPoly& p) {
  std::string s;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    Q c = p[i];
    bool neg = c < 0;
    if (neg) c = -c;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (i == 0 || c != 1) s += c.get_str() + (i ? "*" : "");
    if (i) s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

enum class CommIdentity { HATBAR, CAPPUCCIOBARRA, CHECK_SQUARE, BAR_FROM_CHECK, TILDE_FACTORIZATION };

struct SeriesMismatch {
  int k = 0;
  Partition monomial;
  Q lhs, rhs;
};

struct IdentityVerdict {
  std::string id;
  bool equal = true;
  std::optional<SeriesMismatch> mismatch;
};

inline std::optional<SeriesMismatch> first_mismatch(const PolySeries& a, const PolySeries& b) {
  for (int k = 0; k <= a.order(); ++k) {
    if (a[k] == b[k]) continue;
    Poly d = a[k] - b[k];
    const Partition& p = d.terms().begin()->first;
    return SeriesMismatch{k, p, a[k].coeff(p), b[k].coeff(p)};
  }
  return std::nullopt;
}

inline std::string comm_identity_name(CommIdentity id) {
  switch (id) {
    case CommIdentity::HATBAR: return "HATBAR";
    case CommIdentity::CAPPUCCIOBARRA: return "CAPPUCCIOBARRA";
    case CommIdentity::CHECK_SQUARE: return "CHECK_SQUARE";
    case CommIdentity::BAR_FROM_CHECK: return "BAR_FROM_CHECK";
    case CommIdentity::TILDE_FACTORIZATION: return "TILDE_FACTORIZATION";
  }
  return "?";
}

// For CAPPUCCIOBARRA, n is the bound on r (degree 2r).
// HATBAR: lambda_2(hhat(e u^2)) = hhat(u) hhat(-u) = hbar(u)^2.
// CAPPUCCIOBARRA: sum_s (-1)^s hhat_{2r-s} hhat_s = sum_s hbar_{2r-2s} hbar_{2s}.
// CHECK_SQUARE: hhat(u) = hcheck(u)^2.  BAR_FROM_CHECK: hbar(u) = hcheck(u) hcheck(-u).
// TILDE_FACTORIZATION: hhat(u) lambda_4(hhat(e u^4)^{-1/2}) = hhat(u) lambda_2(hbar(u^2)^{-1}).
inline IdentityVerdict verify_comm_identity(CommIdentity id, int n,
                                            Convention cv = Convention::Plain) {
  IdentityVerdict v{comm_identity_name(id), true, std::nullopt};
  auto record = [&](const PolySeries& a, const PolySeries& b) {
    if (!v.equal) return;
    if (auto m = first_mismatch(a, b)) {
      v.equal = false;
      v.mismatch = m;
    }
  };
  switch (id) {
    case CommIdentity::HATBAR: {
      PolySeries hat = named_series(SeriesName::HAT, n, cv);
      PolySeries bar = named_series(SeriesName::BAR, n, cv);
      PolySeries lhs = lambda_series(2, hat.substitute(convention_sign(cv), 2));
      PolySeries mid = hat * hat.substitute(Q(-1), 1);
      record(lhs, mid);
      record(mid, bar * bar);
      break;
    }
    case CommIdentity::CAPPUCCIOBARRA: {
      PolySeries hat = named_series(SeriesName::HAT, 2 * n, cv);
      PolySeries bar = named_series(SeriesName::BAR, 2 * n, cv);
      PolySeries lhs(n), rhs(n);
      for (int r = 0; r <= n; ++r) {
        Poly a, b;
        for (int s = 0; s <= 2 * r; ++s) a += hat[2 * r - s] * hat[s] * Q(s % 2 ? -1 : 1);
        for (int s = 0; s <= r; ++s) b += bar[2 * r - 2 * s] * bar[2 * s];
        lhs[r] = a;
        rhs[r] = b;
      }
      record(lhs, rhs);
      break;
    }
    case CommIdentity::CHECK_SQUARE: {
      PolySeries chk = named_series(SeriesName::CHECK, n, cv);
      record(named_series(SeriesName::HAT, n, cv), chk * chk);
      break;
    }
    case CommIdentity::BAR_FROM_CHECK: {
      PolySeries chk = named_series(SeriesName::CHECK, n, cv);
      record(named_series(SeriesName::BAR, n, cv), chk * chk.substitute(Q(-1), 1));
      break;
    }
    case CommIdentity::TILDE_FACTORIZATION: {
      PolySeries hat = named_series(SeriesName::HAT, n, cv);
      PolySeries bar = named_series(SeriesName::BAR, n, cv);
      PolySeries rhs = hat * lambda_series(2, series_inverse(bar.substitute(Q(1), 2)));
      record(named_series(SeriesName::TILDE, n, cv), rhs);
      break;
    }
  }
  return v;
}

inline std::optional<CommIdentity> parse_comm_identity(const std::string& s) {
  for (auto id : {CommIdentity::HATBAR, CommIdentity::CAPPUCCIOBARRA, CommIdentity::CHECK_SQUARE,
                  CommIdentity::BAR_FROM_CHECK, CommIdentity::TILDE_FACTORIZATION})
    if (comm_identity_name(id) == s) return id;
  return std::nullopt;
}

}  // namespace affint
