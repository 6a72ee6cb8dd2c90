#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affint/forms.hpp"
#include "affint/sequence.hpp"

namespace affint {

// A map Z_{>0} -> Q; evaluating outside a finite table throws.
struct ArithmeticFunction {
  std::string name;
  std::function<Q(long)> f;

  Q operator()(long n) const { return f(n); }

  static ArithmeticFunction from_spec(const SequenceSpec& s) {
    return {s.name(), [s](long n) { return s(static_cast<int>(n)); }};
  }
  static ArithmeticFunction from_table(std::string name, std::vector<Q> t) {
    return {std::move(name), [t](long n) {
              if (n < 1 || n > static_cast<long>(t.size()))
                throw std::out_of_range("sequence underspecified");
              return t[static_cast<std::size_t>(n - 1)];
            }};
  }
  static ArithmeticFunction constant_one() { return {"one", [](long) { return Q(1); }}; }
  static ArithmeticFunction pow2() {
    return {"pow2", [](long n) {
              Z p;
              mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n));
              return Q(p);
            }};
  }
};

inline std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize needs n >= 1");
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline bool is_prime(long n) { return n >= 2 && factorize(n).size() == 1 && factorize(n)[0].second == 1; }

inline int mobius(long n) {
  int s = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    s = -s;
  }
  return s;
}

inline ArithmeticFunction mobius_fn() {
  return {"mu", [](long n) { return Q(mobius(n)); }};
}

inline std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i) {
    if (n % i) continue;
    d.push_back(i);
    if (i != n / i) d.push_back(n / i);
  }
  std::sort(d.begin(), d.end());
  return d;
}

// (f * g)(n) = sum_{d | n} f(n/d) g(d).
inline Q convolve(const ArithmeticFunction& f, const ArithmeticFunction& g, long n) {
  if (n < 1) throw std::invalid_argument("convolve needs n >= 1");
  Q s = 0;
  for (long d : divisors(n)) s += f(n / d) * g(d);
  return s;
}

inline bool divides(const Z& d, const Q& x) {
  if (!is_integer(x)) return false;
  return x.get_num() % d == 0;
}

// p^s | (a_{mp^s} - a_{mp^{s-1}}) for p prime, gcd(m, p) = 1, together with a_n integral.
// The integrality clause is not in the printed congruence condition but is necessary
// (hhat^{a}_1 = a_1 h_1); without it a = 1/2 would pass.
struct CondizioneVerdict {
  bool pass = true;
  long bound = 0;
  enum class Kind { NONE, NONINTEGER, CONGRUENCE } kind = Kind::NONE;
  long m = 0, p = 0, s = 0;  // CONGRUENCE witness
  long index = 0;            // first failing index (mp^s, or n for NONINTEGER)
  std::string str() const {
    if (pass) return "PASS(bound " + std::to_string(bound) + ")";
    if (kind == Kind::NONINTEGER) return "FAIL(a_" + std::to_string(index) + " not an integer)";
    return "FAIL(" + std::to_string(m) + ", " + std::to_string(p) + ", " + std::to_string(s) + ")";
  }
};

inline CondizioneVerdict check_condizione(const ArithmeticFunction& a, long bound) {
  CondizioneVerdict v;
  v.bound = bound;
  for (long n = 1; n <= bound; ++n) {
    if (!is_integer(a(n))) {
      v.pass = false;
      v.kind = CondizioneVerdict::Kind::NONINTEGER;
      v.index = n;
      return v;
    }
    // n = m p^s with s >= 1, p prime, gcd(m, p) = 1; ordered by p then s.
    for (auto [p, e] : factorize(n)) {
      long ps = 1;
      for (int i = 0; i < e; ++i) ps *= p;
      long m = n / ps;
      Q diff = a(n) - a(n / p);
      if (!divides(Z(ps), diff)) {
        v.pass = false;
        v.kind = CondizioneVerdict::Kind::CONGRUENCE;
        v.m = m;
        v.p = p;
        v.s = e;
        v.index = n;
        return v;
      }
    }
  }
  return v;
}

struct IndexVerdict {
  long n = 0;
  bool holds = true;
  std::string detail;
};

struct CriterionVerdict {
  std::string item;
  long bound = 0;
  bool pass = true;
  std::vector<IndexVerdict> indices;
  std::string note;

  std::optional<IndexVerdict> first_failure() const {
    for (const auto& i : indices)
      if (!i.holds) return i;
    return std::nullopt;
  }
  // Conjunction over indices <= k.
  bool pass_up_to(long k) const {
    for (const auto& i : indices)
      if (i.n <= k && !i.holds) return false;
    return true;
  }
  std::string str() const {
    if (pass) return "PASS(bound " + std::to_string(bound) + ")";
    auto f = first_failure();
    return "FAIL(n=" + std::to_string(f->n) + ": " + f->detail + ")";
  }
};

namespace detail {

inline void require_integer(const ArithmeticFunction& l, long bound) {
  for (long n = 1; n <= bound; ++n)
    if (!is_integer(l(n))) throw std::invalid_argument("criterion requires integer sequence");
}

inline std::string div_detail(long d, const Q& x, bool ok) {
  return std::to_string(d) + (ok ? " | " : " does not divide ") + x.get_str();
}

}  // namespace detail

// Item 1: l vanishing on odd indices forces (mu * l) to vanish there.
inline CriterionVerdict check_odd_vanishing(const ArithmeticFunction& l, long bound) {
  detail::require_integer(l, bound);
  CriterionVerdict v{"odd_vanishing", bound, true, {}, ""};
  bool hyp = true;
  for (long n = 1; n <= bound; n += 2) hyp = hyp && l(n) == 0;
  for (long n = 1; n <= bound; n += 2) {
    Q c = convolve(mobius_fn(), l, n);
    bool ok = !hyp || c == 0;
    v.indices.push_back({n, ok, "(mu*l)(" + std::to_string(n) + ") = " + c.get_str()});
    v.pass = v.pass && ok;
  }
  v.note = hyp ? "hypothesis holds" : "hypothesis fails; implication vacuous";
  return v;
}

// Item 2: hhat^{l} in Z[hhat] iff n | (mu * l)(n).
inline CriterionVerdict check_hat_criterion(const ArithmeticFunction& l, long bound) {
  detail::require_integer(l, bound);
  CriterionVerdict v{"hat", bound, true, {}, ""};
  for (long n = 1; n <= bound; ++n) {
    Q c = convolve(mobius_fn(), l, n);
    bool ok = divides(Z(n), c);
    v.indices.push_back({n, ok, detail::div_detail(n, c, ok)});
    v.pass = v.pass && ok;
  }
  return v;
}

// Item 3: hhat^{l} in Z[hbar_{2k}] iff (2r) | 2(mu * l)(2r) and l(2r+1) = 0.
inline CriterionVerdict check_bar_criterion(const ArithmeticFunction& l, long bound) {
  detail::require_integer(l, bound);
  CriterionVerdict v{"bar", bound, true, {},
                     "l(2r+1)=0 required for every odd index up to the bound"};
  for (long n = 1; n <= bound; ++n) {
    IndexVerdict iv{n, true, ""};
    if (n % 2) {
      iv.holds = l(n) == 0;
      iv.detail = "l(" + std::to_string(n) + ") = " + l(n).get_str();
    } else {
      Q c = convolve(mobius_fn(), l, n) * 2;
      iv.holds = divides(Z(n), c);
      iv.detail = detail::div_detail(n, c, iv.holds);
    }
    v.indices.push_back(iv);
    v.pass = v.pass && iv.holds;
  }
  return v;
}

// Item 4: hhat^{l} in Z^(mix) iff (2r+1) | (mu * l)(2r+1) and (2r) | 2(mu * l)(2r).
inline CriterionVerdict check_mix_criterion(const ArithmeticFunction& l, long bound) {
  detail::require_integer(l, bound);
  CriterionVerdict v{"mix", bound, true, {}, ""};
  for (long n = 1; n <= bound; ++n) {
    Q c = convolve(mobius_fn(), l, n);
    if (n % 2 == 0) c *= 2;
    bool ok = divides(Z(n), c);
    v.indices.push_back({n, ok, detail::div_detail(n, c, ok)});
    v.pass = v.pass && ok;
  }
  return v;
}

struct CrossCheck {
  FormKind form;
  std::string criterion;
  long k = 0;
  bool membership = true;  // hhat^{a}_j in form for all j <= k
  bool criterion_pass = true;
  bool agree() const { return membership == criterion_pass; }
};

struct CrossReport {
  std::string sequence;
  std::vector<CrossCheck> checks;
  std::vector<std::string> skipped;
  bool all_agree() const {
    for (const auto& c : checks)
      if (!c.agree()) return false;
    return true;
  }
  std::optional<CrossCheck> first_disagreement() const {
    for (const auto& c : checks)
      if (!c.agree()) return c;
    return std::nullopt;
  }
};

// Compares, for each k <= n, "hhat^{a}_j in form for all j <= k" with the criterion
// restricted to indices <= k.
inline CrossReport cross_validate(const SequenceSpec& a, int n) {
  CrossReport rep;
  rep.sequence = a.name();
  PolySeries s = expand_hat_series(a, n);
  ArithmeticFunction fa = ArithmeticFunction::from_spec(a);
  bool integer = a.integer_valued_up_to(n);

  auto run = [&](FormKind form, const std::string& crit, auto&& pass_up_to) {
    BasisCoordinates bc(form_basis(form));
    bool mem = true;
    for (int k = 1; k <= n; ++k) {
      mem = mem && membership_with(bc, s[k]).in;
      rep.checks.push_back({form, crit, k, mem, pass_up_to(k)});
    }
  };

  CondizioneVerdict cz = check_condizione(fa, n);
  run(FormKind::SYM, "condizione", [&](long k) { return cz.pass || cz.index > k; });
  if (integer) {
    auto hat = check_hat_criterion(fa, n);
    auto bar = check_bar_criterion(fa, n);
    auto mix = check_mix_criterion(fa, n);
    run(FormKind::SYM, "hat", [&](long k) { return hat.pass_up_to(k); });
    run(FormKind::BAR_FORM, "bar", [&](long k) { return bar.pass_up_to(k); });
    run(FormKind::MIX, "mix", [&](long k) { return mix.pass_up_to(k); });
  } else {
    rep.skipped.push_back("hat/bar/mix criteria: sequence is not integer valued");
  }
  return rep;
}

}  // namespace affint
