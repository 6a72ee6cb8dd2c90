#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affint/arith.hpp"
#include "affint/forms.hpp"
#include "affint/identities.hpp"
#include "affint/lie22.hpp"
#include "affint/loop4.hpp"

namespace affint {

struct RunConfig {
  int max_degree = 12;
  int uea_truncation = 4;
  int lie_window = 3;
  std::vector<std::string> suites;
  std::string output;

  void validate() const {
    if (max_degree < 1 || uea_truncation < 1 || lie_window < 1)
      throw std::invalid_argument("bounds must be positive");
  }
};

enum class Verdict { PASS, FAIL, SKIPPED };

inline std::string verdict_str(Verdict v, const std::string& reason = "") {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    case Verdict::SKIPPED: return "SKIPPED(" + reason + ")";
  }
  return "?";
}

struct CheckRecord {
  std::string check_id;
  std::vector<std::pair<std::string, long>> params;
  Verdict verdict = Verdict::PASS;
  std::string witness;  // failure witness, skip reason, or a short count summary
  double ms = 0;
};

struct Report {
  std::vector<CheckRecord> checks;  // sorted by check_id
  long count(Verdict v) const {
    return std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.verdict == v; });
  }
  bool ok() const { return count(Verdict::FAIL) == 0; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"commutative", "bases", "criteria", "lie22", "lie4", "uea22", "uea4"};
  return n;
}

// Expands "all", rejects unknown names, drops duplicates, keeps the canonical order.
inline std::vector<std::string> resolve_suites(const std::vector<std::string>& names) {
  std::set<std::string> want;
  for (const auto& n : names) {
    if (n == "all") {
      want.insert(suite_names().begin(), suite_names().end());
      continue;
    }
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw std::invalid_argument("unknown suite '" + n + "'");
    want.insert(n);
  }
  std::vector<std::string> out;
  for (const auto& n : suite_names())
    if (want.count(n)) out.push_back(n);
  return out;
}

// p(d) from the pentagonal-number recurrence, independent of partition enumeration.
inline long partition_count_pentagonal(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long sign = (k % 2) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = s;
  }
  return p[static_cast<std::size_t>(n)];
}

inline bool is_a4_identity(const std::string& id) {
  for (const char* p : {"COMMUPLUS", "MENOCARTANPIU", "COMMUZEROPIUPIU", "CARTANTUTTA"})
    if (id.rfind(p, 0) == 0) return true;
  return false;
}

// Truncation used for a catalog entry under a config: entries with degree-0 checks keep 0.
inline int uea_order(const IdentitySpec& s, const RunConfig& c) {
  return s.default_n == 0 ? 0 : std::max(s.default_n, c.uea_truncation);
}

namespace suite_detail {

struct Outcome {
  Verdict verdict = Verdict::PASS;
  std::string witness;
};

using Body = std::function<Outcome()>;

struct Pending {
  std::string id;
  std::vector<std::pair<std::string, long>> params;
  Body body;
};

inline Outcome from_bool(bool ok, const std::string& witness, const std::string& summary = "") {
  return {ok ? Verdict::PASS : Verdict::FAIL, ok ? summary : witness};
}

inline Outcome from_lie(const LieCheck& v) {
  return from_bool(v.pass, v.failure, std::to_string(v.checked) + " checks");
}

inline std::string mismatch_str(const IdentityVerdict& v) {
  if (!v.mismatch) return "";
  const auto& m = *v.mismatch;
  return "degree " + std::to_string(m.k) + " " + m.monomial.monomial_str() + ": " + m.lhs.get_str() +
         " vs " + m.rhs.get_str();
}

inline void commutative(const RunConfig& c, std::vector<Pending>& out) {
  const int n = c.max_degree;
  for (auto id : {CommIdentity::HATBAR, CommIdentity::CHECK_SQUARE, CommIdentity::BAR_FROM_CHECK,
                  CommIdentity::TILDE_FACTORIZATION}) {
    out.push_back({"commutative." + comm_identity_name(id), {{"n", n}}, [id, n] {
                     auto v = verify_comm_identity(id, n);
                     return from_bool(v.equal, mismatch_str(v));
                   }});
  }
  const int r = std::max(1, n / 2);
  out.push_back({"commutative.CAPPUCCIOBARRA", {{"r", r}}, [r] {
                   auto v = verify_comm_identity(CommIdentity::CAPPUCCIOBARRA, r);
                   return from_bool(v.equal, mismatch_str(v));
                 }});
}

inline void bases(const RunConfig& c, std::vector<Pending>& out) {
  const int n = c.max_degree;
  for (auto kind : {BasisKind::B_LAMBDA, BasisKind::B_LAMBDA_PRIME, BasisKind::B_QPOL}) {
    out.push_back({"bases.cardinality." + basis_name(kind), {{"max_degree", n}}, [kind, n] {
                     for (int d = 0; d <= n; ++d) {
                       long p = partition_count_pentagonal(d);
                       long size = static_cast<long>(enumerate_basis(kind, d).size());
                       if (size != p)
                         return Outcome{Verdict::FAIL, "d=" + std::to_string(d) + ": " + std::to_string(size) +
                                                           " elements, p(d)=" + std::to_string(p)};
                       long rk = static_cast<long>(rank(coordinate_matrix(kind, d)));
                       if (rk != p)
                         return Outcome{Verdict::FAIL, "d=" + std::to_string(d) + ": rank " + std::to_string(rk)};
                     }
                     return Outcome{Verdict::PASS, "p(" + std::to_string(n) + ")=" +
                                                       std::to_string(partition_count_pentagonal(n))};
                   }});
  }
  out.push_back({"bases.euler", {{"max_degree", 20}}, [] {
                   for (int d = 0; d <= 20; ++d) {
                     auto e = euler_count(d);
                     if (e.distinct != e.odd)
                       return Outcome{Verdict::FAIL, "d=" + std::to_string(d)};
                   }
                   return Outcome{};
                 }});
  out.push_back({"bases.mix_degree_two", {}, [] {
                   Poly h11 = Poly::h(1) * Poly::h(1);
                   Lattice want = lattice_at_degree({h11 * q(1, 2), Poly::h(2, q(1, 2))}, 2);
                   Lattice got = form_lattice(FormKind::MIX, 2);
                   if (!(got == want)) return Outcome{Verdict::FAIL, "degree-2 lattice differs"};
                   SpanSolver sol(got.basis(), 2);
                   auto x = sol.solve(monomial_vector(h11, 2));
                   if (!x) return Outcome{Verdict::FAIL, "h1^2 outside the lattice span"};
                   for (const auto& v : *x)
                     if (!is_integer(v) || v.get_num() % 2 != 0)
                       return Outcome{Verdict::FAIL, "h1^2 coordinate " + v.get_str()};
                   return Outcome{};
                 }});
  const int dc = std::min(n, 8);
  out.push_back({"bases.inclusion_chain", {{"max_degree", dc}}, [dc] {
                   for (int d = 1; d <= dc; ++d) {
                     Lattice s = form_lattice(FormKind::SYM, d), m = form_lattice(FormKind::MIX, d),
                             k = form_lattice(FormKind::CHECK_FORM, d);
                     std::string at = "d=" + std::to_string(d);
                     if (!m.contains(s) || !k.contains(m)) return Outcome{Verdict::FAIL, at + ": not a chain"};
                     if (k == m) return Outcome{Verdict::FAIL, at + ": MIX equals CHECK_FORM"};
                     if (d >= 2 && s == m) return Outcome{Verdict::FAIL, at + ": SYM equals MIX"};
                   }
                   Poly hbar2 = named_series(SeriesName::BAR, 2)[2], half_h1 = Poly::h(1, q(1, 2));
                   if (!membership(hbar2, FormKind::MIX).in || membership(hbar2, FormKind::SYM).in)
                     return Outcome{Verdict::FAIL, "hbar_2 witness"};
                   if (!membership(half_h1, FormKind::CHECK_FORM).in || membership(half_h1, FormKind::MIX).in)
                     return Outcome{Verdict::FAIL, "h1/2 witness"};
                   return Outcome{};
                 }});
}

inline void criteria(const RunConfig& c, std::vector<Pending>& out) {
  const int n = std::min(c.max_degree, 10);
  const std::vector<SequenceSpec> seqs{SequenceSpec::one(),      SequenceSpec::one_m(2),
                                       SequenceSpec::one_m(3),   SequenceSpec::half_one(),
                                       SequenceSpec::half_one2(), SequenceSpec::cpow2()};
  for (const auto& a : seqs) {
    out.push_back({"criteria.cross." + a.name(), {{"k", n}}, [a, n] {
                     auto rep = cross_validate(a, n);
                     if (auto d = rep.first_disagreement())
                       return Outcome{Verdict::FAIL, form_name(d->form) + "/" + d->criterion + " k=" +
                                                         std::to_string(d->k) + ": membership " +
                                                         (d->membership ? "IN" : "OUT")};
                     return Outcome{Verdict::PASS, std::to_string(rep.checks.size()) + " comparisons"};
                   }});
    if (!a.integer_valued_up_to(n))
      out.push_back({"criteria.cross." + a.name() + ".integer_criteria", {{"k", n}}, [] {
                       return Outcome{Verdict::SKIPPED, "sequence is not integer valued"};
                     }});
  }
  out.push_back({"criteria.cpow2_in_mix", {{"k", n}}, [n] {
                   auto s = expand_hat_series(SequenceSpec::cpow2(), n);
                   BasisCoordinates bc(form_basis(FormKind::MIX));
                   for (int k = 1; k <= n; ++k) {
                     auto m = membership_with(bc, s[k]);
                     if (!m.in) return Outcome{Verdict::FAIL, "k=" + std::to_string(k) + " " + m.str()};
                   }
                   return Outcome{};
                 }});
  out.push_back({"criteria.half_one2_sym_witness", {}, [] {
                   auto v = check_condizione(ArithmeticFunction::from_spec(SequenceSpec::half_one2()), 10);
                   bool w = !v.pass && v.kind == CondizioneVerdict::Kind::CONGRUENCE && v.m == 1 && v.p == 2 &&
                            v.s == 1;
                   auto s = expand_hat_series(SequenceSpec::half_one2(), 2);
                   bool out2 = !membership(s[2], FormKind::SYM).in;
                   return from_bool(w && out2, v.str() + (out2 ? "" : "; hhat_2 inside SYM"), v.str());
                 }});
}

inline void lie22(const RunConfig& c, std::vector<Pending>& out) {
  const int w = c.lie_window;
  out.push_back({"lie22.jacobi", {{"window", w}}, [w] { return from_lie(jacobi_exhaust22(w)); }});
  for (auto m : {Morphism22::SIGMA, Morphism22::OMEGA, Morphism22::T, Morphism22::T_INV})
    out.push_back({"lie22.morphism." + morphism_name(m), {{"window", w}},
                   [m, w] { return from_lie(check_morphism22(m, w)); }});
}

inline void lie4(const RunConfig& c, std::vector<Pending>& out) {
  const int w = c.lie_window;
  out.push_back({"lie4.relations", {{"window", w}}, [w] { return from_lie(verify_a4_relations(w)); }});
  out.push_back({"lie4.ad_identities", {{"window", w}}, [w] { return from_lie(verify_techuno(w)); }});
  out.push_back({"lie4.tau_closed_forms", {{"window", w}}, [w] { return from_lie(verify_tau_closed_forms(w)); }});
  out.push_back({"lie4.embedding.PSI_BAR", {{"window", w}},
                 [w] { return from_lie(check_embedding(Embedding::PSI_BAR, w)); }});
  out.push_back({"lie4.embedding.PSI_TILDE", {{"window", w}},
                 [w] { return from_lie(check_embedding(Embedding::PSI_TILDE, w)); }});
}

// Per catalog entry: the operative reading must hold on the whole grid, and the printed
// reading must fail somewhere exactly when an amendment is recorded.
inline void uea(const RunConfig& c, bool a4, std::vector<Pending>& out) {
  const std::string prefix = a4 ? "uea4." : "uea22.";
  for (const auto& spec : uea_catalog()) {
    if (is_a4_identity(spec.id) != a4) continue;
    const int n = uea_order(spec, c);
    const long grid = static_cast<long>(spec.grid.size());
    out.push_back({prefix + spec.id + ".operative", {{"n", n}, {"grid", grid}}, [spec, n] {
                     for (const auto& p : spec.grid) {
                       auto v = verify_uea_identity(spec.id, p, n, Reading::OPERATIVE);
                       if (!v.equal) return Outcome{Verdict::FAIL, spec.params_str(p) + " " + v.witness};
                     }
                     return Outcome{};
                   }});
    out.push_back({prefix + spec.id + ".amendment", {{"n", n}, {"grid", grid}}, [spec, n] {
                     std::string witness;
                     for (const auto& p : spec.grid) {
                       auto v = verify_uea_identity(spec.id, p, n, Reading::PRINTED);
                       if (!v.equal) {
                         witness = spec.params_str(p) + " " + v.witness;
                         break;
                       }
                     }
                     bool fails = !witness.empty();
                     if (fails == !spec.amendment.empty())
                       return Outcome{Verdict::PASS, fails ? "printed fails at " + witness : "holds as printed"};
                     return Outcome{Verdict::FAIL, fails ? "unrecorded amendment needed: " + witness
                                                         : "recorded amendment not forced"};
                   }});
  }
  if (!a4) return;
  for (auto t : {IntegralTarget::X_A1A2, IntegralTarget::X_2A1A2, IntegralTarget::HALF_X2})
    for (int r : {0, 1})
      for (int k : {1, 2})
        out.push_back({"uea4.integral." + integral_target_name(t), {{"k", k}, {"r", r}}, [t, r, k] {
                         auto cert = certify_integral(t, r, k);
                         return from_bool(cert.integral && cert.reproduces,
                                          cert.target + (cert.integral ? "" : " non-integral") +
                                              (cert.reproduces ? "" : " does not reproduce"),
                                          std::to_string(cert.words.size()) + " words");
                       }});
}

inline std::vector<Pending> plan(const std::string& suite, const RunConfig& c) {
  std::vector<Pending> out;
  if (suite == "commutative") commutative(c, out);
  if (suite == "bases") bases(c, out);
  if (suite == "criteria") criteria(c, out);
  if (suite == "lie22") lie22(c, out);
  if (suite == "lie4") lie4(c, out);
  if (suite == "uea22") uea(c, false, out);
  if (suite == "uea4") uea(c, true, out);
  return out;
}

inline CheckRecord run_one(const Pending& p) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = p.body();
  } catch (const std::exception& e) {
    o = {Verdict::FAIL, std::string("error: ") + e.what()};
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return {p.id, p.params, o.verdict, o.witness, ms};
}

}  // namespace suite_detail

// Suites run concurrently, one task each; checks inside a suite run in order because the
// enveloping-algebra engines memoize products. Each engine belongs to a single suite.
inline Report run_suites(const RunConfig& c) {
  c.validate();
  std::vector<std::future<std::vector<CheckRecord>>> tasks;
  for (const auto& s : resolve_suites(c.suites)) {
    tasks.push_back(std::async(std::launch::async, [s, c] {
      std::vector<CheckRecord> recs;
      for (const auto& p : suite_detail::plan(s, c)) recs.push_back(suite_detail::run_one(p));
      return recs;
    }));
  }
  Report rep;
  for (auto& t : tasks)
    for (auto& r : t.get()) rep.checks.push_back(std::move(r));
  std::stable_sort(rep.checks.begin(), rep.checks.end(), [](const auto& a, const auto& b) {
    if (a.check_id != b.check_id) return a.check_id < b.check_id;
    return a.params < b.params;
  });
  return rep;
}

}  // namespace affint
