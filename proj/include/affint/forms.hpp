#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affint/hat.hpp"
#include "affint/linalg.hpp"

namespace affint {

// B_LAMBDA: prod_m lambda_m(hhat_{k_m}).  B_LAMBDA_PRIME: hcheck in place of hhat for even m.
// B_QPOL: prod hhat_k^{eps_k} prod hbar_{2j}^{d_j}, eps in {0,1}.
// HAT_MONOMIAL / CHECK_MONOMIAL / BAR_MONOMIAL: plain monomials in the hhat_k, hcheck_k, hbar_{2k}.
enum class BasisKind {
  B_LAMBDA,
  B_LAMBDA_PRIME,
  B_QPOL,
  MONOMIAL,
  HAT_MONOMIAL,
  CHECK_MONOMIAL,
  BAR_MONOMIAL
};

// SYM = Z[hhat_r]; MIX = Z[hhat_r, hbar_r]; CHECK_FORM = Z[hcheck_r]; BAR_FORM = Z[hbar_{2r}].
enum class FormKind { SYM, MIX, CHECK_FORM, BAR_FORM };

inline std::string basis_name(BasisKind k) {
  switch (k) {
    case BasisKind::B_LAMBDA: return "B_LAMBDA";
    case BasisKind::B_LAMBDA_PRIME: return "B_LAMBDA_PRIME";
    case BasisKind::B_QPOL: return "B_QPOL";
    case BasisKind::MONOMIAL: return "MONOMIAL";
    case BasisKind::HAT_MONOMIAL: return "HAT_MONOMIAL";
    case BasisKind::CHECK_MONOMIAL: return "CHECK_MONOMIAL";
    case BasisKind::BAR_MONOMIAL: return "BAR_MONOMIAL";
  }
  return "?";
}

inline std::string form_name(FormKind f) {
  switch (f) {
    case FormKind::SYM: return "SYM";
    case FormKind::MIX: return "MIX";
    case FormKind::CHECK_FORM: return "CHECK_FORM";
    case FormKind::BAR_FORM: return "BAR_FORM";
  }
  return "?";
}

inline BasisKind form_basis(FormKind f) {
  switch (f) {
    case FormKind::SYM: return BasisKind::B_LAMBDA;
    case FormKind::MIX: return BasisKind::B_LAMBDA_PRIME;
    case FormKind::CHECK_FORM: return BasisKind::CHECK_MONOMIAL;
    case FormKind::BAR_FORM: return BasisKind::BAR_MONOMIAL;
  }
  return BasisKind::MONOMIAL;
}

struct BasisElement {
  std::string label;  // defining data, e.g. "lambda_1(hhat_2)*lambda_2(hhat_1)"
  Poly value;
};

struct CoordinateVector {
  std::vector<std::pair<std::string, Q>> entries;  // nonzero coordinates, in basis order
};

namespace detail {

inline Poly series_coeff(SeriesName name, int k, Convention cv) {
  return named_series(name, k, cv)[k];
}

inline std::string factor_label(const std::string& s, int k) {
  return s + "_" + std::to_string(k);
}

inline std::string power_label(const std::string& f, int e) {
  return e == 1 ? f : f + "^" + std::to_string(e);
}

}  // namespace detail

// Degree-d elements; the partition order of partitions_of(d) drives the index order.
inline std::vector<BasisElement> enumerate_basis(BasisKind kind, int d,
                                                 Convention cv = Convention::Plain) {
  std::vector<BasisElement> out;
  if (d < 0) return out;
  PolySeries hat = named_series(SeriesName::HAT, d, cv);
  PolySeries chk = named_series(SeriesName::CHECK, d, cv);
  PolySeries bar = named_series(SeriesName::BAR, d, cv);
  auto product_label = [](const std::vector<std::string>& fs) {
    std::string s;
    for (const auto& f : fs) s += (s.empty() ? "" : "*") + f;
    return s.empty() ? std::string("1") : s;
  };
  switch (kind) {
    case BasisKind::MONOMIAL:
      for (const auto& p : partitions_of(d)) out.push_back({p.monomial_str(), Poly::monomial(p)});
      break;
    case BasisKind::B_LAMBDA:
    case BasisKind::B_LAMBDA_PRIME:
      // k_m = multiplicity of m in the partition.
      for (const auto& p : partitions_of(d)) {
        Poly v(1);
        std::vector<std::string> fs;
        for (auto [m, k] : p.entries()) {
          bool check = kind == BasisKind::B_LAMBDA_PRIME && m % 2 == 0;
          v *= lambda_shift(m, check ? chk[k] : hat[k]);
          fs.push_back("lambda_" + std::to_string(m) + "(" +
                       detail::factor_label(check ? "hcheck" : "hhat", k) + ")");
        }
        out.push_back({product_label(fs), v});
      }
      break;
    case BasisKind::HAT_MONOMIAL:
    case BasisKind::CHECK_MONOMIAL:
      for (const auto& p : partitions_of(d)) {
        const PolySeries& s = kind == BasisKind::HAT_MONOMIAL ? hat : chk;
        std::string name = kind == BasisKind::HAT_MONOMIAL ? "hhat" : "hcheck";
        Poly v(1);
        std::vector<std::string> fs;
        for (auto [k, e] : p.entries()) {
          v *= pow(s[k], e);
          fs.push_back(detail::power_label(detail::factor_label(name, k), e));
        }
        out.push_back({product_label(fs), v});
      }
      break;
    case BasisKind::BAR_MONOMIAL:
      if (d % 2 == 0) {
        for (const auto& p : partitions_of(d / 2)) {
          Poly v(1);
          std::vector<std::string> fs;
          for (auto [k, e] : p.entries()) {
            v *= pow(bar[2 * k], e);
            fs.push_back(detail::power_label(detail::factor_label("hbar", 2 * k), e));
          }
          out.push_back({product_label(fs), v});
        }
      }
      break;
    case BasisKind::B_QPOL:
      // Distinct-part set for the hhat factor, even-part partition for the hbar factor.
      for (int a = 0; a <= d; ++a) {
        int b = d - a;
        if (b % 2) continue;
        std::vector<Partition> distinct;
        for (const auto& p : partitions_of(a)) {
          bool ok = true;
          for (auto [x, m] : p.entries()) ok = ok && m == 1;
          if (ok) distinct.push_back(p);
        }
        for (const auto& dp : distinct) {
          for (const auto& ep : partitions_of(b / 2)) {
            Poly v(1);
            std::vector<std::string> fs;
            for (auto [k, m] : dp.entries()) {
              v *= hat[k];
              fs.push_back(detail::factor_label("hhat", k));
            }
            for (auto [k, e] : ep.entries()) {
              v *= pow(bar[2 * k], e);
              fs.push_back(detail::power_label(detail::factor_label("hbar", 2 * k), e));
            }
            out.push_back({product_label(fs), v});
          }
        }
      }
      break;
  }
  return out;
}

inline QVec monomial_vector(const Poly& p, int d) {
  auto parts = partitions_of(d);
  QVec v(parts.size(), Q(0));
  for (std::size_t i = 0; i < parts.size(); ++i) v[i] = p.coeff(parts[i]);
  return v;
}

inline QMat coordinate_matrix(BasisKind kind, int d, Convention cv = Convention::Plain) {
  QMat m;
  for (const auto& b : enumerate_basis(kind, d, cv)) m.push_back(monomial_vector(b.value, d));
  return m;
}

// Caches one solver per degree; each instance belongs to its caller.
class BasisCoordinates {
 public:
  explicit BasisCoordinates(BasisKind kind, Convention cv = Convention::Plain)
      : kind_(kind), cv_(cv) {}

  BasisKind kind() const { return kind_; }

  const std::vector<BasisElement>& elements(int d) { return entry(d).elems; }

  // Coordinates of a homogeneous degree-d polynomial; nullopt if outside the span.
  std::optional<QVec> solve(const Poly& p, int d) {
    return entry(d).solver.solve(monomial_vector(p, d));
  }

  // Coordinates of an arbitrary polynomial split by degree; throws if outside the span.
  CoordinateVector coordinates(const Poly& p) {
    CoordinateVector cv;
    for (long d = 0; d <= p.max_degree(); ++d) {
      Poly comp = p.component(d);
      if (comp.is_zero()) continue;
      auto x = solve(comp, static_cast<int>(d));
      if (!x) throw std::domain_error("not in span");
      const auto& el = elements(static_cast<int>(d));
      for (std::size_t i = 0; i < x->size(); ++i)
        if ((*x)[i] != 0) cv.entries.push_back({el[i].label, (*x)[i]});
    }
    return cv;
  }

 private:
  struct Entry {
    std::vector<BasisElement> elems;
    SpanSolver solver;
  };

  Entry& entry(int d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    Entry e;
    e.elems = enumerate_basis(kind_, d, cv_);
    std::vector<QVec> vecs;
    for (const auto& b : e.elems) vecs.push_back(monomial_vector(b.value, d));
    e.solver = SpanSolver(vecs, partitions_of(d).size());
    return cache_.emplace(d, std::move(e)).first->second;
  }

  BasisKind kind_;
  Convention cv_;
  std::map<int, Entry> cache_;
};

inline CoordinateVector coordinates(const Poly& p, BasisKind kind,
                                    Convention cv = Convention::Plain) {
  BasisCoordinates bc(kind, cv);
  return bc.coordinates(p);
}

struct Membership {
  bool in = true;
  int degree = -1;         // witness degree when OUT
  std::string witness;     // basis label, or "outside span"
  Q coordinate;            // witness coordinate
  std::string str() const {
    if (in) return "IN";
    return "OUT(degree " + std::to_string(degree) + ", " + witness + " -> " +
           coordinate.get_str() + ")";
  }
};

// IN iff every coordinate in the form's basis is an integer. BAR_FORM is not spanning, so
// a polynomial outside the span is OUT as well.
inline Membership membership_with(BasisCoordinates& bc, const Poly& p) {
  for (long d = 0; d <= p.max_degree(); ++d) {
    Poly comp = p.component(d);
    if (comp.is_zero()) continue;
    auto x = bc.solve(comp, static_cast<int>(d));
    if (!x) return {false, static_cast<int>(d), "outside span", Q(0)};
    const auto& el = bc.elements(static_cast<int>(d));
    for (std::size_t i = 0; i < x->size(); ++i)
      if (!is_integer((*x)[i])) return {false, static_cast<int>(d), el[i].label, (*x)[i]};
  }
  return {};
}

inline Membership membership(const Poly& p, FormKind form, Convention cv = Convention::Plain) {
  BasisCoordinates bc(form_basis(form), cv);
  return membership_with(bc, p);
}

inline Lattice lattice_at_degree(const std::vector<Poly>& gens, int d) {
  std::vector<QVec> rows;
  for (const auto& g : gens) {
    if (!g.is_homogeneous(d)) throw std::invalid_argument("generator not homogeneous of degree d");
    rows.push_back(monomial_vector(g, d));
  }
  return Lattice::span(rows, partitions_of(d).size());
}

inline Lattice basis_lattice(BasisKind kind, int d, Convention cv = Convention::Plain) {
  std::vector<Poly> gens;
  for (const auto& b : enumerate_basis(kind, d, cv)) gens.push_back(b.value);
  return lattice_at_degree(gens, d);
}

inline Lattice form_lattice(FormKind form, int d, Convention cv = Convention::Plain) {
  return basis_lattice(form_basis(form), d, cv);
}

struct EulerCount {
  long distinct = 0;
  long odd = 0;
};

inline EulerCount euler_count(int d) {
  EulerCount e;
  std::vector<int> cur;
  for_each_partition(d, d, cur, [&](const std::vector<int>& v) {
    bool distinct = true, odd = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i && v[i] == v[i - 1]) distinct = false;
      if (v[i] % 2 == 0) odd = false;
    }
    e.distinct += distinct;
    e.odd += odd;
  });
  return e;
}

struct ClosureVerdict {
  bool closed = true;
  long products = 0;
  std::string failure;
};

// Products of basis elements with degree sum <= d stay integral in the form's basis.
inline ClosureVerdict closure_check(FormKind form, int d, Convention cv = Convention::Plain) {
  if (d < 2) throw std::invalid_argument("closure_check needs d >= 2");
  ClosureVerdict v;
  BasisCoordinates bc(form_basis(form), cv);
  for (int d1 = 1; d1 <= d; ++d1) {
    for (int d2 = d1; d1 + d2 <= d; ++d2) {
      const auto e1 = bc.elements(d1);
      const auto e2 = bc.elements(d2);
      for (std::size_t i = 0; i < e1.size(); ++i) {
        for (std::size_t j = (d1 == d2 ? i : 0); j < e2.size(); ++j) {
          ++v.products;
          Membership m = membership_with(bc, e1[i].value * e2[j].value);
          if (!m.in) {
            v.closed = false;
            v.failure = e1[i].label + " * " + e2[j].label + ": " + m.str();
            return v;
          }
        }
      }
    }
  }
  return v;
}

}  // namespace affint
