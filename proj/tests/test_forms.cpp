#include <gtest/gtest.h>

#include <random>

#include "affint/forms.hpp"

using namespace affint;

namespace {

// p(n) from Euler's pentagonal recurrence, independent of any enumeration.
long partition_count(int n) {
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

// Products of the generators {hhat_k, hbar_{2k}} of total degree d (an overcomplete family).
std::vector<Poly> mix_generator_products(int d) {
  auto hat = named_series(SeriesName::HAT, d);
  auto bar = named_series(SeriesName::BAR, d);
  std::vector<Poly> out;
  for (int a = 0; a <= d; ++a) {
    if ((d - a) % 2) continue;
    for (const auto& p : partitions_of(a)) {
      Poly x(1);
      for (auto [k, e] : p.entries()) x *= pow(hat[k], e);
      for (const auto& q : partitions_of((d - a) / 2)) {
        Poly y = x;
        for (auto [k, e] : q.entries()) y *= pow(bar[2 * k], e);
        out.push_back(y);
      }
    }
  }
  return out;
}

Q coord_of(const CoordinateVector& cv, const std::string& label) {
  for (const auto& [l, c] : cv.entries)
    if (l == label) return c;
  return 0;
}

}  // namespace

TEST(Enumerate, SmallCases) {
  auto b0 = enumerate_basis(BasisKind::B_LAMBDA, 0);
  ASSERT_EQ(b0.size(), 1u);
  EXPECT_EQ(b0[0].value, Poly(1));
  auto q2 = enumerate_basis(BasisKind::B_QPOL, 2);
  ASSERT_EQ(q2.size(), 2u);
  auto hat = named_series(SeriesName::HAT, 2);
  auto bar = named_series(SeriesName::BAR, 2);
  EXPECT_EQ(q2[0].value, bar[2]);
  EXPECT_EQ(q2[1].value, hat[2]);
}

TEST(Enumerate, CardinalityAndRank) {
  for (int d = 0; d <= 12; ++d) {
    long p = partition_count(d);
    for (auto k : {BasisKind::B_LAMBDA, BasisKind::B_LAMBDA_PRIME, BasisKind::B_QPOL}) {
      auto m = coordinate_matrix(k, d);
      EXPECT_EQ(static_cast<long>(m.size()), p) << basis_name(k) << " d=" << d;
      EXPECT_EQ(static_cast<long>(rank(m)), p) << basis_name(k) << " d=" << d;
    }
  }
}

TEST(Coordinates, Examples) {
  auto hat = named_series(SeriesName::HAT, 2);
  auto c = coordinates(hat[2], BasisKind::B_QPOL);
  ASSERT_EQ(c.entries.size(), 1u);
  EXPECT_EQ(c.entries[0].first, "hhat_2");
  EXPECT_EQ(c.entries[0].second, 1);

  Poly h11 = Poly::h(1) * Poly::h(1);
  auto c2 = coordinates(h11, BasisKind::B_QPOL);
  EXPECT_EQ(coord_of(c2, "hhat_2"), 2);
  EXPECT_EQ(coord_of(c2, "hbar_2"), -2);

  // Reconstruct h_2 from its B_LAMBDA coordinates.
  auto els = enumerate_basis(BasisKind::B_LAMBDA, 2);
  auto c3 = coordinates(Poly::h(2), BasisKind::B_LAMBDA);
  Poly rebuilt;
  for (const auto& [label, x] : c3.entries)
    for (const auto& e : els)
      if (e.label == label) rebuilt += e.value * x;
  EXPECT_EQ(rebuilt, Poly::h(2));
}

TEST(Coordinates, OutsideSpanThrowsForPartialBasis) {
  EXPECT_THROW(coordinates(Poly::h(1) * Poly::h(1), BasisKind::BAR_MONOMIAL), std::domain_error);
}

TEST(Membership, Examples) {
  auto bar = named_series(SeriesName::BAR, 2);
  auto m = membership(bar[2], FormKind::SYM);
  EXPECT_FALSE(m.in);
  EXPECT_EQ(m.degree, 2);
  auto hat = named_series(SeriesName::HAT, 10);
  for (int k = 1; k <= 10; ++k) EXPECT_TRUE(membership(hat[k], FormKind::MIX).in);
  auto c = expand_hat_series(SequenceSpec::cpow2(), 10);
  for (int k = 1; k <= 10; ++k) EXPECT_TRUE(membership(c[k], FormKind::MIX).in) << k;
  EXPECT_FALSE(membership(c[2], FormKind::SYM).in);
  EXPECT_TRUE(membership(Poly::h(2, q(1, 2)), FormKind::MIX).in);
  EXPECT_FALSE(membership(Poly::h(1, q(1, 2)), FormKind::MIX).in);
}

TEST(Membership, PrimitiveElements) {
  // MIX meets the span of the h_r in <h_{2r-1}, h_{2r}/2>; Z[hcheck] in <h_r/2>.
  for (int r = 1; r <= 8; ++r) {
    Q half = q(1, 2);
    if (r % 2) {
      EXPECT_TRUE(membership(Poly::h(r), FormKind::MIX).in);
      EXPECT_FALSE(membership(Poly::h(r, half), FormKind::MIX).in);
    } else {
      EXPECT_TRUE(membership(Poly::h(r, half), FormKind::MIX).in);
      EXPECT_FALSE(membership(Poly::h(r, q(1, 4)), FormKind::MIX).in);
    }
    EXPECT_TRUE(membership(Poly::h(r, half), FormKind::CHECK_FORM).in);
    EXPECT_FALSE(membership(Poly::h(r, q(1, 4)), FormKind::CHECK_FORM).in);
    EXPECT_TRUE(membership(Poly::h(r), FormKind::SYM).in);
    EXPECT_FALSE(membership(Poly::h(r, half), FormKind::SYM).in);
  }
}

TEST(Membership, BasisIndependenceOnRandomBattery) {
  std::mt19937 rng(20240611);
  BasisCoordinates lp(BasisKind::B_LAMBDA_PRIME), qp(BasisKind::B_QPOL);
  int in_count = 0;
  for (int t = 0; t < 100; ++t) {
    int d = 1 + static_cast<int>(rng() % 8);
    auto els = enumerate_basis(BasisKind::B_QPOL, d);
    Poly p;
    for (const auto& e : els) p += e.value * Q(static_cast<long>(rng() % 7) - 3);
    if (rng() % 2) p += Poly::monomial(partitions_of(d)[rng() % els.size()], q(1, 2 + rng() % 3));
    bool a = membership_with(lp, p).in, b = membership_with(qp, p).in;
    EXPECT_EQ(a, b) << p.str();
    in_count += a;
  }
  EXPECT_GT(in_count, 10);
  EXPECT_LT(in_count, 90);
}

TEST(Lattices, GarlandBasisSpansSymmetricForm) {
  for (int d = 1; d <= 10; ++d)
    EXPECT_EQ(basis_lattice(BasisKind::B_LAMBDA, d), basis_lattice(BasisKind::HAT_MONOMIAL, d)) << d;
}

TEST(Lattices, MixedBasesSpanGeneratedAlgebra) {
  for (int d = 1; d <= 8; ++d) {
    Lattice gen = lattice_at_degree(mix_generator_products(d), d);
    EXPECT_EQ(basis_lattice(BasisKind::B_LAMBDA_PRIME, d), gen) << d;
    EXPECT_EQ(basis_lattice(BasisKind::B_QPOL, d), gen) << d;
  }
}

TEST(Lattices, ConventionIndependent) {
  for (int d = 1; d <= 7; ++d)
    for (auto f : {FormKind::SYM, FormKind::MIX, FormKind::CHECK_FORM})
      EXPECT_EQ(form_lattice(f, d), form_lattice(f, d, Convention::Alternating));
}

TEST(Lattices, DegreeTwoOfMixedForm) {
  auto hat = named_series(SeriesName::HAT, 2);
  auto bar = named_series(SeriesName::BAR, 2);
  Poly h11 = Poly::h(1) * Poly::h(1);
  Lattice a = lattice_at_degree({h11, hat[2], bar[2]}, 2);
  Lattice b = lattice_at_degree({h11 * q(1, 2), Poly::h(2, q(1, 2))}, 2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(form_lattice(FormKind::MIX, 2), b);
  EXPECT_EQ(lattice_at_degree({Poly::h(1)}, 1), lattice_at_degree({Poly::h(1) * Q(-1)}, 1));
  Lattice l1 = lattice_at_degree({named_series(SeriesName::CHECK, 1)[1]}, 1);
  EXPECT_EQ(l1.scale, 2);
  EXPECT_EQ(l1.hnf, (ZMat{{Z(1)}}));
}

TEST(Lattices, StrictInclusionChain) {
  for (int d = 1; d <= 8; ++d) {
    Lattice s = form_lattice(FormKind::SYM, d), m = form_lattice(FormKind::MIX, d),
            c = form_lattice(FormKind::CHECK_FORM, d);
    EXPECT_TRUE(m.contains(s));
    EXPECT_TRUE(c.contains(m));
    EXPECT_FALSE(c == m) << d;
    if (d >= 2) {
      EXPECT_FALSE(s == m) << d;
    }
  }
}

TEST(Lambda, SymmetricFormIsStable) {
  auto hat = named_series(SeriesName::HAT, 12);
  BasisCoordinates bc(BasisKind::B_LAMBDA);
  for (int m = 1; m <= 12; ++m)
    for (int k = 1; m * k <= 12; ++k) EXPECT_TRUE(membership_with(bc, lambda_shift(m, hat[k])).in);
}

TEST(Euler, Counts) {
  EXPECT_EQ(euler_count(0).distinct, 1);
  EXPECT_EQ(euler_count(0).odd, 1);
  EXPECT_EQ(euler_count(6).distinct, 4);
  EXPECT_EQ(euler_count(6).odd, 4);
  for (int d = 0; d <= 20; ++d) EXPECT_EQ(euler_count(d).distinct, euler_count(d).odd);
}

TEST(Closure, SymAndMix) {
  auto m = closure_check(FormKind::MIX, 8);
  EXPECT_TRUE(m.closed) << m.failure;
  auto s = closure_check(FormKind::SYM, 8);
  EXPECT_TRUE(s.closed) << s.failure;
  EXPECT_GT(m.products, 100);
}
