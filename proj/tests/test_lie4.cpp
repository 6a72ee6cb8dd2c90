#include <gtest/gtest.h>

#include <set>

#include "affint/loop4.hpp"

using namespace affint;

namespace {

const A4Realization& R() { return A4Realization::get(); }

// |Phi^+| of type B_n, counted from the orthonormal model: e_i (n) and e_i +- e_j (n(n-1)).
int positive_roots_bn(int n) { return n + n * (n - 1); }

}  // namespace

TEST(Realization, GeneratorExamples) {
  EXPECT_EQ(bracket4(R().xp(1, 0), R().xm(1, 0)), R().h(1, 0));
  for (int r = -2; r <= 2; ++r)
    for (int s = -2; s <= 2; ++s) EXPECT_TRUE(bracket4(R().xp(2, r), R().xp(2, s)).is_zero());
  // [h_{1,r}, x^+-_{2,s}] = -+2 x^+-_{2,r+s}
  EXPECT_EQ(bracket4(R().h(1, 1), R().xp(2, 0)), Q(-2) * R().xp(2, 1));
  EXPECT_EQ(bracket4(R().h(1, 2), R().xm(2, -1)), Q(2) * R().xm(2, 1));
  // a_{1,1;r} alternates between 6 and 2.
  EXPECT_EQ(bracket4(R().h(1, 1), R().xp(1, 0)), Q(6) * R().xp(1, 1));
  EXPECT_EQ(bracket4(R().h(1, 2), R().xp(1, 0)), Q(2) * R().xp(1, 2));
  EXPECT_EQ(bracket4(R().h(1, 1), R().h(1, -1)), Q(6) * R().c());
}

TEST(Realization, TwistEigenspaces) {
  for (int r = -3; r <= 3; ++r)
    for (int i = 1; i <= 2; ++i) {
      EXPECT_TRUE(R().xp(i, r).twisted());
      EXPECT_TRUE(R().xm(i, r).twisted());
      EXPECT_TRUE(R().h(i, r).twisted());
    }
  // The twist is an involutive antiautomorphism-negated transpose: check twist^2 = id and bracket compatibility.
  Mat5 a = unit(1, 3) + unit(2, 5), b = unit(3, 2) + Q(3) * unit(4, 4) - Q(3) * unit(1, 1);
  EXPECT_EQ(twist(twist(a)), a);
  EXPECT_EQ(twist(commutator(a, b)), commutator(twist(a), twist(b)));
}

TEST(Realization, RelationsWindowThree) {
  auto v = verify_a4_relations(3);
  EXPECT_TRUE(v.pass) << v.failure;
  EXPECT_GT(v.checked, 1000);
}

TEST(Realization, BracketAntisymmetryAndJacobiSample) {
  std::vector<LoopElement> B;
  for (int r = -2; r <= 2; ++r)
    for (int i = 1; i <= 2; ++i) {
      B.push_back(R().xp(i, r));
      B.push_back(R().xm(i, r));
      B.push_back(R().h(i, r));
    }
  for (const auto& a : B)
    for (const auto& b : B) EXPECT_EQ(bracket4(a, b), -bracket4(b, a));
  for (std::size_t i = 0; i < B.size(); i += 3)
    for (std::size_t j = 1; j < B.size(); j += 4)
      for (std::size_t k = 2; k < B.size(); k += 5) {
        auto s = bracket4(B[i], bracket4(B[j], B[k])) + bracket4(B[j], bracket4(B[k], B[i])) +
                 bracket4(B[k], bracket4(B[i], B[j]));
        EXPECT_TRUE(s.is_zero());
      }
}

TEST(Tau, ClosedForms) {
  auto v = verify_techuno(3);
  EXPECT_TRUE(v.pass) << v.failure;
  auto w = verify_tau_closed_forms(3);
  EXPECT_TRUE(w.pass) << w.failure;
  EXPECT_EQ(tau4(2, R().xp(1, 1)), bracket4(R().xp(2, 0), R().xp(1, 1)));
  // The coefficient 1/4 for tau_2(X_1) contradicts the sl2 computation that gives 1/2.
  EXPECT_FALSE(verify_tau_closed_forms(3, q(1, 4)).pass);
}

TEST(Tau, Sl2StringOracle) {
  // For a lowest-weight vector v of a 3-dim sl2 module, tau(v) = e^2 v / 2: check on (e, f, f) of sl2 in gl2.
  auto E = [](int i, int j) { return unit(i, j); };
  Mat5 e = E(1, 2), f = E(2, 1);
  auto ad = [](const Mat5& a, const Mat5& b) { return commutator(a, b); };
  auto ex = [&](const Mat5& x, const Mat5& y, const Q& s) {
    Mat5 sum = y, t = y;
    for (int k = 1; k < 4; ++k) {
      t = Q(s / k) * ad(x, t);
      sum = sum + t;
    }
    return sum;
  };
  Mat5 t = ex(e, ex(f, ex(e, f, 1), -1), 1);
  EXPECT_EQ(t, q(1, 2) * ad(e, ad(e, f)));
}

TEST(Tau, IsAutomorphismOnSample) {
  std::vector<LoopElement> B;
  for (int r = -1; r <= 1; ++r)
    for (int i = 1; i <= 2; ++i) {
      B.push_back(R().xp(i, r));
      B.push_back(R().xm(i, r));
      B.push_back(R().h(i, r));
    }
  for (int i = 1; i <= 2; ++i)
    for (const auto& a : B)
      for (const auto& b : B) EXPECT_EQ(tau4(i, bracket4(a, b)), bracket4(tau4(i, a), tau4(i, b)));
}

TEST(Tau, CapSignalsNonTermination) {
  // ad h is not nilpotent on x: the exp series never terminates.
  EXPECT_THROW(exp_ad<LoopElement>(R().h(1, 0), R().xp(1, 0), bracket4), std::runtime_error);
}

TEST(Tau, A22Version) {
  // tau on node 1 of A2(2) matches tau_1 of A4(2) through psi_bar.
  for (auto b : basis22(2))
    EXPECT_EQ(psi_bar(tau22(A22Element(b))), tau4(1, psi_bar(b))) << b.str();
}

TEST(Roots, RankTwo) {
  auto s = finite_roots_s(2), m = finite_roots_m(2);
  EXPECT_EQ(s, (std::vector<std::vector<int>>{{1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(m, (std::vector<std::vector<int>>{{2, 1}}));
  EXPECT_EQ(weyl_reflect(2, {{1, 0}, 0}).fin, (std::vector<int>{1, 1}));
  EXPECT_EQ(weyl_reflect(1, {{0, 1}, 0}).fin, (std::vector<int>{2, 1}));
}

TEST(Roots, CountsAndInvolutivity) {
  for (int n = 1; n <= 5; ++n) {
    int total = static_cast<int>(finite_roots_s(n).size() + finite_roots_m(n).size());
    EXPECT_EQ(total, positive_roots_bn(n));
    // W0 permutes +-Phi0: the finite roots are closed under every reflection.
    std::set<std::vector<int>> all;
    for (auto v : finite_roots_s(n)) {
      all.insert(v);
      for (auto& x : v) x = -x;
      all.insert(v);
    }
    for (auto v : finite_roots_m(n)) {
      all.insert(v);
      for (auto& x : v) x = -x;
      all.insert(v);
    }
    for (const auto& v : all)
      for (int i = 1; i <= n; ++i) {
        AffineRoot a{v, 3};
        auto b = weyl_reflect(i, a);
        EXPECT_TRUE(all.count(b.fin)) << a.str();
        EXPECT_EQ(weyl_reflect(i, b), a);
      }
  }
  // sigma_n(alpha_1 + ... + alpha_{n-1}) = alpha_1 + ... + alpha_n
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> v(n, 1);
    v[n - 1] = 0;
    std::vector<int> w(n, 1);
    EXPECT_EQ(weyl_reflect(n, {v, 0}).fin, w);
  }
}

TEST(Roots, EnumerationAndWeights) {
  auto roots = enumerate_roots(2, 4, 3);
  int longs = 0;
  for (const auto& r : roots)
    if (r.cls == RootClass::LONG) {
      ++longs;
      EXPECT_NE(r.root.delta % 2, 0);
    }
  EXPECT_EQ(longs, 2 * 4);  // 2alpha_1, 2alpha_1+2alpha_2 at r = -3,-1,1,3
  EXPECT_EQ(roots.size(), 7u * 4 + 8);
  auto v = verify_root_weights(3);
  EXPECT_TRUE(v.pass) << v.failure;
  // The weight of alpha_1 is the first column of the Cartan matrix.
  EXPECT_EQ(bracket4(R().h(1, 0), R().xp(1, 0)), Q(2) * R().xp(1, 0));
  EXPECT_EQ(bracket4(R().h(2, 0), R().xp(1, 0)), Q(-1) * R().xp(1, 0));
}

TEST(Roots, RootVectorExamples) {
  for (int r = -2; r <= 2; ++r) {
    EXPECT_EQ(root_vector(1, 1, 1, r), bracket4(R().xp(2, 0), R().xp(1, r)));
    EXPECT_EQ(root_vector(1, 2, 1, r), q(1, 2) * bracket4(R().xp(1, 0), bracket4(R().xp(1, 0), R().xp(2, r))));
  }
  EXPECT_THROW(root_vector(1, 3, 1, 0), std::invalid_argument);
}

TEST(Embedding, PsiBarIntertwines) {
  auto v = check_embedding(Embedding::PSI_BAR, 3);
  EXPECT_TRUE(v.pass) << v.failure;
  EXPECT_EQ(psi_bar(bracket22(A22Index::h(1), A22Index::h(-1))), Q(6) * R().c());
  EXPECT_EQ(psi_bar(A22Element(A22Index::xp(2))), R().xp(1, 2));
}

TEST(Embedding, PsiTildeIntertwines) {
  auto v = check_embedding(Embedding::PSI_TILDE, 3);
  EXPECT_TRUE(v.pass) << v.failure;
  EXPECT_EQ(psi_tilde(A11Element(A11Index::h(2))), R().h(2, 2));
}
