#include <gtest/gtest.h>

#include "affint/identities.hpp"

using namespace affint;

namespace {

bool all_equal(const IdentitySpec& spec, int n, Reading rd, std::string* witness = nullptr) {
  for (const auto& p : spec.grid) {
    auto v = verify_uea_identity(spec.id, p, n, rd);
    if (!v.equal) {
      if (witness) *witness = spec.params_str(p) + " " + v.witness;
      return false;
    }
  }
  return true;
}

UeaParams rs(int r, int s) {
  UeaParams p;
  p.r = r;
  p.s = s;
  return p;
}

}  // namespace

TEST(Catalog, OperativeReadingsHoldOnGrid) {
  EXPECT_EQ(uea_catalog().size(), 25u);
  for (const auto& spec : uea_catalog()) {
    std::string w;
    EXPECT_TRUE(all_equal(spec, spec.default_n, Reading::OPERATIVE, &w)) << spec.id << " " << w;
  }
}

TEST(Catalog, AmendmentsAreForced) {
  // An amendment is recorded exactly when the printed reading fails somewhere on the grid.
  for (const auto& spec : uea_catalog())
    EXPECT_EQ(all_equal(spec, spec.default_n, Reading::PRINTED), spec.amendment.empty()) << spec.id;
}

TEST(Catalog, OperativeReadingsAtHigherOrder) {
  for (const auto& spec : uea_catalog()) {
    if (spec.default_n == 0) continue;
    std::string w;
    EXPECT_TRUE(all_equal(spec, 6, Reading::OPERATIVE, &w)) << spec.id << " " << w;
  }
  EXPECT_TRUE(verify_uea_identity("NUOVEADD_1", {}, 12, Reading::OPERATIVE).equal);
}

TEST(Catalog, ReferenceExamples) {
  EXPECT_TRUE(verify_uea_identity("COMMUPLUS_1", rs(0, 1), 4, Reading::OPERATIVE).equal);
  UeaParams p;
  EXPECT_TRUE(verify_uea_identity("NUOVEADD_3", p, 3, Reading::OPERATIVE).equal);
  p.k = 1;
  p.l = 1;
  EXPECT_TRUE(verify_uea_identity("BUZACCAZERO", p, 0, Reading::PRINTED).equal);
  EXPECT_TRUE(verify_uea_identity("ZEROPIUBARRA_COMMUPIETA", UeaParams{}, 3, Reading::OPERATIVE).equal);
  EXPECT_THROW(verify_uea_identity("NOPE", p, 3, Reading::PRINTED), std::invalid_argument);
  EXPECT_THROW(verify_uea_identity("NUOVEADD_2", rs(1, -1), 3, Reading::OPERATIVE), std::invalid_argument);
}

TEST(Catalog, PrintedWitnesses) {
  // The printed uv coefficient of COMMUPLUS_1 has the wrong sign: the mismatch appears at u v.
  auto v = verify_uea_identity("COMMUPLUS_1", rs(0, 1), 4, Reading::PRINTED);
  EXPECT_FALSE(v.equal);
  EXPECT_EQ(v.witness.rfind("u^1 v^1", 0), 0u) << v.witness;
  // Truncation below the first central term makes the (uv)^2 identities vacuous.
  EXPECT_TRUE(verify_uea_identity("MUZUBUZUBO_BARBAR", {}, 3, Reading::PRINTED).equal);
  EXPECT_FALSE(verify_uea_identity("MUZUBUZUBO_BARBAR", {}, 4, Reading::PRINTED).equal);
}

TEST(Oracles, CentralFactorFromCommutator) {
  // exp(A)exp(B) = exp(B)exp(A)exp([A,B]) for central [A,B]; with [h_r, h_{-r}] = 2r(2-(-1)^r)c
  // the hhat factor is exp(sum_r 2(2-(-1)^r) c (uv)^r / r) = (1-uv)^{-4c}(1+uv)^{2c}.
  // Coefficient of uv: 2*3 c = 6c, as h_1 h_{-1} - h_{-1} h_1.
  auto& U = uea_detail::u22();
  auto hp = uea_detail::hser22(SeriesName::HAT, 1, 1, 1, 0, 2), hm = uea_detail::hser22(SeriesName::HAT, -1, 1, 0, 1, 2);
  auto lhs = smul(U, hp, hm), rhs = smul(U, hm, hp);
  EXPECT_EQ(lhs.at(1, 1) - rhs.at(1, 1), Uea<A22Index>::atom(A22Index::c(), 6));
}

TEST(Oracles, CartanSeriesInUea) {
  auto h1 = uea_detail::hser22(SeriesName::HAT, 1, 1, 1, 0, 3);
  EXPECT_EQ(h1.at(1, 0), Uea<A22Index>::atom(A22Index::h(1)));
  auto c1 = uea_detail::hser22(SeriesName::CHECK, 1, 1, 1, 0, 3);
  EXPECT_EQ(c1.at(1, 0), Uea<A22Index>::atom(A22Index::h(1), q(1, 2)));
  auto b = uea_detail::hser22(SeriesName::BAR, 1, 1, 1, 0, 5);
  EXPECT_TRUE(b.at(1, 0).is_zero());
  EXPECT_TRUE(b.at(3, 0).is_zero());
  EXPECT_FALSE(b.at(2, 0).is_zero());
}

TEST(Oracles, CentralBinomialExamples) {
  auto& U = uea_detail::u22();
  using I = A22Index;
  auto f = central_binomial(U, Q(-1), 1, 1, Uea<I>::atom(I::c()), 2, uea_detail::c0_22);
  EXPECT_EQ(f.at(1, 1), Uea<I>::atom(I::c(), -1));
  auto g = central_binomial(U, Q(4), 1, 1, Uea<I>::atom(I::h(0), q(1, 2)), 2, uea_detail::c0_22);
  EXPECT_EQ(g.at(1, 1), Uea<I>::atom(I::h(0), 2));
  auto z = central_binomial(U, Q(4), 1, 1, Uea<I>::Elem{}, 3, uea_detail::c0_22);
  EXPECT_EQ(z, Series2<I>::one(3));
}

TEST(Oracles, OperatorSeriesExamples) {
  using I = A22Index;
  auto op = OpSeries::binomial(3, -1, -1, 1, 0, -1);  // (1 - T^{-1}u)^{-1}
  auto s = uea_detail::op22(op, A22Element(I::xp(0)), 0, 0);
  EXPECT_EQ(s.at(2, 0), Uea<I>::atom(I::xp(2)));
  auto cube = OpSeries::binomial(3, -1, -2, 2, 0, -3);
  EXPECT_EQ(uea_detail::op22(cube, A22Element(I::xp(0)), 0, 0).at(0, 0), Uea<I>::atom(I::xp(0)));
  EXPECT_EQ(uea_detail::op22(OpSeries::identity(3), A22Element(I::XP(1)), 0, 0).at(0, 0), Uea<I>::atom(I::XP(1)));
}

TEST(A4Uea, DecompositionMatchesRealization) {
  std::vector<A4Index> B{A4Index::c()};
  for (int r = -2; r <= 2; ++r) {
    for (int i = 1; i <= 2; ++i) B.push_back(A4Index::h(i, r));
    for (int sign : {-1, 1})
      for (int k = 0; k < 6; ++k) {
        if (A4Index::doubled(k) && r % 2 == 0) continue;
        B.push_back({sign > 0 ? A4Index::Part::POS : A4Index::Part::NEG, k, r});
      }
  }
  for (const auto& a : B) {
    EXPECT_EQ(realize4(decompose4(realize4(a))), realize4(a)) << a.str();
    for (const auto& b : B) EXPECT_EQ(realize4(bracket4_index(a, b)), bracket4(realize4(a), realize4(b)));
  }
}

TEST(A4Uea, ShiftMatchesBrackets) {
  // T^{-1} X_{1,r} = [x_{1,r+1}, x_{1,1}] = -X_{1,r+2}
  for (int r : {-3, -1, 1, 3}) {
    A4Lie lhs = shift4(-1, A4Lie(A4Index::X1(1, r)));
    EXPECT_EQ(realize4(lhs), bracket4(realize4(A4Index::x(1, 1, r + 1)), realize4(A4Index::x(1, 1, 1))));
    EXPECT_EQ(lhs, A4Lie(A4Index::X1(1, r + 2), Q(-1)));
  }
  EXPECT_THROW(shift4(1, A4Lie(A4Index::h(1, 1))), std::invalid_argument);
}

TEST(A4Uea, ReferenceProduct) {
  auto& U = uea4();
  using I = A4Index;
  auto e = U.mul(U4::atom(I::x(1, 1, 0)), U4::atom(I::x(2, 1, 0)));
  EXPECT_EQ(e, U4::Elem(U4::Mono{{I::x(2, 1, 0), 1}, {I::x(1, 1, 0), 1}}) - U4::atom(I::root(1, 1, 1, 0)));
}

TEST(Integral, CertificatesReproduceTargets) {
  for (auto t : {IntegralTarget::X_A1A2, IntegralTarget::X_2A1A2, IntegralTarget::HALF_X2})
    for (int r : {0, 1})
      for (int k : {1, 2}) {
        auto c = certify_integral(t, r, k);
        EXPECT_TRUE(c.integral) << c.target;
        EXPECT_TRUE(c.reproduces) << c.target;
        EXPECT_FALSE(c.words.empty());
      }
}

TEST(Integral, WrongScaleIsRejected) {
  // X_2 itself (without the 1/2) is twice the certified element; a halved combination is not integral.
  auto c = certify_integral(IntegralTarget::HALF_X2, 0, 1);
  WordComb half;
  for (const auto& [w, q0] : c.words) half[w] = q0 / 2;
  EXPECT_NE(evaluate_words(half), evaluate_words(c.words));
  EXPECT_EQ(evaluate_words(c.words), U4::atom(A4Index::X2(1, 1), q(1, 2)));
}
