#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gyb/enhance.hpp"
#include "gyb/errors.hpp"
#include "gyb/tensorops.hpp"

using namespace gyb;

namespace {

const Complex kI{0.0, 1.0};
const Complex kEighthTurn = std::polar(1.0, std::numbers::pi / 4);
const TensorShape kDefectShape{2, 2};

}  // namespace

TEST(MakeEgyb, CatalogTuplesAreAccepted) {
  const auto id2 = ComplexMatrix::identity(2);
  EXPECT_NO_THROW(make_egyb(build_type1(0.4), id2, kEighthTurn, 1.0));
  EXPECT_NO_THROW(make_egyb(build_type3(0.4), id2, 1.0, std::numbers::sqrt2));
  const auto r232 = make_egyb(build_r232(), id2, 1.0, 2.0 * std::numbers::sqrt2);
  EXPECT_LT(r232.defect_plus().max_abs(), 1e-12);
  EXPECT_LT(r232.defect_minus().max_abs(), 1e-12);
  EXPECT_EQ(r232.defect_plus().dim(), 2u);
}

TEST(MakeEgyb, RejectsBadData) {
  const auto op = build_type1(0.0);
  EXPECT_THROW(make_egyb(op, ComplexMatrix(2), 1.0, 1.0), EnhancementError);
  EXPECT_THROW(make_egyb(op, ComplexMatrix::identity(2), 0.0, 1.0), EnhancementError);
  EXPECT_THROW(make_egyb(op, ComplexMatrix::identity(2), 1.0, 0.0), EnhancementError);
  EXPECT_THROW(make_egyb(op, ComplexMatrix::identity(3), 1.0, 1.0), EnhancementError);
  // diag(1, 2)^{⊗3} does not commute with the type1 matrix
  const ComplexMatrix mu{{1, 0}, {0, 2}};
  EXPECT_THROW(make_egyb(op, mu, 1.0, 1.0), EnhancementError);
}

TEST(MakeEgyb, ScalarMuCommutes) {
  // μ = c·Id commutes with every R; the defect scales accordingly
  const ComplexMatrix mu = 2.0 * ComplexMatrix::identity(2);
  const auto s = make_egyb(build_r232(), mu, 1.0, 16.0 * std::numbers::sqrt2);
  EXPECT_EQ(s.condition_i_residual(), 0.0);
  // Sp(R·8) − 16√2·2 = 16√2 − 32√2
  EXPECT_LT(max_abs_diff(s.defect_plus(), (-16.0 * std::numbers::sqrt2) * ComplexMatrix::identity(2)), 1e-12);
}

TEST(Defect, TypeOneMatchesDisplayedMatrix) {
  const double s = 1.0 / std::numbers::sqrt2;
  for (double theta : {0.0, 0.6, 2.0, std::numbers::pi}) {
    const auto e = catalog_enhancement(OperatorId::Type1, theta);
    const Complex e1 = std::polar(1.0, theta);
    const Complex e2 = std::polar(1.0, 2 * theta);
    ComplexMatrix expected(4);
    expected(0, 1) = s * (1.0 + e1);
    expected(1, 0) = s * (-kI - kI / e1);
    expected(2, 3) = s * (e1 - e2);
    expected(3, 2) = s * (-kI / e1 + kI / e2);
    EXPECT_LT(max_abs_diff(defect(e, 1), expected), 1e-12) << theta;
  }
  EXPECT_THROW(defect(catalog_enhancement(OperatorId::Type1), 0), DomainError);
}

TEST(Defect, TypeTwoAndThreeMatchDisplayedMatrices) {
  const double s = 1.0 / std::numbers::sqrt2;
  for (double theta : {0.0, 1.1, 2.5}) {
    const Complex e1 = std::polar(1.0, theta);
    const Complex e2 = std::polar(1.0, 2 * theta);
    ComplexMatrix two(4);
    two(0, 1) = s * (1.0 + e1);
    two(1, 0) = s * (-1.0 + 1.0 / e1);
    two(2, 3) = s * (e1 - e2);
    two(3, 2) = s * (1.0 / e1 + 1.0 / e2);
    EXPECT_LT(max_abs_diff(catalog_enhancement(OperatorId::Type2, theta).defect_plus(), two), 1e-12);

    ComplexMatrix three(4);
    three(0, 1) = s * (1.0 + e1);
    three(1, 0) = s * (-1.0 - 1.0 / e1);
    three(2, 3) = s * (-e1 - e2);
    three(3, 2) = s * (1.0 / e1 + 1.0 / e2);
    EXPECT_LT(max_abs_diff(catalog_enhancement(OperatorId::Type3, theta).defect_plus(), three), 1e-12);
  }
}

TEST(Defect, TypeTwoAtPiVanishesInFirstBlock) {
  const auto e = catalog_enhancement(OperatorId::Type2, std::numbers::pi);
  EXPECT_LT(std::abs(e.defect_plus()(0, 1)), 1e-12);
}

TEST(Defect, MinusIsOffDiagonalWheneverPlusIs) {
  for (auto id : {OperatorId::Type1, OperatorId::Type2, OperatorId::Type3}) {
    for (double theta : {0.0, 0.5, 1.5, 3.0}) {
      const auto e = catalog_enhancement(id, theta);
      ASSERT_TRUE(check_offdiagonal_last(e.defect_plus(), kDefectShape));
      EXPECT_TRUE(check_offdiagonal_last(e.defect_minus(), kDefectShape)) << to_string(id) << " " << theta;
      EXPECT_EQ(e.condition_i_residual(), 0.0);
    }
  }
}

TEST(OffDiagonalCheck, Basics) {
  EXPECT_TRUE(check_offdiagonal_last(ComplexMatrix(4), kDefectShape));
  EXPECT_FALSE(check_offdiagonal_last(ComplexMatrix::identity(4), kDefectShape));
  ComplexMatrix swap_last(4);
  swap_last(0, 1) = swap_last(1, 0) = swap_last(2, 3) = swap_last(3, 2) = 1.0;
  EXPECT_TRUE(check_offdiagonal_last(swap_last, kDefectShape));
  // (0, 2) keeps the last index equal
  ComplexMatrix same_last(4);
  same_last(0, 2) = 1.0;
  EXPECT_FALSE(check_offdiagonal_last(same_last, kDefectShape));
  EXPECT_THROW(check_offdiagonal_last(ComplexMatrix(3), kDefectShape), ShapeError);
}

TEST(Perpendicular, TypeTwoSamplesVanish) {
  const auto e = catalog_enhancement(OperatorId::Type2, 0.7);
  EXPECT_LT(check_perpendicular_sampled(e, 3, 100, 12, 99).max_abs_trace, 1e-10);
}

TEST(Perpendicular, R232IsExactlyZero) {
  const auto e = catalog_enhancement(OperatorId::R232);
  for (int n = 2; n <= 4; ++n) EXPECT_LT(check_perpendicular_sampled(e, n, 20, 10, 1).max_abs_trace, 1e-12);
  EXPECT_THROW(check_perpendicular_sampled(e, 1, 20, 10, 1), DomainError);
}

TEST(Perpendicular, CorruptedBetaIsDetected) {
  const auto bad = make_egyb(build_type3(0.0), ComplexMatrix::identity(2), 1.0, 2.0);
  const auto sample = check_perpendicular_sampled(bad, 3, 100, 12, 7);
  // identity braid in B₃: |tr(I₄ ⊗ (Sp(R) − 2I))| = 4·4(2 − √2)
  EXPECT_NEAR(sample.max_abs_trace, 16.0 * (2.0 - std::numbers::sqrt2), 1e-9);
  ASSERT_TRUE(sample.witness);
  EXPECT_EQ(*sample.witness, BraidWord::identity(3));
}

TEST(Report, CatalogVerdicts) {
  for (double theta : {0.0, 1.1, 2.0}) {
    for (auto id : {OperatorId::Type1, OperatorId::Type2}) {
      const auto report = enhancement_report(catalog_enhancement(id, theta));
      EXPECT_EQ(report.verdict, Verdict::Structural);
      EXPECT_TRUE(report.offdiagonal_ok);
      EXPECT_EQ(report.outer_diagonal, true);
      EXPECT_LT(report.sampled_perp_max, 1e-9);
    }
  }
  EXPECT_EQ(enhancement_report(catalog_enhancement(OperatorId::Type3, 1.1)).verdict, Verdict::Structural);
  const auto r232 = enhancement_report(catalog_enhancement(OperatorId::R232));
  EXPECT_EQ(r232.verdict, Verdict::Strong);
  EXPECT_FALSE(r232.outer_diagonal.has_value());
}

TEST(Report, TypeThreeAtPiHasZeroDefect) {
  // both blocks of the displayed defect vanish at θ = π
  const auto report = enhancement_report(catalog_enhancement(OperatorId::Type3, std::numbers::pi));
  EXPECT_EQ(report.verdict, Verdict::Strong);
}

TEST(Report, CorruptionFails) {
  const auto bad = make_egyb(build_type3(0.0), ComplexMatrix::identity(2), 1.0, 2.0);
  const auto report = enhancement_report(bad);
  EXPECT_FALSE(report.offdiagonal_ok);
  EXPECT_EQ(report.verdict, Verdict::Failed);
  EXPECT_GT(report.sampled_perp_max, 1.0);
}

TEST(Report, WrongBetaForR232Fails) {
  // defect = (2√2 − 1)·Id, and outer-diagonality does not apply to (2,3,2)
  const auto e = make_egyb(build_r232(), ComplexMatrix::identity(2), 1.0, 1.0);
  EXPECT_EQ(enhancement_report(e).verdict, Verdict::Failed);
}
