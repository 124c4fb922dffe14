#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reference_data.hpp"
#include "threelie/cocycle.hpp"
#include "threelie/cybe.hpp"
#include "threelie/double.hpp"

using namespace threelie;

namespace {

RMatrix sample_r() { return RMatrix::skew_from_upper(4, {{{2, 3}, Scalar(1)}, {{1, 4}, Scalar(1)}}); }

}  // namespace

TEST(Flatten, RoundTrip) {
  oracle::Rng rng(1);
  Tensor t(3, 3);
  for (int n = 0; n < 10; ++n) t.add({rng.uniform(1, 3), rng.uniform(1, 3), rng.uniform(1, 3)}, Scalar(rng.rational()));
  EXPECT_EQ(unflatten(flatten(t), 3), t);
  Tensor single(3, 3);
  single.add({2, 1, 3}, Scalar(1));
  EXPECT_EQ(flatten(single), basis_vector(27, 1 * 9 + 0 * 3 + 2 + 1));
}

TEST(SlotAction, MatchesExplicitRepresentation) {
  oracle::Rng rng(6);
  for (const char* id : {"dim3", "dim4-4", "dim4-6"}) {
    const auto& a = catalog_entry(id).algebra;
    const int n = a.dim();
    for (auto slot : {SlotAction::First, SlotAction::Second, SlotAction::Third}) {
      const Representation rho = slot_representation(a, slot);
      EXPECT_TRUE(check_representation(a, rho).passed()) << id;
      Tensor w(3, n);
      for (int k = 0; k < 6; ++k) w.add({rng.uniform(1, n), rng.uniform(1, n), rng.uniform(1, n)}, Scalar(rng.rational()));
      for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t)
          EXPECT_EQ(flatten(slot_action(a, slot, s, t, w)), rho(s, t).apply(flatten(w))) << id;
    }
  }
}

TEST(OneCocycle, ZeroMapPasses) {
  const auto& a = catalog_entry("dim4-1").algebra;
  EXPECT_TRUE(check_one_cocycle(a, SlotAction::Second, Coproduct(4)).passed());
}

TEST(OneCocycle, InducedComponentsUseTheirOwnSlot) {
  oracle::Rng rng(13);
  const auto& a = catalog_entry("dim4-4").algebra;
  const RMatrix r = rng.skew_rmatrix(4);
  const auto c = induced_coproduct_components(a, r);
  EXPECT_TRUE(check_one_cocycle(a, SlotAction::First, c.delta1).passed());
  EXPECT_TRUE(check_one_cocycle(a, SlotAction::Second, c.delta2).passed());
  EXPECT_TRUE(check_one_cocycle(a, SlotAction::Third, c.delta3).passed());
  const CocycleReport wrong = check_one_cocycle(a, SlotAction::Third, c.delta1);
  ASSERT_FALSE(wrong.passed());
  // Cross-check through the explicit representation on the n^3 carrier.
  const CocycleReport explicit_wrong = check_one_cocycle(a, slot_representation(a, SlotAction::Third), c.delta1);
  ASSERT_EQ(explicit_wrong.defects.size(), wrong.defects.size());
  EXPECT_EQ(explicit_wrong.defects.front().tuple, wrong.defects.front().tuple);
  EXPECT_EQ(explicit_wrong.defects.front().defect, wrong.defects.front().defect);
}

TEST(OneCocycle, EveryCatalogAlgebraAndEverySlot) {
  oracle::Rng rng(14);
  for (const auto& id : catalog_ids()) {
    const auto& a = catalog_entry(id).algebra;
    const auto c = induced_coproduct_components(a, rng.skew_rmatrix(a.dim()));
    EXPECT_TRUE(check_one_cocycle(a, SlotAction::First, c.delta1).passed()) << id;
    EXPECT_TRUE(check_one_cocycle(a, SlotAction::Second, c.delta2).passed()) << id;
    EXPECT_TRUE(check_one_cocycle(a, SlotAction::Third, c.delta3).passed()) << id;
  }
}

TEST(LocalCocycle, ZeroPasses) {
  const auto& a = catalog_entry("dim4-2").algebra;
  const auto report = check_local_cocycle_bialgebra(a, Coproduct(4), Coproduct(4), Coproduct(4));
  EXPECT_TRUE(report.passed());
  ASSERT_TRUE(report.dual_fi.has_value());
}

TEST(LocalCocycle, Dim3SymbolicPasses) {
  const auto& a = catalog_entry("dim3").algebra;
  const auto c = induced_coproduct_components(a, RMatrix::symbolic_skew(3));
  EXPECT_TRUE(check_local_cocycle_bialgebra(a, c.delta1, c.delta2, c.delta3).passed());
}

TEST(LocalCocycle, Dim42NonSolutionBreaksOnlyTheDualIdentity) {
  const auto& a = catalog_entry("dim4-2").algebra;
  const auto c = induced_coproduct_components(a, sample_r());
  const auto report = check_local_cocycle_bialgebra(a, c.delta1, c.delta2, c.delta3);
  EXPECT_FALSE(report.passed());
  EXPECT_TRUE(report.cocycle1.passed());
  EXPECT_TRUE(report.cocycle2.passed());
  EXPECT_TRUE(report.cocycle3.passed());
  EXPECT_TRUE(report.alternating);
  ASSERT_TRUE(report.dual_fi.has_value());
  EXPECT_FALSE(report.dual_fi->passed());
  EXPECT_EQ(report.failures, std::vector<std::string>{"dual bracket violates the Fundamental Identity"});
}

TEST(LocalCocycle, NonAlternatingSumIsReported) {
  const auto& a = catalog_entry("dim3").algebra;
  Coproduct d1(3);
  d1(1).add({1, 1, 2}, Scalar(1));
  const auto report = check_local_cocycle_bialgebra(a, d1, Coproduct(3), Coproduct(3));
  EXPECT_FALSE(report.alternating);
  EXPECT_FALSE(report.dual_fi.has_value());
  EXPECT_FALSE(report.passed());
}

TEST(DualAlgebra, Examples) {
  EXPECT_TRUE(dual_algebra(Coproduct(4)).is_abelian());
  Coproduct bad(3);
  bad(1).add({1, 2, 3}, Scalar(1));
  EXPECT_THROW(dual_algebra(bad), std::invalid_argument);
  const ThreeLieAlgebra d1 = dual_algebra(delta_family("dim4-1").coproduct);
  EXPECT_EQ(d1.basis_bracket(1, 2, 3), Scalar::variable("k") * basis_vector(4, 4));
  const ThreeLieAlgebra d7 = dual_algebra(delta_family("dim4-7").coproduct);
  EXPECT_EQ(d7.brackets().size(), 1u);
  EXPECT_EQ(d7.basis_bracket(1, 2, 3), Scalar::variable("c") * basis_vector(4, 4));
}

TEST(DualAlgebra, RemarkTables) {
  for (const auto& [id, rows] : reference::printed_dual_tables()) {
    EXPECT_EQ(dual_algebra(delta_family(id).coproduct), reference::algebra_from_rows(4, rows, true)) << id;
  }
}
