#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace twalex;

namespace {

IntMatrix random_int_matrix(std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = oracle::uniform(-bound, bound);
  return m;
}

} // namespace

TEST(Smith, SmallExamples) {
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).diagonal,
            (std::vector<Integer>{2, 4}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}).diagonal, std::vector<Integer>{});
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal,
            (std::vector<Integer>{1, 6}));
  EXPECT_EQ(smith_normal_form(IntMatrix(0, 3)).diagonal, std::vector<Integer>{});
}

TEST(Smith, CokernelInvariants) {
  const AbelianGroup g = cokernel_invariants(IntMatrix{{2, 0, 0}, {0, 3, 0}});
  EXPECT_EQ(g.rank, 1u);
  EXPECT_EQ(g.torsion, std::vector<Integer>{6});
  EXPECT_EQ(to_string(g), "Z + Z/6");
  EXPECT_EQ(to_string(cokernel_invariants(IntMatrix{{1, 0}, {0, 1}})), "0");
  EXPECT_EQ(to_string(cokernel_invariants(IntMatrix(0, 2))), "Z^2");
  EXPECT_EQ(g.order(), 0);
  EXPECT_EQ(cokernel_invariants(IntMatrix{{4, 0}, {0, 6}}).order(), 24);
}

TEST(Smith, DirectSumRestoresInvariantFactors) {
  AbelianGroup a{1, {2}}, b{0, {3}};
  const AbelianGroup s = direct_sum(a, b);
  EXPECT_EQ(s.rank, 1u);
  EXPECT_EQ(s.torsion, std::vector<Integer>{6});
}

TEST(Smith, TransformsAreUnimodularAndDiagonalize) {
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(oracle::uniform(1, 5));
    const std::size_t cols = static_cast<std::size_t>(oracle::uniform(1, 5));
    const IntMatrix m = random_int_matrix(rows, cols, 9);
    const SmithResult snf = smith_normal_form(m, true);
    const IntMatrix d = *snf.left * m * *snf.right;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const Integer expected = (i == j && i < snf.diagonal.size()) ? snf.diagonal[i] : Integer(0);
        ASSERT_EQ(abs(d(i, j)), expected) << "trial " << trial;
      }
    ASSERT_EQ(abs(oracle::int_det(*snf.left)), 1);
    ASSERT_EQ(abs(oracle::int_det(*snf.right)), 1);
  }
}

TEST(Smith, MinorGcdLadder) {
  // d_1 d_2 ... d_k = D_k, the gcd of the k x k minors, over 200 matrices.
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(oracle::uniform(1, 5));
    const std::size_t cols = static_cast<std::size_t>(oracle::uniform(1, 5));
    const IntMatrix m = random_int_matrix(rows, cols, trial % 2 == 0 ? 4 : 30);
    const SmithResult snf = smith_normal_form(m);
    const std::vector<Integer> ladder = oracle::minor_gcds(m);
    Integer product = 1;
    for (std::size_t k = 0; k < ladder.size(); ++k) {
      if (k < snf.diagonal.size()) {
        product *= snf.diagonal[k];
        if (k > 0) {
          ASSERT_EQ(snf.diagonal[k] % snf.diagonal[k - 1], 0);
        }
      } else {
        product = 0;
      }
      ASSERT_EQ(product, ladder[k]) << "trial " << trial << " k=" << k;
    }
  }
}

TEST(Smith, IntegerRank) {
  EXPECT_EQ(integer_rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(integer_rank(IntMatrix{{1, 2}, {3, 4}}), 2u);
}
