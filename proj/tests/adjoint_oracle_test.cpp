#include <gtest/gtest.h>

#include "adjoint_oracle.hpp"

using namespace qloc;
using namespace qloc::testing;

TEST(AdjointOracle, DerivedImagesAgreeWithShipped) {
  OracleResult r = run_adjoint_oracle();
  for (const auto& f : r.failures) ADD_FAILURE() << f;
  EXPECT_TRUE(r.images_match);
  EXPECT_TRUE(r.relations_hold);
  EXPECT_TRUE(r.fixed_set);
  EXPECT_TRUE(r.monomials_consistent);
  EXPECT_TRUE(r.hermitian_positions);
  EXPECT_EQ(r.monomials, 35 * 16);
}

TEST(AdjointOracle, SpecExampleForCanonicalPosition) {
  // x_0^dagger = x_0 + 2 i gamma W_0 / M^2
  NCElement expected = obs::position(0) + (obs::orientation() * obs::pauli_lubanski(0))
                                              .times_right(Scalar(2) * Scalar::i() * Scalar::w_pow(-2));
  EXPECT_EQ(adjoint(obs::position(0)), expected);
  EXPECT_EQ(adjoint(NCElement(Scalar::i())), NCElement(-Scalar::i()));
}
