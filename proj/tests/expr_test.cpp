#include <gtest/gtest.h>

#include <cstdlib>

#include "expr_corpus.hpp"
#include "gtest_print.hpp"
#include "qloc/expr.hpp"
#include "qloc/frames.hpp"
#include "qloc/observables.hpp"

using namespace qloc;
using namespace qloc::expr;

TEST(Expr, SpecExamples) {
  EXPECT_EQ(eval("comm(D, M)"), obs::mass());
  EXPECT_TRUE(eval("M*M - P2").is_zero());
  EXPECT_TRUE(eval("W[0]*W[0] - W[1]*W[1] - W[2]*W[2] - W[3]*W[3] + 3/4*hbar^2*P2").is_zero());
  EXPECT_EQ(eval("adj(i)"), -NCElement(Scalar::i()));
  EXPECT_EQ(eval("conj(M; order=2)"), frames::conjugate(obs::mass(), 2));
  EXPECT_EQ(eval("comm(xc[1], p[1])"), NCElement(1));
  EXPECT_EQ(eval("comm(xc[1], P[1])"), NCElement(-1));
  EXPECT_TRUE(eval("dot(gamma[0], gamma[1])").is_zero());
}

TEST(Expr, Precedence) {
  // unary minus binds tighter than ^
  EXPECT_EQ(eval("-2^2"), NCElement(4));
  EXPECT_EQ(eval("-(2^2)"), NCElement(-4));
  EXPECT_EQ(eval("1 - 2 - 3"), NCElement(-4));
  EXPECT_EQ(eval("2*3 + 4*5"), NCElement(26));
  EXPECT_EQ(eval("1/2 + 1/3"), NCElement(Scalar::rational(5, 6)));
  EXPECT_EQ(eval("gamma[1]^2"), NCElement(-1));
  EXPECT_EQ(eval("M^0"), NCElement(1));
}

TEST(Expr, ParseErrors) {
  try {
    parse("comm(M,\n  P[1]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 7);
    EXPECT_TRUE(e.expected().count("')'")) << e.what();
  }
  try {
    parse("M + * P[0]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 5);
    EXPECT_EQ(e.found(), "*");
  }
  EXPECT_THROW(parse("J[0]"), ParseError);
  EXPECT_THROW(parse("P[4]"), ParseError);
  EXPECT_THROW(parse("frob(M)"), ParseError);
  EXPECT_THROW(parse("conj(M; order=-1)"), ParseError);
  EXPECT_THROW(parse("M M"), ParseError);
}

TEST(Expr, EvalErrorsCarryPositions) {
  try {
    eval("M + dx(P[0], 1)");
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 5);
  }
  EXPECT_THROW(eval("1/0"), std::exception);
}

TEST(Expr, RoundTripCorpus) {
  std::string first;
  EXPECT_EQ(corpus::round_trip_failures(500, 20261016u, &first), 0) << first;
}

TEST(Expr, RenderExamples) {
  for (const char* text : {"-M^2", "-(M^2)", "(M + P[0])*D", "M - (P[0] - D)", "M - P[0] + D",
                           "3/4*hbar^2", "conj(xc[1]; order=2)", "adn(C[0], 2)", "J[0,1]"}) {
    EXPECT_EQ(render(*parse(text)), text);
  }
  EXPECT_EQ(render(*parse("((M))*(P[0]*D)")), "M*(P[0]*D)");
  EXPECT_EQ(render(*parse("6/4")), "3/2");
}

TEST(Expr, DefaultOrderFromEnvironment) {
  ::setenv("QLOC_ORDER", "5", 1);
  EXPECT_EQ(default_order(), 5);
  ::unsetenv("QLOC_ORDER");
  EXPECT_EQ(default_order(), 3);
  EvalConfig cfg;
  cfg.order = 1;
  EXPECT_EQ(eval("conj(xc[0])", cfg), frames::conjugate(obs::position(0), 1));
}
