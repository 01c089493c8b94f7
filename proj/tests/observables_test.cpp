#include <gtest/gtest.h>

#include <thread>

#include "gtest_print.hpp"
#include "qloc/errors.hpp"
#include "qloc/observables.hpp"

using namespace qloc;
using namespace qloc::obs;

namespace {

NCElement inv_mass_square() { return NCElement(Scalar::w_pow(-2)); }
NCElement hbar() { return NCElement(Scalar::hbar()); }

}  // namespace

TEST(Observables, SpecExamples) {
  EXPECT_EQ(bracket(dilatation(), mass()), mass());
  EXPECT_EQ(mass() * mass(), momentum_square());
  EXPECT_EQ(momentum_square(), NCElement(Scalar::w() * Scalar::w()));
  EXPECT_EQ(pauli_square() * inv_mass_square(),
            NCElement(Scalar::rational(-3, 4) * Scalar::hbar(2)));
}

TEST(Observables, RaiseLower) {
  for (int mu = 0; mu < 4; ++mu) {
    EXPECT_EQ(raise(lower(momentum(mu), mu), mu), momentum(mu));
    EXPECT_EQ(raise(momentum(mu), mu), momentum_upper(mu));
  }
  EXPECT_EQ(momentum_upper(0), momentum(0));
  EXPECT_EQ(momentum_upper(1), -momentum(1));
}

TEST(Observables, CatalogLookup) {
  EXPECT_THROW(build("Q"), UnknownObservable);
  EXPECT_THROW(build("J", {0}), UnknownObservable);
  EXPECT_THROW(build("P", {4}), UnknownObservable);
  EXPECT_EQ(arity("S"), 2);
  EXPECT_EQ(arity("gamma5"), 0);
  EXPECT_EQ(build("Xh", {2}), hermitian_position(2));
  EXPECT_EQ(build("J", {1, 0}), -angular(0, 1));
  EXPECT_TRUE(build("J", {2, 2}).is_zero());
}

TEST(Observables, MemoIsThreadSafe) {
  std::vector<NCElement> got(8);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] { got[t] = build("C", {t % 4}); });
  }
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t) EXPECT_EQ(got[t], conformal(t % 4));
}

TEST(Observables, SpinVectorIdentity) {
  for (int mu = 0; mu < 4; ++mu) EXPECT_TRUE(spin_vector_identity(mu).is_zero()) << mu;
}

TEST(Observables, TransverseSpinComponent) {
  // n = (p^1, p^0, 0, 0) satisfies n^mu P_mu = 0; then S.n = -(hbar/2) gamma gamma_mu n^mu.
  std::array<Scalar, 4> n = {Scalar::p(1), Scalar::p(0), Scalar(), Scalar()};
  NCElement s_n;
  NCElement g_n;
  NCElement n_p;
  for (int mu = 0; mu < 4; ++mu) {
    s_n += spin_vector(mu).times_right(n[mu]);
    g_n += gamma(mu).times_right(n[mu]);
    n_p += momentum(mu).times_right(n[mu]);
  }
  EXPECT_TRUE(n_p.is_zero());
  EXPECT_EQ(s_n, (orientation() * g_n).times_right(Scalar::rational(-1, 2) * Scalar::hbar()));
}

TEST(Observables, ContractionWithMomentum) {
  // P^mu (-(hbar/2) gamma gamma_mu) = -(hbar/2) gamma M
  NCElement lhs;
  for (int mu = 0; mu < 4; ++mu) {
    lhs += momentum_upper(mu) * orientation() * gamma(mu);
  }
  EXPECT_EQ(lhs, orientation() * mass());
  // and the V part carries the same contraction, so P^mu S_mu = 0
  NCElement ps;
  for (int mu = 0; mu < 4; ++mu) ps += momentum_upper(mu) * spin_vector(mu);
  EXPECT_TRUE(ps.is_zero());
}

TEST(Observables, SpinMagnitudeFromSpinVector) {
  NCElement s2;
  for (int mu = 0; mu < 4; ++mu) s2 += raise(spin_vector(mu) * spin_vector(mu), mu);
  EXPECT_EQ(s2, NCElement(Scalar::rational(-3, 4) * Scalar::hbar(2)));
}

TEST(Observables, HermitianPositionsDoNotCommute) {
  EXPECT_EQ(bracket(hermitian_position(1), hermitian_position(2)),
            spin_tensor(1, 2) * inv_mass_square());
  EXPECT_TRUE(bracket(position(1), position(2)).is_zero());
}

TEST(Observables, AnticommutingOrientation) {
  EXPECT_TRUE(dot(orientation(), mass_sign()).is_zero());
  EXPECT_EQ(dot(orientation(), orientation()), NCElement(1));
  EXPECT_EQ(mass_sign() * mass_sign(), NCElement(1));
  EXPECT_EQ(mass_sign() * mass_abs(), mass());
}

TEST(Observables, CliffordFromCanonicalPositions) {
  for (int mu = 0; mu < 4; ++mu) {
    EXPECT_EQ(bracket(position(mu), mass()), gamma(mu));
    EXPECT_EQ(bracket(hermitian_position(mu), mass()), velocity(mu));
    EXPECT_EQ(hbar() * gamma(mu),
              hbar() * velocity(mu) - (orientation() * spin_vector(mu)).times_right(Scalar(2)));
  }
}

TEST(Observables, SpinTensorDefinitions) {
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      EXPECT_EQ(bracket(pauli_lubanski(mu), pauli_lubanski(nu)) * inv_mass_square(),
                spin_tensor(mu, nu));
      EXPECT_EQ(spin_canonical(mu, nu), spin_tensor(mu, nu) + orientation() * spin_dual(mu, nu));
      EXPECT_EQ(spin_canonical_dual(mu, nu), orientation() * spin_canonical(mu, nu));
    }
  }
}
