#pragma once

// Sign and ordering conventions shared by the whole kernel.
//
//   * Metric eta = diag(1, -1, -1, -1).  Momenta are stored contravariant
//     (p^mu), positions covariant (x_mu); P_mu = eta_{mu nu} p^nu.
//   * Bracket (A, B) = (AB - BA) / (i hbar), with (P_mu, x_nu) = -eta_{mu nu},
//     i.e. p^rho x_nu - x_nu p^rho = -i hbar delta^rho_nu.  Hence for any
//     scalar f(p):  f x_nu = x_nu f - i hbar df/dp^nu.
//   * Normal form: x-part on the left, Clifford word in the middle, scalar
//     on the right.
//   * Clifford: gamma_mu gamma_nu + gamma_nu gamma_mu = 2 eta_{mu nu};
//     epsilon_{0123} = -epsilon^{0123} = +1.
//   * Conjugation series: A -> sum_n ad^n(A) / n!, ad(A) = sigma (A, alpha^rho C_rho).

#include "qloc/ncalg.hpp"

namespace qloc::conventions {

/// sigma in ad(A) = sigma (A, alpha^rho C_rho).  Fixed by the alpha-linear
/// term of the mass shift: -2 M.(alpha^mu x_mu).
inline constexpr int kConjugationSign = +1;

/// x_mu^dagger = x_mu + i hbar (P_mu - gamma_mu M) w^-2.
NCElement position_adjoint(int mu);

/// gamma_mu^dagger = 2 P_mu M w^-2 - gamma_mu.
NCElement gamma_adjoint(int mu);

}  // namespace qloc::conventions
