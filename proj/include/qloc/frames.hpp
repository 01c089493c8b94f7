#pragma once

#include <array>
#include <map>
#include <string>

#include "qloc/ncalg.hpp"

namespace qloc::frames {

/// Outcome of one frame-law check.  `series` is the conjugation series,
/// `reference` the closed form it is compared with, and `residual` their
/// difference truncated at `order` (empty on success).
struct FrameShift {
  std::string name;
  int order = 0;
  NCElement series;
  NCElement reference;
  NCElement residual;
  bool passed = false;
  std::map<std::string, Scalar> coefficients;
};

using Vierbein = std::array<std::array<NCElement, 4>, 4>;

/// alpha^rho C_rho.
const NCElement& generator();
/// ad^n(a) with ad(a) = sigma (a, alpha^rho C_rho).
NCElement adn(const NCElement& a, int n);
/// sum_{n <= order} ad^n(a) / n!.  Memoized, thread-safe.
NCElement conjugate(const NCElement& a, int order);
/// The same series with alpha -> -alpha.
NCElement conjugate_inverse(const NCElement& a, int order);

NCElement alpha_dot(const std::array<NCElement, 4>& v);  // alpha^mu v_mu
NCElement alpha_square();                                // alpha^mu alpha_mu
NCElement alpha_lower(int mu);                           // alpha_mu

/// 1/lambda = 1 - 2 alpha^mu x_mu + alpha^2 x^2.
NCElement conformal_factor_inv();
/// lambda to alpha-order `order`.
NCElement conformal_factor(int order);

/// e_mu^nu = lambda^-2 d^nu xbar_mu, from the order-`order` series of xbar.
Vierbein vierbein(int order);

FrameShift check_sign_convention();
FrameShift check_mass_law(int order);
FrameShift check_position_law(int order);
FrameShift metric_check(int order);
FrameShift vierbein_polynomiality(int order);
FrameShift check_tetrad_law(int order);
FrameShift check_clifford_preservation(int order);
FrameShift check_momentum_law(int order);
FrameShift check_commutator_invariance(int order);
FrameShift reciprocity_check(int order);
FrameShift check_hermitian_mass();
FrameShift check_hermitian_momentum();
FrameShift check_ordering_immateriality();

/// E_mu^nu = e_mu^nu(X), symmetrized or left-ordered in slot order.
Vierbein hermitian_vierbein(bool symmetrized);

/// Closed covariant form of e_mu^nu evaluated at v (lowered components),
/// products in written order or reversed.
NCElement vierbein_written(int mu, int nu, const std::array<NCElement, 4>& v, bool reversed);

}  // namespace qloc::frames
