#include "qloc/frames.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <tuple>

#include "qloc/conventions.hpp"
#include "qloc/errors.hpp"
#include "qloc/observables.hpp"

namespace qloc::frames {

namespace {

NCElement ad(const NCElement& a, int sign) {
  NCElement b = bracket(a, generator());
  return sign * conventions::kConjugationSign > 0 ? b : -b;
}

NCElement series(const NCElement& a, int order, int sign) {
  static std::mutex mutex;
  static std::map<std::tuple<std::string, int, int>, NCElement> memo;
  auto key = std::make_tuple(a.plain(), order, sign);
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  NCElement sum = a;
  NCElement term = a;
  for (int n = 1; n <= order; ++n) {
    term = ad(term, sign).times_right(Scalar::rational(1, n)).alpha_truncate(order);
    if (term.is_zero()) break;
    sum += term;
  }
  std::lock_guard lock(mutex);
  return memo.try_emplace(std::move(key), std::move(sum)).first->second;
}

NCElement constant(long v) { return NCElement(Scalar(v)); }

NCElement x_upper(int mu) { return obs::raise(obs::position(mu), mu); }

std::array<NCElement, 4> positions() {
  return {obs::position(0), obs::position(1), obs::position(2), obs::position(3)};
}

std::array<NCElement, 4> hermitian_positions() {
  return {obs::hermitian_position(0), obs::hermitian_position(1), obs::hermitian_position(2),
          obs::hermitian_position(3)};
}

// Records the first nonzero residual; `series`/`reference` keep the first pair seen.
void absorb(FrameShift& f, const NCElement& series, const NCElement& reference) {
  NCElement r = (series - reference).alpha_truncate(f.order);
  if (f.series.is_zero() && f.reference.is_zero()) {
    f.series = series;
    f.reference = reference;
  }
  if (!r.is_zero() && f.residual.is_zero()) {
    f.residual = r;
    f.series = series;
    f.reference = reference;
  }
}

FrameShift start(std::string name, int order) {
  FrameShift f;
  f.name = std::move(name);
  f.order = order;
  return f;
}

FrameShift finish(FrameShift f) {
  f.passed = f.residual.is_zero();
  return f;
}

NCElement d_upper(const NCElement& a, int rho) { return a.dx_upper(rho); }

const Vierbein& cached_vierbein(int order) {
  static std::mutex mutex;
  static std::map<int, Vierbein> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(order);
    if (it != memo.end()) return it->second;
  }
  NCElement inv = conformal_factor_inv();
  NCElement inv2 = inv * inv;
  Vierbein e;
  for (int mu = 0; mu < 4; ++mu) {
    NCElement xbar = conjugate(obs::position(mu), order);
    for (int nu = 0; nu < 4; ++nu) e[mu][nu] = (inv2 * d_upper(xbar, nu)).alpha_truncate(order);
  }
  std::lock_guard lock(mutex);
  return memo.try_emplace(order, std::move(e)).first->second;
}

NCElement momentum_law_rhs(const Vierbein& e, int mu, const std::function<NCElement(int, int)>& spin) {
  NCElement out;
  for (int nu = 0; nu < 4; ++nu) {
    out += dot(e[mu][nu], obs::momentum(nu));
    for (int rho = 0; rho < 4; ++rho) {
      out += dot(d_upper(e[mu][nu], rho), spin(nu, rho)).times_right(Scalar::rational(1, 2));
    }
  }
  return out;
}

}  // namespace

const NCElement& generator() {
  static const NCElement g = [] {
    NCElement out;
    for (int rho = 0; rho < 4; ++rho) out += obs::conformal(rho).times_right(Scalar::alpha(rho));
    return out;
  }();
  return g;
}

NCElement adn(const NCElement& a, int n) {
  NCElement out = a;
  for (int k = 0; k < n && !out.is_zero(); ++k) out = ad(out, +1);
  return out;
}

NCElement conjugate(const NCElement& a, int order) { return series(a, order, +1); }
NCElement conjugate_inverse(const NCElement& a, int order) { return series(a, order, -1); }

NCElement alpha_dot(const std::array<NCElement, 4>& v) {
  NCElement out;
  for (int mu = 0; mu < 4; ++mu) out += v[mu].times_right(Scalar::alpha(mu));
  return out;
}

NCElement alpha_lower(int mu) { return NCElement(Scalar::alpha(mu).scaled(Gaussian(eta(mu)))); }

NCElement alpha_square() {
  NCElement out;
  for (int mu = 0; mu < 4; ++mu) out += NCElement(Scalar::alpha(mu) * Scalar::alpha(mu) * Scalar(eta(mu)));
  return out;
}

NCElement conformal_factor_inv() {
  return constant(1) - alpha_dot(positions()).times_right(Scalar(2)) +
         alpha_square() * obs::position_square();
}

NCElement conformal_factor(int order) { return geometric_inverse(conformal_factor_inv(), order); }

Vierbein vierbein(int order) { return cached_vierbein(order); }

FrameShift check_sign_convention() {
  FrameShift f = start("conjugation sign", 1);
  NCElement linear = conjugate(obs::mass(), 1).alpha_part(1);
  absorb(f, linear, dot(obs::mass(), alpha_dot(positions())).times_right(Scalar(-2)));
  return finish(f);
}

FrameShift check_mass_law(int order) {
  FrameShift f = start("mass law", order);
  NCElement third = adn(obs::mass(), 3);
  absorb(f, conjugate(obs::mass(), order), dot(obs::mass(), conformal_factor_inv()));
  if (!third.is_zero() && f.residual.is_zero()) f.residual = third;
  f.coefficients["ad3(M) terms"] = Scalar(static_cast<long>(third.size()));
  return finish(f);
}

FrameShift check_position_law(int order) {
  FrameShift f = start("position law", order);
  NCElement inv = conformal_factor_inv();
  for (int mu = 0; mu < 4; ++mu) {
    NCElement xbar_upper = obs::raise(conjugate(obs::position(mu), order), mu);
    NCElement alpha_upper(Scalar::alpha(mu));
    absorb(f, (inv * xbar_upper).alpha_truncate(order),
           x_upper(mu) - obs::position_square() * alpha_upper);
  }
  return finish(f);
}

FrameShift metric_check(int order) {
  FrameShift f = start("metric", order);
  std::array<NCElement, 4> xbar;
  for (int rho = 0; rho < 4; ++rho) xbar[rho] = conjugate(obs::position(rho), order);
  NCElement lambda = conformal_factor(order);
  NCElement lambda2 = (lambda * lambda).alpha_truncate(order);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      NCElement g;
      for (int rho = 0; rho < 4; ++rho) {
        NCElement term = xbar[rho].dx_lower(mu) * xbar[rho].dx_lower(nu);
        g += eta(rho) > 0 ? term : -term;
      }
      absorb(f, g.alpha_truncate(order), lambda2.times_right(Scalar(eta(mu, nu))));
    }
  }
  return finish(f);
}

FrameShift vierbein_polynomiality(int order) {
  FrameShift f = start("vierbein polynomiality", order);
  const Vierbein& e = cached_vierbein(order);
  int degree = 0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      degree = std::max(degree, e[mu][nu].alpha_degree());
      NCElement high;
      for (int k = 3; k <= order; ++k) high += e[mu][nu].alpha_part(k);
      if (!high.is_zero() && f.residual.is_zero()) f.residual = high;
    }
  }
  f.series = e[0][0];
  f.coefficients["alpha degree"] = Scalar(static_cast<long>(degree));
  return finish(f);
}

FrameShift check_tetrad_law(int order) {
  FrameShift f = start("tetrad law", order);
  const Vierbein& e = cached_vierbein(order);
  NCElement lambda = conformal_factor(order);
  for (int mu = 0; mu < 4; ++mu) {
    NCElement rhs;
    for (int nu = 0; nu < 4; ++nu) rhs += lambda * e[mu][nu] * obs::gamma(nu);
    absorb(f, conjugate(obs::gamma(mu), order), rhs.alpha_truncate(order));
  }
  return finish(f);
}

FrameShift check_clifford_preservation(int order) {
  FrameShift f = start("clifford preservation", order);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      NCElement d = dot(conjugate(obs::gamma(mu), order), conjugate(obs::gamma(nu), order));
      absorb(f, d.alpha_truncate(order), constant(eta(mu, nu)));
    }
  }
  return finish(f);
}

FrameShift check_momentum_law(int order) {
  FrameShift f = start("momentum law", order);
  const Vierbein& e = cached_vierbein(order);
  for (int mu = 0; mu < 4; ++mu) {
    NCElement rhs = momentum_law_rhs(e, mu, obs::spin_canonical);
    absorb(f, conjugate(obs::momentum(mu), order), rhs.alpha_truncate(order));
  }
  // The spin connection must actually contribute.
  NCElement spin_part;
  for (int nu = 0; nu < 4; ++nu) {
    for (int rho = 0; rho < 4; ++rho) {
      spin_part += dot(d_upper(e[0][nu], rho), obs::spin_canonical(nu, rho));
    }
  }
  f.coefficients["spin connection terms"] = Scalar(static_cast<long>(spin_part.size()));
  if (spin_part.is_zero() && f.residual.is_zero()) f.residual = constant(1);
  return finish(f);
}

FrameShift check_commutator_invariance(int order) {
  FrameShift f = start("canonical commutators", order);
  for (int mu = 0; mu < 4; ++mu) {
    NCElement pbar = conjugate(obs::momentum(mu), order);
    for (int nu = 0; nu < 4; ++nu) {
      NCElement c = bracket(pbar, conjugate(obs::position(nu), order));
      absorb(f, c.alpha_truncate(order), constant(-eta(mu, nu)));
    }
  }
  return finish(f);
}

FrameShift reciprocity_check(int order) {
  FrameShift f = start("reciprocity", order);
  std::vector<NCElement> observables = {obs::mass()};
  for (int mu = 0; mu < 4; ++mu) {
    observables.push_back(obs::position(mu));
    observables.push_back(obs::momentum(mu));
    observables.push_back(obs::gamma(mu));
  }
  for (const auto& a : observables) {
    absorb(f, conjugate_inverse(conjugate(a, order), order).alpha_truncate(order), a);
  }
  return finish(f);
}

FrameShift check_hermitian_mass() {
  FrameShift f = start("hermitian mass law", 2);
  const NCElement m = obs::mass();
  NCElement factor = constant(1) - alpha_dot(hermitian_positions()).times_right(Scalar(2)) +
                     alpha_square() * obs::hermitian_square();
  NCElement mbar = conjugate(m, 2);
  NCElement rest = mbar - dot(m, factor);
  NCElement basis = dot(m, alpha_square()).times_right(Scalar::w_pow(-2));
  auto c = unit_ratio(rest, basis);
  Scalar expected = Scalar::rational(3, 4) * Scalar::hbar(2);
  if (c) f.coefficients["alpha^2 M / P^2"] = *c;
  NCElement reference = dot(m, factor + alpha_square().times_right(expected * Scalar::w_pow(-2)));
  absorb(f, mbar, reference);
  if (!adn(m, 3).is_zero() && f.residual.is_zero()) f.residual = adn(m, 3);
  return finish(f);
}

Vierbein hermitian_vierbein(bool symmetrized) {
  const Vierbein& e = cached_vierbein(2);
  auto args = hermitian_positions();
  Vierbein out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      out[mu][nu] = symmetrized ? poly_eval_sym(e[mu][nu], args) : poly_eval_left(e[mu][nu], args);
    }
  }
  return out;
}

/// e_mu^nu written covariantly and evaluated at `v`, products in written order
/// or reversed:
///   delta (1 - 2 a.v + a^2 v^2) - 2 a_mu v^nu + 2 v_mu a^nu
///   + 4 a_mu (a.v) v^nu - 2 a^2 v_mu v^nu - 2 a_mu a^nu v^2
NCElement vierbein_written(int mu, int nu, const std::array<NCElement, 4>& v, bool reversed) {
  auto prod = [&](const NCElement& a, const NCElement& b) { return reversed ? b * a : a * b; };
  NCElement v_sq;
  for (int a = 0; a < 4; ++a) v_sq += obs::raise(v[a] * v[a], a);
  NCElement a_dot_v = alpha_dot(v);
  NCElement v_up = obs::raise(v[nu], nu);
  NCElement a_up(Scalar::alpha(nu));
  NCElement out;
  if (mu == nu) out += NCElement(1) - a_dot_v.times_right(Scalar(2)) + alpha_square() * v_sq;
  out += (alpha_lower(mu) * v_up).times_right(Scalar(-2));
  out += (v[mu] * a_up).times_right(Scalar(2));
  out += (alpha_lower(mu) * prod(a_dot_v, v_up)).times_right(Scalar(4));
  out += (alpha_square() * prod(v[mu], v_up)).times_right(Scalar(-2));
  out += (alpha_lower(mu) * a_up * v_sq).times_right(Scalar(-2));
  return out;
}

namespace {

enum class Ordering { symmetrized, written, reversed };

// E.P + 1/2 dE.S with E = e(X).
NCElement hermitian_momentum_main(int mu, Ordering ordering) {
  const Vierbein& e = cached_vierbein(2);
  auto args = hermitian_positions();
  NCElement out;
  for (int nu = 0; nu < 4; ++nu) {
    NCElement big_e = ordering == Ordering::symmetrized
                          ? poly_eval_sym(e[mu][nu], args)
                          : vierbein_written(mu, nu, args, ordering == Ordering::reversed);
    out += dot(big_e, obs::momentum(nu));
    for (int rho = 0; rho < 4; ++rho) {
      out += dot(poly_eval_sym(d_upper(e[mu][nu], rho), args), obs::spin_tensor(nu, rho))
                 .times_right(Scalar::rational(1, 2));
    }
  }
  return out;
}

// sum d_nu d^rho E_mu^nu . P_rho / P^2.
NCElement hermitian_momentum_basis(int mu) {
  const Vierbein& e = cached_vierbein(2);
  NCElement out;
  for (int nu = 0; nu < 4; ++nu) {
    for (int rho = 0; rho < 4; ++rho) {
      NCElement dd = e[mu][nu].dx_upper(rho).dx_lower(nu);
      out += dot(poly_eval_sym(dd, hermitian_positions()),
                 obs::momentum(rho).times_right(Scalar::w_pow(-2)));
    }
  }
  return out;
}

}  // namespace

FrameShift check_hermitian_momentum() {
  FrameShift f = start("hermitian momentum law", 2);
  Scalar expected = Scalar::rational(3, 32) * Scalar::hbar(2);
  for (int mu = 0; mu < 4; ++mu) {
    NCElement pbar = conjugate(obs::momentum(mu), 2);
    NCElement main = hermitian_momentum_main(mu, Ordering::symmetrized);
    NCElement basis = hermitian_momentum_basis(mu);
    if (mu == 0) {
      auto c = unit_ratio(pbar - main, basis);
      if (c) f.coefficients["d d E . P / P^2"] = *c;
    }
    absorb(f, pbar, main + basis.times_right(expected));
    NCElement third = adn(obs::momentum(mu), 3);
    if (!third.is_zero() && f.residual.is_zero()) f.residual = third;
  }
  return finish(f);
}

FrameShift check_ordering_immateriality() {
  FrameShift f = start("ordering immateriality", 2);
  auto x = positions();
  const Vierbein& e = cached_vierbein(2);
  for (int mu = 0; mu < 4; ++mu) {
    // The written form is the vierbein itself.
    for (int nu = 0; nu < 4; ++nu) absorb(f, vierbein_written(mu, nu, x, false), e[mu][nu]);
    NCElement sym = hermitian_momentum_main(mu, Ordering::symmetrized);
    absorb(f, hermitian_momentum_main(mu, Ordering::written), sym);
    absorb(f, hermitian_momentum_main(mu, Ordering::reversed), sym);
  }
  return finish(f);
}

}  // namespace qloc::frames
