#pragma once

// Test-only helpers: numeric evaluation of scalars (an oracle independent of
// the symbolic derivative code) and random generators for property tests.

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "qloc/ncalg.hpp"
#include "qloc/scalar.hpp"

namespace qloc::testing {

struct Point {
  std::array<double, 4> p{};
  std::array<double, 4> alpha{};
  double hbar = 1.0;
};

inline std::complex<double> eval_poly(const Poly& poly, const Point& at) {
  std::complex<double> sum = 0;
  for (const auto& [m, c] : poly.terms()) {
    std::complex<double> term(c.re.to_double(), c.im.to_double());
    for (int k = 0; k < 4; ++k) {
      term *= std::pow(at.p[k], m.exponent(Monomial::kMomentum + k));
      term *= std::pow(at.alpha[k], m.exponent(Monomial::kAlpha + k));
    }
    term *= std::pow(at.hbar, m.hbar());
    sum += term;
  }
  return sum;
}

inline double mass_at(const Point& at) {
  return std::sqrt(at.p[0] * at.p[0] - at.p[1] * at.p[1] - at.p[2] * at.p[2] - at.p[3] * at.p[3]);
}

inline std::complex<double> eval_scalar(const Scalar& s, const Point& at) {
  double w = mass_at(at);
  return (eval_poly(s.even_part(), at) + eval_poly(s.odd_part(), at) * w) /
         std::pow(w, 2 * s.mass_denominator());
}

class Generator {
 public:
  explicit Generator(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Gaussian coefficient() {
    Rational re(uniform(-4, 4), uniform(1, 3));
    Rational im = uniform(0, 2) == 0 ? Rational(uniform(-3, 3), uniform(1, 2)) : Rational(0);
    return {re, im};
  }

  Poly poly(int terms, int max_deg) {
    std::vector<Poly::Term> out;
    for (int t = 0; t < terms; ++t) {
      std::array<int, Monomial::kVars> e{};
      int deg = uniform(0, max_deg);
      for (int d = 0; d < deg; ++d) e[uniform(0, Monomial::kVars - 1)] += 1;
      out.emplace_back(Monomial(e, uniform(-1, 2)), coefficient());
    }
    return Poly::from_terms(std::move(out));
  }

  Scalar scalar(int terms = 3, int max_deg = 2) {
    Poly b = uniform(0, 2) == 0 ? poly(terms - 1, max_deg) : Poly();
    return Scalar(poly(terms, max_deg), b, uniform(0, 2));
  }

  /// Random element with x-degree <= max_x_degree and random Clifford words.
  NCElement element(int terms, int max_x_degree) {
    NCElement out;
    for (int t = 0; t < terms; ++t) {
      XExponents e{};
      int deg = uniform(0, max_x_degree);
      for (int d = 0; d < deg; ++d) e[uniform(0, 3)] += 1;
      CliffordWord w(static_cast<std::uint8_t>(uniform(0, 15)));
      out += NCElement(NcKey(e, w), scalar(2, 2));
    }
    return out;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace qloc::testing
