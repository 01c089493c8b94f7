#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qloc/rational.hpp"

namespace qloc {

/// Exact a + b*i with rational a, b.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational r, Rational i = 0) : re(r), im(i) {}

  [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  [[nodiscard]] bool is_real() const { return sgn(im) == 0; }
  [[nodiscard]] Gaussian conj() const { return {re, -im}; }
  [[nodiscard]] Gaussian inverse() const;

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b);
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Packed monomial in p^0..p^3, alpha^0..alpha^3 and a (signed) power of hbar.
///
/// The packed key sorts by total p/alpha degree, then by exponents of
/// p^0, ..., p^3, alpha^0, ..., alpha^3 (larger exponent first), then by
/// the hbar power.  That order is the printing order of every polynomial.
class Monomial {
 public:
  static constexpr int kMomentum = 0;
  static constexpr int kAlpha = 4;
  static constexpr int kVars = 8;

  constexpr Monomial() : key_(pack({}, 0)) {}
  Monomial(const std::array<int, kVars>& exps, int hbar) : key_(pack(exps, hbar)) {}

  static Monomial momentum(int mu) { return single(kMomentum + mu); }
  static Monomial alpha(int mu) { return single(kAlpha + mu); }
  static Monomial hbar_power(int k) { return Monomial({}, k); }

  [[nodiscard]] int exponent(int var) const {
    return 63 - static_cast<int>((key_ >> (8 + 6 * (kVars - 1 - var))) & 0x3f);
  }
  [[nodiscard]] int hbar() const { return static_cast<int>(key_ & 0xff) - 128; }
  [[nodiscard]] int degree() const { return static_cast<int>(key_ >> 56); }
  [[nodiscard]] int alpha_degree() const;
  [[nodiscard]] int momentum_degree() const;
  [[nodiscard]] std::array<int, kVars> exponents() const;
  [[nodiscard]] std::uint64_t key() const { return key_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  static constexpr std::uint64_t pack(const std::array<int, kVars>& exps, int hbar) {
    std::uint64_t key = 0;
    int deg = 0;
    for (int v = 0; v < kVars; ++v) {
      key = (key << 6) | static_cast<std::uint64_t>(63 - exps[v]);
      deg += exps[v];
    }
    return (static_cast<std::uint64_t>(deg) << 56) | (key << 8) |
           static_cast<std::uint64_t>(hbar + 128);
  }
  static Monomial single(int var) {
    std::array<int, kVars> e{};
    e[var] = 1;
    return {e, 0};
  }

  std::uint64_t key_;
};

/// Sparse polynomial over Gaussian rationals in the Monomial variables.
class Poly {
 public:
  using Term = std::pair<Monomial, Gaussian>;

  Poly() = default;
  Poly(Gaussian c);  // NOLINT(google-explicit-constructor)
  Poly(Monomial m, Gaussian c = Gaussian(1));

  /// Takes unsorted terms, merges duplicates and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  [[nodiscard]] Poly scaled(const Gaussian& c) const;
  [[nodiscard]] Poly times(const Monomial& m) const;
  [[nodiscard]] Poly diff(int var) const;
  [[nodiscard]] Poly conj_i() const;
  [[nodiscard]] int alpha_degree() const;
  [[nodiscard]] Poly alpha_truncate(int order) const;
  [[nodiscard]] Poly alpha_part(int degree) const;

  /// Exact quotient by p.p, or nullopt when p.p does not divide.
  [[nodiscard]] std::optional<Poly> divide_by_mass_square() const;

 private:
  std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
};

/// p.p = (p^0)^2 - (p^1)^2 - (p^2)^2 - (p^3)^2.
const Poly& mass_square();

/// Element of the coefficient ring, stored as (A + B*w) / w^(2m).
///
/// w is the positive square root of p.p.  A and B are polynomials in
/// momenta, accelerations and hbar; m is minimal, so two scalars are equal
/// exactly when their stored forms agree.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(Gaussian(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Gaussian c) : a_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Poly a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Poly a, Poly b, int m);

  static Scalar rational(long num, long den) { return Gaussian(Rational(num, den)); }
  static Scalar i() { return Gaussian(0, 1); }
  static Scalar hbar(int k = 1) { return Poly(Monomial::hbar_power(k)); }
  /// Contravariant momentum component p^mu.
  static Scalar p(int mu) { return Poly(Monomial::momentum(mu)); }
  /// Contravariant acceleration parameter alpha^mu.
  static Scalar alpha(int mu) { return Poly(Monomial::alpha(mu)); }
  static Scalar w() { return w_pow(1); }
  static Scalar w_pow(int k);

  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  [[nodiscard]] const Poly& even_part() const { return a_; }
  [[nodiscard]] const Poly& odd_part() const { return b_; }
  [[nodiscard]] int mass_denominator() const { return m_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator-(const Scalar& a);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar&, const Scalar&) = default;

  [[nodiscard]] Scalar scaled(const Gaussian& c) const;
  [[nodiscard]] Scalar invert() const;
  [[nodiscard]] Scalar pderiv(int nu) const;
  [[nodiscard]] Scalar conj_i() const;
  [[nodiscard]] int alpha_degree() const;
  [[nodiscard]] Scalar alpha_truncate(int order) const;
  [[nodiscard]] Scalar alpha_part(int degree) const;
  [[nodiscard]] Scalar substitute_alpha(const std::array<Rational, 4>& values) const;
  /// True when the scalar involves neither momenta nor w.
  [[nodiscard]] bool is_momentum_free() const;

  /// The unit c * hbar^k with *this == c * hbar^k * den, if one exists.
  [[nodiscard]] static std::optional<Scalar> unit_ratio(const Scalar& num, const Scalar& den);

  [[nodiscard]] std::size_t term_count() const { return a_.size() + b_.size(); }
  [[nodiscard]] std::string plain() const;
  [[nodiscard]] std::string latex() const;

 private:
  void normalize();
  [[nodiscard]] Scalar lifted(int m) const;

  Poly a_;
  Poly b_;
  int m_ = 0;
};

std::string render_rational(const Rational& r);
std::string render_gaussian(const Gaussian& g);

}  // namespace qloc
