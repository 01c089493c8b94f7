#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qloc/clifford.hpp"
#include "qloc/scalar.hpp"

namespace qloc {

/// Exponents of the canonical positions x_0..x_3 (lower indices).
using XExponents = std::array<int, 4>;

/// Normal-form key of a monomial: x-part, then Clifford word.
///
/// Keys sort by total x-degree, then word mask, then x exponents.
class NcKey {
 public:
  NcKey() = default;
  NcKey(const XExponents& x, CliffordWord word);

  [[nodiscard]] XExponents x() const;
  [[nodiscard]] int x(int mu) const { return static_cast<int>((packed_ >> (8 * (3 - mu))) & 0xff); }
  [[nodiscard]] int x_degree() const { return static_cast<int>(packed_ >> 48); }
  [[nodiscard]] CliffordWord word() const {
    return CliffordWord(static_cast<std::uint8_t>((packed_ >> 32) & 0xf));
  }

  friend auto operator<=>(const NcKey&, const NcKey&) = default;

 private:
  std::uint64_t packed_ = 0;
};

enum class MonomialOrder { ascending, descending };

struct RenderOptions {
  MonomialOrder order = MonomialOrder::ascending;
  /// Print i g0 g1 g2 g3 as gamma5.
  bool gamma5_alias = false;
};

/// Element of the operator algebra generated by x_mu, gamma_mu and the
/// Scalar ring, kept in normal form  sum  x^e * word * scalar.
///
/// Scalars act as functions of the momenta, so they do not commute with
/// positions: f x_nu = x_nu f - i hbar df/dp^nu.  Words commute with both
/// x and p.  Zero coefficients are never stored, so equality is map
/// equality.
class NCElement {
 public:
  using Terms = std::map<NcKey, Scalar>;

  NCElement() = default;
  NCElement(Scalar s);  // NOLINT(google-explicit-constructor)
  NCElement(long v) : NCElement(Scalar(v)) {}  // NOLINT(google-explicit-constructor)
  NCElement(NcKey key, Scalar s);

  /// Canonical position x_mu.
  static NCElement x(int mu);
  /// Clifford generator gamma_mu.
  static NCElement gamma(int mu);
  static NCElement word(CliffordWord w, Scalar s = Scalar(1));
  static NCElement from_clifford(const CliffordElement& c);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  /// Coefficient of a monomial, zero when absent.
  [[nodiscard]] Scalar coefficient(const NcKey& key) const;

  NCElement& operator+=(const NCElement& o);
  NCElement& operator-=(const NCElement& o);
  friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  friend NCElement operator-(const NCElement& a);
  friend NCElement operator*(const NCElement& a, const NCElement& b);
  friend bool operator==(const NCElement&, const NCElement&) = default;

  /// Right multiplication by a scalar: no reordering needed.
  [[nodiscard]] NCElement times_right(const Scalar& s) const;

  [[nodiscard]] int x_degree() const;
  [[nodiscard]] int alpha_degree() const;
  [[nodiscard]] NCElement alpha_truncate(int order) const;
  [[nodiscard]] NCElement alpha_part(int degree) const;
  [[nodiscard]] NCElement substitute_alpha(const std::array<Rational, 4>& values) const;

  /// True for elements built from x and momentum-free scalars only.
  [[nodiscard]] bool in_position_subalgebra() const;
  /// d/dx_rho on the position subalgebra (the raised-index derivative d^rho).
  [[nodiscard]] NCElement dx_upper(int rho) const;
  /// d/dx^mu = eta_{mu mu} d/dx_mu.
  [[nodiscard]] NCElement dx_lower(int mu) const;

  [[nodiscard]] std::string plain(const RenderOptions& opts = {}) const;
  [[nodiscard]] std::string plain_inline(const RenderOptions& opts = {}) const;
  [[nodiscard]] std::string latex(const RenderOptions& opts = {}) const;

 private:
  void add_term(const NcKey& key, const Scalar& s);

  Terms terms_;
};

NCElement operator*(const Scalar& s, const NCElement& a);

/// (a, b) = (ab - ba) / (i hbar).
NCElement bracket(const NCElement& a, const NCElement& b);
/// a.b = (ab + ba) / 2.
NCElement dot(const NCElement& a, const NCElement& b);
NCElement power(const NCElement& a, int n);

/// Antilinear anti-automorphism fixing p, w, hbar, alpha, M, D, J and
/// gamma5.  Generator images are listed in conventions.hpp.
NCElement adjoint(const NCElement& a);

/// (1 + v)^-1 expanded to alpha-degree `order`; every monomial of v must
/// carry alpha-degree >= 1.
NCElement geometric_inverse(const NCElement& u, int order);

/// Substitutes args[nu] for x_nu in a commutative template of degree <= 2,
/// symmetrizing products of distinct slots.
NCElement poly_eval_sym(const NCElement& form, const std::array<NCElement, 4>& args);
/// Same substitution with products taken left to right in slot order.
NCElement poly_eval_left(const NCElement& form, const std::array<NCElement, 4>& args);

/// The unit c * hbar^k with a == b * (c hbar^k), if one exists.
std::optional<Scalar> unit_ratio(const NCElement& a, const NCElement& b);

/// Mass operator M = p^mu gamma_mu (used by the adjoint images).
NCElement mass_operator();

}  // namespace qloc
