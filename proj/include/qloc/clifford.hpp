#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qloc/scalar.hpp"

namespace qloc {

/// Minkowski metric diagonal, signature (+,-,-,-).  Equal for raised and
/// lowered indices.
constexpr int eta(int mu) { return mu == 0 ? 1 : -1; }
constexpr int eta(int mu, int nu) { return mu == nu ? eta(mu) : 0; }

/// Basis monomial of Cl(1,3): the product of gamma_mu over the set bits of
/// a 4-bit mask, taken in increasing index order.
class CliffordWord {
 public:
  constexpr CliffordWord() = default;
  constexpr explicit CliffordWord(std::uint8_t mask) : mask_(mask & 0xf) {}
  static CliffordWord from_indices(const std::vector<int>& sorted_indices);
  static constexpr CliffordWord generator(int mu) {
    return CliffordWord(static_cast<std::uint8_t>(1u << mu));
  }

  [[nodiscard]] constexpr std::uint8_t mask() const { return mask_; }
  [[nodiscard]] int grade() const;
  [[nodiscard]] std::vector<int> indices() const;
  [[nodiscard]] bool is_identity() const { return mask_ == 0; }

  /// `1`, `g0`, `g0 g1`, ...
  [[nodiscard]] std::string plain() const;
  [[nodiscard]] std::string latex() const;

  friend constexpr auto operator<=>(CliffordWord, CliffordWord) = default;

 private:
  std::uint8_t mask_ = 0;
};

struct WordProduct {
  int sign;
  CliffordWord word;
};

/// Product of two basis words, reduced with gamma_mu gamma_nu + gamma_nu gamma_mu = 2 eta_{mu nu}.
WordProduct wmul(CliffordWord u, CliffordWord v);

/// Sign picked up by reversing the factor order of a word: (-1)^(k(k-1)/2).
int reversal_sign(CliffordWord u);
/// Sign of the grade involution: (-1)^k.
int grade_sign(CliffordWord u);

/// Totally antisymmetric symbol with lower indices, epsilon_{0123} = +1.
int epsilon_lower(int mu, int nu, int rho, int sigma);
/// Raised version, epsilon^{0123} = -1.
int epsilon_upper(int mu, int nu, int rho, int sigma);

/// Element of Cl(1,3) with Scalar coefficients, indexed by word mask.
class CliffordElement {
 public:
  CliffordElement() = default;
  CliffordElement(CliffordWord w, Scalar c) { coeffs_[w.mask()] = std::move(c); }

  [[nodiscard]] const Scalar& operator[](CliffordWord w) const { return coeffs_[w.mask()]; }
  Scalar& operator[](CliffordWord w) { return coeffs_[w.mask()]; }
  [[nodiscard]] bool is_zero() const;

  CliffordElement& operator+=(const CliffordElement& o);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(const CliffordElement& a);
  friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
    return a + (-b);
  }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

 private:
  std::array<Scalar, 16> coeffs_{};
};

/// The orientation element i g0 g1 g2 g3.
CliffordElement gamma5();

}  // namespace qloc
