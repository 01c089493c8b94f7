#include "qloc/clifford.hpp"

#include <bit>

namespace qloc {

CliffordWord CliffordWord::from_indices(const std::vector<int>& sorted_indices) {
  std::uint8_t mask = 0;
  for (int mu : sorted_indices) mask |= static_cast<std::uint8_t>(1u << mu);
  return CliffordWord(mask);
}

int CliffordWord::grade() const { return std::popcount(mask_); }

std::vector<int> CliffordWord::indices() const {
  std::vector<int> out;
  for (int mu = 0; mu < 4; ++mu) {
    if (mask_ & (1u << mu)) out.push_back(mu);
  }
  return out;
}

std::string CliffordWord::plain() const {
  if (mask_ == 0) return "1";
  std::string out;
  for (int mu : indices()) {
    if (!out.empty()) out += " ";
    out += "g" + std::to_string(mu);
  }
  return out;
}

std::string CliffordWord::latex() const {
  if (mask_ == 0) return "1";
  std::string out;
  for (int mu : indices()) out += "\\gamma_{" + std::to_string(mu) + "}";
  return out;
}

WordProduct wmul(CliffordWord u, CliffordWord v) {
  // Move each generator of v left past the larger generators of u, then
  // contract repeated indices through the metric.
  int swaps = 0;
  int sign = 1;
  for (int j = 0; j < 4; ++j) {
    if (!(v.mask() & (1u << j))) continue;
    swaps += std::popcount(static_cast<unsigned>(u.mask() >> (j + 1)));
    if (u.mask() & (1u << j)) sign *= eta(j);
  }
  if (swaps % 2) sign = -sign;
  return {sign, CliffordWord(static_cast<std::uint8_t>(u.mask() ^ v.mask()))};
}

int reversal_sign(CliffordWord u) {
  int k = u.grade();
  return (k * (k - 1) / 2) % 2 ? -1 : 1;
}

int grade_sign(CliffordWord u) { return u.grade() % 2 ? -1 : 1; }

int epsilon_lower(int mu, int nu, int rho, int sigma) {
  int idx[4] = {mu, nu, rho, sigma};
  int seen = 0;
  for (int k : idx) {
    if (seen & (1 << k)) return 0;
    seen |= 1 << k;
  }
  int inversions = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) inversions += idx[a] > idx[b];
  }
  return inversions % 2 ? -1 : 1;
}

int epsilon_upper(int mu, int nu, int rho, int sigma) {
  return -epsilon_lower(mu, nu, rho, sigma);
}

bool CliffordElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  for (int k = 0; k < 16; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CliffordElement operator-(const CliffordElement& a) {
  CliffordElement out;
  for (int k = 0; k < 16; ++k) out.coeffs_[k] = -a.coeffs_[k];
  return out;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement out;
  for (int x = 0; x < 16; ++x) {
    if (a.coeffs_[x].is_zero()) continue;
    for (int y = 0; y < 16; ++y) {
      if (b.coeffs_[y].is_zero()) continue;
      auto [sign, word] = wmul(CliffordWord(static_cast<std::uint8_t>(x)),
                               CliffordWord(static_cast<std::uint8_t>(y)));
      Scalar term = a.coeffs_[x] * b.coeffs_[y];
      out.coeffs_[word.mask()] += sign > 0 ? term : -term;
    }
  }
  return out;
}

CliffordElement gamma5() { return {CliffordWord(0xf), Scalar::i()}; }

}  // namespace qloc
