#include "qloc/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qloc/errors.hpp"

namespace qloc {

Gaussian Gaussian::inverse() const {
  Rational norm = re * re + im * im;
  if (sgn(norm) == 0) throw NonInvertibleCoefficient("division by zero coefficient");
  return {re / norm, -im / norm};
}

Gaussian operator*(const Gaussian& a, const Gaussian& b) {
  if (a.is_real() && b.is_real()) return {a.re * b.re, Rational(0)};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// ---------------------------------------------------------------------------

int Monomial::alpha_degree() const {
  int d = 0;
  for (int v = kAlpha; v < kAlpha + 4; ++v) d += exponent(v);
  return d;
}

int Monomial::momentum_degree() const {
  int d = 0;
  for (int v = kMomentum; v < kMomentum + 4; ++v) d += exponent(v);
  return d;
}

std::array<int, Monomial::kVars> Monomial::exponents() const {
  std::array<int, kVars> e{};
  for (int v = 0; v < kVars; ++v) e[v] = exponent(v);
  return e;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::array<int, Monomial::kVars> e{};
  for (int v = 0; v < Monomial::kVars; ++v) {
    e[v] = a.exponent(v) + b.exponent(v);
    if (e[v] > 63) throw std::overflow_error("monomial exponent exceeds 63");
  }
  int h = a.hbar() + b.hbar();
  if (h < -128 || h > 127) throw std::overflow_error("hbar exponent out of range");
  return {e, h};
}

// ---------------------------------------------------------------------------

namespace {

bool term_less(const Poly::Term& x, const Poly::Term& y) { return x.first < y.first; }

}  // namespace

Poly::Poly(Gaussian c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial(), std::move(c));
}

Poly::Poly(Monomial m, Gaussian c) {
  if (!c.is_zero()) terms_.emplace_back(m, std::move(c));
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  Poly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
    } else {
      if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().second.is_zero()) out.terms_.pop_back();
  return out;
}

namespace {

template <bool Subtract>
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& x, const std::vector<Poly::Term>& y) {
  std::vector<Poly::Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, Subtract ? -j->second : j->second);
      ++j;
    } else {
      Gaussian c = Subtract ? i->second - j->second : i->second + j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge<false>(terms_, o.terms_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge<true>(terms_, o.terms_);
  return *this;
}

Poly operator-(const Poly& a) {
  Poly out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times(a.terms_[0].first).scaled(a.terms_[0].second);
  if (b.size() == 1) return a.times(b.terms_[0].first).scaled(b.terms_[0].second);
  std::vector<Poly::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) terms.emplace_back(ma * mb, ca * cb);
  }
  return Poly::from_terms(std::move(terms));
}

Poly Poly::scaled(const Gaussian& c) const {
  if (c.is_zero()) return {};
  if (c == Gaussian(1)) return *this;
  Poly out;
  out.terms_.reserve(terms_.size());
  for (const auto& [m, k] : terms_) out.terms_.emplace_back(m, k * c);
  return out;
}

Poly Poly::times(const Monomial& m) const {
  // Multiplying by a monomial preserves the graded order, so no re-sort.
  Poly out;
  out.terms_.reserve(terms_.size());
  for (const auto& [mm, k] : terms_) out.terms_.emplace_back(mm * m, k);
  if (!std::is_sorted(out.terms_.begin(), out.terms_.end(), term_less)) {
    std::sort(out.terms_.begin(), out.terms_.end(), term_less);
  }
  return out;
}

Poly Poly::diff(int var) const {
  std::vector<Term> terms;
  for (const auto& [m, k] : terms_) {
    int e = m.exponent(var);
    if (e == 0) continue;
    auto exps = m.exponents();
    exps[var] -= 1;
    terms.emplace_back(Monomial(exps, m.hbar()), k * Gaussian(e));
  }
  return from_terms(std::move(terms));
}

Poly Poly::conj_i() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.second = t.second.conj();
  return out;
}

int Poly::alpha_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.alpha_degree());
  return d;
}

Poly Poly::alpha_truncate(int order) const {
  Poly out;
  for (const auto& t : terms_) {
    if (t.first.alpha_degree() <= order) out.terms_.push_back(t);
  }
  return out;
}

Poly Poly::alpha_part(int degree) const {
  Poly out;
  for (const auto& t : terms_) {
    if (t.first.alpha_degree() == degree) out.terms_.push_back(t);
  }
  return out;
}

std::optional<Poly> Poly::divide_by_mass_square() const {
  // p.p is monic of degree 2 in p^0, so dividing reduces to rewriting
  // (p^0)^2 -> (p^0)^2 - p.p until no term has p^0 degree >= 2.
  static const Poly rest = [] {
    Poly r;
    for (int k = 1; k < 4; ++k) {
      std::array<int, Monomial::kVars> e{};
      e[Monomial::kMomentum + k] = 2;
      r += Poly(Monomial(e, 0));
    }
    return r;
  }();
  Poly quotient;
  Poly remainder = *this;
  for (;;) {
    std::vector<Term> high;
    std::vector<Term> low;
    for (const auto& [m, k] : remainder.terms_) {
      if (m.exponent(Monomial::kMomentum) >= 2) {
        auto e = m.exponents();
        e[Monomial::kMomentum] -= 2;
        high.emplace_back(Monomial(e, m.hbar()), k);
      } else {
        low.emplace_back(m, k);
      }
    }
    if (high.empty()) break;
    Poly q = from_terms(std::move(high));
    quotient += q;
    remainder = from_terms(std::move(low)) + q * rest;
  }
  if (!remainder.is_zero()) return std::nullopt;
  return quotient;
}

const Poly& mass_square() {
  static const Poly q = [] {
    Poly r;
    for (int k = 0; k < 4; ++k) {
      std::array<int, Monomial::kVars> e{};
      e[Monomial::kMomentum + k] = 2;
      r += Poly(Monomial(e, 0), Gaussian(k == 0 ? 1 : -1));
    }
    return r;
  }();
  return q;
}

// ---------------------------------------------------------------------------

namespace {

Poly mass_square_power(int k) {
  Poly out(Gaussian(1));
  for (int j = 0; j < k; ++j) out = out * mass_square();
  return out;
}

int eta(int mu) { return mu == 0 ? 1 : -1; }

}  // namespace

Scalar::Scalar(Poly a, Poly b, int m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (m_ < 0) {
    Poly q = mass_square_power(-m_);
    a_ = a_ * q;
    b_ = b_ * q;
    m_ = 0;
  }
  normalize();
}

Scalar Scalar::w_pow(int k) {
  Poly one(Gaussian(1));
  if (k >= 0) {
    if (k % 2 == 0) return Scalar(mass_square_power(k / 2), Poly(), 0);
    return Scalar(Poly(), mass_square_power(k / 2), 0);
  }
  int n = -k;
  if (n % 2 == 0) return Scalar(one, Poly(), n / 2);
  return Scalar(Poly(), one, n / 2 + 1);
}

void Scalar::normalize() {
  if (a_.is_zero() && b_.is_zero()) {
    m_ = 0;
    return;
  }
  while (m_ > 0) {
    auto qa = a_.divide_by_mass_square();
    if (!qa) return;
    auto qb = b_.divide_by_mass_square();
    if (!qb) return;
    a_ = std::move(*qa);
    b_ = std::move(*qb);
    --m_;
  }
}

Scalar Scalar::lifted(int m) const {
  if (m == m_) return *this;
  Scalar out;
  Poly q = mass_square_power(m - m_);
  out.a_ = a_ * q;
  out.b_ = b_ * q;
  out.m_ = m;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (m_ == o.m_) {
    a_ += o.a_;
    b_ += o.b_;
  } else if (m_ > o.m_) {
    Scalar l = o.lifted(m_);
    a_ += l.a_;
    b_ += l.b_;
  } else {
    *this = lifted(o.m_);
    a_ += o.a_;
    b_ += o.b_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator-(const Scalar& a) {
  Scalar out = a;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.is_zero() || y.is_zero()) return {};
  Scalar out;
  if (x.b_.is_zero() && y.b_.is_zero()) {
    out.a_ = x.a_ * y.a_;
  } else {
    out.a_ = x.a_ * y.a_ + x.b_ * y.b_ * mass_square();
    out.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  }
  out.m_ = x.m_ + y.m_;
  if (out.m_ > 0) out.normalize();
  return out;
}

Scalar Scalar::scaled(const Gaussian& c) const {
  if (c.is_zero()) return {};
  Scalar out = *this;
  out.a_ = a_.scaled(c);
  out.b_ = b_.scaled(c);
  return out;
}

Scalar Scalar::invert() const {
  if (is_zero()) throw NonInvertibleCoefficient("cannot invert zero");
  // Only c * hbar^k * w^n is invertible.
  const bool odd = a_.is_zero();
  if (!odd && !b_.is_zero()) throw NonInvertibleCoefficient("cannot invert " + plain());
  Poly num = odd ? b_ : a_;
  int j = 0;
  while (num.size() > 1 || (num.size() == 1 && num.terms()[0].first.degree() > 0)) {
    auto q = num.divide_by_mass_square();
    if (!q) throw NonInvertibleCoefficient("cannot invert " + plain());
    num = std::move(*q);
    ++j;
  }
  const auto& [mono, c] = num.terms()[0];
  Poly unit(Monomial::hbar_power(-mono.hbar()), c.inverse());
  // value = unit^-1 * w^(2j - 2m + odd)
  int wpow = 2 * m_ - 2 * j - (odd ? 1 : 0);
  return w_pow(wpow) * Scalar(unit);
}

Scalar Scalar::pderiv(int nu) const {
  if (is_zero()) return {};
  const int var = Monomial::kMomentum + nu;
  Poly eta_p(Monomial::momentum(nu), Gaussian(eta(nu)));
  const Poly& q = mass_square();
  if (m_ == 0 && b_.is_zero()) return Scalar(a_.diff(var));
  Poly m2(Gaussian(2L * m_));
  Poly na = a_.diff(var) * q - m2 * eta_p * a_;
  Poly nb = b_.diff(var) * q + eta_p * b_ - m2 * eta_p * b_;
  return Scalar(std::move(na), std::move(nb), m_ + 1);
}

Scalar Scalar::conj_i() const {
  Scalar out = *this;
  out.a_ = a_.conj_i();
  out.b_ = b_.conj_i();
  return out;
}

int Scalar::alpha_degree() const { return std::max(a_.alpha_degree(), b_.alpha_degree()); }

Scalar Scalar::alpha_truncate(int order) const {
  return Scalar(a_.alpha_truncate(order), b_.alpha_truncate(order), m_);
}

Scalar Scalar::alpha_part(int degree) const {
  return Scalar(a_.alpha_part(degree), b_.alpha_part(degree), m_);
}

Scalar Scalar::substitute_alpha(const std::array<Rational, 4>& values) const {
  auto subst = [&](const Poly& poly) {
    std::vector<Poly::Term> terms;
    for (const auto& [m, c] : poly.terms()) {
      auto e = m.exponents();
      Rational factor = 1;
      for (int k = 0; k < 4; ++k) {
        for (int n = 0; n < e[Monomial::kAlpha + k]; ++n) factor *= values[k];
        e[Monomial::kAlpha + k] = 0;
      }
      terms.emplace_back(Monomial(e, m.hbar()), c * Gaussian(factor));
    }
    return Poly::from_terms(std::move(terms));
  };
  return Scalar(subst(a_), subst(b_), m_);
}

bool Scalar::is_momentum_free() const {
  if (!b_.is_zero() || m_ != 0) return false;
  return std::all_of(a_.terms().begin(), a_.terms().end(),
                     [](const Poly::Term& t) { return t.first.momentum_degree() == 0; });
}

std::optional<Scalar> Scalar::unit_ratio(const Scalar& num, const Scalar& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return Scalar();
  const int m = std::max(num.m_, den.m_);
  Scalar n = num.lifted(m);
  Scalar d = den.lifted(m);
  const Poly& np = d.a_.is_zero() ? n.b_ : n.a_;
  const Poly& dp = d.a_.is_zero() ? d.b_ : d.a_;
  if (np.is_zero()) return std::nullopt;
  const auto& [nm, nc] = np.terms()[0];
  const auto& [dm, dc] = dp.terms()[0];
  if (nm.exponents() != dm.exponents()) return std::nullopt;
  Scalar ratio(Poly(Monomial::hbar_power(nm.hbar() - dm.hbar()), nc * dc.inverse()));
  if (ratio * den != num) return std::nullopt;
  return ratio;
}

// ---------------------------------------------------------------------------

std::string render_rational(const Rational& r) { return r.str(); }

std::string render_gaussian(const Gaussian& g) {
  if (g.is_real()) return render_rational(g.re);
  auto imag = [](const Rational& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    return render_rational(v) + "*i";
  };
  if (sgn(g.re) == 0) return imag(g.im);
  std::string im = imag(g.im);
  if (im[0] != '-') im = "+" + im;
  return "(" + render_rational(g.re) + im + ")";
}

namespace {

const char* const kPlainVar[Monomial::kVars] = {"p0", "p1", "p2", "p3", "a0", "a1", "a2", "a3"};
const char* const kLatexVar[Monomial::kVars] = {"p^{0}",      "p^{1}",      "p^{2}",
                                                "p^{3}",      "\\alpha^{0}", "\\alpha^{1}",
                                                "\\alpha^{2}", "\\alpha^{3}"};

struct TermText {
  bool negative = false;
  std::string body;
};

// Renders one term c * monomial * w^wpow.
TermText plain_term(const Monomial& m, Gaussian c, int wpow) {
  TermText out;
  std::vector<std::string> factors;
  if (c.is_real() && sgn(c.re) < 0) {
    out.negative = true;
    c = -c;
  } else if (!c.is_real() && sgn(c.re) == 0 && sgn(c.im) < 0) {
    out.negative = true;
    c = -c;
  }
  if (m.hbar() != 0) {
    factors.push_back(m.hbar() == 1 ? "hbar" : "hbar^" + std::to_string(m.hbar()));
  }
  for (int v = 0; v < Monomial::kVars; ++v) {
    int e = m.exponent(v);
    if (e == 0) continue;
    factors.push_back(e == 1 ? kPlainVar[v] : std::string(kPlainVar[v]) + "^" + std::to_string(e));
  }
  if (wpow != 0) factors.push_back(wpow == 1 ? "w" : "w^" + std::to_string(wpow));
  std::string coef = render_gaussian(c);
  if (factors.empty() || coef != "1") factors.insert(factors.begin(), coef);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out.body += "*";
    out.body += factors[k];
  }
  return out;
}

std::string latex_gaussian(const Gaussian& g) {
  auto rat = [](const Rational& r) {
    if (r.den() == 1) return std::to_string(r.num());
    std::string s = sgn(r) < 0 ? "-" : "";
    return s + "\\frac{" + std::to_string(r.num() < 0 ? -r.num() : r.num()) + "}{" +
           std::to_string(r.den()) + "}";
  };
  if (g.is_real()) return rat(g.re);
  std::string im = g.im == 1 ? "i" : g.im == -1 ? "-i" : rat(g.im) + "i";
  if (sgn(g.re) == 0) return im;
  if (im[0] != '-') im = "+" + im;
  return "\\left(" + rat(g.re) + im + "\\right)";
}

TermText latex_term(const Monomial& m, Gaussian c, int wpow) {
  TermText out;
  if ((c.is_real() && sgn(c.re) < 0) || (!c.is_real() && sgn(c.re) == 0 && sgn(c.im) < 0)) {
    out.negative = true;
    c = -c;
  }
  std::string factors;
  if (m.hbar() != 0) {
    factors += m.hbar() == 1 ? "\\hbar" : "\\hbar^{" + std::to_string(m.hbar()) + "}";
  }
  for (int v = 0; v < Monomial::kVars; ++v) {
    int e = m.exponent(v);
    if (e == 0) continue;
    if (!factors.empty()) factors += " ";
    factors += e == 1 ? std::string(kLatexVar[v])
                      : "(" + std::string(kLatexVar[v]) + ")^{" + std::to_string(e) + "}";
  }
  if (wpow != 0) {
    if (!factors.empty()) factors += " ";
    factors += wpow == 1 ? "|M|" : "|M|^{" + std::to_string(wpow) + "}";
  }
  std::string coef = latex_gaussian(c);
  if (factors.empty()) {
    out.body = coef;
  } else if (coef == "1") {
    out.body = factors;
  } else {
    out.body = coef + " " + factors;
  }
  return out;
}

template <typename F>
std::string join_terms(const Poly& a, const Poly& b, int m, F&& render) {
  std::vector<TermText> terms;
  for (const auto& [mono, c] : a.terms()) terms.push_back(render(mono, c, -2 * m));
  for (const auto& [mono, c] : b.terms()) terms.push_back(render(mono, c, 1 - 2 * m));
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k == 0) {
      out += terms[k].negative ? "-" : "";
    } else {
      out += terms[k].negative ? " - " : " + ";
    }
    out += terms[k].body;
  }
  return out;
}

}  // namespace

std::string Scalar::plain() const { return join_terms(a_, b_, m_, plain_term); }

std::string Scalar::latex() const { return join_terms(a_, b_, m_, latex_term); }

}  // namespace qloc
