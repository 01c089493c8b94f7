#include "qloc/ncalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "qloc/conventions.hpp"
#include "qloc/errors.hpp"

namespace qloc {

NcKey::NcKey(const XExponents& x, CliffordWord word) {
  int deg = 0;
  std::uint64_t packed = 0;
  for (int mu = 0; mu < 4; ++mu) {
    if (x[mu] < 0 || x[mu] > 255) throw std::overflow_error("x exponent out of range");
    deg += x[mu];
    packed = (packed << 8) | static_cast<std::uint64_t>(x[mu]);
  }
  packed_ = (static_cast<std::uint64_t>(deg) << 48) |
            (static_cast<std::uint64_t>(word.mask()) << 32) | packed;
}

XExponents NcKey::x() const { return {x(0), x(1), x(2), x(3)}; }

// ---------------------------------------------------------------------------

NCElement::NCElement(Scalar s) {
  if (!s.is_zero()) terms_.emplace(NcKey(), std::move(s));
}

NCElement::NCElement(NcKey key, Scalar s) {
  if (!s.is_zero()) terms_.emplace(key, std::move(s));
}

NCElement NCElement::x(int mu) {
  XExponents e{};
  e[mu] = 1;
  return {NcKey(e, CliffordWord()), Scalar(1)};
}

NCElement NCElement::gamma(int mu) { return word(CliffordWord::generator(mu)); }

NCElement NCElement::word(CliffordWord w, Scalar s) { return {NcKey({}, w), std::move(s)}; }

NCElement NCElement::from_clifford(const CliffordElement& c) {
  NCElement out;
  for (int m = 0; m < 16; ++m) {
    CliffordWord w(static_cast<std::uint8_t>(m));
    out.add_term(NcKey({}, w), c[w]);
  }
  return out;
}

Scalar NCElement::coefficient(const NcKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar() : it->second;
}

void NCElement::add_term(const NcKey& key, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCElement& NCElement::operator+=(const NCElement& o) {
  for (const auto& [k, s] : o.terms_) add_term(k, s);
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
  for (const auto& [k, s] : o.terms_) add_term(k, -s);
  return *this;
}

NCElement operator-(const NCElement& a) {
  NCElement out = a;
  for (auto& [k, s] : out.terms_) s = -s;
  return out;
}

NCElement NCElement::times_right(const Scalar& s) const {
  NCElement out;
  for (const auto& [k, c] : terms_) out.add_term(k, c * s);
  return out;
}

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// (-i)^n
Gaussian minus_i_power(int n) {
  switch (n % 4) {
    case 0:
      return {1};
    case 1:
      return {0, -1};
    case 2:
      return {-1};
    default:
      return {0, 1};
  }
}

// Lazily computed partial derivatives d^k f / dp^k over a box of multi-indices.
class DerivativeTable {
 public:
  DerivativeTable(const Scalar& f, const XExponents& box) : f_(f), box_(box) {
    std::size_t n = 1;
    for (int mu = 0; mu < 4; ++mu) n *= static_cast<std::size_t>(box_[mu] + 1);
    cache_.resize(n);
  }

  const Scalar& get(const XExponents& k) {
    auto& slot = cache_[index(k)];
    if (slot) return *slot;
    int mu = 0;
    while (mu < 4 && k[mu] == 0) ++mu;
    if (mu == 4) {
      slot = f_;
    } else {
      XExponents lower = k;
      lower[mu] -= 1;
      const Scalar& prev = get(lower);
      slot = prev.is_zero() ? Scalar() : prev.pderiv(mu);
    }
    return *cache_[index(k)];
  }

 private:
  std::size_t index(const XExponents& k) const {
    std::size_t idx = 0;
    for (int mu = 0; mu < 4; ++mu) idx = idx * static_cast<std::size_t>(box_[mu] + 1) + k[mu];
    return idx;
  }

  const Scalar& f_;
  XExponents box_;
  std::vector<std::optional<Scalar>> cache_;
};

}  // namespace

NCElement operator*(const NCElement& a, const NCElement& b) {
  NCElement out;
  if (a.is_zero() || b.is_zero()) return out;
  XExponents box{};
  for (const auto& [kb, _] : b.terms_) {
    for (int mu = 0; mu < 4; ++mu) box[mu] = std::max(box[mu], kb.x(mu));
  }
  for (const auto& [ka, fa] : a.terms_) {
    DerivativeTable table(fa, box);
    const XExponents xa = ka.x();
    for (const auto& [kb, gb] : b.terms_) {
      const auto [sign, word] = wmul(ka.word(), kb.word());
      const XExponents xb = kb.x();
      // Moving fa right past x^xb:  fa x^xb = sum_k C(xb,k) (-i hbar)^|k| x^(xb-k) d^k fa.
      XExponents k{};
      for (k[0] = 0; k[0] <= xb[0]; ++k[0]) {
        for (k[1] = 0; k[1] <= xb[1]; ++k[1]) {
          for (k[2] = 0; k[2] <= xb[2]; ++k[2]) {
            for (k[3] = 0; k[3] <= xb[3]; ++k[3]) {
              const Scalar& d = table.get(k);
              if (d.is_zero()) continue;
              int order = k[0] + k[1] + k[2] + k[3];
              long comb = sign;
              XExponents xe{};
              for (int mu = 0; mu < 4; ++mu) {
                comb *= binomial(xb[mu], k[mu]);
                xe[mu] = xa[mu] + xb[mu] - k[mu];
              }
              Scalar factor(Poly(Monomial::hbar_power(order), minus_i_power(order) * Gaussian(comb)));
              out.add_term(NcKey(xe, word), d * gb * factor);
            }
          }
        }
      }
    }
  }
  return out;
}

NCElement operator*(const Scalar& s, const NCElement& a) { return NCElement(s) * a; }

NCElement bracket(const NCElement& a, const NCElement& b) {
  static const Scalar inv_i_hbar = Scalar(Poly(Monomial::hbar_power(-1), Gaussian(0, -1)));
  return (a * b - b * a).times_right(inv_i_hbar);
}

NCElement dot(const NCElement& a, const NCElement& b) {
  return (a * b + b * a).times_right(Scalar::rational(1, 2));
}

NCElement power(const NCElement& a, int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  NCElement out(1);
  for (int k = 0; k < n; ++k) out = out * a;
  return out;
}

int NCElement::x_degree() const {
  int d = 0;
  for (const auto& [k, _] : terms_) d = std::max(d, k.x_degree());
  return d;
}

int NCElement::alpha_degree() const {
  int d = 0;
  for (const auto& [_, s] : terms_) d = std::max(d, s.alpha_degree());
  return d;
}

NCElement NCElement::alpha_truncate(int order) const {
  NCElement out;
  for (const auto& [k, s] : terms_) out.add_term(k, s.alpha_truncate(order));
  return out;
}

NCElement NCElement::alpha_part(int degree) const {
  NCElement out;
  for (const auto& [k, s] : terms_) out.add_term(k, s.alpha_part(degree));
  return out;
}

NCElement NCElement::substitute_alpha(const std::array<Rational, 4>& values) const {
  // Substituted alpha are central numbers, so every monomial stays in normal form.
  NCElement out;
  for (const auto& [k, s] : terms_) out.add_term(k, s.substitute_alpha(values));
  return out;
}

bool NCElement::in_position_subalgebra() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return t.first.word().is_identity() && t.second.is_momentum_free();
  });
}

NCElement NCElement::dx_upper(int rho) const {
  if (!in_position_subalgebra()) {
    throw NotInCommutativeSubalgebra("position derivative needs a p-free, Clifford-free element");
  }
  NCElement out;
  for (const auto& [k, s] : terms_) {
    XExponents e = k.x();
    if (e[rho] == 0) continue;
    long n = e[rho];
    e[rho] -= 1;
    out.add_term(NcKey(e, CliffordWord()), s.scaled(Gaussian(n)));
  }
  return out;
}

NCElement NCElement::dx_lower(int mu) const {
  NCElement d = dx_upper(mu);
  return eta(mu) > 0 ? d : -d;
}

// ---------------------------------------------------------------------------

std::optional<Scalar> unit_ratio(const NCElement& a, const NCElement& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [key, coeff] = *b.terms().begin();
  auto c = Scalar::unit_ratio(a.coefficient(key), coeff);
  if (!c || b.times_right(*c) != a) return std::nullopt;
  return c;
}

NCElement mass_operator() {
  NCElement m;
  for (int nu = 0; nu < 4; ++nu) m += NCElement::word(CliffordWord::generator(nu), Scalar::p(nu));
  return m;
}

namespace conventions {

NCElement position_adjoint(int mu) {
  Scalar lower_p = Scalar::p(mu).scaled(Gaussian(eta(mu)));
  NCElement shift = (NCElement(lower_p) - NCElement::gamma(mu) * mass_operator())
                        .times_right(Scalar::i() * Scalar::hbar() * Scalar::w_pow(-2));
  return NCElement::x(mu) + shift;
}

NCElement gamma_adjoint(int mu) {
  Scalar lower_p = Scalar::p(mu).scaled(Gaussian(2L * eta(mu)));
  return mass_operator().times_right(lower_p * Scalar::w_pow(-2)) - NCElement::gamma(mu);
}

}  // namespace conventions

namespace {

struct AdjointImages {
  std::array<NCElement, 4> position;
  std::array<NCElement, 16> word;

  AdjointImages() {
    std::array<NCElement, 4> gamma_dag;
    for (int mu = 0; mu < 4; ++mu) {
      position[mu] = conventions::position_adjoint(mu);
      gamma_dag[mu] = conventions::gamma_adjoint(mu);
    }
    for (int m = 0; m < 16; ++m) {
      auto idx = CliffordWord(static_cast<std::uint8_t>(m)).indices();
      NCElement img(1);
      for (auto it = idx.rbegin(); it != idx.rend(); ++it) img = img * gamma_dag[*it];
      word[m] = img;
    }
  }
};

const AdjointImages& adjoint_images() {
  static const AdjointImages images;
  return images;
}

}  // namespace

NCElement adjoint(const NCElement& a) {
  const auto& img = adjoint_images();
  std::map<std::pair<int, int>, NCElement> powers;
  auto pos_power = [&](int mu, int n) -> const NCElement& {
    auto [it, inserted] = powers.try_emplace({mu, n});
    if (inserted) it->second = power(img.position[mu], n);
    return it->second;
  };
  NCElement out;
  for (const auto& [k, s] : a.terms()) {
    // (x^e word s)^dagger = conj(s) word^dagger (x^e)^dagger
    NCElement term = NCElement(s.conj_i()) * img.word[k.word().mask()];
    for (int mu = 3; mu >= 0; --mu) {
      if (k.x(mu) > 0) term = term * pos_power(mu, k.x(mu));
    }
    out += term;
  }
  return out;
}

NCElement geometric_inverse(const NCElement& u, int order) {
  if (u.alpha_part(0) != NCElement(1)) {
    throw NotUnitalSeries("geometric_inverse needs an alpha-free part equal to 1");
  }
  NCElement minus_v = NCElement(1) - u;
  NCElement result(1);
  NCElement term(1);
  for (int n = 1; n <= order; ++n) {
    term = (term * minus_v).alpha_truncate(order);
    result += term;
  }
  return result;
}

namespace {

template <bool Symmetric>
NCElement substitute_positions(const NCElement& form, const std::array<NCElement, 4>& args) {
  if (!form.in_position_subalgebra()) {
    throw NotInCommutativeSubalgebra("polynomial template must be a p-free position polynomial");
  }
  NCElement out;
  for (const auto& [k, c] : form.terms()) {
    std::vector<int> slots;
    for (int mu = 0; mu < 4; ++mu) {
      for (int n = 0; n < k.x(mu); ++n) slots.push_back(mu);
    }
    NCElement value;
    switch (slots.size()) {
      case 0:
        value = NCElement(1);
        break;
      case 1:
        value = args[slots[0]];
        break;
      case 2:
        if (Symmetric && slots[0] != slots[1]) {
          value = dot(args[slots[0]], args[slots[1]]);
        } else {
          value = args[slots[0]] * args[slots[1]];
        }
        break;
      default:
        throw std::invalid_argument("polynomial template degree exceeds 2");
    }
    out += value.times_right(c);
  }
  return out;
}

}  // namespace

NCElement poly_eval_sym(const NCElement& form, const std::array<NCElement, 4>& args) {
  return substitute_positions<true>(form, args);
}

NCElement poly_eval_left(const NCElement& form, const std::array<NCElement, 4>& args) {
  return substitute_positions<false>(form, args);
}

// ---------------------------------------------------------------------------

namespace {

std::string x_part_plain(const NcKey& k) {
  std::string out;
  for (int mu = 0; mu < 4; ++mu) {
    int e = k.x(mu);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(mu);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string x_part_latex(const NcKey& k) {
  std::string out;
  for (int mu = 0; mu < 4; ++mu) {
    int e = k.x(mu);
    if (e == 0) continue;
    out += "x_{" + std::to_string(mu) + "}";
    if (e > 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

template <typename F>
std::vector<std::string> lines(const NCElement::Terms& terms, const RenderOptions& opts, F&& f) {
  std::vector<std::string> out;
  for (const auto& [k, s] : terms) out.push_back(f(k, s));
  if (opts.order == MonomialOrder::descending) std::reverse(out.begin(), out.end());
  return out;
}

std::string plain_line(const NcKey& k, const Scalar& s, const RenderOptions& opts) {
  std::vector<std::string> parts;
  std::string xp = x_part_plain(k);
  if (!xp.empty()) parts.push_back(xp);
  if (!k.word().is_identity()) {
    parts.push_back(opts.gamma5_alias && k.word().mask() == 0xf ? "(-i*gamma5)" : k.word().plain());
  }
  parts.push_back("(" + s.plain() + ")");
  std::string out;
  for (std::size_t j = 0; j < parts.size(); ++j) out += (j ? " * " : "") + parts[j];
  return out;
}

}  // namespace

std::string NCElement::plain(const RenderOptions& opts) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& l : lines(terms_, opts, [&](const NcKey& k, const Scalar& s) {
         return plain_line(k, s, opts);
       })) {
    out += l + "\n";
  }
  out.pop_back();
  return out;
}

std::string NCElement::plain_inline(const RenderOptions& opts) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& l : lines(terms_, opts, [&](const NcKey& k, const Scalar& s) {
         return plain_line(k, s, opts);
       })) {
    out += (out.empty() ? "" : " + ") + l;
  }
  return out;
}

std::string NCElement::latex(const RenderOptions& opts) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& l : lines(terms_, opts, [&](const NcKey& k, const Scalar& s) {
         std::string body = x_part_latex(k);
         if (!k.word().is_identity()) {
           body += (body.empty() ? "" : "\\,") +
                   (opts.gamma5_alias && k.word().mask() == 0xf ? std::string("(-i\\gamma_5)")
                                                                : k.word().latex());
         }
         body += (body.empty() ? "" : "\\,") + std::string("\\left(") + s.latex() + "\\right)";
         return body;
       })) {
    out += (out.empty() ? "" : " + ") + l;
  }
  return out;
}

}  // namespace qloc
