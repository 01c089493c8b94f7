#include "qloc/observables.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <utility>

#include "qloc/clifford.hpp"
#include "qloc/errors.hpp"

namespace qloc::obs {

namespace {

NCElement scalar(const Scalar& s) { return NCElement(s); }

Scalar inv_mass_square() { return Scalar::w_pow(-2); }

using Builder = std::function<NCElement(const std::vector<int>&)>;

struct Entry {
  int arity;
  Builder make;
};

NCElement compute_spin_canonical(int mu, int nu) {
  // -(hbar^2/4)(g_mu g_nu - g_nu g_mu)/(i hbar) = (i hbar / 4) [g_mu, g_nu]
  NCElement g = gamma(mu) * gamma(nu) - gamma(nu) * gamma(mu);
  return g.times_right(Scalar::i() * Scalar::hbar() * Scalar::rational(1, 4));
}

NCElement compute_dilatation() {
  NCElement d;
  for (int mu = 0; mu < 4; ++mu) d += dot(momentum_upper(mu), position(mu));
  return d;
}

NCElement compute_angular(int mu, int nu) {
  return dot(momentum(mu), position(nu)) - dot(momentum(nu), position(mu)) +
         spin_canonical(mu, nu);
}

NCElement compute_conformal(int mu) {
  NCElement c = dot(dilatation(), position(mu)).times_right(Scalar(2)) -
                dot(momentum(mu), position_square());
  for (int rho = 0; rho < 4; ++rho) {
    c += dot(raise(position(rho), rho), spin_canonical(rho, mu)).times_right(Scalar(2));
  }
  return c;
}

NCElement compute_pauli_lubanski(int mu) {
  NCElement w;
  for (int nu = 0; nu < 4; ++nu) {
    for (int rho = 0; rho < 4; ++rho) {
      for (int sigma = 0; sigma < 4; ++sigma) {
        int e = epsilon_lower(mu, nu, rho, sigma);
        if (e == 0) continue;
        NCElement j_upper = angular(nu, rho).times_right(Scalar(eta(nu) * eta(rho)));
        w += (j_upper * momentum_upper(sigma)).times_right(Scalar(e));
      }
    }
  }
  return w.times_right(Scalar::rational(-1, 2));
}

NCElement compute_spin_tensor(int mu, int nu) {
  NCElement s;
  for (int rho = 0; rho < 4; ++rho) {
    for (int sigma = 0; sigma < 4; ++sigma) {
      int e = epsilon_lower(mu, nu, rho, sigma);
      if (e == 0) continue;
      s += (raise(pauli_lubanski(rho), rho) * momentum_upper(sigma)).times_right(Scalar(e));
    }
  }
  return s.times_right(inv_mass_square());
}

template <typename F>
NCElement dualize(int mu, int nu, F&& tensor) {
  NCElement out;
  for (int rho = 0; rho < 4; ++rho) {
    for (int sigma = 0; sigma < 4; ++sigma) {
      int e = epsilon_lower(mu, nu, rho, sigma);
      if (e == 0) continue;
      out += tensor(rho, sigma).times_right(Scalar(e * eta(rho) * eta(sigma)));
    }
  }
  return out.times_right(Scalar::i() * Scalar::rational(1, 2));
}

NCElement compute_hermitian_position(int mu) {
  NCElement shift;
  for (int nu = 0; nu < 4; ++nu) shift += momentum_upper(nu) * spin_canonical(nu, mu);
  return position(mu) + shift.times_right(inv_mass_square());
}

NCElement contract(const std::function<NCElement(int)>& v) {
  NCElement out;
  for (int mu = 0; mu < 4; ++mu) {
    NCElement c = v(mu);
    out += raise(c * c, mu);
  }
  return out;
}

const std::map<std::string, Entry>& table() {
  static const std::map<std::string, Entry> t = {
      {"P", {1, [](const auto& i) { return momentum(i[0]); }}},
      {"xc", {1, [](const auto& i) { return position(i[0]); }}},
      {"gamma", {1, [](const auto& i) { return gamma(i[0]); }}},
      {"gamma5", {0, [](const auto&) { return orientation(); }}},
      {"M", {0, [](const auto&) { return mass(); }}},
      {"Mabs", {0, [](const auto&) { return mass_abs(); }}},
      {"eps", {0, [](const auto&) { return mass_sign(); }}},
      {"sspin", {2, [](const auto& i) { return compute_spin_canonical(i[0], i[1]); }}},
      {"sdual",
       {2, [](const auto& i) { return dualize(i[0], i[1], spin_canonical); }}},
      {"D", {0, [](const auto&) { return compute_dilatation(); }}},
      {"J", {2, [](const auto& i) { return compute_angular(i[0], i[1]); }}},
      {"C", {1, [](const auto& i) { return compute_conformal(i[0]); }}},
      {"W", {1, [](const auto& i) { return compute_pauli_lubanski(i[0]); }}},
      {"Svec",
       {1,
        [](const auto& i) {
          return (pauli_lubanski(i[0]) * mass()).times_right(inv_mass_square());
        }}},
      {"S", {2, [](const auto& i) { return compute_spin_tensor(i[0], i[1]); }}},
      {"Sdual", {2, [](const auto& i) { return dualize(i[0], i[1], spin_tensor); }}},
      {"Xh", {1, [](const auto& i) { return compute_hermitian_position(i[0]); }}},
      {"V",
       {1, [](const auto& i) { return (momentum(i[0]) * mass()).times_right(inv_mass_square()); }}},
      {"x2", {0, [](const auto&) { return contract(position); }}},
      {"X2", {0, [](const auto&) { return contract(hermitian_position); }}},
      {"W2", {0, [](const auto&) { return contract(pauli_lubanski); }}},
  };
  return t;
}

const Entry& lookup(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw UnknownObservable("unknown observable '" + name + "'");
  return it->second;
}

}  // namespace

NCElement momentum(int mu) { return scalar(Scalar::p(mu).scaled(Gaussian(eta(mu)))); }
NCElement momentum_upper(int mu) { return scalar(Scalar::p(mu)); }
NCElement position(int mu) { return NCElement::x(mu); }
NCElement gamma(int mu) { return NCElement::gamma(mu); }
NCElement orientation() { return NCElement::from_clifford(qloc::gamma5()); }
NCElement mass() { return mass_operator(); }
NCElement mass_abs() { return scalar(Scalar::w()); }
NCElement mass_sign() { return mass().times_right(Scalar::w_pow(-1)); }
NCElement spin_canonical(int mu, int nu) { return build("sspin", {mu, nu}); }
NCElement spin_canonical_dual(int mu, int nu) { return build("sdual", {mu, nu}); }
NCElement dilatation() { return build("D"); }
NCElement angular(int mu, int nu) { return build("J", {mu, nu}); }
NCElement conformal(int mu) { return build("C", {mu}); }
NCElement pauli_lubanski(int mu) { return build("W", {mu}); }
NCElement spin_vector(int mu) { return build("Svec", {mu}); }
NCElement spin_tensor(int mu, int nu) { return build("S", {mu, nu}); }
NCElement spin_dual(int mu, int nu) { return build("Sdual", {mu, nu}); }
NCElement hermitian_position(int mu) { return build("Xh", {mu}); }
NCElement velocity(int mu) { return build("V", {mu}); }

NCElement momentum_square() { return scalar(Scalar::w() * Scalar::w()); }
NCElement position_square() { return build("x2"); }
NCElement hermitian_square() { return build("X2"); }
NCElement pauli_square() { return build("W2"); }

int arity(const std::string& name) { return lookup(name).arity; }

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : table()) n.push_back(k);
    return n;
  }();
  return names;
}

NCElement build(const std::string& name, const std::vector<int>& indices) {
  const Entry& entry = lookup(name);
  if (static_cast<int>(indices.size()) != entry.arity) {
    throw UnknownObservable(name + " takes " + std::to_string(entry.arity) + " indices, got " +
                            std::to_string(indices.size()));
  }
  for (int i : indices) {
    if (i < 0 || i > 3) throw UnknownObservable("index out of range in " + name);
  }
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::vector<int>>, NCElement> memo;
  auto key = std::make_pair(name, indices);
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  // Built outside the lock: builders call back into build().
  NCElement value = entry.make(indices);
  std::lock_guard lock(mutex);
  return memo.try_emplace(std::move(key), std::move(value)).first->second;
}

NCElement raise(const NCElement& a, int mu) { return eta(mu) > 0 ? a : -a; }
NCElement lower(const NCElement& a, int mu) { return raise(a, mu); }

NCElement spin_vector_identity(int mu) {
  NCElement rhs = orientation() * (gamma(mu) - velocity(mu));
  return spin_vector(mu) + rhs.times_right(Scalar::hbar() * Scalar::rational(1, 2));
}

}  // namespace qloc::obs
