#pragma once

#include <string>
#include <vector>

#include "qloc/ncalg.hpp"

namespace qloc::obs {

// Builders take lowered indices.  Results are normal-form NCElements in the
// realization where p, x and gamma are primitive.

NCElement momentum(int mu);            // P_mu = eta_{mu nu} p^nu
NCElement momentum_upper(int mu);      // P^mu = p^mu
NCElement position(int mu);            // canonical x_mu
NCElement gamma(int mu);               // Clifford generator gamma_mu
NCElement orientation();               // gamma = i g0 g1 g2 g3
NCElement mass();                      // M = P^mu gamma_mu
NCElement mass_abs();                  // |M| = w
NCElement mass_sign();                 // eps = M w^-1
NCElement spin_canonical(int mu, int nu);   // s_{mu nu} = -(hbar^2/4) (gamma_mu, gamma_nu)
NCElement spin_canonical_dual(int mu, int nu);  // (i/2) eps_{mu nu rho sigma} s^{rho sigma}
NCElement dilatation();                // D = P^mu . x_mu
NCElement angular(int mu, int nu);     // J_{mu nu}
NCElement conformal(int mu);           // C_mu
NCElement pauli_lubanski(int mu);      // W_mu
NCElement spin_vector(int mu);         // S_mu = W_mu M / M^2
NCElement spin_tensor(int mu, int nu); // S_{mu nu}
NCElement spin_dual(int mu, int nu);   // (i/2) eps_{mu nu rho sigma} S^{rho sigma}
NCElement hermitian_position(int mu);  // X_mu = x_mu + P^nu s_{nu mu} / M^2
NCElement velocity(int mu);            // V_mu = P_mu M / M^2

/// Contracted scalars used as named builtins.
NCElement momentum_square();   // P^mu P_mu
NCElement position_square();   // x^mu x_mu
NCElement hermitian_square();  // X^mu X_mu
NCElement pauli_square();      // W^mu W_mu

/// Catalog lookup by the names shared with the expression language.
/// Results are memoized; safe to call from several threads.
NCElement build(const std::string& name, const std::vector<int>& indices = {});
/// Number of indices a catalog name takes; throws UnknownObservable.
int arity(const std::string& name);
const std::vector<std::string>& catalog_names();

/// eta^{mu mu} a: the same component with index mu raised (or lowered).
NCElement raise(const NCElement& a, int mu);
NCElement lower(const NCElement& a, int mu);

/// Residual S_mu + (hbar/2) gamma (gamma_mu - V_mu); zero in this realization.
NCElement spin_vector_identity(int mu);

}  // namespace qloc::obs
