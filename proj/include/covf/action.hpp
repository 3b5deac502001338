#pragma once

#include <vector>

#include "covf/poly.hpp"

namespace covf {

// The Z/p action on k[V_m]: sigma x_i = x_i + x_{i+1} (i < m), sigma x_m = x_m.
// Requires 2 <= m <= p so that V_m is indecomposable.
struct ActionContext {
  PrimeField field;
  int m;

  ActionContext(PrimeField field, int m);
};

Polynomial sigma(const ActionContext& ctx, const Polynomial& f);
Polynomial sigma_power(const ActionContext& ctx, const Polynomial& f, unsigned k);

// Twisted derivation Delta = sigma - 1.
Polynomial delta(const ActionContext& ctx, const Polynomial& f);
Polynomial delta_power(const ActionContext& ctx, const Polynomial& f, unsigned k);

// Least i > 0 with Delta^i(f) = 0; always in [1, p]. weight(0) = 1.
unsigned weight(const ActionContext& ctx, const Polynomial& f);

// Orbit product prod_{i=0}^{p-1} sigma^i(x_j); sigma-invariant of degree p.
Polynomial norm(const ActionContext& ctx, int j);

// d_1^{e_1} ... d_m^{e_m} f.
Polynomial apply_diff_monomial(const ActionContext& ctx, const Polynomial& f,
                               const std::vector<unsigned>& e);

// Predicted weight d+1 of a differentiated invariant, with the corrected
// exponent d = sum_i (i-1) e_i. Rejects d >= p ("out of lemma range").
unsigned predicted_diff_weight(const ActionContext& ctx, const std::vector<unsigned>& e);

// Checks sigma(d_i f) = sum_j b_{ji} d_j(sigma f) for every i, where B is the
// inverse of the substitution matrix of sigma.
bool verify_dual_action(const ActionContext& ctx, const Polynomial& f);

}  // namespace covf
