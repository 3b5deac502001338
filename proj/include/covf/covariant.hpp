#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "covf/action.hpp"

namespace covf {

// Target module W = V_n with basis w_1..w_n; sigma w_i = w_i - w_{i-1} + ... .
// The alternating-sum action is cross-validated against Delta(w_{i+1}) +
// sigma(w_i) = 0 at construction.
struct CovariantContext {
  ActionContext action;
  int n;

  CovariantContext(ActionContext action, int n);
};

// Element of k[V] (x) W as the coefficient vector (f_1, ..., f_n).
class Covariant {
public:
  Covariant(const CovariantContext& cctx, std::vector<Polynomial> coeffs);
  static Covariant zero(const CovariantContext& cctx);

  int components() const { return static_cast<int>(coeffs_.size()); }
  const Polynomial& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // Max total degree over nonzero components; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  Covariant operator+(const Covariant& o) const;
  Covariant operator-(const Covariant& o) const;
  // Multiplication by a scalar polynomial, componentwise.
  Covariant times(const Polynomial& f) const;

  std::string to_string() const;

  friend bool operator==(const Covariant& a, const Covariant& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  std::vector<Polynomial> coeffs_;
};

// Coefficient vector of sigma(w_i) = w_i - w_{i-1} + ... +- w_1.
std::vector<Fp> sigma_w(const CovariantContext& cctx, int i);

Covariant apply_sigma(const CovariantContext& cctx, const Covariant& phi);
bool is_invariant(const CovariantContext& cctx, const Covariant& phi);

// Theta(f) = sum_i Delta^{i-1}(f) w_i; requires Delta^n(f) = 0.
Covariant theta(const CovariantContext& cctx, const Polynomial& f);

// Inverse of theta on invariant covariants; certifies the Delta chain.
Polynomial extract(const CovariantContext& cctx, const Covariant& phi);

// Largest i with f_i != 0; 0 for the zero covariant.
int support(const Covariant& phi);

Covariant parse_covariant(const CovariantContext& cctx, std::string_view text);

}  // namespace covf
