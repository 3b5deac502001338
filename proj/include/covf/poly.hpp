#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "covf/fp.hpp"

namespace covf {

// Exponent vector of x_1^{e_1} ... x_m^{e_m}.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static Monomial one(int m) { return Monomial(std::vector<unsigned>(m, 0)); }
  static Monomial variable(int m, int j);  // x_j, 1-based

  int vars() const { return static_cast<int>(exps_.size()); }
  unsigned degree() const;
  unsigned exp(int j) const { return exps_.at(j - 1); }  // 1-based
  const std::vector<unsigned>& exps() const { return exps_; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;       // this | o, exponentwise
  Monomial quotient_by(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

private:
  std::vector<unsigned> exps_;
};

// Graded-lexicographic order with x_1 > x_2 > ... > x_m.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(b, a);
  }
};

// Sparse multivariate polynomial over F_p in m variables. Canonical form:
// no stored coefficient is zero; the zero polynomial has no terms.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Fp, GrlexGreater>;

  Polynomial(PrimeField field, int m);

  static Polynomial zero(PrimeField field, int m) { return Polynomial(field, m); }
  static Polynomial constant(PrimeField field, int m, std::int64_t c);
  static Polynomial one(PrimeField field, int m) { return constant(field, m, 1); }
  static Polynomial variable(PrimeField field, int m, int j);
  static Polynomial term(PrimeField field, int m, Monomial mono, std::int64_t c);

  const PrimeField& field() const { return field_; }
  int vars() const { return m_; }

  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Fp coeff(const Monomial& mono) const;
  // Leading term under grlex (largest monomial). Polynomial must be nonzero.
  const std::pair<const Monomial, Fp>& leading_term() const;

  // Accumulate c into the coefficient of mono, renormalizing.
  void add_term(const Monomial& mono, std::int64_t c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Fp c) const;
  Polynomial negated() const;
  Polynomial pow(unsigned e) const;

  // Formal partial derivative with respect to x_j, coefficients mod p.
  Polynomial partial(int j) const;

  // Simultaneous substitution x_j -> images[j-1]; images share the ambient.
  Polynomial substituted(const std::vector<Polynomial>& images) const;

  // Exact-division test: true iff f = g*h for some polynomial h.
  bool divisible_by(const Polynomial& g) const;

  std::string to_string() const;
  static Polynomial parse(PrimeField field, int m, std::string_view text);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.m_ == b.m_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

private:
  void require_same_ambient(const Polynomial& o) const;

  PrimeField field_;
  int m_;
  TermMap terms_;
};

// All monomials of total degree d in m variables, descending grlex.
std::vector<Monomial> graded_basis(int m, unsigned d);

// C(d+m-1, m-1), the size of graded_basis(m, d), as an exact integer.
std::uint64_t graded_dimension(int m, unsigned d);

}  // namespace covf
