#pragma once

#include <string>
#include <vector>

#include "covf/covariant.hpp"

namespace covf {

struct GeneratorEntry {
  Covariant covariant;
  std::string label;
  unsigned degree = 0;
  int support = 0;
};

// A proposed free generating set for the module of covariants, together with
// the polynomial algebra it is meant to be free over.
struct GeneratorSet {
  CovariantContext context;
  std::vector<Polynomial> algebra;
  std::vector<std::string> algebra_labels;
  std::vector<GeneratorEntry> members;

  std::string to_json() const;
};

GeneratorSet parse_generator_set(const std::string& json_text);

// {Theta(x_1^k) : k = 0..n-1}, free over the whole invariant ring k[x_2, N].
GeneratorSet v2_generators(const PrimeField& field, int n);

// hsop of k[V_3]^G plus the companion norm N_2; all invariance-certified.
struct HsopV3 {
  Polynomial a1, a2, a3, n2;
};
HsopV3 v3_hsop(const PrimeField& field);

// The recursive covariant set S_n over A = k[a_1,a_2,a_3], with the index
// range of the d3^i d2 N_1 family corrected to i = 0..l-1 (|S_n| = 2n).
// n = p is rejected: the differential weight arguments need d < p.
GeneratorSet v3_generators(const PrimeField& field, int n);

// The degree-l and degree-(p-l) elements x_3^l, d1^l N_1 of I^G_{n-1}, with
// explicit Delta^{n-1}-preimage certificates and the k[a_1,a_2] membership
// check. Certificate failures land in `errata`.
struct IngGenerators {
  Polynomial x3_power;
  Polynomial d1_norm;
  unsigned l = 0;
  std::vector<std::string> errata;
};
IngGenerators ing_generators(const PrimeField& field, int n);

// Coefficients A_0..A_p of N_1 = sum A_i x_3^i from the xi_{ik} binomial
// formula; A_0 = x_1^p - x_1 x_2^{p-1} and A_p = A_{p-1} = 0.
std::vector<Polynomial> sezer_shank_expansion(const PrimeField& field);

}  // namespace covf
