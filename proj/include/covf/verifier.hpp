#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covf/generators.hpp"
#include "covf/hilbert.hpp"

namespace covf {

struct DegreeRecord {
  unsigned d = 0;
  long long expected = 0;  // closed-form series route
  long long oracle = 0;    // graded rank route
  long long span = 0;      // rank of the proposed products
  bool free_ok = false;    // rank equals the number of products
};

struct VerificationReport {
  std::uint64_t p = 0;
  int m = 0;
  int n = 0;
  unsigned cutoff = 0;
  std::vector<DegreeRecord> degrees;
  std::vector<std::string> errata;
  bool pass = false;

  std::string to_json() const;
  // First degree whose record fails, or -1 when everything passes.
  int first_failure() const;
};

// Degree-by-degree certificate that `gens` generates the module of degree-<=D
// covariants freely over its algebra: at every degree the products of algebra
// basis monomials with the generators must be independent (free) and must
// span ker(Delta^n) (generated), with dimensions agreeing with the closed
// form. Aborts with a report when the algebra generators fail the
// monomial-count independence precondition.
VerificationReport verify_free_generation(const GeneratorSet& gens, unsigned D);

// Coefficientwise comparison of every in-scope series identity against the
// rank oracle at (p, m, n): decomposition series, invariant-ring series, K_n
// and I^G series (both routes), and the kernel/image sum identity. Printed
// formula deviations are recorded as errata; the oracle stays authoritative.
VerificationReport verify_hilbert_consistency(const PrimeField& field, int m, int n,
                                              unsigned D);

// Exhaustive monomial weight lemma check plus the corrected differential
// weight lemma on pseudorandom products of hsop invariants (fixed seed), and
// the two image-membership instances per n used by the I^G corollary.
VerificationReport verify_weight_lemmas(const PrimeField& field, int m,
                                        std::size_t sample_size);

// Monomials in `algebra` of each degree <= D must be linearly independent.
bool certify_algebra_independence(const std::vector<Polynomial>& algebra, unsigned D,
                                  unsigned* first_failure = nullptr);

}  // namespace covf
