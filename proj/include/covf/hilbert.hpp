#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covf/action.hpp"
#include "covf/fpmatrix.hpp"
#include "covf/poly.hpp"

namespace covf {

// Hard bound on series/oracle degrees; graded pieces stay desk-sized below it.
inline constexpr unsigned kDegreeCap = 96;

// Default verification cutoff: 3p for the plane case, 2p+6 in three variables.
unsigned default_cutoff(const PrimeField& field, int m);

// Exact rational function num(t) / prod_j (1 - t^{a_j}) with integer numerator.
class HilbertSeries {
public:
  HilbertSeries() = default;
  HilbertSeries(std::vector<long long> numerator, std::vector<unsigned> denominator);

  static HilbertSeries zero() { return HilbertSeries({}, {}); }
  static HilbertSeries monomial(unsigned degree, long long c = 1);

  const std::vector<long long>& numerator() const { return num_; }
  const std::vector<unsigned>& denominator() const { return dens_; }
  bool is_zero() const { return num_.empty(); }

  // Exact power-series coefficients c_0..c_D.
  std::vector<long long> expand(unsigned D) const;
  bool nonnegative_to(unsigned D) const;

  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  HilbertSeries scaled(long long c) const;

  // Exact equality of rational functions by cross-multiplied numerators.
  bool equals(const HilbertSeries& o) const;

  std::string to_string() const;
  std::string numerator_string() const;

private:
  void trim();

  std::vector<long long> num_;     // num_[i] = coefficient of t^i
  std::vector<unsigned> dens_;     // sorted factors a of (1 - t^a)
};

// Which reading of the odd-case V_3 decomposition numerator to construct.
enum class HkForm { kSignCorrected, kAsPrinted };

// H_k(k[V_2]) = t^{k-1} / (1 - t^p), 1 <= k <= p-1.
HilbertSeries hk_v2(int k, const PrimeField& field);

// H_k(k[V_3]) candidate closed forms, 1 <= k <= p-1, p odd. Even k yields the
// zero series. The corrected form negates the printed numerator's (t-1)
// factor; the rank oracle remains the authority on both.
HilbertSeries hk_v3(int k, const PrimeField& field, HkForm form = HkForm::kSignCorrected);

// H(k[V_m]^G): 1/((1-t)(1-t^p)) for m=2, (1+t^p)/((1-t)(1-t^2)(1-t^p)) for m=3.
HilbertSeries h_invariants(int m, const PrimeField& field);

// H(K_n) closed form; also assembles the multiplicity-series route and
// records an erratum string on exact-equality mismatch between the routes.
HilbertSeries h_Kn(int m, int n, const PrimeField& field,
                   std::vector<std::string>* errata = nullptr);

// H(I^G_{n-1}) with l as in the K_n proposition; route-checked like h_Kn.
HilbertSeries h_IGn(int m, int n, const PrimeField& field,
                    std::vector<std::string>* errata = nullptr);

// mu_k = multiplicity of V_k in k[V_m]_d, k = 1..p.
struct MultiplicityTable {
  std::uint64_t p = 0;
  int m = 0;
  unsigned d = 0;
  std::vector<long long> mu;  // mu[k-1]

  long long total_dimension() const;
};

// Ranks of Delta powers on one graded piece; shared base for all oracles.
class DeltaRankTable {
public:
  DeltaRankTable(const PrimeField& field, int m, unsigned d);

  long long dimension() const { return dim_; }
  // rank of Delta^j, j = 0..p (r_0 = dim, r_p = 0).
  long long rank(unsigned j) const;
  long long kernel_dim(int n) const;         // dim ker(Delta^n)
  long long image_invariants_dim(int n) const;  // dim (im Delta^n  ∩  ker Delta)
  MultiplicityTable multiplicities() const;

private:
  PrimeField field_;
  int m_;
  unsigned d_;
  long long dim_;
  std::vector<long long> ranks_;             // ranks_[j] = rank Delta^j
  std::vector<FpMatrix> powers_;             // powers_[j] = matrix of Delta^j
  std::vector<std::vector<Fp>> kernel_;      // basis rows of ker Delta
};

// Matrix of Delta on graded_basis(m, d): row i = image of the i-th monomial.
FpMatrix delta_matrix(const PrimeField& field, int m, unsigned d);

MultiplicityTable brute_multiplicities(const PrimeField& field, int m, unsigned d);
long long brute_kernel_dim(const PrimeField& field, int m, int n, unsigned d);
long long brute_IG_dim(const PrimeField& field, int m, int n, unsigned d);

// H(K_{n-1}) + H(I^G_{n-1}) = H(K_n), both by oracle dimensions to D and
// exactly for the closed forms.
bool check_freetest(int m, int n, const PrimeField& field, unsigned D);

}  // namespace covf
