#pragma once

#include <cstdint>

namespace covf {

// Canonical residue in [0, p). All PrimeField operations keep this invariant.
using Fp = std::uint64_t;

bool is_prime(std::uint64_t n);

// Exact arithmetic context for F_p, p a machine-word prime (p < 2^31 so that
// products of residues fit in 64 bits without widening).
class PrimeField {
public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  bool is_odd() const { return p_ != 2; }

  // Canonical representative of an arbitrary signed integer.
  Fp reduce(std::int64_t a) const;

  Fp add(Fp a, Fp b) const { return (a + b) % p_; }
  Fp sub(Fp a, Fp b) const { return (a + p_ - b) % p_; }
  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
  Fp mul(Fp a, Fp b) const { return (a * b) % p_; }
  Fp pow(Fp a, std::uint64_t e) const;

  // Multiplicative inverse; rejects zero.
  Fp inv(Fp a) const;

  // C(n, k) mod p by Lucas' theorem; k > n yields 0. Supports arguments far
  // beyond word-size binomials (the digit loop is O(min(k_i, n_i - k_i)) per
  // base-p digit).
  Fp binom(std::uint64_t n, std::uint64_t k) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

private:
  Fp binom_digit(std::uint64_t a, std::uint64_t b) const;

  std::uint64_t p_;
};

}  // namespace covf
