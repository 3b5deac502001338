#include "covf/fp.hpp"

#include <stdexcept>
#include <string>

namespace covf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t f = 5; f * f <= n; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("PrimeField: " + std::to_string(p) +
                                " is not prime");
  }
  if (p >= (std::uint64_t{1} << 31)) {
    throw std::invalid_argument("PrimeField: p must fit in 31 bits");
  }
}

Fp PrimeField::reduce(std::int64_t a) const {
  std::int64_t r = a % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<Fp>(r);
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
  Fp base = a % p_;
  Fp out = 1;
  while (e > 0) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

Fp PrimeField::inv(Fp a) const {
  if (a % p_ == 0) throw std::domain_error("fp_inv: no inverse of zero");
  return pow(a % p_, p_ - 2);
}

Fp PrimeField::binom_digit(std::uint64_t a, std::uint64_t b) const {
  // a, b < p; running product of (a-b+t)/t for t = 1..b
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  Fp num = 1;
  Fp den = 1;
  for (std::uint64_t t = 1; t <= b; ++t) {
    num = mul(num, (a - b + t) % p_);
    den = mul(den, t % p_);
  }
  return mul(num, inv(den));
}

Fp PrimeField::binom(std::uint64_t n, std::uint64_t k) const {
  if (k > n) return 0;
  Fp out = 1;
  while (n > 0 || k > 0) {
    std::uint64_t a = n % p_;
    std::uint64_t b = k % p_;
    if (b > a) return 0;
    out = mul(out, binom_digit(a, b));
    n /= p_;
    k /= p_;
  }
  return out;
}

}  // namespace covf
