#include "covf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace covf {

Monomial Monomial::variable(int m, int j) {
  if (j < 1 || j > m) throw std::invalid_argument("Monomial: variable index out of range");
  std::vector<unsigned> e(m, 0);
  e[j - 1] = 1;
  return Monomial(std::move(e));
}

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::times(const Monomial& o) const {
  if (o.vars() != vars()) throw std::invalid_argument("Monomial: variable count mismatch");
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
  if (o.vars() != vars()) throw std::invalid_argument("Monomial: variable count mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_by(const Monomial& o) const {
  if (!o.divides(*this)) throw std::invalid_argument("Monomial: not divisible");
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.exps_[i];
  return Monomial(std::move(e));
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree();
  unsigned db = b.degree();
  if (da != db) return da < db;
  return a.exps() < b.exps();  // lexicographic, x_1 dominant
}

Polynomial::Polynomial(PrimeField field, int m) : field_(field), m_(m) {
  if (m < 1) throw std::invalid_argument("Polynomial: need at least one variable");
}

Polynomial Polynomial::constant(PrimeField field, int m, std::int64_t c) {
  Polynomial out(field, m);
  out.add_term(Monomial::one(m), c);
  return out;
}

Polynomial Polynomial::variable(PrimeField field, int m, int j) {
  Polynomial out(field, m);
  out.add_term(Monomial::variable(m, j), 1);
  return out;
}

Polynomial Polynomial::term(PrimeField field, int m, Monomial mono, std::int64_t c) {
  if (mono.vars() != m) throw std::invalid_argument("Polynomial: monomial arity mismatch");
  Polynomial out(field, m);
  out.add_term(mono, c);
  return out;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, static_cast<int>(mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first.degree();
  for (const auto& [mono, c] : terms_) {
    if (mono.degree() != d) return false;
  }
  return true;
}

Fp Polynomial::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? 0 : it->second;
}

const std::pair<const Monomial, Fp>& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading_term: zero polynomial");
  return *terms_.begin();
}

void Polynomial::add_term(const Monomial& mono, std::int64_t c) {
  if (mono.vars() != m_) throw std::invalid_argument("Polynomial: monomial arity mismatch");
  Fp v = field_.add(coeff(mono), field_.reduce(c));
  if (v == 0) {
    terms_.erase(mono);
  } else {
    terms_[mono] = v;
  }
}

void Polynomial::require_same_ambient(const Polynomial& o) const {
  if (m_ != o.m_ || !(field_ == o.field_)) {
    throw std::invalid_argument("Polynomial: ambient (m, p) mismatch");
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ambient(o);
  Polynomial out(*this);
  for (const auto& [mono, c] : o.terms_) out.add_term(mono, static_cast<std::int64_t>(c));
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ambient(o);
  Polynomial out(*this);
  for (const auto& [mono, c] : o.terms_) {
    out.add_term(mono, -static_cast<std::int64_t>(c));
  }
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ambient(o);
  Polynomial out(field_, m_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      out.add_term(ma.times(mb), static_cast<std::int64_t>(field_.mul(ca, cb)));
    }
  }
  return out;
}

Polynomial Polynomial::scaled(Fp c) const {
  Polynomial out(field_, m_);
  c %= field_.p();
  if (c == 0) return out;
  for (const auto& [mono, v] : terms_) out.terms_[mono] = field_.mul(v, c);
  return out;
}

Polynomial Polynomial::negated() const { return scaled(field_.p() - 1); }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = one(field_, m_);
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1) out = out * base;
    if (e >>= 1) base = base * base;
  }
  return out;
}

Polynomial Polynomial::partial(int j) const {
  if (j < 1 || j > m_) throw std::invalid_argument("poly_partial: variable index out of range");
  Polynomial out(field_, m_);
  for (const auto& [mono, c] : terms_) {
    unsigned e = mono.exp(j);
    if (e == 0) continue;
    Fp scaled = field_.mul(c, e % field_.p());
    if (scaled == 0) continue;
    std::vector<unsigned> exps = mono.exps();
    exps[j - 1] -= 1;
    out.add_term(Monomial(std::move(exps)), static_cast<std::int64_t>(scaled));
  }
  return out;
}

Polynomial Polynomial::substituted(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != m_) {
    throw std::invalid_argument("substituted: need one image per variable");
  }
  for (const auto& img : images) require_same_ambient(img);
  Polynomial out(field_, m_);
  for (const auto& [mono, c] : terms_) {
    Polynomial acc = constant(field_, m_, static_cast<std::int64_t>(c));
    for (int j = 1; j <= m_; ++j) {
      unsigned e = mono.exp(j);
      if (e > 0) acc = acc * images[j - 1].pow(e);
    }
    out = out + acc;
  }
  return out;
}

bool Polynomial::divisible_by(const Polynomial& g) const {
  require_same_ambient(g);
  if (g.is_zero()) throw std::invalid_argument("poly_is_divisible: zero divisor");
  Polynomial r(*this);
  const auto& [glt, gc] = g.leading_term();
  Fp ginv = field_.inv(gc);
  while (!r.is_zero()) {
    const auto& [rlt, rc] = r.leading_term();
    if (!glt.divides(rlt)) return false;
    Polynomial q = term(field_, m_, rlt.quotient_by(glt),
                        static_cast<std::int64_t>(field_.mul(rc, ginv)));
    r = r - q * g;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool is_const = mono.degree() == 0;
    if (c != 1 || is_const) os << c;
    bool printed = (c != 1 || is_const);
    for (int j = 1; j <= m_; ++j) {
      unsigned e = mono.exp(j);
      if (e == 0) continue;
      if (printed) os << "*";
      os << "x" << j;
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::uint64_t number() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("polynomial parse: expected number at offset " +
                                  std::to_string(i));
    }
    std::uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (v > (std::uint64_t{1} << 62)) {
        throw std::invalid_argument("polynomial parse: number too large");
      }
      ++i;
    }
    return v;
  }
};

}  // namespace

Polynomial Polynomial::parse(PrimeField field, int m, std::string_view text) {
  Polynomial out(field, m);
  Cursor cur{text};
  if (cur.done()) throw std::invalid_argument("polynomial parse: empty input");
  bool more = true;
  while (more) {
    std::uint64_t c = 1;
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      c = cur.number() % field.p();
      saw_factor = true;
    }
    std::vector<unsigned> exps(m, 0);
    while (true) {
      if (saw_factor && !cur.accept('*')) break;
      if (cur.peek() != 'x') {
        if (saw_factor) {
          throw std::invalid_argument("polynomial parse: expected variable after '*'");
        }
        break;
      }
      cur.accept('x');
      std::uint64_t idx = cur.number();
      if (idx < 1 || idx > static_cast<std::uint64_t>(m)) {
        throw std::invalid_argument("polynomial parse: variable x" + std::to_string(idx) +
                                    " out of range for m=" + std::to_string(m));
      }
      std::uint64_t e = 1;
      if (cur.accept('^')) e = cur.number();
      if (e > 100000) throw std::invalid_argument("polynomial parse: exponent too large");
      exps[idx - 1] += static_cast<unsigned>(e);
      saw_factor = true;
    }
    if (!saw_factor) {
      throw std::invalid_argument("polynomial parse: expected term at offset " +
                                  std::to_string(cur.i));
    }
    out.add_term(Monomial(exps), static_cast<std::int64_t>(c));
    if (cur.done()) {
      more = false;
    } else if (cur.accept('+')) {
      more = true;
    } else {
      throw std::invalid_argument("polynomial parse: unexpected character at offset " +
                                  std::to_string(cur.i));
    }
  }
  return out;
}

namespace {

void enumerate_monomials(int m, unsigned d, std::vector<unsigned>& prefix,
                         std::vector<Monomial>& out) {
  if (static_cast<int>(prefix.size()) == m - 1) {
    std::vector<unsigned> e(prefix);
    e.push_back(d);
    out.emplace_back(std::move(e));
    return;
  }
  for (int e = static_cast<int>(d); e >= 0; --e) {
    prefix.push_back(static_cast<unsigned>(e));
    enumerate_monomials(m, d - static_cast<unsigned>(e), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> graded_basis(int m, unsigned d) {
  if (m < 1) throw std::invalid_argument("graded_basis: need at least one variable");
  std::vector<Monomial> out;
  out.reserve(graded_dimension(m, d));
  std::vector<unsigned> prefix;
  enumerate_monomials(m, d, prefix, out);
  return out;
}

std::uint64_t graded_dimension(int m, unsigned d) {
  // C(d+m-1, m-1) with m small
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (int i = 1; i <= m - 1; ++i) {
    num *= d + static_cast<unsigned>(i);
    den *= static_cast<std::uint64_t>(i);
  }
  return num / den;
}

}  // namespace covf
