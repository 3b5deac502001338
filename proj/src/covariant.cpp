#include "covf/covariant.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace covf {

namespace {

std::vector<Fp> sigma_w_row(const PrimeField& field, int n, int i) {
  std::vector<Fp> out(static_cast<std::size_t>(n), 0);
  for (int j = i; j >= 1; --j) {
    Fp sign = ((i - j) % 2 == 0) ? 1 : field.p() - 1;
    out[static_cast<std::size_t>(j - 1)] = sign;
  }
  return out;
}

}  // namespace

CovariantContext::CovariantContext(ActionContext action_in, int n_in)
    : action(action_in), n(n_in) {
  if (n < 1 || static_cast<std::uint64_t>(n) > action.field.p()) {
    throw std::invalid_argument("CovariantContext: need 1 <= n <= p for W indecomposable");
  }
  // Eq. Delta(w_{i+1}) + sigma(w_i) = 0 pins the alternating signs.
  const PrimeField& F = action.field;
  for (int i = 1; i < n; ++i) {
    std::vector<Fp> dw = sigma_w_row(F, n, i + 1);
    dw[static_cast<std::size_t>(i)] = F.sub(dw[static_cast<std::size_t>(i)], 1);
    std::vector<Fp> sw = sigma_w_row(F, n, i);
    for (int j = 0; j < n; ++j) {
      if (F.add(dw[static_cast<std::size_t>(j)], sw[static_cast<std::size_t>(j)]) != 0) {
        throw std::logic_error("CovariantContext: W-action fails Delta(w_{i+1}) + sigma(w_i) = 0");
      }
    }
  }
}

Covariant::Covariant(const CovariantContext& cctx, std::vector<Polynomial> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != cctx.n) {
    throw std::invalid_argument("Covariant: expected exactly n coefficient polynomials");
  }
  for (const auto& f : coeffs_) {
    if (f.vars() != cctx.action.m || !(f.field() == cctx.action.field)) {
      throw std::invalid_argument("Covariant: coefficient ambient mismatch");
    }
  }
}

Covariant Covariant::zero(const CovariantContext& cctx) {
  std::vector<Polynomial> cs(static_cast<std::size_t>(cctx.n),
                             Polynomial::zero(cctx.action.field, cctx.action.m));
  return Covariant(cctx, std::move(cs));
}

bool Covariant::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Polynomial& f) { return f.is_zero(); });
}

int Covariant::degree() const {
  int d = -1;
  for (const auto& f : coeffs_) d = std::max(d, f.degree());
  return d;
}

bool Covariant::is_homogeneous() const {
  int d = -1;
  for (const auto& f : coeffs_) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) return false;
    if (d >= 0 && f.degree() != d) return false;
    d = f.degree();
  }
  return true;
}

Covariant Covariant::operator+(const Covariant& o) const {
  if (o.coeffs_.size() != coeffs_.size()) {
    throw std::invalid_argument("Covariant: component count mismatch");
  }
  std::vector<Polynomial> cs;
  cs.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) cs.push_back(coeffs_[i] + o.coeffs_[i]);
  Covariant out(*this);
  out.coeffs_ = std::move(cs);
  return out;
}

Covariant Covariant::operator-(const Covariant& o) const {
  if (o.coeffs_.size() != coeffs_.size()) {
    throw std::invalid_argument("Covariant: component count mismatch");
  }
  Covariant out(*this);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return out;
}

Covariant Covariant::times(const Polynomial& f) const {
  Covariant out(*this);
  for (auto& c : out.coeffs_) c = c * f;
  return out;
}

std::string Covariant::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << " | ";
    os << coeffs_[i].to_string();
  }
  return os.str();
}

std::vector<Fp> sigma_w(const CovariantContext& cctx, int i) {
  if (i < 1 || i > cctx.n) throw std::invalid_argument("sigma_w: basis index out of range");
  return sigma_w_row(cctx.action.field, cctx.n, i);
}

Covariant apply_sigma(const CovariantContext& cctx, const Covariant& phi) {
  if (phi.components() != cctx.n) {
    throw std::invalid_argument("apply_sigma: covariant does not match context");
  }
  const PrimeField& F = cctx.action.field;
  std::vector<Polynomial> out(static_cast<std::size_t>(cctx.n),
                              Polynomial::zero(F, cctx.action.m));
  for (int i = 1; i <= cctx.n; ++i) {
    if (phi.coeff(i).is_zero()) continue;
    Polynomial sf = sigma(cctx.action, phi.coeff(i));
    std::vector<Fp> row = sigma_w(cctx, i);
    for (int j = 1; j <= i; ++j) {
      Fp c = row[static_cast<std::size_t>(j - 1)];
      if (c != 0) {
        out[static_cast<std::size_t>(j - 1)] =
            out[static_cast<std::size_t>(j - 1)] + sf.scaled(c);
      }
    }
  }
  return Covariant(cctx, std::move(out));
}

bool is_invariant(const CovariantContext& cctx, const Covariant& phi) {
  return apply_sigma(cctx, phi) == phi;
}

Covariant theta(const CovariantContext& cctx, const Polynomial& f) {
  std::vector<Polynomial> cs;
  cs.reserve(static_cast<std::size_t>(cctx.n));
  Polynomial g(f);
  for (int i = 0; i < cctx.n; ++i) {
    cs.push_back(g);
    g = delta(cctx.action, g);
  }
  if (!g.is_zero()) {
    throw std::domain_error("theta: weight(f) = " + std::to_string(weight(cctx.action, f)) +
                            " exceeds n = " + std::to_string(cctx.n));
  }
  return Covariant(cctx, std::move(cs));
}

Polynomial extract(const CovariantContext& cctx, const Covariant& phi) {
  if (!is_invariant(cctx, phi)) {
    throw std::domain_error("extract: covariant is not G-invariant");
  }
  for (int i = 1; i < cctx.n; ++i) {
    if (!(delta(cctx.action, phi.coeff(i)) == phi.coeff(i + 1))) {
      throw std::logic_error("extract: Delta chain certification failed at component " +
                             std::to_string(i));
    }
  }
  if (!delta(cctx.action, phi.coeff(cctx.n)).is_zero()) {
    throw std::logic_error("extract: Delta(f_n) != 0, action is inconsistent");
  }
  return phi.coeff(1);
}

int support(const Covariant& phi) {
  for (int i = phi.components(); i >= 1; --i) {
    if (!phi.coeff(i).is_zero()) return i;
  }
  return 0;
}

Covariant parse_covariant(const CovariantContext& cctx, std::string_view text) {
  std::vector<Polynomial> cs;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = text.find('|', start);
    std::string_view piece =
        bar == std::string_view::npos ? text.substr(start) : text.substr(start, bar - start);
    cs.push_back(Polynomial::parse(cctx.action.field, cctx.action.m, piece));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return Covariant(cctx, std::move(cs));
}

}  // namespace covf
