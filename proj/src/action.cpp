#include "covf/action.hpp"

#include <stdexcept>
#include <string>

#include "covf/fpmatrix.hpp"

namespace covf {

ActionContext::ActionContext(PrimeField field_in, int m_in)
    : field(field_in), m(m_in) {
  if (m < 2 || static_cast<std::uint64_t>(m) > field.p()) {
    throw std::invalid_argument("ActionContext: need 2 <= m <= p for V_m indecomposable");
  }
}

namespace {

void require_ambient(const ActionContext& ctx, const Polynomial& f) {
  if (f.vars() != ctx.m || !(f.field() == ctx.field)) {
    throw std::invalid_argument("cyclic_action: polynomial ambient does not match context");
  }
}

// Images of the variables under sigma^k: x_i -> sum_t C(k,t) x_{i+t}.
std::vector<Polynomial> sigma_images(const ActionContext& ctx, unsigned k) {
  std::vector<Polynomial> images;
  images.reserve(static_cast<std::size_t>(ctx.m));
  for (int i = 1; i <= ctx.m; ++i) {
    Polynomial img(ctx.field, ctx.m);
    for (int t = 0; i + t <= ctx.m; ++t) {
      Fp c = ctx.field.binom(k, static_cast<unsigned>(t));
      if (c != 0) {
        img.add_term(Monomial::variable(ctx.m, i + t), static_cast<std::int64_t>(c));
      }
    }
    images.push_back(std::move(img));
  }
  return images;
}

}  // namespace

Polynomial sigma(const ActionContext& ctx, const Polynomial& f) {
  require_ambient(ctx, f);
  return f.substituted(sigma_images(ctx, 1));
}

Polynomial sigma_power(const ActionContext& ctx, const Polynomial& f, unsigned k) {
  require_ambient(ctx, f);
  return f.substituted(sigma_images(ctx, k));
}

Polynomial delta(const ActionContext& ctx, const Polynomial& f) {
  return sigma(ctx, f) - f;
}

Polynomial delta_power(const ActionContext& ctx, const Polynomial& f, unsigned k) {
  require_ambient(ctx, f);
  Polynomial out(f);
  for (unsigned i = 0; i < k && !out.is_zero(); ++i) out = delta(ctx, out);
  return out;
}

unsigned weight(const ActionContext& ctx, const Polynomial& f) {
  require_ambient(ctx, f);
  unsigned w = 1;
  Polynomial g = delta(ctx, f);
  while (!g.is_zero()) {
    ++w;
    if (w > ctx.field.p()) {
      throw std::logic_error("weight: Delta^p != 0, action is inconsistent");
    }
    g = delta(ctx, g);
  }
  return w;
}

Polynomial norm(const ActionContext& ctx, int j) {
  if (j < 1 || j > ctx.m) throw std::invalid_argument("norm: variable index out of range");
  Polynomial out = Polynomial::one(ctx.field, ctx.m);
  Polynomial factor = Polynomial::variable(ctx.field, ctx.m, j);
  for (std::uint64_t i = 0; i < ctx.field.p(); ++i) {
    out = out * factor;
    factor = sigma(ctx, factor);
  }
  return out;
}

Polynomial apply_diff_monomial(const ActionContext& ctx, const Polynomial& f,
                               const std::vector<unsigned>& e) {
  require_ambient(ctx, f);
  if (static_cast<int>(e.size()) != ctx.m) {
    throw std::invalid_argument("apply_diff_monomial: exponent vector length mismatch");
  }
  Polynomial out(f);
  for (int j = 1; j <= ctx.m; ++j) {
    for (unsigned t = 0; t < e[static_cast<std::size_t>(j - 1)]; ++t) {
      out = out.partial(j);
    }
  }
  return out;
}

unsigned predicted_diff_weight(const ActionContext& ctx, const std::vector<unsigned>& e) {
  if (static_cast<int>(e.size()) != ctx.m) {
    throw std::invalid_argument("predicted_diff_weight: exponent vector length mismatch");
  }
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += i * static_cast<std::uint64_t>(e[i]);
  if (d >= ctx.field.p()) {
    throw std::domain_error("predicted_diff_weight: d = " + std::to_string(d) +
                            " out of lemma range (requires d < p)");
  }
  return static_cast<unsigned>(d) + 1;
}

bool verify_dual_action(const ActionContext& ctx, const Polynomial& f) {
  require_ambient(ctx, f);
  const int m = ctx.m;
  // A from sigma x_i = sum_j a_ij x_j; invert by elimination on [A | I].
  FpMatrix aug(ctx.field, static_cast<std::size_t>(m), static_cast<std::size_t>(2 * m));
  for (int i = 0; i < m; ++i) {
    aug.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    if (i + 1 < m) aug.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) = 1;
    aug.at(static_cast<std::size_t>(i), static_cast<std::size_t>(m + i)) = 1;
  }
  // Gauss-Jordan: reuse rank elimination over the left block
  // (A is unipotent upper triangular so full pivots always exist).
  {
    const std::uint64_t p = ctx.field.p();
    for (int c = 0; c < m; ++c) {
      std::size_t cc = static_cast<std::size_t>(c);
      for (int i = 0; i < m; ++i) {
        if (i == c) continue;
        Fp fct = aug.at(static_cast<std::size_t>(i), cc) % p;
        if (fct == 0) continue;
        Fp fneg = p - fct;
        for (int j = 0; j < 2 * m; ++j) {
          std::size_t jj = static_cast<std::size_t>(j);
          aug.at(static_cast<std::size_t>(i), jj) =
              (aug.at(static_cast<std::size_t>(i), jj) +
               fneg * aug.at(cc, jj)) % p;
        }
      }
    }
  }
  Polynomial sf = sigma(ctx, f);
  for (int i = 1; i <= m; ++i) {
    Polynomial lhs = sigma(ctx, f.partial(i));
    Polynomial rhs(ctx.field, m);
    for (int j = 1; j <= m; ++j) {
      Fp b_ji = aug.at(static_cast<std::size_t>(j - 1),
                       static_cast<std::size_t>(m + i - 1));
      if (b_ji != 0) rhs = rhs + sf.partial(j).scaled(b_ji);
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace covf
