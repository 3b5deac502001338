#include "covf/generators.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace covf {

namespace {

using json = nlohmann::ordered_json;

// f = lambda * g with lambda != 0? Returns 0 when not proportional.
Fp proportionality(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const auto& [gm, gc] = g.leading_term();
  Fp fc = f.coeff(gm);
  if (fc == 0) return 0;
  Fp lambda = f.field().mul(fc, f.field().inv(gc));
  return f - g.scaled(lambda) == Polynomial::zero(f.field(), f.vars()) ? lambda : 0;
}

GeneratorEntry make_entry(const CovariantContext& cctx, const Polynomial& f,
                          std::string label) {
  Covariant cov = theta(cctx, f);
  GeneratorEntry entry{cov, std::move(label),
                       static_cast<unsigned>(std::max(cov.degree(), 0)), support(cov)};
  if (!is_invariant(cctx, cov)) {
    throw std::logic_error("generator " + entry.label + " is not invariant");
  }
  return entry;
}

}  // namespace

std::string GeneratorSet::to_json() const {
  json out;
  out["schema"] = "covariant-forge/1";
  out["p"] = context.action.field.p();
  out["m"] = context.action.m;
  out["n"] = context.n;
  out["algebra"] = algebra_labels;
  json gens = json::array();
  for (const auto& g : members) {
    json item;
    item["label"] = g.label;
    item["degree"] = g.degree;
    item["support"] = g.support;
    json coeffs = json::array();
    for (const auto& f : g.covariant.coeffs()) coeffs.push_back(f.to_string());
    item["coeffs"] = coeffs;
    gens.push_back(item);
  }
  out["generators"] = gens;
  return out.dump(2);
}

GeneratorSet parse_generator_set(const std::string& json_text) {
  json in = json::parse(json_text);
  PrimeField field(in.at("p").get<std::uint64_t>());
  int m = in.at("m").get<int>();
  int n = in.at("n").get<int>();
  CovariantContext cctx(ActionContext(field, m), n);

  std::vector<std::string> labels = in.at("algebra").get<std::vector<std::string>>();
  ActionContext actx(field, m);
  std::vector<Polynomial> algebra;
  for (const auto& label : labels) {
    if (label == "x2") {
      algebra.push_back(Polynomial::variable(field, m, 2));
    } else if (label == "N") {
      algebra.push_back(norm(actx, 1));
    } else if (label == "a1") {
      algebra.push_back(v3_hsop(field).a1);
    } else if (label == "a2") {
      algebra.push_back(v3_hsop(field).a2);
    } else if (label == "a3") {
      algebra.push_back(v3_hsop(field).a3);
    } else {
      throw std::invalid_argument("unknown algebra generator label: " + label);
    }
  }

  GeneratorSet out{cctx, std::move(algebra), std::move(labels), {}};
  for (const auto& item : in.at("generators")) {
    std::vector<Polynomial> coeffs;
    for (const auto& text : item.at("coeffs")) {
      coeffs.push_back(Polynomial::parse(field, m, text.get<std::string>()));
    }
    Covariant cov(cctx, std::move(coeffs));
    out.members.push_back(GeneratorEntry{
        cov, item.at("label").get<std::string>(), item.at("degree").get<unsigned>(),
        item.at("support").get<int>()});
  }
  return out;
}

GeneratorSet v2_generators(const PrimeField& field, int n) {
  ActionContext actx(field, 2);
  CovariantContext cctx(actx, n);
  GeneratorSet out{cctx,
                   {Polynomial::variable(field, 2, 2), norm(actx, 1)},
                   {"x2", "N"},
                   {}};
  for (int k = 0; k < n; ++k) {
    Polynomial f = Polynomial::variable(field, 2, 1).pow(static_cast<unsigned>(k));
    out.members.push_back(make_entry(cctx, f, "theta(" + f.to_string() + ")"));
  }
  return out;
}

HsopV3 v3_hsop(const PrimeField& field) {
  if (!field.is_odd()) throw std::domain_error("v3_hsop: requires an odd prime");
  ActionContext actx(field, 3);
  Polynomial x1 = Polynomial::variable(field, 3, 1);
  Polynomial x2 = Polynomial::variable(field, 3, 2);
  Polynomial x3 = Polynomial::variable(field, 3, 3);
  Polynomial a2 = x2 * x2 - x1.scaled(2) * x3 - x2 * x3;
  HsopV3 out{x3, a2, norm(actx, 1), norm(actx, 2)};
  for (const Polynomial* f : {&out.a1, &out.a2, &out.a3, &out.n2}) {
    if (!delta(actx, *f).is_zero()) {
      throw std::logic_error("v3_hsop: constructed element is not invariant");
    }
  }
  return out;
}

GeneratorSet v3_generators(const PrimeField& field, int n) {
  if (!field.is_odd()) throw std::domain_error("v3_generators: requires an odd prime");
  if (n < 1 || static_cast<std::uint64_t>(n) > field.p()) {
    throw std::invalid_argument("v3_generators: need 1 <= n <= p");
  }
  if (static_cast<std::uint64_t>(n) == field.p()) {
    throw std::domain_error(
        "v3_generators: n = p is unsupported (differential weight lemmas need d < p)");
  }
  ActionContext actx(field, 3);
  CovariantContext cctx(actx, n);
  HsopV3 hsop = v3_hsop(field);

  GeneratorSet out{cctx, {hsop.a1, hsop.a2, hsop.a3}, {"a1", "a2", "a3"}, {}};
  out.members.push_back(make_entry(cctx, Polynomial::one(field, 3), "w1"));
  out.members.push_back(make_entry(cctx, hsop.n2, "N2*w1"));

  Polynomial x1 = Polynomial::variable(field, 3, 1);
  Polynomial x2 = Polynomial::variable(field, 3, 2);
  for (int stage = 2; stage <= n; ++stage) {
    unsigned l = static_cast<unsigned>(stage % 2 == 0 ? stage / 2 : (stage - 1) / 2);
    Polynomial power_member(field, 3);
    Polynomial diff_member(field, 3);
    std::string power_label;
    std::string diff_label;
    if (stage % 2 == 0) {
      power_member = x1.pow(l - 1) * x2;
      diff_member = apply_diff_monomial(actx, hsop.a3, {0, 1, l - 1});
      power_label = "theta(" + power_member.to_string() + ")";
      diff_label = "theta(d3^" + std::to_string(l - 1) + " d2 N1)";
    } else {
      power_member = x1.pow(l);
      diff_member = apply_diff_monomial(actx, hsop.a3, {0, 0, l});
      power_label = "theta(" + power_member.to_string() + ")";
      diff_label = "theta(d3^" + std::to_string(l) + " N1)";
    }
    auto add_member = [&](const Polynomial& f, const std::string& label) {
      unsigned w = weight(actx, f);
      if (w != static_cast<unsigned>(stage)) {
        throw std::logic_error("v3_generators: member " + label + " has weight " +
                               std::to_string(w) + ", expected " + std::to_string(stage) +
                               " (weight lemma range violation)");
      }
      out.members.push_back(make_entry(cctx, f, label));
    };
    add_member(power_member, power_label);
    add_member(diff_member, diff_label);
  }
  return out;
}

IngGenerators ing_generators(const PrimeField& field, int n) {
  if (!field.is_odd()) throw std::domain_error("ing_generators: requires an odd prime");
  if (n < 2 || static_cast<std::uint64_t>(n) + 1 > field.p()) {
    throw std::invalid_argument("ing_generators: need 2 <= n <= p-1");
  }
  ActionContext actx(field, 3);
  HsopV3 hsop = v3_hsop(field);
  unsigned l = static_cast<unsigned>(n % 2 == 0 ? n / 2 : (n - 1) / 2);

  IngGenerators out;
  out.l = l;
  out.x3_power = Polynomial::variable(field, 3, 3).pow(l);
  out.d1_norm = apply_diff_monomial(actx, hsop.a3, {l, 0, 0});

  Polynomial x1 = Polynomial::variable(field, 3, 1);
  Polynomial x2 = Polynomial::variable(field, 3, 2);
  Polynomial pre_power =
      n % 2 == 0 ? x1.pow(l - 1) * x2 : x1.pow(l);
  Polynomial pre_diff = n % 2 == 0 ? apply_diff_monomial(actx, hsop.a3, {0, 1, l - 1})
                                   : apply_diff_monomial(actx, hsop.a3, {0, 0, l});

  unsigned k = static_cast<unsigned>(n - 1);
  if (proportionality(delta_power(actx, pre_power, k), out.x3_power) == 0) {
    out.errata.push_back("inggens: Delta^{n-1} preimage certificate failed for x3^l at n=" +
                         std::to_string(n));
  }
  if (proportionality(delta_power(actx, pre_diff, k), out.d1_norm) == 0) {
    out.errata.push_back("inggens: Delta^{n-1} preimage certificate failed for d1^l N1 at n=" +
                         std::to_string(n));
  }

  // deg(d1^l N1) = p - l < p puts it inside k[a1, a2]; certify by rank.
  {
    unsigned target = static_cast<unsigned>(field.p()) - l;
    std::vector<Monomial> basis = graded_basis(3, target);
    std::map<std::vector<unsigned>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].exps()] = i;
    auto vectorize = [&](const Polynomial& f) {
      std::vector<Fp> row(basis.size(), 0);
      for (const auto& [mono, c] : f.terms()) row[index.at(mono.exps())] = c;
      return row;
    };
    FpMatrix span(field, 0, basis.size());
    for (unsigned j = 0; 2 * j <= target; ++j) {
      Polynomial mono = hsop.a1.pow(target - 2 * j) * hsop.a2.pow(j);
      span.append_row(vectorize(mono));
    }
    std::size_t base_rank = span.rank();
    span.append_row(vectorize(out.d1_norm));
    if (span.rank() != base_rank) {
      out.errata.push_back("inggens: d1^l N1 escapes k[a1,a2] at n=" + std::to_string(n));
    }
  }
  return out;
}

std::vector<Polynomial> sezer_shank_expansion(const PrimeField& field) {
  if (!field.is_odd()) throw std::domain_error("sezer_shank_expansion: requires an odd prime");
  const std::uint64_t p = field.p();
  const int m = 3;
  std::vector<Polynomial> A(static_cast<std::size_t>(p) + 1, Polynomial::zero(field, m));

  // A_0 = x_1^p - x_1 x_2^{p-1}
  A[0].add_term(Monomial({static_cast<unsigned>(p), 0, 0}), 1);
  A[0].add_term(Monomial({1, static_cast<unsigned>(p - 1), 0}), -1);

  for (std::uint64_t i = 1; i + 2 <= p; ++i) {
    std::uint64_t k_hi = i <= (p - 1) / 2 ? i + 1 : p - i;
    for (std::uint64_t k = 1; k <= k_hi; ++k) {
      Fp binoms = field.mul(field.binom(p - 2 * k + 1, i - k + 1), field.binom(p - k, k - 1));
      if (binoms == 0) continue;
      Fp sign = (i % 2 == 0) ? 1 : field.p() - 1;
      Fp denom = field.mul(field.pow(2, i), (p - k) % p);
      Fp xi = field.mul(field.mul(sign, binoms), field.inv(denom));
      if (xi == 0) continue;
      A[static_cast<std::size_t>(i)].add_term(
          Monomial({static_cast<unsigned>(k), static_cast<unsigned>(p - i - k), 0}),
          static_cast<std::int64_t>(xi));
    }
  }
  // A_{p-1} = A_p = 0 already.
  return A;
}

}  // namespace covf
