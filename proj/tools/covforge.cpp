#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "covf/generators.hpp"
#include "covf/hilbert.hpp"
#include "covf/verifier.hpp"

namespace {

using covf::HilbertSeries;
using covf::PrimeField;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream os(path);
      if (!os) throw std::runtime_error("cannot open output path: " + path);
      os << text << "\n";
    }
  }
};

json series_json(const HilbertSeries& s, unsigned D) {
  json out;
  out["series"] = s.to_string();
  out["numerator"] = s.numerator_string();
  out["denominator"] = s.denominator();
  out["expansion"] = s.expand(D);
  return out;
}

unsigned resolve_cutoff(const PrimeField& field, int m, std::optional<unsigned> flag) {
  unsigned D = flag.value_or(covf::default_cutoff(field, m));
  if (D > covf::kDegreeCap) {
    throw CLI::ValidationError("--max-degree exceeds the hard cap " +
                               std::to_string(covf::kDegreeCap));
  }
  return D;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covforge: exact covariant modules for Z/p acting on k[V_m], char p"};
  app.require_subcommand(1);

  std::uint64_t p = 0;
  int m = 2;
  int n = 1;
  std::optional<unsigned> max_degree;
  std::string format = "json";
  std::string output_path;
  bool as_printed = false;

  auto add_common = [&](CLI::App* cmd, bool needs_n) {
    cmd->add_option("--p", p, "prime p")->required();
    cmd->add_option("--m", m, "number of variables (2 or 3)");
    if (needs_n) cmd->add_option("--n", n, "dimension of the target module W = V_n");
    cmd->add_option("--max-degree", max_degree, "degree cutoff (default 3p or 2p+6)");
    cmd->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--output", output_path, "write to file instead of stdout");
  };

  CLI::App* hilbert = app.add_subcommand("hilbert", "closed-form series with expansion");
  std::string which = "kn";
  int hk_k = 1;
  add_common(hilbert, true);
  hilbert->add_option("--series", which, "invariants|kn|ign|hk")
      ->check(CLI::IsMember({"invariants", "kn", "ign", "hk"}));
  hilbert->add_option("--k", hk_k, "k for --series hk");
  hilbert->add_flag("--as-printed", as_printed, "use the paper's printed hkv3 numerator");

  CLI::App* decompose = app.add_subcommand("decompose", "V_k multiplicities per degree");
  add_common(decompose, false);

  CLI::App* generators = app.add_subcommand("generators", "emit the covariant generating set");
  add_common(generators, true);

  CLI::App* verify = app.add_subcommand("verify", "run certification suites; exit 0 iff pass");
  std::vector<std::string> suites{"all"};
  std::string generators_file;
  std::size_t samples = 200;
  add_common(verify, true);
  verify->add_option("--suite", suites, "free|hilbert|weights|all")
      ->check(CLI::IsMember({"free", "hilbert", "weights", "all"}));
  verify->add_option("--generators-file", generators_file,
                     "verify a generator set loaded from JSON instead of constructing one");
  verify->add_option("--samples", samples, "sample count for the weight-lemma suite");

  CLI::App* expand_norm = app.add_subcommand("expand-norm", "Sezer-Shank expansion of N_1");
  add_common(expand_norm, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    PrimeField field(p);
    Output out{output_path};
    const bool text_mode = format == "text";

    if (hilbert->parsed()) {
      unsigned D = resolve_cutoff(field, m, max_degree);
      HilbertSeries s;
      std::vector<std::string> errata;
      if (which == "invariants") {
        s = covf::h_invariants(m, field);
      } else if (which == "kn") {
        s = covf::h_Kn(m, n, field, &errata);
      } else if (which == "ign") {
        s = covf::h_IGn(m, n, field, &errata);
      } else {
        s = m == 2 ? covf::hk_v2(hk_k, field)
                   : covf::hk_v3(hk_k, field,
                                 as_printed ? covf::HkForm::kAsPrinted
                                            : covf::HkForm::kSignCorrected);
      }
      if (text_mode) {
        std::string msg = s.to_string() + "\nexpansion:";
        for (long long c : s.expand(D)) msg += " " + std::to_string(c);
        out.write(msg);
      } else {
        json doc;
        doc["schema"] = "covariant-forge/1";
        doc["p"] = p;
        doc["m"] = m;
        doc["n"] = n;
        doc.update(series_json(s, D));
        doc["errata"] = errata;
        out.write(doc.dump(2));
      }
      return kExitPass;
    }

    if (decompose->parsed()) {
      unsigned D = resolve_cutoff(field, m, max_degree);
      json rows = json::array();
      std::string text;
      for (unsigned d = 0; d <= D; ++d) {
        covf::MultiplicityTable table = covf::brute_multiplicities(field, m, d);
        if (text_mode) {
          text += "d=" + std::to_string(d) + " mu=[";
          for (std::size_t k = 0; k < table.mu.size(); ++k) {
            if (k) text += ",";
            text += std::to_string(table.mu[k]);
          }
          text += "] dim=" + std::to_string(table.total_dimension()) + "\n";
        } else {
          json row;
          row["d"] = d;
          row["mu"] = table.mu;
          row["dim"] = table.total_dimension();
          rows.push_back(row);
        }
      }
      if (text_mode) {
        out.write(text);
      } else {
        json doc;
        doc["schema"] = "covariant-forge/1";
        doc["p"] = p;
        doc["m"] = m;
        doc["degrees"] = rows;
        out.write(doc.dump(2));
      }
      return kExitPass;
    }

    if (generators->parsed()) {
      covf::GeneratorSet gens =
          m == 2 ? covf::v2_generators(field, n) : covf::v3_generators(field, n);
      if (text_mode) {
        std::string text;
        for (const auto& g : gens.members) {
          text += g.label + " (degree " + std::to_string(g.degree) + ", support " +
                  std::to_string(g.support) + "): " + g.covariant.to_string() + "\n";
        }
        out.write(text);
      } else {
        out.write(gens.to_json());
      }
      return kExitPass;
    }

    if (expand_norm->parsed()) {
      covf::ActionContext actx(field, 3);
      std::vector<covf::Polynomial> coeffs = covf::sezer_shank_expansion(field);
      covf::Polynomial x3 = covf::Polynomial::variable(field, 3, 3);
      covf::Polynomial recon(field, 3);
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        recon = recon + coeffs[i] * x3.pow(static_cast<unsigned>(i));
      }
      bool matches = recon == covf::norm(actx, 1);
      json nondiv = json::array();
      bool nondiv_ok = true;
      for (unsigned l = 1; 2 * l <= field.p() - 1; ++l) {
        covf::Polynomial d1l = covf::apply_diff_monomial(actx, covf::norm(actx, 1), {l, 0, 0});
        bool divisible = d1l.divisible_by(x3.pow(l));
        nondiv_ok = nondiv_ok && !divisible;
        json row;
        row["l"] = l;
        row["divisible"] = divisible;
        nondiv.push_back(row);
      }
      if (text_mode) {
        std::string text = "reconstruction matches N1: ";
        text += matches ? "yes" : "NO";
        out.write(text);
      } else {
        json doc;
        doc["schema"] = "covariant-forge/1";
        doc["p"] = p;
        json cs = json::array();
        for (const auto& c : coeffs) cs.push_back(c.to_string());
        doc["coefficients"] = cs;
        doc["reconstruction_matches_norm"] = matches;
        doc["nondivisibility"] = nondiv;
        out.write(doc.dump(2));
      }
      return matches && nondiv_ok ? kExitPass : kExitVerificationFailure;
    }

    // verify
    unsigned D = resolve_cutoff(field, m, max_degree);
    bool run_all = std::find(suites.begin(), suites.end(), "all") != suites.end();
    auto wants = [&](const char* name) {
      return run_all || std::find(suites.begin(), suites.end(), name) != suites.end();
    };
    json reports = json::array();
    bool pass = true;
    if (wants("free")) {
      covf::GeneratorSet gens =
          !generators_file.empty()
              ? [&] {
                  std::ifstream is(generators_file);
                  if (!is) throw std::runtime_error("cannot read " + generators_file);
                  std::string text((std::istreambuf_iterator<char>(is)),
                                   std::istreambuf_iterator<char>());
                  return covf::parse_generator_set(text);
                }()
          : m == 2 ? covf::v2_generators(field, n)
                   : covf::v3_generators(field, n);
      covf::VerificationReport r = covf::verify_free_generation(gens, D);
      reports.push_back(json::parse(r.to_json()));
      pass = pass && r.pass;
    }
    if (wants("hilbert")) {
      covf::VerificationReport r = covf::verify_hilbert_consistency(field, m, n, D);
      reports.push_back(json::parse(r.to_json()));
      pass = pass && r.pass;
    }
    if (wants("weights")) {
      covf::VerificationReport r = covf::verify_weight_lemmas(field, m, samples);
      reports.push_back(json::parse(r.to_json()));
      pass = pass && r.pass;
    }
    if (text_mode) {
      std::string text = pass ? "PASS" : "FAIL";
      out.write(text);
    } else {
      json doc;
      doc["schema"] = "covariant-forge/1";
      doc["reports"] = reports;
      doc["pass"] = pass;
      out.write(doc.dump(2));
    }
    return pass ? kExitPass : kExitVerificationFailure;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
