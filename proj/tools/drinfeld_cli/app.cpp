#include "app.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "drinfeld/expansions.hpp"
#include "drinfeld/goss.hpp"
#include "drinfeld/hyperderiv.hpp"
#include "drinfeld/io.hpp"
#include "drinfeld/modularity.hpp"
#include "drinfeld/poincare.hpp"
#include "drinfeld/verify.hpp"

namespace drinfeld::cli {

namespace {

using nlohmann::json;

unsigned threads_from_env() {
  const char* v = std::getenv("DRINFELD_THREADS");
  if (!v) return 1;
  const long n = std::atol(v);
  if (n < 0) return 1;
  return n == 0 ? 0 : static_cast<unsigned>(n); // 0 = auto, resolved in expand
}

// default precision when --prec is omitted: enough for a basis expression
// at weight k
unsigned default_prec(unsigned q, unsigned k) {
  const unsigned num = 2 * k * (q + 1);
  return (num + q - 2) / (q - 1);
}

struct FormSpec {
  NamedForm base;
  unsigned order = 0; // hyperderivative order applied on top
};

// "h" | "g" | "fs:S" | "f:K:N" | "e:K" | "D<order>:<base>"
FormSpec parse_form_spec(const FqPtr& f, const std::string& spec) {
  if (!spec.empty() && spec[0] == 'D') {
    const auto colon = spec.find(':');
    if (colon == std::string::npos || colon == 1)
      throw std::invalid_argument("form spec 'D<order>:<form>' is malformed");
    const unsigned order =
        static_cast<unsigned>(std::stoul(spec.substr(1, colon - 1)));
    FormSpec inner = parse_form_spec(f, spec.substr(colon + 1));
    if (inner.base.constant_term)
      throw std::invalid_argument("hyperderivatives act on cuspidal forms only");
    inner.order += order;
    return inner;
  }
  if (spec == "h") return {make_h(f), 0};
  if (spec == "g") return {make_g(f), 0};
  if (spec.rfind("fs:", 0) == 0)
    return {make_f_s(f, static_cast<unsigned>(std::stoul(spec.substr(3)))), 0};
  if (spec.rfind("e:", 0) == 0)
    return {make_eisenstein(f, static_cast<unsigned>(std::stoul(spec.substr(2)))), 0};
  if (spec.rfind("f:", 0) == 0) {
    const auto rest = spec.substr(2);
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("form spec 'f:<k>:<n>' is malformed");
    const unsigned k = static_cast<unsigned>(std::stoul(rest.substr(0, colon)));
    const unsigned n = static_cast<unsigned>(std::stoul(rest.substr(colon + 1)));
    return {make_f_kn(f, k, n), 0};
  }
  throw std::invalid_argument("unknown form spec \"" + spec +
                              "\" (expected h, g, fs:S, f:K:N, e:K or D<n>:<form>)");
}

json absval_json(const AbsVal& v) {
  json j;
  j["zero"] = v.is_zero();
  if (!v.is_zero()) j["exp"] = v.exponent().to_string();
  return j;
}

json certificate_json(const Certificate& c) {
  json j;
  j["q"] = c.q;
  j["k"] = c.k;
  j["n"] = c.n;
  j["root_order"] = c.root_order;
  j["s1"] = absval_json(c.s1);
  j["s1_terms"] = json::array();
  for (const auto& [i, v] : c.s1_terms)
    j["s1_terms"].push_back({{"i", i}, {"value", absval_json(v)}});
  j["gamma_abs"] = json::array();
  for (const auto& [i, v] : c.gamma_abs)
    j["gamma_abs"].push_back({{"i", i}, {"value", absval_json(v)}});
  j["distinct"] = c.distinct;
  j["s2_bound"] = absval_json(c.s2_bound);
  j["s3_bound_printed"] = absval_json(c.s3_bound_printed);
  j["s3_bound_variant"] = absval_json(c.s3_bound_variant);
  j["certified_printed"] = c.certified_printed;
  j["certified_variant"] = c.certified_variant;
  j["certified"] = c.certified;
  j["verdict"] = c.verdict();
  return j;
}

void print_certificate(std::ostream& out, const Certificate& c) {
  out << "P_{" << c.k << "," << c.n << "} at q = " << c.q
      << ", root order N = " << c.root_order << "\n";
  out << "S1 terms |gamma_i| |u(xi_N)|^(n-i(q-1)):\n";
  for (std::size_t idx = 0; idx < c.s1_terms.size(); ++idx) {
    const auto& [i, v] = c.s1_terms[idx];
    out << "  i = " << i << "   |gamma_i| = " << c.gamma_abs[idx].second.to_string()
        << "   term = " << v.to_string() << "\n";
  }
  out << "|S1| = " << c.s1.to_string()
      << "   (pairwise distinct: " << (c.distinct ? "yes" : "NO") << ")\n";
  out << "|S2| bound = " << c.s2_bound.to_string() << "\n";
  out << "|S3| bound = " << c.s3_bound_printed.to_string() << " (printed reading), "
      << c.s3_bound_variant.to_string() << " (variant reading)\n";
  out << "verdict: " << c.verdict() << " (printed reading: "
      << (c.certified_printed ? "certified" : "inconclusive")
      << ", variant reading: "
      << (c.certified_variant ? "certified" : "inconclusive") << ")\n";
}

std::string monomial_name(unsigned i, unsigned j) {
  std::string s;
  if (i > 0) s += "g^" + std::to_string(i);
  if (j > 0) {
    if (!s.empty()) s += " ";
    s += "h^" + std::to_string(j);
  }
  return s.empty() ? "1" : s;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with Drinfeld modular forms and A-expansions"};
  app.require_subcommand(1);

  unsigned q = 3;
  bool json_mode = false;
  std::optional<unsigned> prec_opt;
  app.add_option("--q", q, "field size, a prime power (default 3)");
  app.add_flag("--json", json_mode, "emit exactly one JSON document");
  app.add_option("--prec", prec_opt, "series precision (stores u^0..u^prec)");

  const unsigned threads = threads_from_env();
  std::function<void(json&)> action;
  int forced_exit = 0; // set by actions that report failure in-band

  // goss
  {
    auto* sub = app.add_subcommand("goss", "Goss polynomial G_n");
    sub->fallthrough();
    auto n = std::make_shared<unsigned>(0);
    sub->add_option("--n", *n, "index n >= 1")->required();
    sub->callback([&, n] {
      action = [&, n](json& j) {
        const GossPoly g = goss_poly(Fq::make(q), *n);
        const auto dense = g.dense_coeffs();
        if (json_mode) {
          j = json::parse(kpoly_to_json(dense, "X"));
          j["n"] = *n;
          j["ord"] = g.ord();
        } else {
          out << "G_" << *n << " = " << kpoly_to_string(dense, "X") << "\n";
          out << "ord_X = " << g.ord() << ", gaps s = " << g.gap_count() << "\n";
        }
      };
    });
  }

  // carlitz
  {
    auto* sub = app.add_subcommand(
        "carlitz", "Carlitz brackets [i], factorials D_i and actions C_a");
    sub->fallthrough();
    auto imax = std::make_shared<unsigned>(0);
    auto a_text = std::make_shared<std::string>();
    auto* iopt = sub->add_option("--i", *imax, "print [1..i] and D_1..D_i");
    auto* aopt = sub->add_option("--a", *a_text, "print the coefficients of C_a");
    sub->callback([&, imax, a_text, iopt, aopt] {
      const bool have_i = iopt->count() > 0, have_a = aopt->count() > 0;
      action = [&, imax, a_text, have_i, have_a](json& j) {
        if (!have_i && !have_a)
          throw CLI::ValidationError("carlitz", "pass --i and/or --a");
        const FqPtr f = Fq::make(q);
        if (have_i) {
          const auto c = CarlitzCoeffs::up_to(f, *imax);
          if (json_mode) {
            j["brackets"] = json::array();
            j["big_d"] = json::array();
            for (unsigned i = 1; i <= *imax; ++i) {
              j["brackets"].push_back(to_string(c.brackets[i]));
              j["big_d"].push_back(to_string(c.big_d[i]));
            }
          } else {
            for (unsigned i = 1; i <= *imax; ++i) {
              out << "[" << i << "] = " << to_string(c.brackets[i]) << "\n";
              out << "D_" << i << " = " << to_string(c.big_d[i]) << "\n";
            }
          }
        }
        if (have_a) {
          const Poly a = parse_poly(f, *a_text);
          const auto c = carlitz_poly(a);
          if (json_mode) {
            j["a"] = to_string(a);
            j["c"] = json::array();
            for (const auto& coeff : c.coeffs) j["c"].push_back(to_string(coeff));
          } else {
            out << "C_a for a = " << to_string(a) << ":\n";
            for (std::size_t i = 0; i < c.coeffs.size(); ++i)
              out << "  c_" << i << " = " << to_string(c.coeffs[i])
                  << "   (coefficient of X^(q^" << i << "))\n";
          }
        }
      };
    });
  }

  // expand
  {
    auto* sub = app.add_subcommand("expand", "u-expansion of f_{k,n}");
    sub->fallthrough();
    auto k = std::make_shared<unsigned>(0);
    auto n = std::make_shared<unsigned>(0);
    auto as_poincare = std::make_shared<bool>(false);
    sub->add_option("--k", *k, "weight")->required();
    sub->add_option("--n", *n, "exponent of the A-expansion")->required();
    sub->add_flag("--as-poincare", *as_poincare,
                  "print the negative, i.e. the Poincare series P_{k,n} = -f_{k,n}");
    sub->callback([&, k, n, as_poincare] {
      action = [&, k, n, as_poincare](json& j) {
        const FqPtr f = Fq::make(q);
        const unsigned prec = prec_opt.value_or(default_prec(q, *k));
        USeries s = expand(make_f(f, *k, *n), prec, threads);
        if (*as_poincare) s = -s;
        if (json_mode) {
          j = json::parse(useries_to_json(s));
          j["form"] = (*as_poincare ? "P_{" : "f_{") + std::to_string(*k) + "," +
                      std::to_string(*n) + "}";
        } else {
          out << (*as_poincare ? "P" : "f") << "_{" << *k << "," << *n
              << "} = " << to_string(s) << "\n";
        }
      };
    });
  }

  // named
  {
    auto* sub = app.add_subcommand("named", "u-expansion of a named form");
    sub->fallthrough();
    auto form = std::make_shared<std::string>();
    auto s_index = std::make_shared<unsigned>(1);
    sub->add_option("--form", *form, "h, g or f_s")->required();
    sub->add_option("--s", *s_index, "index for f_s (default 1)");
    sub->callback([&, form, s_index] {
      action = [&, form, s_index](json& j) {
        const FqPtr f = Fq::make(q);
        NamedForm nf = make_h(f);
        if (*form == "h") {
          nf = make_h(f);
        } else if (*form == "g") {
          nf = make_g(f);
        } else if (*form == "f_s" || *form == "fs") {
          nf = make_f_s(f, *s_index);
        } else {
          throw CLI::ValidationError("named", "--form must be h, g or f_s");
        }
        const unsigned prec = prec_opt.value_or(default_prec(q, nf.weight));
        const USeries s = expand(nf, prec, threads);
        if (json_mode) {
          j = json::parse(useries_to_json(s));
          j["form"] = *form == "f_s" ? ("f_" + std::to_string(*s_index)) : *form;
          j["weight"] = nf.weight;
        } else {
          out << to_string(s) << "\n";
        }
      };
    });
  }

  // hyperderiv
  {
    auto* sub = app.add_subcommand("hyperderiv",
                                   "hyperderivative D_n of a named form");
    sub->fallthrough();
    auto form = std::make_shared<std::string>("h");
    auto s_index = std::make_shared<unsigned>(1);
    auto order = std::make_shared<unsigned>(0);
    sub->add_option("--form", *form, "h or f_s (default h)");
    sub->add_option("--s", *s_index, "index for f_s");
    sub->add_option("--order", *order, "derivative order n")->required();
    sub->callback([&, form, s_index, order] {
      action = [&, form, s_index, order](json& j) {
        const FqPtr f = Fq::make(q);
        NamedForm nf = make_h(f);
        if (*form == "f_s" || *form == "fs")
          nf = make_f_s(f, *s_index);
        else if (*form != "h")
          throw CLI::ValidationError("hyperderiv", "--form must be h or f_s");
        const HyperResult r = hyper_derive(nf, *order);
        const unsigned prec =
            prec_opt.value_or(default_prec(q, r.weight.value_or(q + 1)));
        const USeries s = expand(r.image, prec, threads);
        if (json_mode) {
          j = json::parse(useries_to_json(s));
          j["order"] = r.order;
          j["exponent"] = r.image.exponent();
          j["weight"] = *r.weight;
          j["type"] = r.type;
          j["modular"] = *r.modular;
          j["vanished"] = r.vanished;
          j["scalar"] = to_string(r.image.scalar());
        } else {
          out << "D_" << *order << " of " << *form << ": exponent "
              << r.image.exponent() << ", weight " << *r.weight << ", type "
              << r.type << "\n";
          out << "modular: " << (*r.modular ? "yes" : "no")
              << ", scalar: " << to_string(r.image.scalar()) << "\n";
          out << to_string(s) << "\n";
        }
      };
    });
  }

  // enumerate-modular
  {
    auto* sub = app.add_subcommand(
        "enumerate-modular", "orders n for which D_n preserves modularity");
    sub->fallthrough();
    auto k0 = std::make_shared<unsigned>(0);
    auto n_max = std::make_shared<unsigned>(0);
    sub->add_option("--source-weight", *k0, "weight of the source form")->required();
    sub->add_option("--max-n", *n_max, "search bound")->required();
    sub->callback([&, k0, n_max] {
      action = [&, k0, n_max](json& j) {
        const auto values = enumerate_modular(Fq::make(q), *k0, *n_max);
        if (json_mode) {
          j["source_weight"] = *k0;
          j["max_n"] = *n_max;
          j["values"] = values;
        } else {
          for (std::size_t i = 0; i < values.size(); ++i)
            out << (i ? " " : "") << values[i];
          out << "\n";
        }
      };
    });
  }

  // lucas
  {
    auto* sub = app.add_subcommand("lucas", "binomial coefficient mod p");
    sub->fallthrough();
    auto p = std::make_shared<unsigned>(0);
    auto top = std::make_shared<unsigned long long>(0);
    auto bottom = std::make_shared<unsigned long long>(0);
    sub->add_option("--p", *p, "prime modulus")->required();
    sub->add_option("--top", *top, "upper index")->required();
    sub->add_option("--bottom", *bottom, "lower index")->required();
    sub->callback([&, p, top, bottom] {
      action = [&, p, top, bottom](json& j) {
        const unsigned r = lucas_binom(*top, *bottom, *p);
        if (json_mode) {
          j["top"] = *top;
          j["bottom"] = *bottom;
          j["p"] = *p;
          j["value"] = r;
        } else {
          out << r << "\n";
        }
      };
    });
  }

  // basis-express
  {
    auto* sub = app.add_subcommand(
        "basis-express", "express a form in the g-h monomial basis of M_{k,m}");
    sub->fallthrough();
    auto k = std::make_shared<unsigned>(0);
    auto m = std::make_shared<unsigned>(0);
    auto prec = std::make_shared<unsigned>(0);
    auto form = std::make_shared<std::string>();
    sub->add_option("--k", *k, "weight")->required();
    sub->add_option("--type", *m, "type m, 0 <= m < q-1")->required();
    sub->add_option("--prec", *prec, "matching precision")->required();
    sub->add_option("--form", *form, "h, g, fs:S, f:K:N, e:K or D<n>:<form>")
        ->required();
    sub->callback([&, k, m, prec, form] {
      action = [&, k, m, prec, form](json& j) {
        const FqPtr f = Fq::make(q);
        const FormSpec spec = parse_form_spec(f, *form);
        USeries s = spec.order > 0
                        ? expand(hyper_derive(spec.base, spec.order).image,
                                 *prec, threads)
                        : expand(spec.base, *prec, threads);
        const BasisSolution sol = express(s, *k, *m, threads);
        if (json_mode) {
          j["k"] = *k;
          j["type"] = *m;
          j["success"] = sol.success;
          j["monomials"] = json::array();
          for (std::size_t idx = 0; idx < sol.monomials.size(); ++idx) {
            json entry;
            entry["i"] = sol.monomials[idx].first;
            entry["j"] = sol.monomials[idx].second;
            if (sol.success) entry["coefficient"] = to_string(sol.coefficients[idx]);
            j["monomials"].push_back(entry);
          }
          if (!sol.success && sol.residual_row)
            j["residual_row"] = *sol.residual_row;
        } else if (sol.success) {
          out << *form << " in M_{" << *k << "," << *m << "}:\n";
          for (std::size_t idx = 0; idx < sol.monomials.size(); ++idx)
            out << "  " << monomial_name(sol.monomials[idx].first,
                                         sol.monomials[idx].second)
                << " : " << to_string(sol.coefficients[idx]) << "\n";
        } else {
          out << "no expression in M_{" << *k << "," << *m << "}";
          if (sol.residual_row)
            out << " (first inconsistent row: u^" << *sol.residual_row << ")";
          out << "\n";
        }
      };
    });
  }

  // certify-nonvanishing
  {
    auto* sub = app.add_subcommand(
        "certify-nonvanishing",
        "valuation certificate that P_{k,n}(xi_N) is nonzero");
    sub->fallthrough();
    auto k = std::make_shared<unsigned>(0);
    auto n = std::make_shared<unsigned>(0);
    auto root = std::make_shared<long long>(-1);
    sub->add_option("--k", *k, "weight")->required();
    sub->add_option("--n", *n, "Goss index")->required();
    sub->add_option("--root-order", *root, "root order N (default n*q*(q-1)+1)");
    sub->callback([&, k, n, root] {
      action = [&, k, n, root](json& j) {
        const FqPtr f = Fq::make(q);
        std::optional<unsigned long long> N;
        if (*root >= 0) N = static_cast<unsigned long long>(*root);
        const Certificate c = certify_nonvanishing(f, *k, *n, N);
        if (json_mode)
          j = certificate_json(c);
        else
          print_certificate(out, c);
      };
    });
  }

  // verify-paper
  {
    auto* sub = app.add_subcommand(
        "verify-paper", "run the batch of end-to-end verification criteria");
    sub->fallthrough();
    auto only = std::make_shared<std::string>();
    sub->add_option("--only", *only, "comma separated ids, e.g. A1,A8");
    sub->callback([&, only] {
      action = [&, only](json& j) {
        verify::Options vopts;
        vopts.threads = threads;
        if (const char* seed = std::getenv("DRINFELD_TEST_GOSS_SEED"))
          vopts.goss_seed = std::atoll(seed); // test-harness hook

        if (!only->empty()) {
          std::string rest = *only;
          std::size_t pos;
          while ((pos = rest.find(',')) != std::string::npos) {
            vopts.only.push_back(rest.substr(0, pos));
            rest.erase(0, pos + 1);
          }
          if (!rest.empty()) vopts.only.push_back(rest);
        }
        const auto results = verify::run_paper_checks(vopts);
        const bool ok = verify::all_passed(results);
        if (json_mode) {
          j["criteria"] = json::array();
          for (const auto& r : results)
            j["criteria"].push_back({{"id", r.id},
                                     {"title", r.title},
                                     {"passed", r.passed},
                                     {"seconds", r.seconds},
                                     {"budget_seconds", r.budget_seconds},
                                     {"detail", r.detail}});
          j["all_passed"] = ok;
        } else {
          for (const auto& r : results) {
            char timing[64];
            std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
            out << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.id << " — "
                << r.title << " (" << timing << ")\n";
            if (!r.detail.empty()) out << "       " << r.detail << "\n";
          }
          out << (ok ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
        }
        if (!ok) forced_exit = 1; // the report itself is the error document
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  json j;
  try {
    action(j);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (json_mode) {
      json ej;
      ej["error"] = e.what();
      out << ej.dump() << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 1;
  }
  if (json_mode) out << j.dump() << "\n";
  return forced_exit;
}

} // namespace drinfeld::cli
