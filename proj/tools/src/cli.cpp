#include "padicvoa_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <string>

#include "padicvoa/axioms.hpp"
#include "padicvoa/character.hpp"
#include "padicvoa/expr.hpp"
#include "padicvoa/kummer.hpp"
#include "padicvoa/virasoro.hpp"

namespace padicvoa::cli {

namespace {

using json = nlohmann::json;

json to_json(const NormExponent& e) { return e.is_neg_infinity() ? json(nullptr) : json(e.value()); }

json to_json(const QSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
  return {{"offset", s.offset().to_string()}, {"order", s.order()}, {"coeffs", coeffs}};
}

json to_json(const Parameters& params) {
  json out = json::object();
  for (const auto& [name, value] : params) out[name] = value;
  return out;
}

template <class State>
json to_json(const DefectReport<State>& r) {
  return {{"description", r.description},
          {"parameters", to_json(r.parameters)},
          {"norm_exponent", to_json(r.norm_exponent)},
          {"defect", to_string(r.defect)}};
}

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_odd_prime(long p) {
  if (p == 2 || !is_prime(p)) throw UsageError(std::to_string(p) + " is not an odd prime");
}

struct Result {
  json doc;
  bool ok = true;
};

struct CharacterArgs {
  long prime = 0;
  std::string state;
  int qmax = 20;
  bool eta = false;
};

Result run_character(const CharacterArgs& a) {
  const HeisenbergState v = parse_heisenberg(a.state);
  const QSeries series = a.eta ? normalized_character(v, a.qmax) : character(v, a.qmax);
  json doc = to_json(series);
  doc["state"] = to_string(v);
  doc["series"] = a.eta ? "eta*Z" : "Z";
  if (a.prime != 0) {
    require_odd_prime(a.prime);
    doc["prime"] = a.prime;
    doc["norm_exponent"] = to_json(sup_norm_exponent(series, a.prime));
  }
  return {doc};
}

struct EisensteinArgs {
  int k = 0;
  bool star = false;
  long prime = 0;
  int qmax = 20;
};

Result run_eisenstein(const EisensteinArgs& a) {
  if (a.star) {
    if (a.prime == 0) throw UsageError("--star needs --prime");
    require_odd_prime(a.prime);
    json doc = to_json(eisenstein_G2_star(a.prime, a.qmax));
    doc["series"] = "G2*";
    doc["prime"] = a.prime;
    return {doc};
  }
  if (a.k < 2 || a.k % 2 != 0) throw UsageError("--k must be an even integer >= 2");
  json doc = to_json(eisenstein_G(a.k, a.qmax));
  doc["series"] = "G" + std::to_string(a.k);
  return {doc};
}

struct KummerArgs {
  long prime = 5;
  long amax = 1;
  int qmax = 10;
};

Result run_kummer(const KummerArgs& a) {
  require_odd_prime(a.prime);
  if (a.amax < 0) throw UsageError("--amax must be >= 0");
  Result res;
  json states = json::array();
  std::vector<QSeries> chars;
  const KummerFamily family = kummer_family(a.prime, a.amax);
  for (long i = 0; i <= a.amax; ++i) {
    const HeisenbergState& u = family.states[static_cast<std::size_t>(i)];
    chars.push_back(normalized_character(u, a.qmax));
    states.push_back({{"a", i},
                      {"r", kummer_index(a.prime, i)},
                      {"sup_norm_exponent", to_json(sup_norm_exponent(u, a.prime))}});
  }
  json pairs = json::array();
  for (long i = 0; i <= a.amax; ++i) {
    for (long j = i; j <= a.amax; ++j) {
      const KummerReport k = kummer_check(a.prime, i, j);
      const NormExponent dist = qseries_padic_distance(chars[i], chars[j], a.prime);
      const bool ok = k.satisfied() && dist <= NormExponent(k.bound);
      res.ok = res.ok && ok;
      pairs.push_back({{"a", i},
                       {"b", j},
                       {"bound", k.bound},
                       {"state_exponent", to_json(k.report.norm_exponent)},
                       {"character_exponent", to_json(dist)},
                       {"ok", ok}});
    }
  }
  json limit = json::array();
  const QSeries target = Rational(2) * eisenstein_G2_star(a.prime, a.qmax);
  for (long i = 0; i <= a.amax; ++i) {
    const NormExponent d = qseries_padic_distance(chars[i], target, a.prime);
    const bool ok = d <= NormExponent(-(i + 1));
    res.ok = res.ok && ok;
    limit.push_back({{"a", i}, {"bound", -(i + 1)}, {"distance_exponent", to_json(d)}, {"ok", ok}});
  }
  res.doc = {{"prime", a.prime}, {"amax", a.amax}, {"qmax", a.qmax}, {"states", states},
             {"pairs", pairs}, {"limit_2G2star", limit}, {"ok", res.ok}};
  return res;
}

struct AxiomArgs {
  std::string suite;
  std::optional<int> grade;
  std::optional<int> window;
  long prime = 5;
  bool all_rows = false;
};

Result run_axioms(const AxiomArgs& a) {
  require_odd_prime(a.prime);
  const bool small = a.suite == "jacobi" || a.suite == "locality";
  const int grade = a.grade.value_or(small ? 3 : 4);
  const int window = a.window.value_or(a.suite == "jacobi" ? 2 : (a.suite == "isometry" ? 4 : 3));
  if (grade < 0 || window < 0) throw UsageError("--grade and --window must be >= 0");

  Result res;
  json rows = json::array();
  std::size_t checked = 0;
  std::size_t nonzero = 0;

  if (a.suite == "locality") {
    const AxiomLab<HeisenbergModel> lab(HeisenbergModel{}, a.prime);
    const auto basis = basis_states_up_to(grade);
    for (const auto& u : basis) {
      for (const auto& v : basis) {
        for (const auto& w : basis) {
          const int order = u.weight() + v.weight();
          const int win = a.window ? window : lab.default_locality_window(u, v, w);
          for (const auto& point : lab.locality_profile(u, v, w, order + 1, win, a.all_rows ? 0 : order)) {
            const bool required = point.t >= order;
            const bool zero = point.norm_exponent.is_neg_infinity();
            if (required) {
              ++checked;
              if (!zero) ++nonzero;
            }
            if (a.all_rows || (required && !zero)) {
              rows.push_back({{"u", to_string(u)}, {"v", to_string(v)}, {"w", to_string(w)}, {"t", point.t},
                              {"norm_exponent", to_json(point.norm_exponent)}, {"must_vanish", required}});
            }
          }
        }
      }
    }
  } else if (a.suite == "isometry") {
    for (const auto& b : basis_states_up_to(grade)) {
      for (int shift = -1; shift <= 1; ++shift) {
        const Rational scale = shift >= 0 ? Rational(ipow(a.prime, shift)) : Rational(Integer(1), Integer(a.prime));
        const HeisenbergState s = scale * b;
        const IsometryProbe probe = isometry_probe(s, a.prime, grade, -window, window);
        ++checked;
        const bool equal = probe.lhs == probe.rhs;
        if (!equal) ++nonzero;
        if (a.all_rows || !equal) {
          rows.push_back({{"state", to_string(s)}, {"lhs", to_json(probe.lhs)}, {"rhs", to_json(probe.rhs)}});
        }
      }
    }
  } else {
    const RowCallback on_row = [&](const DefectReport<HeisenbergState>& r) {
      if (a.all_rows || !r.is_zero()) rows.push_back(to_json(r));
    };
    SweepSummary s;
    if (a.suite == "jacobi") {
      s = jacobi_sweep(grade, window, a.prime, on_row);
    } else if (a.suite == "commutator") {
      s = commutator_sweep(grade, window, a.prime, on_row);
    } else if (a.suite == "associator") {
      s = associator_sweep(grade, window, a.prime, on_row);
    } else if (a.suite == "residue") {
      s = residue_sweep(grade, window, a.prime, on_row);
    } else if (a.suite == "translation") {
      s = translation_sweep(grade, window, a.prime, on_row);
    } else {
      throw UsageError("unknown suite " + a.suite);
    }
    checked = s.checked;
    nonzero = s.nonzero;
  }
  res.ok = nonzero == 0;
  const json window_field = a.suite == "locality" && !a.window ? json("auto") : json(window);
  res.doc = {{"suite", a.suite}, {"grade", grade}, {"window", window_field}, {"prime", a.prime},
             {"checked", checked}, {"nonzero", nonzero}, {"rows", rows}, {"ok", res.ok}};
  return res;
}

struct VirasoroArgs {
  std::string cprime = "1";
  int grade = 6;
  int window = 4;
  long prime = 5;
  bool all_rows = false;
};

Result run_virasoro(const VirasoroArgs& a) {
  require_odd_prime(a.prime);
  if (a.grade < 0 || a.window < 0) throw UsageError("--grade and --window must be >= 0");
  const VirasoroVoa voa(Rational::parse(a.cprime));
  const bool integral_charge = voa.quasicentral_charge().is_integer();
  Result res;
  json rows = json::array();
  std::size_t checked = 0;
  std::size_t nonzero = 0;
  bool integral = true;
  for (const auto& s : VirasoroVoa::basis_states_up_to(a.grade)) {
    for (int m = -a.window; m <= a.window; ++m) {
      for (int n = -a.window; n <= a.window; ++n) {
        auto r = vir_bracket_defect(voa, m, n, s, a.prime);
        r.description += " s=" + to_string(s);
        ++checked;
        if (!r.is_zero()) ++nonzero;
        if (integral_charge && !has_integer_coefficients(voa.apply_L(m, voa.apply_L(n, s)))) integral = false;
        if (a.all_rows || !r.is_zero()) rows.push_back(to_json(r));
      }
    }
  }
  res.ok = nonzero == 0 && integral;
  res.doc = {{"cprime", voa.quasicentral_charge().to_string()},
             {"central_charge", voa.central_charge().to_string()},
             {"grade", a.grade},
             {"window", a.window},
             {"checked", checked},
             {"nonzero", nonzero},
             {"rows", rows},
             {"ok", res.ok}};
  if (integral_charge) res.doc["integral"] = integral;
  return res;
}

struct RenderArgs {
  std::string state;
  std::optional<std::string> cprime;
};

Result run_render(const RenderArgs& a) {
  const StateExpr expr = parse_state(a.state);
  json doc;
  if (a.cprime) {
    const VirasoroVoa voa(Rational::parse(*a.cprime));
    const VirasoroState s = to_virasoro(expr, voa);
    doc = {{"canonical", to_string(s)}, {"module", "virasoro"}, {"cprime", voa.quasicentral_charge().to_string()}};
    if (auto w = s.max_weight()) doc["max_weight"] = *w;
  } else {
    const HeisenbergState s = to_heisenberg(expr);
    doc = {{"canonical", to_string(s)}, {"module", "heisenberg"}};
    if (auto w = s.max_weight()) doc["max_weight"] = *w;
  }
  return {doc};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and p-adic computations in the Heisenberg and Virasoro vertex algebras", "padic-voa"};
  app.require_subcommand(1);
  std::string out_file;
  app.add_option("--out", out_file, "Also write the JSON result to FILE");

  CharacterArgs character_args;
  auto* character_cmd = app.add_subcommand("character", "Graded trace character Z(v, q), or eta*Z with --eta");
  character_cmd->add_option("--state", character_args.state, "State expression, e.g. \"h(-1)^2 vac\"")->required();
  character_cmd->add_option("--prime", character_args.prime, "Report the p-adic norm exponent of the series");
  character_cmd->add_option("--qmax", character_args.qmax, "Highest q-power")->capture_default_str()->check(CLI::NonNegativeNumber);
  character_cmd->add_flag("--eta", character_args.eta, "Multiply by eta(q)");

  EisensteinArgs eisenstein_args;
  auto* eisenstein_cmd = app.add_subcommand("eisenstein", "Eisenstein series G_k or Serre's G2*");
  eisenstein_cmd->add_option("--k", eisenstein_args.k, "Even weight k >= 2");
  eisenstein_cmd->add_flag("--star", eisenstein_args.star, "p-stabilized weight 2 series");
  eisenstein_cmd->add_option("--prime", eisenstein_args.prime, "Prime for --star");
  eisenstein_cmd->add_option("--qmax", eisenstein_args.qmax, "Highest q-power")->capture_default_str()->check(CLI::NonNegativeNumber);

  KummerArgs kummer_args;
  auto* kummer_cmd = app.add_subcommand("kummer", "Kummer congruences for the states u_r and their characters");
  kummer_cmd->add_option("--prime", kummer_args.prime, "Odd prime")->capture_default_str();
  kummer_cmd->add_option("--amax", kummer_args.amax, "Largest depth a")->capture_default_str();
  kummer_cmd->add_option("--qmax", kummer_args.qmax, "Highest q-power")->capture_default_str()->check(CLI::NonNegativeNumber);

  AxiomArgs axiom_args;
  auto* axioms_cmd = app.add_subcommand("axioms", "Exhaustive defect sweeps over the Heisenberg basis");
  axioms_cmd->add_option("--suite", axiom_args.suite, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"jacobi", "commutator", "associator", "residue", "translation", "locality", "isometry"}));
  axioms_cmd->add_option("--grade", axiom_args.grade, "Largest basis grade");
  axioms_cmd->add_option("--window", axiom_args.window, "Index half-width");
  axioms_cmd->add_option("--prime", axiom_args.prime, "Prime for norm exponents")->capture_default_str();
  axioms_cmd->add_flag("--all-rows", axiom_args.all_rows, "List zero defects too");

  VirasoroArgs virasoro_args;
  auto* virasoro_cmd = app.add_subcommand("virasoro", "Bracket defects in the Virasoro vertex algebra");
  virasoro_cmd->add_option("--cprime", virasoro_args.cprime, "Quasicentral charge c' = c/2 (n or n/d)")->capture_default_str();
  virasoro_cmd->add_option("--grade", virasoro_args.grade, "Largest PBW grade")->capture_default_str();
  virasoro_cmd->add_option("--window", virasoro_args.window, "Bracket indices m, n in [-W, W]")->capture_default_str();
  virasoro_cmd->add_option("--prime", virasoro_args.prime, "Prime for norm exponents")->capture_default_str();
  virasoro_cmd->add_flag("--all-rows", virasoro_args.all_rows, "List zero defects too");

  RenderArgs render_args;
  auto* render_cmd = app.add_subcommand("render", "Evaluate a state expression and print its canonical form");
  render_cmd->add_option("--state", render_args.state, "State expression")->required();
  render_cmd->add_option("--cprime", render_args.cprime, "Evaluate in the Virasoro module with this c'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Result result;
  try {
    if (character_cmd->parsed()) {
      result = run_character(character_args);
    } else if (eisenstein_cmd->parsed()) {
      result = run_eisenstein(eisenstein_args);
    } else if (kummer_cmd->parsed()) {
      result = run_kummer(kummer_args);
    } else if (axioms_cmd->parsed()) {
      result = run_axioms(axiom_args);
    } else if (virasoro_cmd->parsed()) {
      result = run_virasoro(virasoro_args);
    } else {
      result = run_render(render_args);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string text = result.doc.dump(2);
  out << text << "\n";
  if (!out_file.empty()) {
    std::ofstream file(out_file);
    if (!file) {
      err << "error: cannot write " << out_file << "\n";
      return kExitUsage;
    }
    file << text << "\n";
  }
  return result.ok ? kExitOk : kExitViolation;
}

}  // namespace padicvoa::cli
