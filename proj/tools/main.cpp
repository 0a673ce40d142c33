// Command-line front end: builds enhanced Yang-Baxter operators from an
// algebra, evaluates the link invariant of braid closures, recovers the
// Alexander polynomial, and cross-checks everything against the two
// independent oracles.
//
// Exit codes: 0 success, 2 input parse error, 3 enhancement or verification
// failure, 4 violated engine invariant or oracle disagreement.

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybalex/algebra_io.hpp"
#include "ybalex/catalog.hpp"
#include "ybalex/invariant.hpp"
#include "ybalex/oracle.hpp"

namespace {

using nlohmann::json;
using namespace ybalex;

constexpr int kExitParse = 2;
constexpr int kExitEnhancement = 3;
constexpr int kExitInvariant = 4;

struct RunConfig {
  std::string algebra = "dual-numbers";
  std::string braid;
  std::string format = "text";
  std::vector<std::string> specialize;
  std::string sqrt_x;
  std::string sqrt_y;
  int skein_index = 1;
  std::string skein_suffix;
  bool inject_fault = false;

  bool json_output() const { return format == "json"; }
};

struct LoadedAlgebra {
  std::string name;
  Algebra algebra;
  std::optional<LinMap> mu;
};

LoadedAlgebra resolve_algebra(const RunConfig& cfg) {
  if (const NamedAlgebra* builtin = find_builtin(cfg.algebra))
    return {builtin->name, builtin->algebra, builtin->mu};
  AlgebraFile file = load_algebra_file(cfg.algebra);
  return {cfg.algebra, std::move(file.algebra), std::move(file.mu)};
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw SyntaxError(what + " is not a rational: " + text, 0);
  }
}

struct Parameters {
  Scalar x, y;
  std::optional<std::pair<Scalar, Scalar>> roots;  // sqrt x, sqrt y
};

/// Default: fully symbolic (x, y) = (x, y) with their formal square roots.
/// Under --specialize both parameters become rationals and the square roots
/// must be rational as well, supplied or derived.
Parameters resolve_parameters(const RunConfig& cfg) {
  if (cfg.specialize.empty())
    return {Scalar::variable(Var::sqrt_x, 2), Scalar::variable(Var::sqrt_y, 2),
            std::nullopt};
  std::optional<Rational> xr, yr;
  for (const std::string& item : cfg.specialize) {
    if (item.rfind("x=", 0) == 0)
      xr = parse_rational_arg(item.substr(2), "specialized x");
    else if (item.rfind("y=", 0) == 0)
      yr = parse_rational_arg(item.substr(2), "specialized y");
    else
      throw SyntaxError("--specialize expects x=<rat> and y=<rat>", 0);
  }
  if (!xr || !yr)
    throw SyntaxError("--specialize needs both x=<rat> and y=<rat>", 0);
  if (*xr == 0 || *yr == 0)
    throw SyntaxError("specialized parameters must be nonzero", 0);

  auto root_of = [](const Rational& value, const std::string& supplied,
                    const char* name) {
    if (!supplied.empty()) {
      const Rational s = parse_rational_arg(supplied, std::string("--sqrt-") +
                                                          name);
      if (s * s != value)
        throw SyntaxError(std::string("--sqrt-") + name +
                              " squared does not equal the specialized " +
                              name,
                          0);
      return s;
    }
    const auto s = sqrt_rational(value);
    if (!s)
      throw SqrtUnavailable(std::string("specialized ") + name +
                            " has no rational square root; supply --sqrt-" +
                            name);
    return *s;
  };
  const Rational sx = root_of(*xr, cfg.sqrt_x, "x");
  const Rational sy = root_of(*yr, cfg.sqrt_y, "y");
  return {Scalar(*xr), Scalar(*yr),
          std::make_pair(Scalar(sx), Scalar(sy))};
}

Enhancement build_enhancement(const LoadedAlgebra& loaded,
                              const Parameters& params) {
  if (!loaded.mu)
    throw NoEnhancement("algebra \"" + loaded.name +
                        "\" provides no twist map mu");
  if (!params.roots) return make_enhancement(loaded.algebra, *loaded.mu,
                                             params.x, params.y);
  // Specialized parameters: honor the supplied square roots.
  const auto c = scalar_multiple_automorphism(loaded.algebra, *loaded.mu);
  if (!c)
    throw NoEnhancement("no scalar c makes c*mu an automorphism of the algebra");
  for (int a = 0; a < loaded.algebra.dim(); ++a) {
    const Scalar trace = left_mul_trace(loaded.algebra,
                                        loaded.algebra.basis(a), *loaded.mu);
    if (!trace.is_zero())
      throw NoEnhancement("the trace of b -> e_" + std::to_string(a + 1) +
                          " * mu(b) is " + to_string(trace) + ", not zero");
  }
  const Scalar alpha = params.roots->first * params.roots->second;
  const Scalar beta = params.x * invert(*c * alpha);
  const YbOperator r = build_r(loaded.algebra, params.x, params.y, params.x);
  return verify_enhancement(r, *loaded.mu, alpha, beta);
}

int cmd_invariant(const RunConfig& cfg) {
  const BraidWord braid = parse_braid(cfg.braid);
  const LoadedAlgebra loaded = resolve_algebra(cfg);
  const Parameters params = resolve_parameters(cfg);
  const Enhancement s = build_enhancement(loaded, params);

  const Scalar x_s1 = modified_markov_trace(s, braid);
  std::optional<Scalar> delta;
  const auto [target_mono, target_coeff] = invert(s.c * s.beta).unit_term();
  if (!target_mono.is_constant()) {
    delta = alexander(s, braid);
  } else {
    std::cerr << "note: specialized parameters make t^1/2 a constant; the "
                 "Alexander polynomial cannot be recovered\n";
  }

  if (cfg.json_output()) {
    json out{{"x_s1", to_string(x_s1)},
             {"alexander", delta ? json(to_string(*delta)) : json(nullptr)},
             {"writhe", writhe(braid)},
             {"strands", braid.strands}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "strands: " << braid.strands << "\n"
              << "writhe: " << writhe(braid) << "\n"
              << "x_s1: " << x_s1 << "\n"
              << "alexander: " << (delta ? to_string(*delta) : "unavailable")
              << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const LoadedAlgebra loaded = resolve_algebra(cfg);
  const Scalar x = Scalar::variable(Var::sqrt_x, 2);
  const Scalar y = Scalar::variable(Var::sqrt_y, 2);

  struct Check {
    std::string name;
    std::function<void()> run;
  };
  std::optional<YbOperator> r_xz, r_yz, r_scalar;
  std::optional<Enhancement> enhancement;
  const std::vector<Check> checks = {
      {"algebra axioms", [&] { validate(loaded.algebra); }},
      {"operator construction, z = x family",
       [&] { r_xz = build_r(loaded.algebra, x, y, x); }},
      {"operator construction, z = y family",
       [&] { r_yz = build_r(loaded.algebra, x, y, y); }},
      {"operator construction, scalar family",
       [&] { r_scalar = build_r(loaded.algebra, Scalar(0), Scalar(0),
                                Scalar(1)); }},
      {"braid equation, z = x family",
       [&] { check_braid_equation(*r_xz); }},
      {"braid equation, z = y family",
       [&] { check_braid_equation(*r_yz); }},
      {"inverse formula",
       [&] {
         invert(*r_xz);
         invert(*r_scalar);
       }},
      {"quadratic relation, z = x family", [&] { check_quadratic(*r_xz); }},
      {"quadratic relation, z = y family", [&] { check_quadratic(*r_yz); }},
      {"enhancement solve",
       [&] {
         if (!loaded.mu)
           throw NoEnhancement("algebra \"" + loaded.name +
                               "\" provides no twist map mu");
         const auto solved =
             solve_enhancement(loaded.algebra, *loaded.mu, x, y);
         if (!solved)
           throw NoEnhancement("mu does not enhance the operator");
       }},
      {"enhancement conditions",
       [&] {
         enhancement = build_enhancement(loaded, {x, y, std::nullopt});
       }},
  };

  json results = json::array();
  for (const auto& check : checks) {
    try {
      check.run();
    } catch (const std::exception& e) {
      if (cfg.json_output()) {
        results.push_back(json{{"check", check.name},
                               {"status", "fail"},
                               {"error", e.what()}});
        std::cout << json{{"algebra", loaded.name},
                          {"checks", results}}.dump()
                  << "\n";
      } else {
        std::cout << "check " << check.name << ": FAIL\n";
      }
      std::cerr << "verification failed at \"" << check.name
                << "\": " << e.what() << "\n";
      return kExitEnhancement;
    }
    if (cfg.json_output())
      results.push_back(json{{"check", check.name}, {"status", "pass"}});
    else
      std::cout << "check " << check.name << ": pass\n";
  }
  if (cfg.json_output())
    std::cout << json{{"algebra", loaded.name}, {"checks", results}}.dump()
              << "\n";
  if (enhancement) {
    if (!cfg.json_output())
      std::cout << "alpha = " << enhancement->alpha
                << ", beta = " << enhancement->beta
                << ", c = " << enhancement->c << "\n";
  }
  return 0;
}

int cmd_oracle(const RunConfig& cfg) {
  const BraidWord braid = parse_braid(cfg.braid);
  const Scalar skein = alexander_skein(braid);
  const Scalar burau = alexander_burau(braid);
  const bool agree = units_equal(skein, burau);
  if (cfg.json_output()) {
    json out{{"strands", braid.strands},
             {"skein", to_string(skein)},
             {"burau", to_string(burau)},
             {"units_agree", agree}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "strands: " << braid.strands << "\n"
              << "skein: " << skein << "\n"
              << "burau: " << burau << " (up to units)\n"
              << "units_agree: " << (agree ? "true" : "false") << "\n";
  }
  if (!agree) {
    std::cerr << "oracle disagreement between the skein and Burau routes\n";
    return kExitInvariant;
  }
  return 0;
}

int cmd_skein_check(const RunConfig& cfg) {
  const BraidWord prefix = parse_braid(cfg.braid);
  BraidWord suffix{prefix.strands, {}};
  if (!cfg.skein_suffix.empty()) {
    suffix = parse_braid(std::to_string(prefix.strands) + ": " +
                         cfg.skein_suffix);
  }
  const LoadedAlgebra loaded = resolve_algebra(cfg);
  const Parameters params = resolve_parameters(cfg);
  const Enhancement s = build_enhancement(loaded, params);
  skein_check(s, prefix, cfg.skein_index, suffix);
  if (cfg.json_output())
    std::cout << json{{"ok", true},
                      {"prefix", to_string(prefix)},
                      {"index", cfg.skein_index},
                      {"suffix", to_string(suffix)}}.dump()
              << "\n";
  else
    std::cout << "skein identity holds for prefix \"" << to_string(prefix)
              << "\", crossing " << cfg.skein_index << ", suffix \""
              << to_string(suffix) << "\"\n";
  return 0;
}

int cmd_fixtures(const RunConfig& cfg) {
  const LoadedAlgebra loaded = resolve_algebra(cfg);
  Enhancement s = build_enhancement(loaded, resolve_parameters(cfg));
  if (cfg.inject_fault) {
    // Fault-injection hook for the disagreement gate: a rescaled beta breaks
    // the pipeline value without touching the oracles.
    s.beta = Scalar(2) * s.beta;
  }

  struct Row {
    std::string name, braid, pipeline, skein, burau;
    bool agree;
  };
  std::vector<Row> rows;
  bool all_agree = true;
  for (const FixtureBraid& fixture : fixture_braids()) {
    const BraidWord braid = parse_braid(fixture.word);
    const Scalar via_pipeline = alexander(s, braid);
    const Scalar via_skein = alexander_skein(braid);
    const Scalar via_burau = alexander_burau(braid);
    const bool agree =
        via_pipeline == via_skein && units_equal(via_pipeline, via_burau);
    all_agree = all_agree && agree;
    rows.push_back({fixture.name, fixture.word, to_string(via_pipeline),
                    to_string(via_skein), to_string(via_burau), agree});
  }

  if (cfg.json_output()) {
    json out = json::array();
    for (const Row& row : rows)
      out.push_back(json{{"name", row.name},
                         {"braid", row.braid},
                         {"pipeline", row.pipeline},
                         {"skein", row.skein},
                         {"burau", row.burau},
                         {"agree", row.agree}});
    std::cout << out.dump() << "\n";
  } else {
    auto width = [&](auto field, std::size_t min) {
      std::size_t w = min;
      for (const Row& row : rows) w = std::max(w, (row.*field).size());
      return w;
    };
    const std::size_t name_w = width(&Row::name, 7);
    const std::size_t braid_w = width(&Row::braid, 5);
    const std::size_t poly_w = std::max({width(&Row::pipeline, 8),
                                         width(&Row::skein, 5),
                                         width(&Row::burau, 5)});
    auto pad = [](const std::string& text, std::size_t w) {
      return text + std::string(w - text.size() + 2, ' ');
    };
    std::cout << pad("fixture", name_w) << pad("braid", braid_w)
              << pad("pipeline", poly_w) << pad("skein", poly_w)
              << pad("burau", poly_w) << "verdict\n";
    for (const Row& row : rows)
      std::cout << pad(row.name, name_w) << pad(row.braid, braid_w)
                << pad(row.pipeline, poly_w) << pad(row.skein, poly_w)
                << pad(row.burau, poly_w)
                << (row.agree ? "AGREE" : "DISAGREE") << "\n";
  }
  if (!all_agree) {
    std::cerr << "fixture disagreement between the pipeline and the oracles\n";
    return kExitInvariant;
  }
  return 0;
}

int dispatch(const std::function<int()>& command) {
  try {
    return command();
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BadGenerator& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NoEnhancement& e) {
    std::cerr << "enhancement failure: " << e.what() << "\n";
    return kExitEnhancement;
  } catch (const SqrtUnavailable& e) {
    std::cerr << "enhancement failure: " << e.what() << "\n";
    return kExitEnhancement;
  } catch (const E1Fails& e) {
    std::cerr << "enhancement failure: " << e.what() << "\n";
    return kExitEnhancement;
  } catch (const E2PlusFails& e) {
    std::cerr << "enhancement failure: " << e.what() << "\n";
    return kExitEnhancement;
  } catch (const E2MinusFails& e) {
    std::cerr << "enhancement failure: " << e.what() << "\n";
    return kExitEnhancement;
  } catch (const NotUnital& e) {
    std::cerr << "algebra validation failure: " << e.what() << "\n";
    return kExitEnhancement;
  } catch (const NotAssociative& e) {
    std::cerr << "algebra validation failure: " << e.what() << "\n";
    return kExitEnhancement;
  } catch (const NotAUnit& e) {
    std::cerr << "enhancement failure: " << e.what() << "\n";
    return kExitEnhancement;
  } catch (const Error& e) {
    std::cerr << "engine invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Yang-Baxter operators from algebra structures: Markov-trace link "
      "invariants of braid closures and the Alexander polynomial"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool with_braid) {
    sub->add_option("--algebra", cfg.algebra,
                    "built-in algebra name (dual-numbers, split-pair, "
                    "z2-group) or a JSON algebra file path")
        ->capture_default_str();
    sub->add_option("--output-format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    if (with_braid)
      sub->add_option("--braid", cfg.braid,
                      "braid word, e.g. \"2: 1 1 1\"")
          ->required();
    sub->add_option("--specialize", cfg.specialize,
                    "substitute rationals for the symbolic parameters, as "
                    "x=<rat> y=<rat>")
        ->expected(2);
    sub->add_option("--sqrt-x", cfg.sqrt_x,
                    "rational square root of the specialized x");
    sub->add_option("--sqrt-y", cfg.sqrt_y,
                    "rational square root of the specialized y");
  };

  CLI::App* invariant_cmd = app.add_subcommand(
      "invariant", "compute the invariant and the Alexander polynomial of a "
                   "braid closure");
  add_common(invariant_cmd, true);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run the construction and enhancement checks for an algebra");
  add_common(verify_cmd, false);

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "evaluate the skein and Burau oracles on a braid closure");
  oracle_cmd->add_option("--braid", cfg.braid, "braid word, e.g. \"2: 1 1 1\"")
      ->required();
  oracle_cmd->add_option("--output-format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* skein_cmd = app.add_subcommand(
      "skein-check",
      "check the skein identity for prefix * s_i^(+-1) * suffix");
  add_common(skein_cmd, true);
  skein_cmd->add_option("--index", cfg.skein_index,
                        "generator index i of the resolved crossing")
      ->capture_default_str();
  skein_cmd->add_option("--suffix", cfg.skein_suffix,
                        "suffix letters, e.g. \"1 -2\" (no strand count)");

  CLI::App* fixtures_cmd = app.add_subcommand(
      "fixtures",
      "compare the pipeline and both oracles on the fixture braids");
  add_common(fixtures_cmd, false);
  fixtures_cmd
      ->add_flag("--inject-fault", cfg.inject_fault,
                 "testing hook: corrupt the pipeline to demonstrate the "
                 "disagreement gate")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  if (invariant_cmd->parsed()) return dispatch([&] { return cmd_invariant(cfg); });
  if (verify_cmd->parsed()) return dispatch([&] { return cmd_verify(cfg); });
  if (oracle_cmd->parsed()) return dispatch([&] { return cmd_oracle(cfg); });
  if (skein_cmd->parsed()) return dispatch([&] { return cmd_skein_check(cfg); });
  if (fixtures_cmd->parsed()) return dispatch([&] { return cmd_fixtures(cfg); });
  return kExitParse;
}
