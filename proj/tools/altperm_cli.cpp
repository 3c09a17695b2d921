// Command line front end for the alternating colored permutation library:
// element statistics, canonical decompositions, the covering map, generating
// function identities and the exhaustive verification suites.

#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "altperm/errors.hpp"
#include "altperm/oracle.hpp"

using njson = nlohmann::ordered_json;
using namespace altperm;

namespace {

struct ParamOptions {
  int r = 0;
  int n = 0;  // 0 = infer from the window token count
  std::string format = "text";
  std::uint64_t cap = kDefaultCap;

  bool json() const { return format == "json"; }
};

int count_tokens(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  int count = 0;
  while (in >> token) ++count;
  return count;
}

// Parses an element argument: n comes from the token count, with --n as an
// override that must match.
ColoredPermutation parse_element(const ParamOptions& opts,
                                 const std::string& window) {
  const int tokens = count_tokens(window);
  if (tokens == 0) throw ParseError("empty window text");
  if (opts.n != 0 && opts.n != tokens) {
    throw ParseError("--n=" + std::to_string(opts.n) +
                     " does not match the " + std::to_string(tokens) +
                     "-token window");
  }
  const GroupParams params = validate_params(opts.r, tokens, false);
  return ColoredPermutation::parse(params, window);
}

njson poly_to_json(const QPolynomial& poly) {
  njson coeffs = njson::array();
  for (const Int128 c : poly.coefficients()) {
    if (c > std::numeric_limits<std::int64_t>::max() ||
        c < std::numeric_limits<std::int64_t>::min()) {
      throw CapExceeded("coefficient " + int128_to_string(c) +
                        " does not fit a JSON integer");
    }
    coeffs.push_back(static_cast<std::int64_t>(c));
  }
  return coeffs;
}

njson ints_to_json(const std::vector<int>& values) {
  return njson(values);
}

std::string params_suffix(const GroupParams& params) {
  return "  (r=" + std::to_string(params.r) +
         ", n=" + std::to_string(params.n) + ")";
}

int cmd_stats(const ParamOptions& opts, const std::string& window) {
  const ColoredPermutation pi = parse_element(opts, window);
  const GroupParams params = pi.params();

  std::optional<bool> alternating;
  if (params.r % 2 == 0) alternating = is_alternating(pi);
  const bool machinery = params.alternating_capable();
  const bool full = machinery && alternating.value_or(false);

  std::string note;
  if (!machinery) {
    note = "r is not 2 mod 4: the alternating statistics are undefined";
  } else if (!alternating.value_or(false)) {
    note = "element is not alternating (csum + inv(|pi|) = " +
           std::to_string(csum(pi) + inv_plain(pi)) +
           " is odd): A-only statistics are null";
  }

  if (opts.json()) {
    njson out;
    out["window"] = pi.str();
    out["r"] = params.r;
    out["n"] = params.n;
    out["z"] = ints_to_json(pi.z_vector());
    out["c"] = ints_to_json(pi.c_vector());
    out["csum"] = csum(pi);
    out["inv_colored"] = inv_colored(pi);
    out["inv_plain"] = inv_plain(pi);
    out["col_set"] = ints_to_json(col_set(pi));
    out["is_alternating"] =
        alternating.has_value() ? njson(*alternating) : njson(nullptr);
    out["length_a"] = full ? njson(length_LA(pi)) : njson(nullptr);
    out["tinv"] = machinery ? njson(tinv(pi)) : njson(nullptr);
    out["fibral_length"] = full ? njson(fibral_length(pi)) : njson(nullptr);
    out["finv_a"] = full ? njson(finv_a(pi)) : njson(nullptr);
    out["rtlmin_a"] = full ? njson(rtlmin_a(pi)) : njson(nullptr);
    out["note"] = note.empty() ? njson(nullptr) : njson(note);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  const auto join = [](const std::vector<int>& values, const char* sep) {
    std::string text;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) text += sep;
      text += std::to_string(values[i]);
    }
    return text;
  };
  std::cout << "window: " << pi.str() << params_suffix(params) << "\n";
  std::cout << "z: " << join(pi.z_vector(), " ") << "\n";
  std::cout << "c: " << join(pi.c_vector(), " ") << "\n";
  std::cout << "csum: " << csum(pi) << "\n";
  std::cout << "inv_colored: " << inv_colored(pi) << "\n";
  std::cout << "inv_plain: " << inv_plain(pi) << "\n";
  std::cout << "col_set: {" << join(col_set(pi), ", ") << "}\n";
  std::cout << "is_alternating: "
            << (alternating.has_value() ? (*alternating ? "true" : "false")
                                        : "null")
            << "\n";
  if (full) {
    std::cout << "length_a: " << length_LA(pi) << "\n";
    std::cout << "tinv: " << tinv(pi) << "\n";
    std::cout << "fibral_length: " << fibral_length(pi) << "\n";
    std::cout << "finv_a: " << finv_a(pi) << "\n";
    std::cout << "rtlmin_a: " << rtlmin_a(pi) << "\n";
  } else {
    std::cout << "length_a: null\n";
    std::cout << "tinv: " << (machinery ? std::to_string(tinv(pi)) : "null")
              << "\n";
    std::cout << "fibral_length: null\nfinv_a: null\nrtlmin_a: null\n";
  }
  if (!note.empty()) std::cout << "note: " << note << "\n";
  return 0;
}

const char* branch_name(GammaBranch branch) {
  switch (branch) {
    case GammaBranch::Trivial: return "trivial";
    case GammaBranch::WithPrefix: return "s0-prefix";
    case GammaBranch::WithoutPrefix: return "no-s0-prefix";
  }
  return "?";
}

int cmd_decompose(const ParamOptions& opts, const std::string& window) {
  const ColoredPermutation pi = parse_element(opts, window);
  const GroupParams params = pi.params();
  const SWord s_word = canonical_s_word(pi);
  const bool s_ok = eval_s_word(params, s_word) == pi;

  std::string note;
  bool a_available = params.alternating_capable();
  if (!a_available) {
    note = "A-generator decomposition needs r = 2 mod 4";
  } else if (!is_alternating(pi)) {
    a_available = false;
    note = "element is not alternating (csum + inv(|pi|) = " +
           std::to_string(csum(pi) + inv_plain(pi)) +
           " is odd): no A-word exists";
  }

  std::optional<AWord> a_word;
  std::optional<CanonicalDecomposition> decomposition;
  bool round_trip = s_ok;
  if (a_available) {
    a_word = canonical_a_word(pi);
    decomposition = structured_decomposition(pi);
    round_trip = s_ok && eval_a_word(params, *a_word) == pi &&
                 decomposition->product() == pi;
  }

  if (opts.json()) {
    njson out;
    out["window"] = pi.str();
    out["r"] = params.r;
    out["n"] = params.n;
    out["s_word"] = s_word.str();
    out["s_letters"] = static_cast<std::int64_t>(s_word.size());
    out["a_word"] = a_word ? njson(a_word->str()) : njson(nullptr);
    out["a_letters"] =
        a_word ? njson(static_cast<std::int64_t>(a_word->size()))
               : njson(nullptr);
    out["length_a"] = a_word ? njson(length_LA(pi)) : njson(nullptr);
    if (decomposition) {
      njson gammas = njson::array();
      for (std::size_t i = 0; i < decomposition->gammas.size(); ++i) {
        const GammaFactor& g = decomposition->gammas[i];
        gammas.push_back({{"index", static_cast<int>(i) + 1},
                          {"word", g.word.str()},
                          {"branch", branch_name(g.branch)},
                          {"color_exponent", g.color_exponent}});
      }
      njson orderings = njson::array();
      for (std::size_t k = 0; k < decomposition->orderings.size(); ++k) {
        const OrderingFactor& o = decomposition->orderings[k];
        orderings.push_back({{"index", static_cast<int>(k) + 1},
                             {"word", o.word.str()},
                             {"from", o.from_pos},
                             {"to", o.to_pos}});
      }
      out["decomposition"] = {{"gammas", gammas}, {"orderings", orderings}};
    } else {
      out["decomposition"] = nullptr;
    }
    out["round_trip"] = round_trip;
    out["note"] = note.empty() ? njson(nullptr) : njson(note);
    std::cout << out.dump(2) << "\n";
    return a_available ? 0 : 1;
  }

  std::cout << "window: " << pi.str() << params_suffix(params) << "\n";
  std::cout << "s-word (" << s_word.size() << " letters): "
            << (s_word.empty() ? "1" : s_word.str()) << "\n";
  if (a_word) {
    std::cout << "a-word (" << a_word->size() << " letters): "
              << (a_word->empty() ? "1" : a_word->str()) << "\n";
    std::cout << "length_a: " << length_LA(pi) << "\n";
    std::cout << "decomposition:\n";
    for (std::size_t i = 0; i < decomposition->gammas.size(); ++i) {
      const GammaFactor& g = decomposition->gammas[i];
      std::cout << "  gamma[" << (i + 1) << "]: "
                << (g.word.empty() ? "1" : g.word.str());
      if (g.branch != GammaBranch::Trivial) {
        std::cout << "  (" << branch_name(g.branch) << ", a0-exp "
                  << g.color_exponent << ")";
      }
      std::cout << "\n";
    }
    for (std::size_t k = 0; k < decomposition->orderings.size(); ++k) {
      const OrderingFactor& o = decomposition->orderings[k];
      std::cout << "  o[" << (k + 1) << "]: "
                << (o.word.empty() ? "1" : o.word.str());
      if (o.from_pos != o.to_pos) {
        std::cout << "  (push " << o.from_pos << " -> " << o.to_pos << ")";
      }
      std::cout << "\n";
    }
    std::cout << "round-trip: " << (round_trip ? "ok" : "FAILED") << "\n";
  } else {
    std::cout << "a-word: unavailable\n";
    std::cout << "note: " << note << "\n";
  }
  return a_available ? 0 : 1;
}

int cmd_project(const ParamOptions& opts, const std::string& window) {
  const ColoredPermutation pi = parse_element(opts, window);
  validate_params(pi.r(), pi.n(), true);
  const ColoredPermutation image = halve_colors(pi);
  const bool member = is_alternating(pi);
  const std::string note =
      member ? ""
             : "input is not alternating: printed the color arithmetic only";

  if (opts.json()) {
    njson out;
    out["input"] = pi.str();
    out["r"] = pi.r();
    out["n"] = pi.n();
    out["window"] = image.str();
    out["r_half"] = image.r();
    out["is_alternating"] = member;
    out["note"] = note.empty() ? njson(nullptr) : njson(note);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "projection: " << image.str() << params_suffix(image.params())
              << "\n";
    if (!note.empty()) std::cout << "note: " << note << "\n";
  }
  return member ? 0 : 1;
}

int cmd_section(const ParamOptions& opts, const std::string& window) {
  // --r names the target A_{r,n}; the input lives in G_{r/2,n}.
  const GroupParams target = validate_params(opts.r, 1, true);
  ParamOptions base_opts = opts;
  base_opts.r = target.r / 2;
  const ColoredPermutation sigma = parse_element(base_opts, window);
  const ColoredPermutation lifted = section(sigma);

  if (opts.json()) {
    njson out;
    out["input"] = sigma.str();
    out["r_half"] = sigma.r();
    out["n"] = sigma.n();
    out["window"] = lifted.str();
    out["r"] = lifted.r();
    out["is_alternating"] = is_alternating(lifted);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "section: " << lifted.str() << params_suffix(lifted.params())
              << "\n";
  }
  return 0;
}

int cmd_fiber(const ParamOptions& opts, const std::string& window) {
  ColoredPermutation pi = [&] {
    if (!window.empty()) return parse_element(opts, window);
    if (opts.n == 0) {
      throw ParseError("fiber needs an element argument or --n");
    }
    return ColoredPermutation::identity(validate_params(opts.r, opts.n, true));
  }();
  validate_params(pi.r(), pi.n(), true);
  if (!is_alternating(pi)) {
    std::cerr << "error: element is not alternating; its fiber is undefined\n";
    return 1;
  }
  const FiberReport report = fiber_report(pi);

  if (opts.json()) {
    njson members = njson::array();
    for (const FiberMember& m : report.members) {
      members.push_back({{"window", m.element.str()},
                         {"fibral_length", m.fibral_len}});
    }
    njson out;
    out["base"] = report.base.str();
    out["r_half"] = report.base.r();
    out["n"] = report.base.n();
    out["members"] = members;
    out["formula_poly"] = poly_to_json(report.formula_poly);
    out["bruteforce_poly"] = poly_to_json(report.bruteforce_poly);
    out["formula_matches"] = report.formula_matches;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "base: " << report.base.str()
              << params_suffix(report.base.params()) << "\n";
    std::cout << "members (" << report.members.size() << "):\n";
    for (const FiberMember& m : report.members) {
      std::cout << "  " << m.element.str() << "  l_F = " << m.fibral_len
                << "\n";
    }
    std::cout << "formula:     " << report.formula_poly.str() << "\n";
    std::cout << "brute force: " << report.bruteforce_poly.str() << "\n";
    std::cout << "formula matches: " << (report.formula_matches ? "yes" : "NO")
              << "\n";
  }
  return report.formula_matches ? 0 : 1;
}

int cmd_genfun(const ParamOptions& opts, const std::string& stat_name) {
  const GroupParams params = validate_params(opts.r, opts.n, true);
  const Statistic stat = statistic_from_name(stat_name);
  const QPolynomial formula = [&] {
    switch (stat) {
      case Statistic::Length: return genfun_length_formula(params);
      case Statistic::Finv: return genfun_finv_formula(params);
      case Statistic::Rtlmin: return genfun_rtlmin_formula(params);
      case Statistic::Fibral: return genfun_fibral_formula(params, opts.cap);
    }
    throw InvalidParams("unreachable statistic");
  }();
  const QPolynomial brute = genfun_bruteforce(params, stat, opts.cap);
  const bool match = formula == brute;

  std::string mismatch;
  if (!match) {
    const int degree = std::max(formula.degree(), brute.degree());
    for (int k = 0; k <= degree; ++k) {
      if (formula.coefficient(k) != brute.coefficient(k)) {
        mismatch = "first differing coefficient at q^" + std::to_string(k) +
                   ": formula " + int128_to_string(formula.coefficient(k)) +
                   " vs brute force " + int128_to_string(brute.coefficient(k));
        break;
      }
    }
  }

  if (opts.json()) {
    njson out;
    out["stat"] = std::string(statistic_name(stat));
    out["r"] = params.r;
    out["n"] = params.n;
    out["formula"] = poly_to_json(formula);
    out["bruteforce"] = poly_to_json(brute);
    out["match"] = match;
    out["at_q1"] = static_cast<std::int64_t>(formula.evaluate_at(1));
    out["mismatch"] = mismatch.empty() ? njson(nullptr) : njson(mismatch);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "statistic: " << statistic_name(stat)
              << params_suffix(params) << "\n";
    std::cout << "formula:     " << formula.str() << "\n";
    std::cout << "brute force: " << brute.str() << "\n";
    std::cout << "at q=1: " << int128_to_string(formula.evaluate_at(1))
              << "\n";
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    if (!mismatch.empty()) std::cout << mismatch << "\n";
  }
  return match ? 0 : 1;
}

int cmd_verify(const ParamOptions& opts,
               const std::vector<std::string>& suites) {
  const GroupParams params = validate_params(opts.r, opts.n, true);
  const VerificationReport report = run_suite(params, suites, opts.cap);

  if (opts.json()) {
    njson checks = njson::array();
    for (const CheckResult& c : report.checks) {
      checks.push_back(
          {{"id", c.id},
           {"status", c.status == CheckStatus::Pass   ? "pass"
                      : c.status == CheckStatus::Fail ? "fail"
                                                      : "skip"},
           {"counterexample",
            c.counterexample.empty() ? njson(nullptr)
                                     : njson(c.counterexample)},
           {"detail", c.detail.empty() ? njson(nullptr) : njson(c.detail)}});
    }
    njson out;
    out["suite"] = report.suite;
    out["r"] = params.r;
    out["n"] = params.n;
    out["checks"] = checks;
    out["pass"] = report.passed();
    out["elapsed_ms"] = static_cast<std::int64_t>(report.elapsed.count());
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "suite: " << (report.suite.empty() ? "(none)" : report.suite)
              << params_suffix(params) << "\n";
    for (const CheckResult& c : report.checks) {
      const char* tag = c.status == CheckStatus::Pass   ? "pass"
                        : c.status == CheckStatus::Fail ? "FAIL"
                                                        : "skip";
      std::cout << "  [" << tag << "] " << c.id;
      if (c.status == CheckStatus::Fail && !c.counterexample.empty()) {
        std::cout << "  counterexample: " << c.counterexample;
      }
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
    std::cout << "overall: " << (report.passed() ? "PASS" : "FAIL") << " ("
              << report.checks.size() << " checks, " << report.elapsed.count()
              << " ms)\n";
  }
  return report.passed() ? 0 : 1;
}

int cmd_enumerate(const ParamOptions& opts, const std::string& group) {
  const bool alternating_group = group == "a";
  if (!alternating_group && group != "g") {
    throw ParseError("--group must be 'a' or 'g'");
  }
  const GroupParams params =
      validate_params(opts.r, opts.n, alternating_group);
  const std::uint64_t order = group_order(params);
  if (order > opts.cap) {
    throw CapExceeded("group order " + std::to_string(order) +
                      " exceeds the cap " + std::to_string(opts.cap));
  }
  std::uint64_t count = 0;
  const bool machine = opts.json();
  const auto emit = [&count, machine](const ColoredPermutation& pi) {
    if (machine) {
      njson record;
      record["rank"] = static_cast<std::int64_t>(pi.rank());
      record["window"] = pi.str();
      std::cout << record.dump() << "\n";
    } else {
      std::cout << pi.str() << "\n";
    }
    ++count;
  };
  if (alternating_group) {
    for_each_alternating(params, emit);
  } else {
    for_each_element(params, emit);
  }
  if (!machine) std::cout << "count: " << count << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computational algebra for alternating colored"
               " permutations: canonical words, length functions, the"
               " covering onto half the colors, and brute-force verification"
               " of the closed-form identities."};
  app.require_subcommand(1);

  ParamOptions opts;
  std::string window;
  std::string stat_name;
  std::string group = "a";
  std::vector<std::string> suites;

  const auto add_common = [&opts](CLI::App* cmd, bool needs_r) {
    auto* r = cmd->add_option("--r", opts.r, "number of colors");
    if (needs_r) r->required();
    cmd->add_option("--n", opts.n, "number of digits");
    cmd->add_option("--format", opts.format, "output format (text|json)")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--cap", opts.cap, "element cap for exhaustive sweeps");
  };

  CLI::App* stats = app.add_subcommand("stats", "statistics of one element");
  add_common(stats, true);
  stats->add_option("element", window, "window text, e.g. \"1 2^2 4 5^1 3^3\"")
      ->required();

  CLI::App* decompose =
      app.add_subcommand("decompose", "canonical words and the structured"
                                      " decomposition");
  add_common(decompose, true);
  decompose->add_option("element", window, "window text")->required();

  CLI::App* project_cmd =
      app.add_subcommand("project", "covering map into G_{r/2,n}");
  add_common(project_cmd, true);
  project_cmd->add_option("element", window, "window text")->required();

  CLI::App* section_cmd = app.add_subcommand(
      "section", "section of the covering (input colors below r/2)");
  add_common(section_cmd, true);
  section_cmd->add_option("element", window, "window text")->required();

  CLI::App* fiber_cmd =
      app.add_subcommand("fiber", "fiber report with the F(pi) distribution");
  add_common(fiber_cmd, true);
  fiber_cmd->add_option("element", window,
                        "window text (defaults to the identity; needs --n)");

  CLI::App* genfun = app.add_subcommand(
      "genfun", "closed-form generating function against brute force");
  add_common(genfun, true);
  genfun->add_option("--stat", stat_name,
                     "statistic (length|finv|rtlmin|fibral)")
      ->required();

  CLI::App* verify =
      app.add_subcommand("verify", "run exhaustive verification suites");
  add_common(verify, true);
  verify
      ->add_option("--suite", suites,
                   "suites: presentation order decomposition covering genfun"
                   " or all")
      ->required();

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "stream a group, rank ascending");
  add_common(enumerate_cmd, true);
  enumerate_cmd->add_option("--group", group, "a (alternating) or g (full)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(stats)) return cmd_stats(opts, window);
    if (app.got_subcommand(decompose)) return cmd_decompose(opts, window);
    if (app.got_subcommand(project_cmd)) return cmd_project(opts, window);
    if (app.got_subcommand(section_cmd)) return cmd_section(opts, window);
    if (app.got_subcommand(fiber_cmd)) return cmd_fiber(opts, window);
    if (app.got_subcommand(genfun)) return cmd_genfun(opts, stat_name);
    if (app.got_subcommand(verify)) return cmd_verify(opts, suites);
    if (app.got_subcommand(enumerate_cmd)) return cmd_enumerate(opts, group);
  } catch (const NotAlternating& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
