#pragma once

// Command-line front end. run() never writes to the process streams directly,
// so it can be driven from tests.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "demos.hpp"
#include "extension.hpp"
#include "gassmann.hpp"
#include "witt.hpp"
#include "zeta.hpp"

namespace ffz::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kData = 3, kInternal = 4 };

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cli", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ExtensionSpec load_extension(const std::string& path) { return parse_extension(read_file(path)); }

inline Subgroup load_subgroup(const GroupPtr& g, const std::string& path) {
  auto [n, gens] = parse_generators(read_file(path));
  if (n != g->degree())
    throw DomainError("cli", path + " acts on " + std::to_string(n) + " points, group on " + std::to_string(g->degree()));
  return subgroup_generated(g, gens);
}

inline void print_gassmann(std::ostream& out, const GroupPtr& g, const Subgroup& h1, const Subgroup& h2) {
  out << "H1 = " << h1.generators_text() << ", H2 = " << h2.generators_text() << "\n";
  out << gassmann_check(g, h1, h2).to_string();
  out << "CONJUGATE: " << (are_conjugate(g, h1, h2) ? "yes" : "no") << "\n";
}

inline void print_komatsu(std::ostream& out) {
  const auto k = cayley_komatsu(3);
  auto stats = [&](const char* label, const std::map<std::vector<int>, std::size_t>& m) {
    out << label << ":";
    for (const auto& [type, count] : m) out << " " << count << "x" << type.front() << "^" << type.size();
    out << "\n";
  };
  stats("(Z/3)^3 cycle types", k.stats1);
  stats("Heisenberg(3) cycle types", k.stats2);
  out << "abelian: " << (k.h1_abelian ? "yes" : "no") << " / " << (k.h2_abelian ? "yes" : "no") << "\n";
  out << "GASSMANN: " << (k.gassmann ? "yes" : "no") << "\n";
}

}  // namespace detail

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta functions and arithmetic equivalence over F_q(T)", "ffz"};
  app.require_subcommand(1);

  std::string ext_path, prime_text, dump_path, kind_text, a_path, b_path, builtin, group_path, h1_path, h2_path, demo_name;
  int max_degree = 6;
  std::optional<int> s_value;
  std::int64_t prec = 12;
  int witt_len = 2;
  int compare_witt_len = 0;

  auto* splitting = app.add_subcommand("splitting", "splitting type of a prime");
  splitting->add_option("--ext", ext_path, "extension config")->required();
  splitting->add_option("--prime", prime_text, "monic irreducible of F_q[T]")->required();

  auto* table = app.add_subcommand("table", "Dirichlet coefficients B(n) for deg n <= D");
  table->add_option("--ext", ext_path, "extension config")->required();
  table->add_option("--max-degree", max_degree, "degree bound D")->check(CLI::NonNegativeNumber);
  table->add_option("--dump", dump_path, "write the table to this file instead of stdout");

  auto* zeta = app.add_subcommand("zeta", "evaluate a zeta function");
  zeta->add_option("--kind", kind_text, "weil | goss | lifted")->required()->check(CLI::IsMember({"weil", "goss", "lifted"}));
  zeta->add_option("--ext", ext_path, "extension config")->required();
  zeta->add_option("--max-degree", max_degree, "degree bound D")->check(CLI::NonNegativeNumber);
  zeta->add_option("--s", s_value, "integer argument (goss, lifted)");
  zeta->add_option("--prec", prec, "precision in T^-1")->check(CLI::NonNegativeNumber);
  zeta->add_option("--witt-len", witt_len, "Witt length N (lifted)")->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("compare", "compare two extensions coefficientwise up to D");
  compare->add_option("--kind", kind_text, "weil | goss | lifted")->required()->check(CLI::IsMember({"weil", "goss", "lifted"}));
  compare->add_option("a", a_path, "first extension config")->required();
  compare->add_option("b", b_path, "second extension config")->required();
  compare->add_option("--max-degree", max_degree, "degree bound D")->check(CLI::NonNegativeNumber);
  compare->add_option("--witt-len", compare_witt_len, "lifted: compare in W_N = Z/p^N (0 = integers)")
      ->check(CLI::NonNegativeNumber);

  auto* gassmann = app.add_subcommand("gassmann", "Gassmann equivalence of two subgroups");
  auto* builtin_opt = gassmann->add_option("--builtin", builtin, "psl27 | klein4 | komatsu3")
                          ->check(CLI::IsMember({"psl27", "klein4", "komatsu3"}));
  auto* group_opt = gassmann->add_option("--group", group_path, "generators of G");
  auto* h1_opt = gassmann->add_option("--h1", h1_path, "generators of H1");
  auto* h2_opt = gassmann->add_option("--h2", h2_path, "generators of H2");
  group_opt->needs(h1_opt, h2_opt);
  h1_opt->needs(group_opt);
  h2_opt->needs(group_opt);
  builtin_opt->excludes(group_opt, h1_opt, h2_opt);

  auto* demo = app.add_subcommand("demo", "run a scripted scenario");
  demo->add_option("name", demo_name, "malakie | pgalois | genus | gossrem | reconstruct | brr | psl27 | komatsu | witt")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*splitting) {
      const auto ext = detail::load_extension(ext_path);
      out << splitting_type(ext, parse_monic(ext.base, prime_text)).to_string() << "\n";
    } else if (*table) {
      const auto t = dirichlet_table(detail::load_extension(ext_path), max_degree);
      if (dump_path.empty()) {
        dump_table(t, out);
      } else {
        std::ofstream f(dump_path);
        if (!f) throw DomainError("cli", "cannot write " + dump_path);
        dump_table(t, f);
        out << "wrote " << t.size() << " coefficients to " << dump_path << "\n";
      }
    } else if (*zeta) {
      const auto kind = parse_zeta_kind(kind_text);
      if (kind != ZetaKind::weil && !s_value) {
        err << "zeta --kind " << kind_text << " requires --s\n";
        return kUsage;
      }
      const auto t = dirichlet_table(detail::load_extension(ext_path), max_degree);
      if (kind == ZetaKind::weil) out << weil_series(t).to_string() << "\n";
      else if (kind == ZetaKind::goss) out << goss_eval(t, *s_value, prec).to_string() << "\n";
      else out << lifted_goss_eval(t, *s_value, witt_len, prec).to_string() << "\n";
    } else if (*compare) {
      const auto kind = parse_zeta_kind(kind_text);
      const auto a = dirichlet_table(detail::load_extension(a_path), max_degree);
      const auto b = dirichlet_table(detail::load_extension(b_path), max_degree);
      out << compare_zeta(a, b, kind, compare_witt_len).to_string() << "\n";
    } else if (*gassmann) {
      if (builtin.empty() && group_path.empty()) {
        err << "gassmann needs --builtin or --group/--h1/--h2\n";
        return kUsage;
      }
      if (builtin == "komatsu3") {
        detail::print_komatsu(out);
      } else if (builtin == "psl27") {
        const auto g = psl27();
        const auto reps = subgroups_of_order(g, 24);
        if (reps.size() != 2) throw InternalError("cli", "expected two classes of subgroups of order 24");
        detail::print_gassmann(out, g, reps[0], reps[1]);
      } else if (builtin == "klein4") {
        const auto g = klein4();
        detail::print_gassmann(out, g, subgroup_generated(g, {Permutation::parse("(1 2)", 4)}),
                               subgroup_generated(g, {Permutation::parse("(3 4)", 4)}));
      } else {
        auto [n, gens] = parse_generators(detail::read_file(group_path));
        const auto g = group_closure(n, gens);
        detail::print_gassmann(out, g, detail::load_subgroup(g, h1_path), detail::load_subgroup(g, h2_path));
      }
    } else if (*demo) {
      const auto& reg = demo_registry();
      if (std::none_of(reg.begin(), reg.end(), [&](const DemoEntry& d) { return d.name == demo_name; })) {
        err << "unknown demo \"" << demo_name << "\"\n";
        return kUsage;
      }
      const auto report = run_demo(demo_name);
      out << report.to_string();
      return report.passed() ? kOk : kInternal;
    }
  } catch (const InternalError& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace ffz::cli
