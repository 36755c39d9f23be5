#pragma once

// Batch command line: census, verify, hcount, gen, star. JSON on stdout,
// diagnostics on stderr. Exit 0 on success, 1 when a report fails, 2 on
// usage or input errors.

#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tourtype.hpp"
#include "tourtype/report_json.hpp"

namespace tourtype::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require_order(const Tournament& t, int order) {
  if (t.order() != order) {
    throw UsageError("--order " + std::to_string(order) + " does not match tournament of order " +
                     std::to_string(t.order()));
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline nlohmann::json census_json(const Tournament& t, bool oracle) {
  return to_json(oracle ? oracle_census(t) : census(t), t);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oriented path and cycle types in tournaments", "tourtype"};
  app.require_subcommand(1);

  // census
  auto* census_cmd = app.add_subcommand("census", "f and g for every type of one or more tournaments");
  int census_order = 0;
  std::string census_tournament;
  std::string census_input;
  bool census_random = false;
  std::uint64_t census_seed = 0;
  bool census_oracle = false;
  census_cmd->add_option("--order", census_order, "Tournament order")->required();
  auto* c_tour = census_cmd->add_option("--tournament", census_tournament, "Tournament as n:bits");
  auto* c_input = census_cmd->add_option("--input", census_input, "File with one tournament per line");
  auto* c_random = census_cmd->add_flag("--random", census_random, "Census of a seeded random tournament");
  auto* c_seed = census_cmd->add_option("--seed", census_seed, "Seed for --random");
  census_cmd->add_flag("--oracle", census_oracle, "Count by brute force (n <= 8)");
  c_tour->excludes(c_input)->excludes(c_random);
  c_input->excludes(c_random);
  c_random->needs(c_seed);
  c_seed->needs(c_random);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a property over a tournament scope");
  std::string property;
  int verify_order = 0;
  bool exhaustive = false;
  bool verify_random = false;
  std::uint64_t samples = 0;
  std::uint64_t verify_seed = 0;
  bool allow_large = false;
  unsigned threads = 0;
  bool timing = false;
  verify_cmd->add_option("--property", property, "Property id")->required();
  verify_cmd->add_option("--order", verify_order, "Tournament order")->required();
  auto* v_exh = verify_cmd->add_flag("--exhaustive", exhaustive, "All labelled tournaments of the order");
  auto* v_rand = verify_cmd->add_flag("--random", verify_random, "Seeded random sample");
  auto* v_samples = verify_cmd->add_option("--samples", samples, "Number of random tournaments");
  auto* v_seed = verify_cmd->add_option("--seed", verify_seed, "Seed for --random");
  verify_cmd->add_flag("--allow-large", allow_large, "Permit exhaustive n = 7");
  verify_cmd->add_option("--threads", threads, "Worker threads (0 = available parallelism)");
  verify_cmd->add_flag("--timing", timing, "Include wall time in the report");
  v_exh->excludes(v_rand);
  v_rand->needs(v_samples)->needs(v_seed);
  v_samples->needs(v_rand);
  v_seed->needs(v_rand);

  // hcount
  auto* hcount_cmd = app.add_subcommand("hcount", "Count copies of a Delta<=2 digraph");
  std::string h_tournament;
  std::string h_digraph;
  bool complement_check = false;
  hcount_cmd->add_option("--tournament", h_tournament, "Tournament as n:bits")->required();
  hcount_cmd->add_option("--digraph", h_digraph, "Components, e.g. P(2,-1);C(3);V")->required();
  hcount_cmd->add_flag("--complement-check", complement_check, "Also count in the complement");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate tournaments");
  int gen_order = 0;
  bool gen_all = false;
  bool gen_random = false;
  bool gen_transitive = false;
  std::uint64_t gen_seed = 0;
  std::uint64_t gen_count = 0;
  bool gen_allow_large = false;
  std::string gen_format = "json";
  gen_cmd->add_option("--order", gen_order, "Tournament order")->required();
  auto* g_all = gen_cmd->add_flag("--all", gen_all, "Every labelled tournament");
  auto* g_rand = gen_cmd->add_flag("--random", gen_random, "Seeded random tournaments");
  auto* g_trans = gen_cmd->add_flag("--transitive", gen_transitive, "The transitive tournament");
  auto* g_seed = gen_cmd->add_option("--seed", gen_seed, "Seed for --random");
  auto* g_count = gen_cmd->add_option("--count", gen_count, "Number of random tournaments");
  gen_cmd->add_flag("--allow-large", gen_allow_large, "Permit --all for n = 7");
  gen_cmd->add_option("--format", gen_format, "json or text (one n:bits per line)")
      ->check(CLI::IsMember({"json", "text"}));
  g_all->excludes(g_rand)->excludes(g_trans);
  g_rand->excludes(g_trans);
  g_rand->needs(g_seed)->needs(g_count);
  g_seed->needs(g_rand);
  g_count->needs(g_rand);

  // star
  auto* star_cmd = app.add_subcommand("star", "Out-star whose copy count changes under reversal");
  int star_order = 3;
  star_cmd->add_option("--order", star_order, "Number of leaves (>= 3)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (census_cmd->parsed()) {
      if (!census_random && census_tournament.empty() && census_input.empty()) {
        throw detail::UsageError("census needs --tournament, --input or --random");
      }
      if (!census_input.empty()) {
        const auto list = parse_tournament_list(detail::read_file(census_input));
        for (const auto& t : list) detail::require_order(t, census_order);
        for (const auto& t : list) out << detail::census_json(t, census_oracle).dump() << "\n";
        return kExitOk;
      }
      const Tournament t = census_random ? random_tournament(census_order, census_seed)
                                         : parse_tournament(census_tournament);
      detail::require_order(t, census_order);
      out << detail::census_json(t, census_oracle).dump() << "\n";
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      if (!exhaustive && !verify_random) throw detail::UsageError("verify needs --exhaustive or --random");
      Scope scope = exhaustive ? Scope::exhaustive(verify_order, allow_large)
                               : Scope::random(verify_order, samples, verify_seed);
      const VerifyReport report = verify(property, scope, threads);
      out << to_json(report, timing).dump() << "\n";
      return report.pass ? kExitOk : kExitFail;
    }

    if (hcount_cmd->parsed()) {
      const Tournament t = parse_tournament(h_tournament);
      const Digraph2Spec h = parse_digraph_spec(h_digraph);
      const Count count = count_copies(t, h);
      std::optional<Count> other;
      if (complement_check) other = count_copies(complement(t), h);
      nlohmann::json j = to_json(h, t, count, other);
      if (other) j["pass"] = count == *other;
      out << j.dump() << "\n";
      return (!other || count == *other) ? kExitOk : kExitFail;
    }

    if (gen_cmd->parsed()) {
      std::vector<Tournament> list;
      if (gen_all) {
        for (const Tournament& t : all_tournaments(gen_order, gen_allow_large)) list.push_back(t);
      } else if (gen_random) {
        if (gen_order < 0 || gen_order > Tournament::kMaxOrder) throw ScopeTooLarge("order must be in [0, 16]");
        for (std::uint64_t i = 0; i < gen_count; ++i) list.push_back(random_tournament(gen_order, sample_seed(gen_seed, i)));
      } else if (gen_transitive) {
        list.push_back(transitive(gen_order));
      } else {
        throw detail::UsageError("gen needs --all, --random or --transitive");
      }
      if (gen_format == "text") {
        for (const auto& t : list) out << serialize(t) << "\n";
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : list) arr.push_back(serialize(t));
        out << nlohmann::json{{"schema", kSchemaVersion}, {"order", gen_order}, {"tournaments", arr}}.dump()
            << "\n";
      }
      return kExitOk;
    }

    if (star_cmd->parsed()) {
      out << to_json(star_counterexample(star_order)).dump() << "\n";
      return kExitOk;
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tourtype::cli
