#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "udval/axioms.hpp"
#include "udval/csv.hpp"
#include "udval/experiments.hpp"
#include "udval/game_io.hpp"
#include "udval/svg_plot.hpp"
#include "udval/version.hpp"

using namespace udval;

namespace {

std::string join_command_line(int argc, char** argv) {
  std::string line;
  for (int i = 0; i < argc; ++i) {
    if (i) line += ' ';
    line += argv[i];
  }
  return line;
}

std::vector<std::string> output_header(const std::string& command_line, std::uint64_t seed) {
  return {std::string("udval ") + kVersion, "command: " + command_line,
          "seed: " + std::to_string(seed)};
}

ValueKind kind_from_string(const std::string& name) {
  if (name == "ud") return ValueKind::ud;
  if (name == "r") return ValueKind::r;
  if (name == "ic") return ValueKind::ic;
  fail(ErrorCode::invalid_input, "unknown value kind '" + name + "'");
}

void print_allocation(const Allocation<double>& payoff) {
  for (std::size_t i = 0; i < payoff.size(); ++i) {
    if (i) std::printf(" ");
    std::printf("%.12g", payoff[i]);
  }
  std::printf("\n");
}

struct Options {
  std::string command_line;

  std::string kind = "ud";
  std::string game_path;
  bool exact = false;

  int players = 3;
  std::string system_encoding;

  long samples = 0;
  std::uint64_t seed = 0;
  std::string out_path;

  std::string experiment_mode;  // diff | ed
  bool exhaustive = false;
  bool auto_samples = false;
  bool skip_unsupported = false;
  int games = 100;
  std::string ranks_path;
  std::string hist_path;

  std::string in_path;
  std::string plot_kind;
};

int run_value(const Options& opt) {
  const ValueKind kind = kind_from_string(opt.kind);
  if (opt.exact) {
    const auto payoff = compute_value(parse_game_file_exact(opt.game_path), kind);
    for (std::size_t i = 0; i < payoff.size(); ++i) {
      if (i) std::printf(" ");
      std::printf("%s", to_string(payoff[i]).c_str());
    }
    std::printf("\n");
    return 0;
  }
  print_allocation(compute_value(parse_game_file(opt.game_path), kind));
  return 0;
}

int run_uniqueness(const Options& opt) {
  const SetSystem k = SetSystem::from_encoding(opt.players, mpz_class(opt.system_encoding));
  const UniquenessDecision decision = decide_ud_uniqueness(k);
  std::printf("%s\n", decision.unique ? "unique" : "non-unique");
  std::printf(
      "players=%d members=%zu intersection_closed=%s grand=%s columns=%d "
      "rank_constraints=%d rank_stacked=%d\n",
      k.players(), k.size(), decision.intersection_closed ? "yes" : "no",
      decision.has_grand ? "yes" : "no", decision.columns, decision.rank_constraints,
      decision.rank_stacked);
  return 0;
}

int run_audit(const Options& opt) {
  const IncompleteGame<double> game = parse_game_file(opt.game_path);
  const std::vector<AxiomReport> reports = audit_game(game, opt.seed);
  std::vector<std::vector<std::string>> rows;
  std::ostringstream echo;
  echo << "game: " << opt.game_path << " encoding " << game.system().encoding().get_str();

  std::string text;
  for (const std::string& line : output_header(opt.command_line, opt.seed)) {
    text += "# " + line + "\n";
  }
  text += "# " + echo.str() + "\n";
  text += axiom_report_csv_header() + "\n";
  for (const AxiomReport& report : reports) text += to_csv_row(report) + "\n";

  if (opt.out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(opt.out_path);
    if (!out) fail(ErrorCode::invalid_input, opt.out_path + ": cannot open for writing");
    out << text;
  }
  return 0;
}

int run_census(const Options& opt) {
  CensusRow row;
  if (opt.samples > 0) {
    row = census_sampled(opt.players, opt.samples, opt.seed);
  } else {
    row = census_exhaustive(opt.players).row;
  }
  const auto header = output_header(opt.command_line, opt.seed);
  if (!opt.out_path.empty()) write_census_csv(row, opt.out_path, header);

  std::printf("n,total,ic_count,ic_prop,unique_nonic_count,unique_nonic_prop,samples,seed\n");
  std::printf("%d,%s,%ld,%s,%ld,%s,%ld,%llu\n", row.players, row.total.get_str().c_str(),
              row.ic_count, format_double(row.ic_proportion).c_str(), row.unique_nonic_count,
              format_double(row.unique_nonic_proportion).c_str(), row.samples,
              static_cast<unsigned long long>(row.seed));
  if (row.samples > 0) {
    std::printf("# standard errors: ic %s, unique_nonic %s\n", format_double(row.ic_se).c_str(),
                format_double(row.unique_nonic_se).c_str());
  }
  return 0;
}

int run_experiment(const Options& opt) {
  const DifferenceReference reference = opt.experiment_mode == "ed"
                                            ? DifferenceReference::equal_division
                                            : DifferenceReference::pairwise;
  std::vector<SetSystem> systems;
  if (opt.exhaustive) {
    systems = all_ic_systems(opt.players);
  } else {
    long count = opt.samples;
    if (opt.auto_samples) {
      count = pilot_cochran_sample_count(opt.players, opt.games, opt.seed, reference);
      std::fprintf(stderr, "pilot sized the run at %ld systems\n", count);
    }
    if (count <= 0) {
      fail(ErrorCode::invalid_input, "need --exhaustive, --samples, or --auto-samples");
    }
    systems = sampled_ic_systems(opt.players, count, opt.seed);
  }
  const DifferenceReport report =
      difference_experiment(systems, opt.games, opt.seed, reference, opt.skip_unsupported);

  const auto header = output_header(opt.command_line, opt.seed);
  write_difference_csv(report, opt.out_path, header);
  if (!opt.ranks_path.empty()) write_rank_csv(summarize_ranks(report), opt.ranks_path, header);
  if (!opt.hist_path.empty()) {
    write_histogram_csv(summarize_histogram(report), opt.hist_path, header);
  }
  std::printf("%zu systems, %d games each -> %s\n", report.systems.size(), opt.games,
              opt.out_path.c_str());
  return 0;
}

int run_plot(const Options& opt) {
  emit_plot(opt.in_path, plot_kind_from_string(opt.plot_kind), opt.out_path,
            output_header(opt.command_line, opt.seed));
  std::printf("%s\n", opt.out_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  opt.command_line = join_command_line(argc, argv);

  CLI::App app{"values for cooperative games with incomplete coalition information"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CLI::App* value_cmd = app.add_subcommand("value", "compute the UD-, R-, or IC-value of a game");
  value_cmd->add_option("--kind", opt.kind, "ud, r, or ic")
      ->required()
      ->check(CLI::IsMember({"ud", "r", "ic"}));
  value_cmd->add_option("--game", opt.game_path, "game file")->required();
  value_cmd->add_flag("--exact", opt.exact, "exact rational arithmetic and output");

  CLI::App* uniq_cmd =
      app.add_subcommand("uniqueness", "decide whether a set system has a unique UD payoff");
  uniq_cmd->add_option("--players", opt.players, "player count")->required();
  uniq_cmd->add_option("--system", opt.system_encoding, "decimal membership encoding")->required();

  CLI::App* audit_cmd = app.add_subcommand("audit", "run the axiom checkers on a game");
  audit_cmd->add_option("--game", opt.game_path, "game file")->required();
  audit_cmd->add_option("--seed", opt.seed, "seed for the random partner games");
  audit_cmd->add_option("--out", opt.out_path, "write the report CSV here instead of stdout");

  CLI::App* census_cmd =
      app.add_subcommand("census", "count intersection-closed and unique-UD set systems");
  census_cmd->add_option("--players", opt.players, "player count")->required();
  census_cmd->add_option("--samples", opt.samples, "sample instead of exhaustive enumeration");
  census_cmd->add_option("--seed", opt.seed, "sampling seed");
  census_cmd->add_option("--out", opt.out_path, "also write the census CSV here");

  CLI::App* exp_cmd = app.add_subcommand("experiment", "value-difference experiments");
  exp_cmd->add_option("mode", opt.experiment_mode, "diff (pairwise) or ed (equal division)")
      ->required()
      ->check(CLI::IsMember({"diff", "ed"}));
  exp_cmd->add_option("--players", opt.players, "player count")->required();
  exp_cmd->add_flag("--exhaustive", opt.exhaustive,
                    "all intersection-closed systems (players <= 4)");
  exp_cmd->add_option("--samples", opt.samples, "number of sampled intersection-closed systems");
  exp_cmd->add_flag("--auto-samples", opt.auto_samples,
                    "size the run with a 30-system pilot and the Cochran formula");
  exp_cmd->add_option("--games", opt.games, "games per system (default 100)");
  exp_cmd->add_option("--seed", opt.seed, "experiment seed");
  exp_cmd->add_option("--out", opt.out_path, "per-system means CSV")->required();
  exp_cmd->add_option("--ranks", opt.ranks_path, "also write the rank-frequency CSV");
  exp_cmd->add_option("--hist", opt.hist_path, "also write the histogram CSV");
  exp_cmd->add_flag("--skip-unsupported", opt.skip_unsupported,
                    "skip unsupported systems instead of failing");

  CLI::App* plot_cmd = app.add_subcommand("plot", "render a toolkit CSV as SVG");
  plot_cmd->add_option("--in", opt.in_path, "input CSV")->required();
  plot_cmd->add_option("--kind", opt.plot_kind, "lines, ranks, or hist")
      ->required()
      ->check(CLI::IsMember({"lines", "ranks", "hist"}));
  plot_cmd->add_option("--out", opt.out_path, "output SVG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (value_cmd->parsed()) return run_value(opt);
    if (uniq_cmd->parsed()) return run_uniqueness(opt);
    if (audit_cmd->parsed()) return run_audit(opt);
    if (census_cmd->parsed()) return run_census(opt);
    if (exp_cmd->parsed()) return run_experiment(opt);
    if (plot_cmd->parsed()) return run_plot(opt);
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
