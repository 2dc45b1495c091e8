#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "udval/csv.hpp"
#include "udval/enumeration.hpp"
#include "udval/game_io.hpp"
#include "udval/svg_plot.hpp"
#include "udval/values.hpp"

using namespace udval;

namespace {

std::string fixture(const char* name) {
  return std::string(UDVAL_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("parsing the worked example files") {
  const IncompleteGame<double> g = parse_game_file(fixture("example3.game"));
  CHECK(g.players() == 3);
  CHECK(g.system().members() == std::vector<Coalition>{0, 1, 2, 3, 6, 7});
  CHECK(g.value_of(6) == 1.0);
  CHECK(g.value_of(3) == 0.0);

  const Allocation<double> ud = compute_value(g, ValueKind::ud);
  CHECK(ud[0] == doctest::Approx(0.0));
  CHECK(ud[1] == doctest::Approx(0.25));
  CHECK(ud[2] == doctest::Approx(0.75));
}

TEST_CASE("a bare players line yields the empty system") {
  const IncompleteGame<double> g = parse_game_text("players 2\n");
  CHECK(g.players() == 2);
  CHECK(g.system().members() == std::vector<Coalition>{0});
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_game_text("players 3\n8 1.0\n", "bad.game"),
                       doctest::Contains("bad.game:2"), DomainError);
  CHECK_THROWS_WITH_AS(parse_game_text("players 3\n3 1\n3 2\n", "dup.game"),
                       doctest::Contains("dup.game:3"), DomainError);
  CHECK_THROWS_WITH_AS(parse_game_text("players 3\n3 oops\n", "val.game"),
                       doctest::Contains("val.game:2"), DomainError);
  CHECK_THROWS_AS(parse_game_text("3 1\n"), DomainError);          // missing header
  CHECK_THROWS_AS(parse_game_text("players 3\n0 0.5\n"), DomainError);  // v(∅) != 0
  CHECK_THROWS_AS(parse_game_text("players 99\n"), DomainError);
}

TEST_CASE("comments and blank lines are ignored") {
  const IncompleteGame<double> g = parse_game_text(
      "# a comment\n"
      "players 2  # trailing comment\n"
      "\n"
      "1 0.5\n"
      "3 1 # worth of the grand coalition\n");
  CHECK(g.value_of(1) == 0.5);
  CHECK(g.value_of(3) == 1.0);
}

TEST_CASE("game serialization round trip") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const IncompleteGame<double> g =
        random_game(sample_system(4, SampleMode::uniform, 50 + seed), seed);
    const IncompleteGame<double> back = parse_game_text(format_game(g));
    CHECK(back == g);  // bit-for-bit via %.17g
  }
}

TEST_CASE("exact parsing keeps decimal fractions exact") {
  const IncompleteGame<Rational> g =
      parse_game_text_exact("players 2\n1 0.1\n3 2.5e-1\n");
  CHECK(g.value_of(1) == Rational(1, 10));
  CHECK(g.value_of(3) == Rational(1, 4));
}

TEST_CASE("csv parse and column lookup") {
  const CsvTable table = parse_csv("# note\nsystem,mean_X,sd_X\n135,0.5,0.1\n", "t.csv");
  CHECK(table.comments == std::vector<std::string>{"note"});
  CHECK(find_column(table, "mean_X") == 1);
  CHECK(find_column(table, "nope") == -1);
  CHECK(table.rows[0][0] == "135");
  CHECK_THROWS_AS(parse_csv("a,b\n1\n", "bad.csv"), DomainError);
  CHECK(format_double(0.703125) == "0.703125");
}

TEST_CASE("svg plots render from csv") {
  const std::string csv_path = "plot_test.csv";
  write_csv(csv_path, {"command: test"}, {"system", "mean_R_IC", "sd_R_IC", "mean_R_UD", "sd_R_UD"},
            {{"139", "0.5", "0.1", "0.2", "0.05"}, {"143", "0.6", "0.2", "0.3", "0.1"}});

  const std::string svg_path = "plot_test.svg";
  emit_plot(csv_path, PlotKind::lines, svg_path);
  const std::string svg = slurp(svg_path);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("polyline") != std::string::npos);

  // determinism: a second render produces identical bytes
  emit_plot(csv_path, PlotKind::lines, "plot_test2.svg");
  CHECK(slurp("plot_test2.svg") == svg);

  std::remove(csv_path.c_str());
  std::remove(svg_path.c_str());
  std::remove("plot_test2.svg");
}

TEST_CASE("plot errors name the missing column and write nothing") {
  const std::string csv_path = "plot_bad.csv";
  write_csv(csv_path, {}, {"system", "mean_R_IC"}, {{"139", "0.5"}});
  CHECK_THROWS_WITH_AS(emit_plot(csv_path, PlotKind::lines, "never.svg"),
                       doctest::Contains("sd_R_IC"), DomainError);
  CHECK_THROWS_WITH_AS(emit_plot(csv_path, PlotKind::ranks, "never.svg"),
                       doctest::Contains("series"), DomainError);
  std::ifstream never("never.svg");
  CHECK_FALSE(never.good());

  // empty data: error, no file
  write_csv(csv_path, {}, {"system", "mean_R_IC", "sd_R_IC"}, {});
  CHECK_THROWS_WITH_AS(emit_plot(csv_path, PlotKind::lines, "never.svg"),
                       doctest::Contains("no data rows"), DomainError);
  std::remove(csv_path.c_str());
}

TEST_CASE("rank and histogram plots") {
  const std::string csv_path = "plot_rank.csv";
  write_csv(csv_path, {}, {"series", "smallest", "second", "largest"},
            {{"R_IC", "1", "10", "34"}, {"R_UD", "40", "4", "1"}, {"UD_IC", "4", "31", "10"}});
  emit_plot(csv_path, PlotKind::ranks, "plot_rank.svg");
  const std::string svg = slurp("plot_rank.svg");
  CHECK(svg.find("<rect") != std::string::npos);
  std::remove(csv_path.c_str());
  std::remove("plot_rank.svg");

  const std::string hist_path = "plot_hist.csv";
  write_csv(hist_path, {}, {"bin_lo", "bin_hi", "R_IC", "R_UD", "UD_IC"},
            {{"0", "0.1", "3", "5", "2"}, {"0.1", "0.2", "7", "1", "9"}});
  emit_plot(hist_path, PlotKind::hist, "plot_hist.svg");
  CHECK(slurp("plot_hist.svg").find("<rect") != std::string::npos);
  std::remove(hist_path.c_str());
  std::remove("plot_hist.svg");
}

#ifdef UDVAL_CLI_PATH
TEST_CASE("command line smoke test") {
  auto run = [](const std::string& args) {
    const std::string command = std::string(UDVAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[256];
    while (fgets(buffer, sizeof(buffer), pipe)) output += buffer;
    const int status = pclose(pipe);
    return std::make_pair(WEXITSTATUS(status), output);
  };

  auto [value_status, value_out] = run("value --kind ud --game " + fixture("example3.game"));
  CHECK(value_status == 0);
  CHECK(value_out.find("0 0.25 0.75") != std::string::npos);

  auto [uniq_status, uniq_out] = run("uniqueness --players 3 --system 135");
  CHECK(uniq_status == 0);
  CHECK(uniq_out.find("unique") == 0);

  auto [census_status, census_out] = run("census --players 3");
  CHECK(census_status == 0);
  CHECK(census_out.find("64,45") != std::string::npos);

  auto [bad_status, bad_out] = run("value --kind ud");
  CHECK(bad_status == 2);  // usage error

  auto [domain_status, domain_out] = run("value --kind r --game " + fixture("pairs.game"));
  (void)domain_out;
  CHECK(domain_status == 1);  // domain error: not intersection-closed
}
#endif
