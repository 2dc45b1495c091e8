#include "udval/game_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace udval {

namespace {

[[noreturn]] void parse_fail(const std::string& origin, int line, const std::string& message) {
  fail(ErrorCode::parse_error, origin + ":" + std::to_string(line) + ": " + message);
}

template <typename T>
T parse_value(const std::string& token, const std::string& origin, int line);

template <>
double parse_value<double>(const std::string& token, const std::string& origin, int line) {
  std::size_t consumed = 0;
  double value = 0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    parse_fail(origin, line, "not a number: '" + token + "'");
  }
  if (consumed != token.size()) parse_fail(origin, line, "not a number: '" + token + "'");
  return value;
}

template <>
Rational parse_value<Rational>(const std::string& token, const std::string& origin, int line) {
  try {
    return rational_from_decimal(token);
  } catch (const DomainError&) {
    parse_fail(origin, line, "not a number: '" + token + "'");
  }
}

template <typename T>
IncompleteGame<T> parse_game(std::string_view text, const std::string& origin) {
  std::istringstream input{std::string(text)};
  std::string raw;
  int line_number = 0;
  int players = 0;
  bool saw_players = false;
  std::vector<std::pair<Coalition, T>> entries;
  std::vector<bool> seen;

  while (std::getline(input, raw)) {
    ++line_number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string first;
    if (!(fields >> first)) continue;  // blank or comment-only line

    if (!saw_players) {
      if (first != "players") parse_fail(origin, line_number, "expected 'players <n>'");
      std::string count;
      if (!(fields >> count)) parse_fail(origin, line_number, "expected 'players <n>'");
      try {
        players = std::stoi(count);
      } catch (const std::exception&) {
        parse_fail(origin, line_number, "bad player count '" + count + "'");
      }
      if (players < 1 || players > kMaxPlayers) {
        parse_fail(origin, line_number, "player count out of range");
      }
      std::string extra;
      if (fields >> extra) parse_fail(origin, line_number, "trailing tokens after player count");
      saw_players = true;
      seen.assign(std::size_t{1} << players, false);
      continue;
    }

    unsigned long mask_raw = 0;
    try {
      std::size_t consumed = 0;
      mask_raw = std::stoul(first, &consumed);
      if (consumed != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      parse_fail(origin, line_number, "bad coalition mask '" + first + "'");
    }
    if (mask_raw >= (1ul << players)) {
      parse_fail(origin, line_number,
                 "coalition mask " + first + " out of range for " + std::to_string(players) +
                     " players");
    }
    const Coalition mask = static_cast<Coalition>(mask_raw);
    if (seen[mask]) parse_fail(origin, line_number, "duplicate coalition mask " + first);
    seen[mask] = true;

    std::string value_token;
    if (!(fields >> value_token)) parse_fail(origin, line_number, "missing value");
    std::string extra;
    if (fields >> extra) parse_fail(origin, line_number, "trailing tokens after value");
    const T value = parse_value<T>(value_token, origin, line_number);
    if (mask == kEmptyCoalition && value != T(0)) {
      parse_fail(origin, line_number, "the empty coalition must have value 0");
    }
    entries.emplace_back(mask, value);
  }
  if (!saw_players) parse_fail(origin, line_number, "missing 'players <n>' line");

  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Coalition> members;
  members.reserve(entries.size());
  for (const auto& [mask, value] : entries) members.push_back(mask);
  const SetSystem system = SetSystem::from_members(players, members);

  std::vector<T> values(system.size(), T(0));
  for (const auto& [mask, value] : entries) values[*system.index_of(mask)] = value;
  return IncompleteGame<T>(system, std::move(values));
}

std::string slurp(const std::string& path) {
  std::ifstream input(path);
  if (!input) fail(ErrorCode::parse_error, path + ": cannot open");
  std::ostringstream buffer;
  buffer << input.rdbuf();
  return buffer.str();
}

}  // namespace

IncompleteGame<double> parse_game_file(const std::string& path) {
  return parse_game<double>(slurp(path), path);
}

IncompleteGame<Rational> parse_game_file_exact(const std::string& path) {
  return parse_game<Rational>(slurp(path), path);
}

IncompleteGame<double> parse_game_text(std::string_view text, const std::string& origin) {
  return parse_game<double>(text, origin);
}

IncompleteGame<Rational> parse_game_text_exact(std::string_view text, const std::string& origin) {
  return parse_game<Rational>(text, origin);
}

std::string format_game(const IncompleteGame<double>& g, const std::vector<std::string>& header) {
  std::ostringstream out;
  for (const std::string& line : header) out << "# " << line << '\n';
  out << "players " << g.players() << '\n';
  char buffer[64];
  for (std::size_t i = 1; i < g.system().members().size(); ++i) {
    std::snprintf(buffer, sizeof(buffer), "%.17g", g.values()[i]);
    out << g.system().members()[i] << ' ' << buffer << '\n';
  }
  return out.str();
}

void write_game_file(const IncompleteGame<double>& g, const std::string& path,
                     const std::vector<std::string>& header) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::invalid_input, path + ": cannot open for writing");
  out << format_game(g, header);
}

}  // namespace udval
