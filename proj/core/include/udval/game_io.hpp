#pragma once

#include <string>
#include <string_view>

#include "udval/game.hpp"

namespace udval {

/// Game file format (text, UTF-8, '#' comments):
///   players <n>
///   <coalition-mask-decimal> <value>     one line per known coalition
/// The set system is the listed masks plus ∅; ∅ may be listed with value 0.
/// Parse errors carry the offending line number.
IncompleteGame<double> parse_game_file(const std::string& path);
IncompleteGame<Rational> parse_game_file_exact(const std::string& path);

IncompleteGame<double> parse_game_text(std::string_view text,
                                       const std::string& origin = "<string>");
IncompleteGame<Rational> parse_game_text_exact(std::string_view text,
                                               const std::string& origin = "<string>");

/// Serializes with enough digits that parsing the output reproduces the game
/// bit for bit. header lines, if any, are emitted as leading '#' comments.
std::string format_game(const IncompleteGame<double>& g,
                        const std::vector<std::string>& header = {});
void write_game_file(const IncompleteGame<double>& g, const std::string& path,
                     const std::vector<std::string>& header = {});

}  // namespace udval
