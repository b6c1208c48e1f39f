#pragma once

#include <string>
#include <string_view>

#include "ambig/nba.hpp"

namespace ambig {

/// Reads the line-based automaton format:
///
///     nba
///     alphabet: a b c
///     states: q0 q1
///     initial: q0
///     accepting: q1
///     trans:
///     q0 a q1
///
/// `#` starts a comment, blank lines are ignored, header lines may appear in
/// any order before `trans:`. Throws `ParseError` carrying the line number.
Nba parse_automaton(std::string_view text);

/// Canonical text: declaration order for states and symbols, transitions
/// sorted by (src, sym, dst) in that order, every header line present.
/// Throws `Error(InvalidArgument)` if a token cannot be written in the format
/// (contains whitespace, `#` or `:`).
std::string serialize_automaton(const Nba& a);

/// True if `token` can appear in the automaton file format.
bool is_valid_token(std::string_view token);

/// Finite word literal. Pieces separated by `.` are symbol tokens; a piece
/// that is not a token is split into single-character symbols.
Word parse_word(const Nba& a, std::string_view text);
/// Inverse of `parse_word`: concatenation when every symbol of the alphabet
/// is one character long, `.`-separated tokens otherwise.
std::string format_word(const Nba& a, const Word& w);

/// `u:v` literal; `u` may be empty, `v` may not.
LassoWord parse_lasso(const Nba& a, std::string_view text);
std::string format_lasso(const Nba& a, const LassoWord& w);

}  // namespace ambig
