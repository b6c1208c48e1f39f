#include "ambig/io.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "ambig/error.hpp"

namespace ambig {

namespace {

constexpr std::string_view kWhitespace = " \t\r\v\f";

std::string_view strip(std::string_view s) {
  const auto first = s.find_first_not_of(kWhitespace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kWhitespace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    i = s.find_first_not_of(kWhitespace, i);
    if (i == std::string_view::npos) break;
    auto j = s.find_first_of(kWhitespace, i);
    if (j == std::string_view::npos) j = s.size();
    out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Header {
  std::vector<std::string> tokens;
  std::size_t line = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Nba run() {
    bool seen_magic = false;
    bool in_trans = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      auto end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;

      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = strip(line);
      if (line.empty()) continue;

      if (!seen_magic) {
        if (line != "nba") {
          throw ParseError(line_no, "expected 'nba' header, got '" +
                                        std::string(line) + "'");
        }
        seen_magic = true;
        continue;
      }
      if (in_trans) {
        trans_line(line, line_no);
        continue;
      }
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no, "expected 'key: values', got '" +
                                      std::string(line) + "'");
      }
      const std::string key(strip(line.substr(0, colon)));
      const std::string_view rest = line.substr(colon + 1);
      if (rest.find(':') != std::string_view::npos) {
        throw ParseError(line_no, "':' is not allowed inside tokens");
      }
      if (key == "trans") {
        if (!strip(rest).empty()) {
          throw ParseError(line_no,
                           "transitions start on the line after 'trans:'");
        }
        finish_headers(line_no);
        in_trans = true;
        continue;
      }
      auto it = headers_.find(key);
      if (it == headers_.end()) {
        throw ParseError(line_no, "unknown header '" + key + "'");
      }
      if (it->second.has_value()) {
        throw ParseError(line_no, "duplicate header '" + key + "'");
      }
      it->second = Header{split_ws(rest), line_no};
    }
    if (!seen_magic) throw ParseError(0, "empty input: missing 'nba' header");
    if (!in_trans) finish_headers(line_no);
    return Nba(states_, alphabet_, std::move(transitions_), initial_,
               accepting_);
  }

 private:
  void finish_headers(std::size_t line_no) {
    for (const auto& [key, header] : headers_) {
      if (!header) {
        throw ParseError(line_no, "missing '" + key + ":' line");
      }
    }
    const Header& alpha = *headers_.at("alphabet");
    const Header& states = *headers_.at("states");
    alphabet_ = alpha.tokens;
    states_ = states.tokens;
    if (states_.empty()) {
      throw ParseError(states.line, "empty state set");
    }
    check_distinct(alphabet_, alpha.line, "symbol");
    check_distinct(states_, states.line, "state");
    for (std::size_t i = 0; i < states_.size(); ++i) {
      state_index_[states_[i]] = static_cast<StateId>(i);
    }
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      symbol_index_[alphabet_[i]] = static_cast<SymbolId>(i);
    }
    initial_ = lookup_states(*headers_.at("initial"));
    accepting_ = lookup_states(*headers_.at("accepting"));
  }

  static void check_distinct(const std::vector<std::string>& tokens,
                             std::size_t line, const char* what) {
    std::vector<std::string> sorted = tokens;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw ParseError(line, std::string("duplicate ") + what + " '" + *dup +
                                 "'");
    }
  }

  StateId state(const std::string& name, std::size_t line) const {
    auto it = state_index_.find(name);
    if (it == state_index_.end()) {
      throw ParseError(line, "undeclared state '" + name + "'");
    }
    return it->second;
  }

  SymbolId symbol(const std::string& name, std::size_t line) const {
    auto it = symbol_index_.find(name);
    if (it == symbol_index_.end()) {
      throw ParseError(line, "undeclared symbol '" + name + "'");
    }
    return it->second;
  }

  StateSet lookup_states(const Header& header) const {
    StateSet out;
    for (const auto& name : header.tokens) out.push_back(state(name, header.line));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void trans_line(std::string_view line, std::size_t line_no) {
    auto parts = split_ws(line);
    if (parts.size() != 3) {
      throw ParseError(line_no, "expected 'src sym dst', got '" +
                                    std::string(line) + "'");
    }
    transitions_.push_back({state(parts[0], line_no),
                            symbol(parts[1], line_no),
                            state(parts[2], line_no)});
  }

  std::string_view text_;
  std::map<std::string, std::optional<Header>> headers_{
      {"alphabet", std::nullopt},
      {"states", std::nullopt},
      {"initial", std::nullopt},
      {"accepting", std::nullopt}};
  std::vector<std::string> alphabet_;
  std::vector<std::string> states_;
  std::unordered_map<std::string, StateId> state_index_;
  std::unordered_map<std::string, SymbolId> symbol_index_;
  StateSet initial_;
  StateSet accepting_;
  std::vector<Transition> transitions_;
};

bool single_char_alphabet(const Nba& a) {
  return std::all_of(a.alphabet().begin(), a.alphabet().end(),
                     [](const std::string& s) { return s.size() == 1; });
}

void append_names(std::ostringstream& out, const std::vector<std::string>& names,
                  const StateSet& ids) {
  for (StateId q : ids) out << ' ' << names[q];
}

}  // namespace

bool is_valid_token(std::string_view token) {
  if (token.empty()) return false;
  return token.find_first_of(" \t\r\n\v\f#:") == std::string_view::npos;
}

Nba parse_automaton(std::string_view text) { return Parser(text).run(); }

std::string serialize_automaton(const Nba& a) {
  for (const auto* names : {&a.states(), &a.alphabet()}) {
    for (const auto& token : *names) {
      if (!is_valid_token(token)) {
        throw Error(ErrorCode::InvalidArgument,
                    "token '" + token + "' cannot be serialized");
      }
    }
  }
  std::ostringstream out;
  out << "nba\nalphabet:";
  for (const auto& sym : a.alphabet()) out << ' ' << sym;
  out << "\nstates:";
  for (const auto& q : a.states()) out << ' ' << q;
  out << "\ninitial:";
  append_names(out, a.states(), a.initial());
  out << "\naccepting:";
  append_names(out, a.states(), a.accepting());
  out << "\ntrans:\n";
  for (const auto& t : a.transitions()) {
    out << a.state_name(t.src) << ' ' << a.symbol_name(t.sym) << ' '
        << a.state_name(t.dst) << '\n';
  }
  return out.str();
}

Word parse_word(const Nba& a, std::string_view text) {
  Word out;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    auto dot = text.find('.', pos);
    if (dot == std::string_view::npos) dot = text.size();
    const std::string piece(text.substr(pos, dot - pos));
    pos = dot + 1;
    if (piece.empty()) {
      throw ParseError(0, "empty symbol in word '" + std::string(text) + "'");
    }
    if (auto sym = a.find_symbol(piece)) {
      out.push_back(*sym);
    } else {
      for (char c : piece) {
        auto single = a.find_symbol(std::string(1, c));
        if (!single) {
          throw ParseError(0, "unknown symbol '" + piece + "' in word '" +
                                  std::string(text) + "'");
        }
        out.push_back(*single);
      }
    }
    if (dot == text.size()) break;
  }
  return out;
}

std::string format_word(const Nba& a, const Word& w) {
  const bool compact = single_char_alphabet(a);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += '.';
    out += a.symbol_name(w[i]);
  }
  return out;
}

LassoWord parse_lasso(const Nba& a, std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos ||
      text.find(':', colon + 1) != std::string_view::npos) {
    throw ParseError(0, "lasso literal must have the form u:v, got '" +
                            std::string(text) + "'");
  }
  LassoWord w{parse_word(a, text.substr(0, colon)),
              parse_word(a, text.substr(colon + 1))};
  if (w.period.empty()) {
    throw ParseError(0, "lasso period must not be empty");
  }
  return w;
}

std::string format_lasso(const Nba& a, const LassoWord& w) {
  return format_word(a, w.prefix) + ":" + format_word(a, w.period);
}

}  // namespace ambig
