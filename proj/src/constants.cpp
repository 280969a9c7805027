#include "pft/constants.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <string>

#include "pft/errors.hpp"

namespace pft {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view token, std::string_view key) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [end, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || end != last) {
    throw ParseError("non-numeric value for '" + std::string(key) + "': '" + std::string(token) +
                     "'");
  }
  return value;
}

}  // namespace

void Constants::validate() const {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(hbar)) throw DomainError("hbar must be finite and positive");
  if (!positive(epsilon)) throw DomainError("epsilon must be finite and positive");
  if (!positive(c)) throw DomainError("c must be finite and positive");
}

Constants natural_units() { return Constants{}; }

Constants constants_from_config(std::string_view text) {
  Constants ct = natural_units();
  std::set<std::string, std::less<>> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ParseError("expected 'key = value', got '" + std::string(line) + "'");
    }
    if (!seen.insert(std::string(key)).second) {
      throw ParseError("duplicate key '" + std::string(key) + "'");
    }

    if (key == "hbar") {
      ct.hbar = parse_number(value, key);
    } else if (key == "epsilon") {
      ct.epsilon = parse_number(value, key);
    } else if (key == "c") {
      ct.c = parse_number(value, key);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'");
    }
  }

  ct.validate();
  return ct;
}

}  // namespace pft
