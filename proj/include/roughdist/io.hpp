#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "roughdist/granular.hpp"
#include "roughdist/poset.hpp"

namespace roughdist {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                           message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Poset document: '#' comments, "elements a b c" lines, "order a <= b" lines.
/// The reflexive-transitive closure is taken before validation.
FinitePoset parse_poset(std::istream& in);
FinitePoset parse_poset_file(const std::string& path);

/// Space document: "universe a b c", "block a b" lines, then either "pawlak"
/// or explicit "approx {A} {lower} {upper}" lines covering every subset.
GranularOperatorSpace parse_gos(std::istream& in);
GranularOperatorSpace parse_gos_file(const std::string& path);

/// Exact rational "P/Q" or plain integer "P"; decimals rejected.
Rational parse_rational(const std::string& text);

std::string render_rational(const Rational& q);

}  // namespace roughdist
