#include "roughdist/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace roughdist {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

std::size_t column_of(const std::string& line, const std::string& token) {
  auto pos = line.find(token);
  return pos == std::string::npos ? 1 : pos + 1;
}

}  // namespace

FinitePoset parse_poset(std::istream& in) {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::string line;
  std::size_t lineno = 0;

  auto lookup = [&](const std::string& name, std::size_t ln) {
    auto it = index.find(name);
    if (it == index.end())
      throw ParseError(ln, column_of(line, name), "unknown element '" + name + "'");
    return it->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "elements") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (index.count(tokens[i]))
          throw ParseError(lineno, column_of(line, tokens[i]),
                           "duplicate element '" + tokens[i] + "'");
        index[tokens[i]] = labels.size();
        labels.push_back(tokens[i]);
      }
    } else if (tokens[0] == "order") {
      if (tokens.size() != 4 || tokens[2] != "<=")
        throw ParseError(lineno, 1, "expected 'order a <= b'");
      pairs.emplace_back(lookup(tokens[1], lineno), lookup(tokens[3], lineno));
    } else {
      throw ParseError(lineno, 1, "unknown directive '" + tokens[0] + "'");
    }
  }
  try {
    return FinitePoset::from_relations(std::move(labels), pairs);
  } catch (const PosetError& e) {
    throw ParseError(lineno, 1, e.what());
  }
}

FinitePoset parse_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_poset(in);
}

namespace {

Subset parse_subset(const std::string& text, const std::map<std::string, std::size_t>& index,
                    std::size_t lineno, std::size_t col) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ParseError(lineno, col, "expected a subset like {a,b} or {}");
  Subset mask = 0;
  std::string body = text.substr(1, text.size() - 2);
  std::istringstream is(body);
  std::string name;
  while (std::getline(is, name, ',')) {
    if (name.empty()) continue;
    auto it = index.find(name);
    if (it == index.end())
      throw ParseError(lineno, col, "unknown element '" + name + "'");
    mask |= Subset(1) << it->second;
  }
  return mask;
}

}  // namespace

GranularOperatorSpace parse_gos(std::istream& in) {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::vector<Subset> blocks;
  bool pawlak = false;
  std::map<Subset, std::pair<Subset, Subset>> approx;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "universe") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (index.count(tokens[i]))
          throw ParseError(lineno, column_of(line, tokens[i]),
                           "duplicate element '" + tokens[i] + "'");
        index[tokens[i]] = labels.size();
        labels.push_back(tokens[i]);
      }
    } else if (tokens[0] == "block") {
      Subset b = 0;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto it = index.find(tokens[i]);
        if (it == index.end())
          throw ParseError(lineno, column_of(line, tokens[i]),
                           "unknown element '" + tokens[i] + "'");
        b |= Subset(1) << it->second;
      }
      blocks.push_back(b);
    } else if (tokens[0] == "pawlak") {
      pawlak = true;
    } else if (tokens[0] == "approx") {
      if (tokens.size() != 4)
        throw ParseError(lineno, 1, "expected 'approx {A} {lower} {upper}'");
      Subset a = parse_subset(tokens[1], index, lineno, column_of(line, tokens[1]));
      Subset lo = parse_subset(tokens[2], index, lineno, column_of(line, tokens[2]));
      Subset up = parse_subset(tokens[3], index, lineno, column_of(line, tokens[3]));
      approx[a] = {lo, up};
    } else {
      throw ParseError(lineno, 1, "unknown directive '" + tokens[0] + "'");
    }
  }

  if (pawlak == !approx.empty())
    throw ParseError(lineno, 1, "need exactly one of 'pawlak' or explicit approx lines");
  try {
    if (pawlak) return GranularOperatorSpace::pawlak(std::move(labels), std::move(blocks));
    const std::size_t count = std::size_t(1) << labels.size();
    if (approx.size() != count)
      throw ParseError(lineno, 1, "approx lines must cover all " + std::to_string(count) +
                                      " subsets");
    std::vector<Subset> lower(count), upper(count);
    for (const auto& [a, pair] : approx) {
      lower[a] = pair.first;
      upper[a] = pair.second;
    }
    return GranularOperatorSpace::from_tables(std::move(labels), std::move(blocks),
                                              std::move(lower), std::move(upper));
  } catch (const GranularError& e) {
    throw ParseError(lineno, 1, e.what());
  }
}

GranularOperatorSpace parse_gos_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_gos(in);
}

Rational parse_rational(const std::string& text) {
  if (text.find('.') != std::string::npos)
    throw std::invalid_argument("decimals are rejected; use P/Q");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer p(text.substr(0, slash));
    Integer q(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

std::string render_rational(const Rational& q) {
  std::ostringstream os;
  if (boost::multiprecision::denominator(q) == 1)
    os << boost::multiprecision::numerator(q);
  else
    os << boost::multiprecision::numerator(q) << "/"
       << boost::multiprecision::denominator(q);
  return os.str();
}

}  // namespace roughdist
