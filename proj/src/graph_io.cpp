#include "arbor/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

std::string location(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

std::uint32_t parse_label(std::string_view token, const std::string& where) {
  std::uint32_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw InputError(where + "vertex label '" + std::string(token) + "' is not a nonnegative 32-bit integer");
  }
  return value;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

}  // namespace

Multigraph parse_graph(std::istream& in, std::string_view source) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (skippable(line)) continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    const std::string where = location(source, number);
    if (!(fields >> a >> b) || (fields >> extra)) throw InputError(where + "expected two vertex labels");
    const std::uint32_t u = parse_label(a, where), v = parse_label(b, where);
    if (u == v) throw InputError(where + "self-loop at vertex " + a);
    pairs.emplace_back(u, v);
  }
  return Multigraph::from_pairs(pairs);
}

Multigraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  return parse_graph(in, path.string());
}

std::vector<Rational> parse_rationals(std::istream& in, std::string_view source) {
  std::vector<Rational> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (skippable(line)) continue;
    std::istringstream fields(line);
    for (std::string token; fields >> token;) {
      try {
        out.push_back(parse_rational(token));
      } catch (const InputError& e) {
        throw InputError(location(source, number) + e.what());
      }
    }
  }
  return out;
}

Allocation to_allocation(const Multigraph& g, const std::vector<Rational>& values) {
  if (values.size() != g.edge_count()) {
    throw InputError("allocation lists " + std::to_string(values.size()) + " values for " +
                     std::to_string(g.edge_count()) + " edges");
  }
  Allocation x;
  for (std::size_t i = 0; i < values.size(); ++i) x[g.edges()[i].id] = values[i];
  return x;
}

Allocation read_allocation_file(const std::filesystem::path& path, const Multigraph& g) {
  std::ifstream in = open(path);
  return to_allocation(g, parse_rationals(in, path.string()));
}

}  // namespace arbor
