#pragma once

#include <filesystem>
#include <istream>
#include <string_view>
#include <vector>

#include "arbor/game.hpp"
#include "arbor/multigraph.hpp"
#include "arbor/rational.hpp"

namespace arbor {

/// Edge list, one "u v" pair of nonnegative integer labels per line. Lines
/// starting with '#' and blank lines are skipped; edge i is the i-th edge line.
/// InputError on malformed lines and self-loops.
Multigraph parse_graph(std::istream& in, std::string_view source = "<input>");
Multigraph read_graph_file(const std::filesystem::path& path);

/// Whitespace-separated rationals ("p/q" or integers); '#' starts a comment line.
std::vector<Rational> parse_rationals(std::istream& in, std::string_view source = "<input>");

/// One rational per edge, in edge order. InputError on a length mismatch.
Allocation read_allocation_file(const std::filesystem::path& path, const Multigraph& g);
Allocation to_allocation(const Multigraph& g, const std::vector<Rational>& values);

}  // namespace arbor
