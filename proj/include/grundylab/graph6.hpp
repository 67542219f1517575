#pragma once

#include <grundylab/graph.hpp>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grundylab {

/// Malformed graph6 input. `offset` is the byte position of the problem.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted.
Graph parse_graph6(std::string_view text);

std::string write_graph6(const Graph& g);

/// Reads a graph6 list, one graph per line; blank lines are skipped.
/// Errors carry the line number in the message.
std::vector<Graph> read_graph6_list(std::istream& in);
void write_graph6_list(std::ostream& out, const std::vector<Graph>& graphs);

} // namespace grundylab
