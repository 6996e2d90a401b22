#ifndef ESTRADA_IO_HPP
#define ESTRADA_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "estrada/graph.hpp"

namespace estrada {

// Malformed graph text. line() is 1-based, 0 when no single line is at fault.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

enum class GraphFormat { edgelist, graph6 };

/*
 * Edge list: "n m" on the first non-comment line, then m lines "i j" with
 * 0 <= i, j < n. Lines whose first non-blank character is '#' and blank
 * lines are ignored. Endpoints may come in either order.
 */
Graph parse_edge_list(std::string_view text);
// "n m" then the edges sorted, smaller endpoint first
std::string format_edge_list(const Graph& g);

// graph6 for n <= 62; one record, no header, no trailing newline
std::string encode_graph6(const Graph& g);
// accepts one record with an optional trailing newline
Graph decode_graph6(std::string_view record);

Graph parse_graph(std::string_view text, GraphFormat format);
// throws std::runtime_error if the file cannot be read, ParseError if malformed
Graph read_graph_file(const std::string& path, GraphFormat format);
// graph6 for *.g6, edge list otherwise
GraphFormat format_for_path(const std::string& path);

}  // namespace estrada

#endif
