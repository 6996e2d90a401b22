#include "estrada/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace estrada {

namespace {

std::vector<long long> parse_numbers(std::string_view line, int lineno) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        long long value = 0;
        auto [end, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc() || (end != line.data() + line.size() && *end != ' ' && *end != '\t' && *end != '\r'))
            throw ParseError("expected integers, got \"" + std::string(line) + "\"", lineno);
        out.push_back(value);
        i = end - line.data();
    }
    return out;
}

bool skippable(std::string_view line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> lines;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++lineno;
        if (!skippable(line)) lines.emplace_back(lineno, line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    if (lines.empty()) throw ParseError("missing \"n m\" header");
    const auto header = parse_numbers(lines[0].second, lines[0].first);
    if (header.size() != 2) throw ParseError("header must be \"n m\"", lines[0].first);
    const long long n = header[0], m = header[1];
    if (n < 0 || n > max_vertices) throw ParseError("vertex count must be in 0..64", lines[0].first);
    if (m < 0) throw ParseError("edge count must be non-negative", lines[0].first);
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));

    std::set<Edge> seen;
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto [ln, line] = lines[i];
        const auto ends = parse_numbers(line, ln);
        if (ends.size() != 2) throw ParseError("edge line must be \"i j\"", ln);
        if (ends[0] < 0 || ends[0] >= n || ends[1] < 0 || ends[1] >= n)
            throw ParseError("vertex out of range 0.." + std::to_string(n - 1), ln);
        if (ends[0] == ends[1]) throw ParseError("self-loop", ln);
        Edge e{static_cast<int>(std::min(ends[0], ends[1])), static_cast<int>(std::max(ends[0], ends[1]))};
        if (!seen.insert(e).second) throw ParseError("duplicate edge", ln);
        edges.push_back(e);
    }
    return Graph(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) out << e.a << ' ' << e.b << '\n';
    return out.str();
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 encoding supports n <= 62");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = bits = 0;
            }
        }
    if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph decode_graph6(std::string_view record) {
    while (!record.empty() && (record.back() == '\n' || record.back() == '\r')) record.remove_suffix(1);
    if (record.empty()) throw ParseError("empty graph6 record");
    for (char c : record)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw ParseError("illegal graph6 byte " + std::to_string(static_cast<unsigned char>(c)));
    const int n = record[0] - 63;
    if (n > 62) throw ParseError("graph6 records with n > 62 are not supported");
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (pairs + 5) / 6;
    if (record.size() != 1 + body)
        throw ParseError("graph6 record for n = " + std::to_string(n) + " needs " + std::to_string(1 + body) +
                         " bytes, got " + std::to_string(record.size()));
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int group = record[1 + k / 6] - 63;
            if ((group >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    if (pairs % 6) {
        const int last = record.back() - 63;
        if (last & ((1 << (6 - pairs % 6)) - 1)) throw ParseError("graph6 padding bits must be zero");
    }
    return Graph(n, edges);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::edgelist) return parse_edge_list(text);
    // first non-empty line
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        if (!line.empty() && line != "\r") return decode_graph6(line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    throw ParseError("no graph6 record");
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), format);
}

GraphFormat format_for_path(const std::string& path) {
    return path.size() >= 3 && path.ends_with(".g6") ? GraphFormat::graph6 : GraphFormat::edgelist;
}

}  // namespace estrada
