#include "altmatch/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace altmatch {

namespace {

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

bool parse_pair(const std::string& line, long& a, long& b) {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> a >> b)) return false;
    if (ss >> extra) return false;
    return true;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long nu = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        if (!parse_pair(line, nu, m)) throw ParseError(lineno, "expected header \"nu m\"");
        break;
    }
    if (nu < 1) throw ParseError(lineno, "vertex count must be at least 1");
    if (m < 0) throw ParseError(lineno, "edge count must be nonnegative");
    std::vector<Edge> edges;
    edges.reserve(m);
    while (std::getline(in, line) && static_cast<long>(edges.size()) < m) {
        ++lineno;
        if (skippable(line)) continue;
        long u, v;
        if (!parse_pair(line, u, v)) throw ParseError(lineno, "expected edge \"u v\"");
        if (u < 0 || v < 0 || u >= nu || v >= nu)
            throw ParseError(lineno, "edge endpoint out of range");
        if (u >= v) throw ParseError(lineno, "edges must be written with u < v");
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (static_cast<long>(edges.size()) != m)
        throw ParseError(lineno, "fewer edges than the header announced");
    return Graph(static_cast<int>(nu), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Matching parse_matching(std::istream& in, const Graph& g) {
    std::string line;
    int lineno = 0;
    std::vector<int> partner(g.num_vertices(), -1);
    std::vector<Edge> pairs;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        long u, v;
        if (!parse_pair(line, u, v)) throw ParseError(lineno, "expected matched pair \"u v\"");
        if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices())
            throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "a vertex cannot be matched to itself");
        if (!g.has_edge(static_cast<VertexId>(u), static_cast<VertexId>(v)))
            throw ParseError(lineno, "pair is not an edge of the graph");
        if (partner[u] != -1 || partner[v] != -1)
            throw ParseError(lineno, "vertex already matched on an earlier line");
        partner[u] = static_cast<int>(v);
        partner[v] = static_cast<int>(u);
        pairs.push_back(make_edge(static_cast<VertexId>(u), static_cast<VertexId>(v)));
    }
    return Matching::from_pairs(g, pairs);
}

Matching read_matching_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matching file: " + path);
    return parse_matching(in, g);
}

void write_matching(std::ostream& out, const Matching& m) {
    for (const auto& [u, v] : m.edges()) out << u << ' ' << v << '\n';
}

namespace {
constexpr int kG6Offset = 63;
}

std::string to_graph6(const Graph& g) {
    const int n = g.num_vertices();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
        out.push_back(static_cast<char>((n & 63) + kG6Offset));
    } else {
        throw std::invalid_argument("graph too large for this graph6 writer");
    }
    int bit = 5;
    int acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) acc |= 1 << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(acc + kG6Offset));
                bit = 5;
                acc = 0;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(acc + kG6Offset));
    return out;
}

Graph from_graph6(std::string_view line) {
    // strip an optional format header and trailing whitespace
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    if (line.empty()) throw std::invalid_argument("empty graph6 record");

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw std::invalid_argument("truncated graph6 record");
        unsigned char c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("byte outside graph6 range");
        return c - kG6Offset;
    };

    long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        n = next();
        n = (n << 6) | next();
        n = (n << 6) | next();
    }
    if (n < 1) throw std::invalid_argument("graph6 record with no vertices");
    if (n > 100000) throw std::invalid_argument("graph6 order too large");

    std::vector<Edge> edges;
    int bit = -1;
    int acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit < 0) {
                acc = next();
                bit = 5;
            }
            if (acc & (1 << bit)) edges.emplace_back(i, j);
            --bit;
        }
    }
    if (pos != line.size()) throw std::invalid_argument("trailing bytes after graph6 record");
    return Graph(static_cast<int>(n), edges);
}

}  // namespace altmatch
