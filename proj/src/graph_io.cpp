#include "mutvis/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace mutvis {

namespace {

constexpr int kG6Lo = 63;  // '?'
constexpr int kG6Hi = 126; // '~'

void append_n(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kG6Hi));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Lo));
        out.push_back(static_cast<char>((n & 63) + kG6Lo));
    } else {
        throw InvalidInputError("graph6 writer supports n <= 258047");
    }
}

} // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    append_n(out, g.n);
    // Upper-triangle bits in column order: (0,1),(0,2),(1,2),(0,3),...
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Lo));
    return out;
}

Graph from_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ParseError("empty graph6 string");
    for (char c : s)
        if (c < kG6Lo || c > kG6Hi)
            throw ParseError("graph6 byte out of range: " + std::to_string(int(c)));

    std::size_t pos = 0;
    long long n;
    if (s[0] != static_cast<char>(kG6Hi)) {
        n = s[0] - kG6Lo;
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == static_cast<char>(kG6Hi))
            throw ParseError("graph6 orders beyond 258047 are not supported");
        if (s.size() < 4) throw ParseError("truncated graph6 order field");
        n = (static_cast<long long>(s[1] - kG6Lo) << 12) |
            (static_cast<long long>(s[2] - kG6Lo) << 6) | static_cast<long long>(s[3] - kG6Lo);
        pos = 4;
    }
    if (n < 1) throw ParseError("graph6 graph must have at least one vertex");

    long long bits_needed = n * (n - 1) / 2;
    long long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(s.size() - pos) != bytes_needed)
        throw ParseError("graph6 body length mismatch: expected " + std::to_string(bytes_needed) +
                         " bytes, got " + std::to_string(s.size() - pos));

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[pos + static_cast<std::size_t>(bit / 6)] - kG6Lo;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // Padding bits must be zero.
    for (long long b = bits_needed; b < bytes_needed * 6; ++b) {
        int byte = s[pos + static_cast<std::size_t>(b / 6)] - kG6Lo;
        if ((byte >> (5 - b % 6)) & 1) throw ParseError("nonzero graph6 padding bits");
    }
    return build_graph(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << " " << g.m << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph from_edge_list(std::istream& in) {
    long long n, m;
    if (!(in >> n >> m)) throw ParseError("edge list: failed to read 'n m' header");
    if (n < 1) throw ParseError("edge list: graph order must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return build_graph(static_cast<int>(n), edges);
    } catch (const InvalidInputError& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::vector<Graph> load_graphs(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    bool g6 = format == "g6" ||
              (format == "auto" && path.size() >= 3 && path.substr(path.size() - 3) == ".g6");
    if (g6) {
        auto graphs = read_graph6_stream(in);
        if (graphs.empty()) throw ParseError("no graphs in file: " + path);
        return graphs;
    }
    return {from_edge_list(in)};
}

} // namespace mutvis
