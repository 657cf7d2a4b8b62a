#include "planiv/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "planiv/errors.hpp"

namespace planiv {

namespace {

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (is_blank(line)) continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v))
            throw ParseError("expected 'u v' edge line", lineno);
        std::string rest;
        if (ls >> rest)
            throw ParseError("trailing content '" + rest + "' on edge line", lineno);
        if (u < 0 || v < 0)
            throw ParseError("negative vertex id", lineno);
        if (u == v) throw SelfLoopError(static_cast<int>(u), lineno);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    return Graph::from_edges(max_id + 1, edges);
}

Graph parse_graph6(const std::string& text) {
    // First non-empty line, optionally prefixed by the format header.
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line) && is_blank(line)) {
    }
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line.erase(0, header.size());
    if (line.empty()) throw ParseError("empty graph6 input");
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
        line.pop_back();

    std::size_t pos = 0;
    auto byte_at = [&](std::size_t i) -> std::uint64_t {
        if (i >= line.size()) throw ParseError("truncated graph6 data", 0, i + 1);
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 byte", 0, i + 1);
        return static_cast<std::uint64_t>(c - 63);
    };

    std::uint64_t n;
    if (byte_at(0) < 63) {
        n = byte_at(0);
        pos = 1;
    } else if (byte_at(1) < 63) {
        n = (byte_at(1) << 12) | (byte_at(2) << 6) | byte_at(3);
        pos = 4;
    } else {
        n = (byte_at(2) << 30) | (byte_at(3) << 24) | (byte_at(4) << 18) |
            (byte_at(5) << 12) | (byte_at(6) << 6) | byte_at(7);
        pos = 8;
    }
    if (n > 100000) throw ParseError("graph6 vertex count too large for this tool");

    Graph g(static_cast<int>(n));
    std::uint64_t cur = 0;
    int avail = 0;
    for (int v = 1; v < static_cast<int>(n); ++v) {
        for (int u = 0; u < v; ++u) {
            if (avail == 0) {
                cur = byte_at(pos++);
                avail = 6;
            }
            if (cur & (1ull << (avail - 1))) g.add_edge(u, v);
            --avail;
        }
    }
    if (pos < line.size())
        throw ParseError("trailing graph6 data", 0, pos + 1);
    return g;
}

Graph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0, e.byte);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON must be {\"n\": int, \"edges\": [[u,v],...]}");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw ParseError("graph JSON field 'n' must be a non-negative integer");
    int n = j["n"].get<int>();
    Graph g(n);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("graph JSON edge must be [u, v]");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("graph JSON edge endpoint out of range");
        if (u == v) throw SelfLoopError(u);
        g.add_edge(u, v);
    }
    return g;
}

Graph parse_graph(const std::string& source, GraphFormat format) {
    if (format == GraphFormat::EdgeList) return parse_edge_list(source);
    if (format == GraphFormat::Graph6) return parse_graph6(source);
    if (format == GraphFormat::Json) return parse_graph_json(source);

    // Sniff: JSON starts with '{'; an edge-list line has whitespace between
    // two integers; anything else is treated as graph6.
    std::istringstream in(source);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (is_blank(line)) continue;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (line[i] == '{') return parse_graph_json(source);
        if (line.rfind(">>graph6<<", i) == i) return parse_graph6(source);
        bool spaced_digits = line.find_first_of(" \t", i) != std::string::npos &&
                             std::isdigit(static_cast<unsigned char>(line[i]));
        return spaced_digits ? parse_edge_list(source) : parse_graph6(source);
    }
    // Nothing but blanks: the empty edge list.
    return Graph(0);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int avail = 6;
    unsigned cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            cur = (cur << 1) | (g.has_edge(u, v) ? 1u : 0u);
            if (--avail == 0) {
                out.push_back(static_cast<char>(63 + cur));
                cur = 0;
                avail = 6;
            }
        }
    }
    if (avail != 6) out.push_back(static_cast<char>(63 + (cur << avail)));
    out.push_back('\n');
    return out;
}

std::string write_graph_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump() + "\n";
}

std::string write_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: return write_graph6(g);
        case GraphFormat::Json: return write_graph_json(g);
        default: return write_edge_list(g);
    }
}

GraphFormat graph_format_from_name(const std::string& name) {
    if (name == "edges") return GraphFormat::EdgeList;
    if (name == "g6") return GraphFormat::Graph6;
    if (name == "json") return GraphFormat::Json;
    if (name == "auto" || name.empty()) return GraphFormat::Auto;
    throw ValidationError("unknown graph format '" + name + "'");
}

}  // namespace planiv
