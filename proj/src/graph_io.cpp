#include "domlab/graph_io.hpp"

#include "domlab/errors.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace domlab {

namespace {

constexpr int kBias = 63;
constexpr int kMaxShortOrder = 62;

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view line)
{
    line = trim(line);
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    if (line.empty())
        throw ParseError("graph6: empty line");
    for (char c : line) {
        const int code = static_cast<unsigned char>(c);
        if (code < 63 || code > 126)
            throw ParseError("graph6: character code " + std::to_string(code) +
                             " outside 63..126");
    }
    if (line[0] == 126)
        throw ParseError("graph6: long-form size header (n >= 63) is not supported");
    const int n = line[0] - kBias;
    if (n < 1)
        throw ParseError("graph6: graphs need at least one vertex");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t groups = (bits + 5) / 6;
    const std::string_view payload = line.substr(1);
    if (payload.size() < groups)
        throw ParseError("graph6: truncated payload, need " + std::to_string(groups) +
                         " bytes, got " + std::to_string(payload.size()));
    if (payload.size() > groups)
        throw ParseError("graph6: trailing data after payload");

    std::vector<Edge> edges;
    std::size_t k = 0;
    auto bit_at = [&](std::size_t idx) {
        const int group = payload[idx / 6] - kBias;
        return (group >> (5 - idx % 6)) & 1;
    };
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if (bit_at(k))
                edges.emplace_back(i, j);
    for (; k < groups * 6; ++k)
        if (bit_at(k))
            throw ParseError("graph6: nonzero padding bits");
    return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > kMaxShortOrder)
        throw SizeError("graph6: n=" + std::to_string(n) +
                        " needs the long-form header, which is not supported");
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    int group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

Graph read_edge_list(std::istream& in)
{
    long long n = 0;
    long long m = 0;
    if (!(in >> n >> m))
        throw ParseError("edge list: expected header \"n m\"");
    if (n < 1 || m < 0)
        throw ParseError("edge list: bad header n=" + std::to_string(n) +
                         " m=" + std::to_string(m));
    if (n > kMaxShortOrder * 1000)
        throw SizeError("edge list: n=" + std::to_string(n) + " too large");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0;
        long long v = 0;
        if (!(in >> u >> v))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge list: endpoint out of range in edge " + std::to_string(i));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const GraphError& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

std::vector<Graph> read_graphs(std::istream& in)
{
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line) && trim(line).empty()) {
    }
    std::vector<Graph> out;
    if (trim(line).empty())
        return out;

    std::istringstream probe{std::string(trim(line))};
    long long a = 0;
    long long b = 0;
    std::string rest;
    if ((probe >> a >> b) && !(probe >> rest)) {
        std::istringstream whole(text);
        out.push_back(read_edge_list(whole));
        return out;
    }

    int lineno = 0;
    std::istringstream again(text);
    while (std::getline(again, line)) {
        ++lineno;
        if (trim(line).empty())
            continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<Graph> read_graphs(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    return read_graphs(in);
}

}  // namespace domlab
