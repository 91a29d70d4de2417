#include <plabel/graph_io.hpp>

#include <plabel/errors.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <stdexcept>

namespace plabel {

namespace {

constexpr int graph6_bias = 63;

struct Line {
    std::string_view text;
    std::size_t number;
};

std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 1;
    while (! text.empty()) {
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        if (! line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back({line, number++});
        if (nl == std::string_view::npos)
            break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

// Reads whitespace-separated non-negative integers from a line; fails with
// the offset of the first bad token.
std::vector<long> read_integers(const Line & line, std::string_view body)
{
    std::vector<long> values;
    std::size_t i = 0;
    while (i < body.size()) {
        if (is_space(body[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < body.size() && ! is_space(body[i]))
            ++i;
        const auto token = body.substr(start, i - start);
        long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
            throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line.number,
                    static_cast<std::size_t>(token.data() - line.text.data()));
        values.push_back(value);
    }
    return values;
}

Graph parse_edge_list(std::string_view text)
{
    long declared_n = -1;
    long max_index = -1;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;

    for (const auto & line : split_lines(text)) {
        std::string_view body = line.text;
        if (const auto hash = body.find('#'); hash != std::string_view::npos) {
            // "# n N" pragma fixes the vertex count
            auto comment = body.substr(hash + 1);
            while (! comment.empty() && is_space(comment.front()))
                comment.remove_prefix(1);
            if (comment.size() > 2 && comment[0] == 'n' && is_space(comment[1])) {
                auto values = read_integers(line, comment.substr(2));
                if (values.size() != 1)
                    throw ParseError("vertex-count pragma needs exactly one integer", line.number, hash);
                declared_n = values[0];
            }
            body = body.substr(0, hash);
        }
        auto values = read_integers(line, body);
        if (values.empty())
            continue;
        if (values.size() != 2)
            throw ParseError("expected 'u v', got " + std::to_string(values.size()) + " integers", line.number, 0);
        if (values[0] == values[1])
            throw ParseError("loop at vertex " + std::to_string(values[0]), line.number, 0);
        if (values[0] > (1L << 30) || values[1] > (1L << 30))
            throw ParseError("vertex index too large", line.number, 0);
        max_index = std::max({max_index, values[0], values[1]});
        edges.push_back(make_edge(static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1])));
        edge_lines.push_back(line.number);
    }

    const long n = declared_n >= 0 ? declared_n : max_index + 1;
    if (max_index >= n)
        throw ParseError("vertex " + std::to_string(max_index) + " exceeds declared count " + std::to_string(n), 1, 0);

    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return edges[a] < edges[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (edges[order[i]] == edges[order[i - 1]])
            throw ParseError("duplicate edge " + std::to_string(edges[order[i]].u) + " " + std::to_string(edges[order[i]].v),
                    edge_lines[order[i]], 0);

    return Graph(static_cast<int>(n), std::move(edges));
}

std::string emit_edge_list(const Graph & g)
{
    std::string out = "# n " + std::to_string(g.order()) + "\n";
    for (const auto & e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Graph decode_graph6(const Line & line)
{
    std::string_view s = line.text;
    std::size_t pos = 0;
    if (s.size() >= 10 && s.substr(0, 10) == ">>graph6<<")
        pos = 10;

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= s.size())
            throw ParseError("graph6 string truncated", line.number, i);
        const int c = static_cast<unsigned char>(s[i]);
        if (c < graph6_bias || c > graph6_bias + 63)
            throw ParseError("graph6 byte out of range", line.number, i);
        return c - graph6_bias;
    };

    std::uint64_t n = 0;
    if (pos < s.size() && s[pos] == '~') {
        if (pos + 1 < s.size() && s[pos + 1] == '~') {
            for (std::size_t i = 0; i < 6; ++i)
                n = (n << 6) | static_cast<std::uint64_t>(byte_at(pos + 2 + i));
            pos += 8;
        } else {
            for (std::size_t i = 0; i < 3; ++i)
                n = (n << 6) | static_cast<std::uint64_t>(byte_at(pos + 1 + i));
            pos += 4;
        }
    } else {
        n = static_cast<std::uint64_t>(byte_at(pos));
        pos += 1;
    }
    if (n > (1u << 20))
        throw ParseError("graph6 vertex count too large", line.number, 0);

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (s.size() - pos != bytes)
        throw ParseError("graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected "
                + std::to_string(bytes), line.number, pos);

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            const int chunk = byte_at(pos + k / 6);
            if (chunk & (1 << (5 - k % 6)))
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    for (; k < bytes * 6; ++k)
        if (byte_at(pos + k / 6) & (1 << (5 - k % 6)))
            throw ParseError("graph6 padding bits must be zero", line.number, pos + k / 6);

    return Graph(static_cast<int>(n), std::move(edges));
}

} // namespace

GraphFormat parse_graph_format(std::string_view name)
{
    if (name == "edge-list")
        return GraphFormat::edge_list;
    if (name == "graph6")
        return GraphFormat::graph6;
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

std::string to_graph6(const Graph & g)
{
    const auto n = static_cast<std::uint64_t>(g.order());
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + graph6_bias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + graph6_bias));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + graph6_bias));
    }

    int chunk = 0;
    int filled = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + graph6_bias));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + graph6_bias));
    return out;
}

Graph from_graph6(std::string_view line)
{
    return decode_graph6({line, 1});
}

std::vector<Graph> parse_graph6_lines(std::string_view text)
{
    std::vector<Graph> graphs;
    for (const auto & line : split_lines(text))
        if (! line.text.empty())
            graphs.push_back(decode_graph6(line));
    return graphs;
}

Graph parse_graph(std::string_view text, GraphFormat format)
{
    if (format == GraphFormat::edge_list)
        return parse_edge_list(text);
    for (const auto & line : split_lines(text))
        if (! line.text.empty())
            return decode_graph6(line);
    throw ParseError("no graph6 line found", 1, 0);
}

std::string emit_graph(const Graph & g, GraphFormat format)
{
    if (format == GraphFormat::edge_list)
        return emit_edge_list(g);
    return to_graph6(g) + "\n";
}

} // namespace plabel
