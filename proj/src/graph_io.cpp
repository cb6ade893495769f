#include "zagreb/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "zagreb/errors.hpp"

namespace zagreb {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_payload_char(char c) { return c >= 63 && c <= 126; }

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<long> integers_on_line(std::string_view line, std::size_t & bad_offset)
{
    std::vector<long> out;
    std::size_t i = 0;
    bad_offset = std::string_view::npos;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        long value = 0;
        const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{} ||
            (ptr != line.data() + line.size() && !std::isspace(static_cast<unsigned char>(*ptr)))) {
            bad_offset = i;
            return out;
        }
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

}  // namespace

Graph parse_graph6(std::string_view text)
{
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw parse_error("empty graph6 record", base);

    std::size_t pos = 0;
    auto next_value = [&](const char * what) -> int {
        if (pos >= text.size())
            throw parse_error(std::string("truncated graph6 ") + what, base + pos);
        const char c = text[pos];
        if (!is_payload_char(c))
            throw parse_error(std::string("invalid graph6 character in ") + what, base + pos);
        ++pos;
        return c - kBias;
    };

    long n = 0;
    if (text[0] == '~') {
        ++pos;
        if (pos < text.size() && text[pos] == '~')
            throw parse_error("graph6 order above supported limit", base + pos);
        for (int k = 0; k < 3; ++k)
            n = (n << 6) | next_value("size header");
        if (n <= 62)
            throw parse_error("long graph6 size header used for order <= 62", base);
    }
    else {
        n = next_value("size header");
    }
    if (n < 1 || n > kMaxVertices)
        throw parse_error("graph6 order " + std::to_string(n) + " outside [1, " +
                              std::to_string(kMaxVertices) + "]",
                          base);

    const long bits = n * (n - 1) / 2;
    const long expected = (bits + 5) / 6;
    const std::size_t payload_start = pos;
    if (static_cast<long>(text.size() - payload_start) < expected)
        throw parse_error("truncated graph6 payload", base + text.size());
    if (static_cast<long>(text.size() - payload_start) > expected)
        throw parse_error("trailing characters after graph6 payload",
                          base + payload_start + static_cast<std::size_t>(expected));

    GraphBuilder b(static_cast<int>(n));
    long k = 0;
    int chunk = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            if (k % 6 == 0)
                chunk = next_value("payload");
            if (chunk & (1 << (5 - k % 6)))
                b.add_edge(i, j);
        }
    if (k % 6 != 0 && (chunk & ((1 << (6 - k % 6)) - 1)) != 0)
        throw parse_error("non-zero graph6 padding bits", base + text.size() - 1);
    return b.build();
}

std::string to_graph6(const Graph & g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    }
    else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    auto records = read_graphs(in);
    if (records.size() != 1)
        throw parse_error("expected exactly one edge-list graph", 0);
    return std::move(records.front().graph);
}

std::string to_edge_list(const Graph & g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto & e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

std::vector<GraphRecord> read_graphs(std::istream & in)
{
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        lines.push_back(std::move(line));

    std::optional<bool> edge_list;
    std::vector<GraphRecord> out;
    std::size_t i = 0;
    while (i < lines.size()) {
        const std::string_view line = trim(lines[i]);
        const std::size_t lineno = i + 1;
        if (line.empty()) {
            ++i;
            continue;
        }
        std::size_t bad = 0;
        auto header = integers_on_line(line, bad);
        if (!edge_list)
            edge_list = bad == std::string_view::npos && header.size() == 2;

        if (!*edge_list) {
            try {
                out.push_back({parse_graph6(line), lineno});
            }
            catch (const parse_error & e) {
                throw parse_error(e.what(), e.offset(), lineno);
            }
            ++i;
            continue;
        }

        if (bad != std::string_view::npos || header.size() != 2)
            throw parse_error("expected edge-list header \"n m\"", bad == std::string_view::npos ? 0 : bad,
                              lineno);
        const long n = header[0], m = header[1];
        if (n < 1 || n > kMaxVertices)
            throw parse_error("vertex count out of range", 0, lineno);
        if (m < 0 || m > n * (n - 1) / 2)
            throw parse_error("edge count out of range", 0, lineno);
        ++i;
        GraphBuilder b(static_cast<int>(n));
        for (long e = 0; e < m; ++e) {
            while (i < lines.size() && trim(lines[i]).empty())
                ++i;
            if (i >= lines.size())
                throw parse_error("truncated edge list: expected " + std::to_string(m) + " edges", 0,
                                  lines.size());
            const auto pair = integers_on_line(trim(lines[i]), bad);
            if (bad != std::string_view::npos || pair.size() != 2)
                throw parse_error("expected edge \"u v\"", bad == std::string_view::npos ? 0 : bad, i + 1);
            const long u = pair[0], v = pair[1];
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw parse_error("edge endpoint out of range", 0, i + 1);
            if (u == v)
                throw parse_error("loop edge", 0, i + 1);
            if (b.adjacent(static_cast<int>(u), static_cast<int>(v)))
                throw parse_error("duplicate edge", 0, i + 1);
            b.add_edge(static_cast<int>(u), static_cast<int>(v));
            ++i;
        }
        out.push_back({b.build(), lineno});
    }
    return out;
}

}  // namespace zagreb
