#include "sgraph/graph6.hpp"

#include <cstddef>

#include "sgraph/errors.hpp"

namespace sgraph {

namespace {

constexpr int kBias = 63;

int triangle_bits(int n) { return n * (n - 1) / 2; }

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        // Three 6-bit groups, big-endian (covers n up to 258047; our cap is far below).
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw format_error("empty graph6 string", 0);

    std::size_t pos = 0;
    auto next_group = [&](const char* what) -> int {
        if (pos >= text.size())
            throw format_error(std::string("truncated graph6 string, missing ") + what,
                               text.size());
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw format_error("byte out of graph6 range [63,126]", pos);
        ++pos;
        return c - kBias;
    };

    long long n;
    const unsigned char first = static_cast<unsigned char>(text[0]);
    if (first < 63 || first > 126) throw format_error("byte out of graph6 range [63,126]", 0);
    if (first != 126) {
        n = first - kBias;
        ++pos;
    } else {
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
            throw format_error("8-byte vertex-count header exceeds supported size", pos);
        long long value = 0;
        for (int k = 0; k < 3; ++k) value = (value << 6) | next_group("vertex count");
        n = value;
        if (n <= 62) throw format_error("non-canonical long-form header for small n", 1);
    }
    if (n > kMaxVertices)
        throw format_error("vertex count " + std::to_string(n) + " exceeds capacity " +
                           std::to_string(kMaxVertices), 0);

    const int bits = triangle_bits(static_cast<int>(n));
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    int i = 0, j = 1;
    for (int consumed = 0; consumed < bits;) {
        const std::size_t group_pos = pos;
        const int group = next_group("adjacency data");
        for (int b = 5; b >= 0; --b) {
            if (consumed < bits) {
                if ((group >> b) & 1) {
                    rows[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
                    rows[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(i));
                }
                ++consumed;
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if ((group >> b) & 1) {
                throw format_error("nonzero padding bits", group_pos);
            }
        }
    }
    if (pos != text.size()) throw format_error("trailing bytes after graph6 data", pos);
    return Graph::from_rows(std::move(rows));
}

}  // namespace sgraph
