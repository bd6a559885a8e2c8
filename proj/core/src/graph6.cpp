#include "copoly/graph6.hpp"

#include <algorithm>
#include <string>

#include "copoly/error.hpp"

namespace copoly {

namespace {

constexpr int kBias = 63;

bool printable(char c) { return c >= kBias && c <= kBias + 63; }

}  // namespace

SimpleGraph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    if (!printable(text[0])) throw ParseError("invalid graph6 order byte", 0);
    const int n = text[0] - kBias;
    if (n > kMaxVertices) {
        throw ParseError("graph6 order " + std::to_string(n) + " exceeds 32", 0);
    }
    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body = (pairs + 5) / 6;
    if (text.size() != body + 1) {
        throw ParseError("graph6 length mismatch: expected " + std::to_string(body + 1) + " bytes, got " +
                             std::to_string(text.size()),
                         std::min(text.size(), body + 1));
    }
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!printable(text[i])) throw ParseError("invalid graph6 byte", i);
    }

    SimpleGraph g(n);
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const int chunk = text[1 + k / 6] - kBias;
            if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(u, v);
        }
    }
    for (; k < body * 6; ++k) {
        const int chunk = text[1 + k / 6] - kBias;
        if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) {
            throw ParseError("nonzero graph6 padding bit", 1 + k / 6);
        }
    }
    return g;
}

std::string emit_graph6(const SimpleGraph& g) {
    const int n = g.order();
    std::string out(1, static_cast<char>(n + kBias));
    int chunk = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled != 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

std::vector<SimpleGraph> read_graph6_lines(std::istream& in) {
    std::vector<SimpleGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r\n");
        out.push_back(parse_graph6(std::string_view(line).substr(first, last - first + 1)));
    }
    return out;
}

}  // namespace copoly
