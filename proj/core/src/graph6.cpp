#include "npo/graph6.hpp"

namespace npo {

namespace {
constexpr int kOffset = 63;
constexpr int kLongForm = 126;  // '~'
}  // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kOffset + n));
    } else {
        out.push_back(static_cast<char>(kLongForm));
        out.push_back(static_cast<char>(kOffset + ((n >> 12) & 0x3f)));
        out.push_back(static_cast<char>(kOffset + ((n >> 6) & 0x3f)));
        out.push_back(static_cast<char>(kOffset + (n & 0x3f)));
    }
    int group = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(kOffset + group));
                group = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(kOffset + (group << (6 - bits))));
    return out;
}

Graph decode_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error("empty graph6 string");
    for (char c : text)
        if (static_cast<unsigned char>(c) < kOffset || static_cast<unsigned char>(c) > kLongForm)
            throw Graph6Error("byte outside printable graph6 range");

    std::size_t pos = 0;
    long n;
    if (text[0] == static_cast<char>(kLongForm)) {
        if (text.size() >= 2 && text[1] == static_cast<char>(kLongForm))
            throw Graph6Error("graph order exceeds 64");
        if (text.size() < 4) throw Graph6Error("truncated size field");
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - kOffset);
        pos = 4;
    } else {
        n = text[0] - kOffset;
        pos = 1;
    }
    if (n < 1) throw Graph6Error("graph order must be at least 1");
    if (n > Graph::kMaxVertices) throw Graph6Error("graph order exceeds 64");

    const long bit_count = n * (n - 1) / 2;
    const std::size_t body_len = static_cast<std::size_t>((bit_count + 5) / 6);
    if (text.size() - pos != body_len) throw Graph6Error("graph6 body has wrong length");

    Graph g(static_cast<int>(n));
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = text[pos + static_cast<std::size_t>(bit / 6)] - kOffset;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (long pad = bit; pad < static_cast<long>(body_len) * 6; ++pad) {
        const int byte = text[pos + static_cast<std::size_t>(pad / 6)] - kOffset;
        if ((byte >> (5 - pad % 6)) & 1) throw Graph6Error("nonzero padding bits");
    }
    return g;
}

}  // namespace npo
