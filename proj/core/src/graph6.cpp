#include "circalt/graph.hpp"

namespace circalt {

namespace {
constexpr int kBias = 63;
constexpr int kMaxShortN = 62;
} // namespace

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw GraphFormatError("empty graph6 string");
    const unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == '>')
        throw GraphFormatError("graph6 header markers are not accepted; pass the bare line");
    if (first < kBias || first > 126)
        throw GraphFormatError("malformed graph6 size character");
    if (first == 126)
        throw GraphFormatError("long-form graph6 (n > 62) is not supported");
    const int n = first - kBias;
    if (n == 0) throw GraphFormatError("the empty graph (n = 0) is rejected");

    const size_t num_bits = static_cast<size_t>(n) * (n - 1) / 2;
    const size_t num_bytes = (num_bits + 5) / 6;
    if (text.size() < 1 + num_bytes) throw GraphFormatError("truncated graph6 bit vector");
    if (text.size() > 1 + num_bytes) throw GraphFormatError("trailing characters after graph6 data");

    Graph g(n);
    size_t bit = 0;
    for (size_t i = 0; i < num_bytes; ++i) {
        const unsigned char raw = static_cast<unsigned char>(text[1 + i]);
        if (raw < kBias || raw > 126) throw GraphFormatError("malformed graph6 data character");
        const unsigned value = raw - kBias;
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            const bool set = (value >> shift) & 1u;
            if (bit >= num_bits) {
                if (set) throw GraphFormatError("nonzero padding bits in graph6 data");
                continue;
            }
            if (set) {
                // Column-major upper triangle: bit index k encodes pair (i, j),
                // j = 1..n-1, i = 0..j-1.
                size_t k = bit;
                int j = 1;
                while (k >= static_cast<size_t>(j)) {
                    k -= j;
                    ++j;
                }
                g.add_edge(static_cast<int>(k), j);
            }
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.size();
    if (n < 1 || n > kMaxShortN)
        throw GraphFormatError("graph order out of short-form graph6 range: " + std::to_string(n));

    std::string out;
    out.push_back(static_cast<char>(kBias + n));
    unsigned acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
    return out;
}

} // namespace circalt
