#include "graphspark/graph6.hpp"

#include <cstdint>

namespace graphspark {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int byte_at(std::string_view s, std::size_t i) {
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        throw ParseError("graph6 character out of range 63..126", i);
    return c - 63;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
    std::string_view body = text.substr(base);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r'))
        body.remove_suffix(1);

    if (body.empty()) throw ParseError("empty graph6 line", base);
    if (body[0] == ':' || body[0] == ';' || body[0] == '&')
        throw ParseError("sparse6/digraph6 input is not supported", base);

    // Order: one byte for n <= 62, '~' + 3 bytes for n <= 258047,
    // '~~' + 6 bytes above that.
    std::size_t pos = 0;
    long long n = 0;
    int c0 = byte_at(body, pos);
    if (c0 != 63) {
        n = c0;
        pos = 1;
    } else {
        if (body.size() < 2) throw ParseError("truncated graph6 header", base + 1);
        if (byte_at(body, 1) == 63) {
            if (body.size() < 8) throw ParseError("truncated graph6 header", base + body.size());
            n = 0;
            for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte_at(body, i);
            pos = 8;
        } else {
            if (body.size() < 4) throw ParseError("truncated graph6 header", base + body.size());
            n = 0;
            for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | byte_at(body, i);
            pos = 4;
        }
    }

    if (n == 0) throw DomainError("graph6 encodes the order-0 graph; graphs here have n >= 1");
    if (n > VertexSet::capacity())
        throw CapacityError("graph6 order " + std::to_string(n) +
                            " exceeds vertex-set capacity " +
                            std::to_string(VertexSet::capacity()));

    Graph g(static_cast<int>(n));
    long long bits_needed = n * (n - 1) / 2;
    long long bit = 0;
    // Bits run through the upper triangle in column order:
    // (0,1), (0,2), (1,2), (0,3), ...
    int col = 1, row = 0;
    while (bit < bits_needed) {
        if (pos >= body.size())
            throw ParseError("truncated graph6 bit body", base + body.size());
        int v = byte_at(body, pos);
        for (int k = 5; k >= 0; --k) {
            if (bit >= bits_needed) {
                if ((v >> k) & 1)
                    throw ParseError("nonzero padding in graph6 bit body", base + pos);
                continue;
            }
            if ((v >> k) & 1) g.add_edge(row, col);
            ++bit;
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
        ++pos;
    }
    if (pos < body.size())
        throw ParseError("trailing bytes after graph6 bit body", base + pos);
    return g;
}

std::string encode_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }

    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

} // namespace graphspark
