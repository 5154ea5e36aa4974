// graph6 short-form codec (orders 1..62).
//
// Layout: one order byte n+63, then the upper triangle of the adjacency
// matrix in column-major order -- a(0,1), a(0,2), a(1,2), a(0,3), ... --
// packed 6 bits per byte, most significant bit first, each byte offset
// by 63. Padding bits must be zero.
#pragma once

#include <string>
#include <string_view>

#include "faircoal/errors.hpp"
#include "faircoal/graph.hpp"

namespace faircoal {

inline constexpr int kGraph6MaxOrder = 62;

inline Graph parse_graph6(std::string_view text) {
    // tolerate one trailing newline, as produced by common tools
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty())
        throw parse_error(parse_error::Kind::bad_header, "empty graph6 input");

    unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == 126)  // long-form order header; n >= 63 never fits the cap anyway
        throw parse_error(parse_error::Kind::order_out_of_range,
                          "long-form graph6 orders (n >= 63) are not supported");
    if (head < 63 || head > 126)
        throw parse_error(parse_error::Kind::bad_header,
                          "graph6 order byte " + std::to_string(head) + " outside 63..126");
    int n = head - 63;
    if (n < 1)
        throw parse_error(parse_error::Kind::order_out_of_range, "graph6 order 0 is not supported");

    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(text.size()) < 1 + nbytes)
        throw parse_error(parse_error::Kind::bad_header,
                          "graph6 payload truncated: need " + std::to_string(nbytes) +
                              " bytes for order " + std::to_string(n));
    if (static_cast<int>(text.size()) > 1 + nbytes)
        throw parse_error(parse_error::Kind::trailing_garbage,
                          "graph6 input has trailing bytes after the payload");

    Graph g(n);
    int bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            unsigned char b = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + bit / 6)]);
            if (b < 63 || b > 126)
                throw parse_error(parse_error::Kind::bad_byte,
                                  "graph6 payload byte " + std::to_string(b) + " outside 63..126");
            if ((b - 63) >> (5 - bit % 6) & 1) g.add_edge(row, col);
        }
    }
    // check the final byte once more in the edgeless corner case, then padding
    for (int i = 0; i < nbytes; ++i) {
        unsigned char b = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + i)]);
        if (b < 63 || b > 126)
            throw parse_error(parse_error::Kind::bad_byte,
                              "graph6 payload byte " + std::to_string(b) + " outside 63..126");
    }
    if (nbits % 6 != 0) {
        unsigned char last = static_cast<unsigned char>(text[static_cast<std::size_t>(nbytes)]);
        if ((last - 63) & ((1 << (6 - nbits % 6)) - 1))
            throw parse_error(parse_error::Kind::trailing_garbage,
                              "graph6 padding bits are not zero");
    }
    return g;
}

inline std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > kGraph6MaxOrder)
        throw std::invalid_argument("graph6 short form supports order <= " +
                                    std::to_string(kGraph6MaxOrder));
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = acc << 1 | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

}  // namespace faircoal
