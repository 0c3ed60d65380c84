#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "npo/graph.hpp"

namespace npo {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Encodes g in graph6: size bytes, then the upper triangle column by column
/// in big-endian 6-bit groups, each offset by 63. Orders 63 and 64 use the
/// '~'-prefixed long size form.
std::string encode_graph6(const Graph& g);

/// Decodes one graph6 line (without trailing newline). Rejects bytes outside
/// 63..126, wrong body length, nonzero padding bits, and orders outside 1..64.
Graph decode_graph6(std::string_view text);

}  // namespace npo
