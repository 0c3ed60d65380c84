#pragma once

#include <compare>
#include <string>
#include <vector>

#include "npo/graph.hpp"

namespace npo {

/// Total-order key identifying an isomorphism class: the graph6 encoding of
/// the relabeling that minimizes the adjacency bit string. Two graphs have
/// equal keys iff they are isomorphic, and the key of a graph equals the key
/// of any relabeling of it.
class CanonicalForm {
public:
    explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

private:
    std::string bytes_;
};

/// Vertex ordering realizing the lexicographically least adjacency bit
/// string (upper triangle, column by column) over all n! relabelings.
/// Entry i is the original index of the vertex placed at position i.
std::vector<int> canonical_ordering(const Graph& g);

/// g relabeled by canonical_ordering(g).
Graph canonical_graph(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

}  // namespace npo
