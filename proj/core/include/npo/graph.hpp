#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace npo {

/// Thrown when a construction would exceed the 64-vertex capacity.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Simple undirected graph on 1..64 vertices.
///
/// Each vertex stores its neighborhood as one 64-bit row, so the adjacency
/// matrix is a fixed-size bitset: symmetric, hollow (zero diagonal), and
/// with no bit set at or beyond the vertex count. Instances are cheap to
/// copy and are treated as immutable values once built; every operation
/// below returns a new graph.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    explicit Graph(int n) : n_(n) {
        if (n < 1)
            throw std::invalid_argument("graph order must be at least 1");
        if (n > kMaxVertices)
            throw CapacityError("graph order exceeds 64");
    }

    int order() const { return n_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    /// Neighborhood of v as a bitmask over vertex indices.
    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return rows_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    long edge_count() const {
        long twice = 0;
        for (int v = 0; v < n_; ++v)
            twice += std::popcount(rows_[static_cast<std::size_t>(v)]);
        return twice / 2;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.rows_[static_cast<std::size_t>(v)] != b.rows_[static_cast<std::size_t>(v)])
                return false;
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    }

    int n_;
    std::array<std::uint64_t, kMaxVertices> rows_{};
};

/// Vertex degrees sorted in non-increasing order.
std::vector<int> degrees(const Graph& g);

Graph complement(const Graph& g);

/// Subgraph induced on `vertices`, relabeled 0..|vertices|-1 in the given
/// order. Indices must be distinct and in range; the subset must be nonempty.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Relabels g so that old vertex order[i] becomes new vertex i.
Graph permute(const Graph& g, std::span<const int> order);

Graph disjoint_union(const Graph& g, const Graph& h);

/// Appends one vertex (index g.order()) adjacent to the vertices in
/// `neighbor_mask`, which may only reference existing vertices.
Graph add_vertex(const Graph& g, std::uint64_t neighbor_mask);

/// True iff some injection of pattern vertices into g maps every pattern
/// edge onto an edge of g. The pattern is not required to appear induced.
bool contains_subgraph(const Graph& g, const Graph& pattern);

}  // namespace npo
