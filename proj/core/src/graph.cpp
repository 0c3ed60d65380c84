#include "npo/graph.hpp"

#include <algorithm>
#include <functional>

namespace npo {

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    if (vertices.empty()) throw std::invalid_argument("vertex subset must be nonempty");
    std::uint64_t seen = 0;
    for (int v : vertices) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex index out of range");
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (seen & bit) throw std::invalid_argument("vertex subset contains duplicates");
        seen |= bit;
    }
    const int m = static_cast<int>(vertices.size());
    Graph h(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]))
                h.add_edge(i, j);
    return h;
}

Graph permute(const Graph& g, std::span<const int> order) {
    if (static_cast<int>(order.size()) != g.order())
        throw std::invalid_argument("permutation length must equal graph order");
    return induced_subgraph(g, order);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.order() + h.order() > Graph::kMaxVertices)
        throw CapacityError("disjoint union exceeds 64 vertices");
    Graph u(g.order() + h.order());
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (g.adjacent(a, b)) u.add_edge(a, b);
    for (int a = 0; a < h.order(); ++a)
        for (int b = a + 1; b < h.order(); ++b)
            if (h.adjacent(a, b)) u.add_edge(g.order() + a, g.order() + b);
    return u;
}

Graph add_vertex(const Graph& g, std::uint64_t neighbor_mask) {
    const int n = g.order();
    if (n + 1 > Graph::kMaxVertices) throw CapacityError("graph already has 64 vertices");
    if (n < 64 && (neighbor_mask >> n) != 0)
        throw std::invalid_argument("neighbor mask references nonexistent vertices");
    Graph h(n + 1);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.adjacent(a, b)) h.add_edge(a, b);
    for (int v = 0; v < n; ++v)
        if ((neighbor_mask >> v) & 1u) h.add_edge(v, n);
    return h;
}

namespace {

// Backtracking injection of pattern into host. Pattern vertices are tried in
// descending degree order; a host vertex is a candidate only if its degree
// covers the pattern degree and all previously mapped pattern neighbors map
// onto host neighbors.
bool extend_embedding(const Graph& host, const Graph& pattern,
                      const std::vector<int>& pattern_order, std::size_t depth,
                      std::vector<int>& image, std::uint64_t& used) {
    if (depth == pattern_order.size()) return true;
    const int p = pattern_order[depth];
    for (int h = 0; h < host.order(); ++h) {
        const std::uint64_t bit = std::uint64_t{1} << h;
        if (used & bit) continue;
        if (host.degree(h) < pattern.degree(p)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < depth; ++j) {
            const int q = pattern_order[j];
            if (pattern.adjacent(p, q) && !host.adjacent(h, image[static_cast<std::size_t>(q)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        image[static_cast<std::size_t>(p)] = h;
        used |= bit;
        if (extend_embedding(host, pattern, pattern_order, depth + 1, image, used)) return true;
        used &= ~bit;
    }
    return false;
}

}  // namespace

bool contains_subgraph(const Graph& g, const Graph& pattern) {
    if (pattern.order() > g.order()) return false;
    std::vector<int> order(static_cast<std::size_t>(pattern.order()));
    for (int v = 0; v < pattern.order(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    std::vector<int> image(static_cast<std::size_t>(pattern.order()), -1);
    std::uint64_t used = 0;
    return extend_embedding(g, pattern, order, 0, image, used);
}

}  // namespace npo
