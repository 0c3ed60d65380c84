#include "npo/canonical.hpp"

#include <array>
#include <cstdint>
#include <limits>

#include "npo/graph6.hpp"

namespace npo {

namespace {

// One partial ordering that still achieves the minimal code prefix. `word`
// caches, for every unplaced vertex v, the bits of v against the placed
// prefix (earliest position most significant), so extending by one position
// costs O(n).
struct Prefix {
    std::array<std::uint8_t, Graph::kMaxVertices> order{};
    std::array<std::uint64_t, Graph::kMaxVertices> word{};
    std::uint64_t used = 0;
    int depth = 0;
};

// Safety valve: the tie frontier stays tiny for the graphs this project
// enumerates (bounded independence number or heavy twin collapsing), but a
// hostile input could blow it up.
constexpr std::size_t kMaxFrontier = std::size_t{1} << 22;

bool twins(const Graph& g, int u, int v) {
    const std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    return (g.neighbors(u) & mask) == (g.neighbors(v) & mask);
}

}  // namespace

std::vector<int> canonical_ordering(const Graph& g) {
    const int n = g.order();
    std::vector<Prefix> frontier(1);
    std::vector<Prefix> next;

    for (int depth = 0; depth < n; ++depth) {
        // Pass 1: the minimal appended word over every surviving prefix.
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        for (const Prefix& p : frontier)
            for (int v = 0; v < n; ++v)
                if (!((p.used >> v) & 1u) && p.word[static_cast<std::size_t>(v)] < best)
                    best = p.word[static_cast<std::size_t>(v)];

        // Pass 2: extend exactly the placements achieving it. Within one
        // prefix, candidates whose whole residual neighborhoods coincide
        // (twins) lead to identical subtrees, so only the first is kept.
        next.clear();
        for (const Prefix& p : frontier) {
            std::array<std::uint8_t, Graph::kMaxVertices> reps{};
            int rep_count = 0;
            for (int v = 0; v < n; ++v) {
                if (((p.used >> v) & 1u) || p.word[static_cast<std::size_t>(v)] != best) continue;
                bool duplicate = false;
                for (int r = 0; r < rep_count && !duplicate; ++r)
                    duplicate = twins(g, reps[static_cast<std::size_t>(r)], v);
                if (duplicate) continue;
                reps[static_cast<std::size_t>(rep_count++)] = static_cast<std::uint8_t>(v);

                Prefix q = p;
                q.order[static_cast<std::size_t>(depth)] = static_cast<std::uint8_t>(v);
                q.used |= std::uint64_t{1} << v;
                q.depth = depth + 1;
                const std::uint64_t row = g.neighbors(v);
                for (int u = 0; u < n; ++u)
                    if (!((q.used >> u) & 1u))
                        q.word[static_cast<std::size_t>(u)] =
                            (q.word[static_cast<std::size_t>(u)] << 1) | ((row >> u) & 1u);
                next.push_back(q);
                if (next.size() > kMaxFrontier)
                    throw std::runtime_error("canonical labeling tie frontier exceeded capacity");
            }
        }
        frontier.swap(next);
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = frontier.front().order[static_cast<std::size_t>(i)];
    return order;
}

Graph canonical_graph(const Graph& g) {
    const std::vector<int> order = canonical_ordering(g);
    return permute(g, order);
}

CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm(encode_graph6(canonical_graph(g)));
}

}  // namespace npo
