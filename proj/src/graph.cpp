#include "cutcx/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cutcx/errors.hpp"

namespace cutcx {

Graph::Graph(int n)
{
    if (n < 0 || n > kMaxVertices) {
        throw ParameterError("vertex count " + std::to_string(n) + " outside [0, " +
                             std::to_string(kMaxVertices) + "]");
    }
    adj_.resize(static_cast<std::size_t>(n));
}

void Graph::add_edge(int u, int v)
{
    if (u == v) throw ParameterError("loops are not allowed");
    if (u < 0 || v < 0 || u >= size() || v >= size()) throw ParameterError("edge endpoint out of range");
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
}

Graph circulant(int n, std::span<const int> generators)
{
    if (n < 2) throw ParameterError("circulant graph needs n >= 2");
    Graph g(n);
    for (int s : generators) {
        if (s < 1 || s > n - 1) {
            throw ParameterError("generator " + std::to_string(s) + " outside [1, " + std::to_string(n - 1) + "]");
        }
        for (int u = 0; u < n; ++u) g.add_edge(u, (u + s) % n);
    }
    return g;
}

Graph cycle_power(int n, int p)
{
    if (n < 3) throw ParameterError("cycle power needs n >= 3");
    if (p < 1) throw ParameterError("cycle power needs p >= 1");
    std::vector<int> gens(static_cast<std::size_t>(std::min(p, n - 1)));
    std::iota(gens.begin(), gens.end(), 1);
    return circulant(n, gens);
}

bool induced_disconnected(const Graph& g, VertexSet w)
{
    if (!w.subset_of(g.vertices())) throw ParameterError("vertex label outside graph");
    if (w.size() <= 1) return false;

    VertexSet reached = VertexSet::singleton(w.min());
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        frontier = (next & w) - reached;
        reached |= frontier;
    }
    return reached != w;
}

}  // namespace cutcx
