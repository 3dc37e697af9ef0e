#pragma once

#include <span>
#include <vector>

#include "cutcx/vertex_set.hpp"

namespace cutcx {

/// Simple undirected graph on vertices 0..n-1, adjacency as bit rows.
/// Immutable once built; every query is const and thread-safe.
class Graph {
public:
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    int size() const { return static_cast<int>(adj_.size()); }
    VertexSet vertices() const { return VertexSet::full(size()); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
    int degree(int v) const { return neighbors(v).size(); }

    void add_edge(int u, int v);

private:
    std::vector<VertexSet> adj_;
};

/// Circulant graph: u ~ v iff (u - v) mod n lies in S or in n - S.
/// Throws ParameterError if n < 2, n > kMaxVertices, or some s is outside [1, n-1].
Graph circulant(int n, std::span<const int> generators);

/// p-th power of the cycle C_n, i.e. circulant(n, {1..p}); complete when n <= 2p+1.
/// Throws ParameterError if n < 3 or p < 1.
Graph cycle_power(int n, int p);

/// True iff the induced subgraph g[w] has at least two components.
/// The empty graph and single vertices count as connected.
/// Throws ParameterError when w has labels outside 0..n-1.
bool induced_disconnected(const Graph& g, VertexSet w);

}  // namespace cutcx
