#pragma once

// Serial reference implementations of the parallel kernels. They share no
// code paths with the kernels they shadow and exist for cross-checking and
// benchmarking.

#include <cstdint>
#include <span>
#include <vector>

#include "cutcx/cutcomplex.hpp"
#include "cutcx/graph.hpp"

namespace cutcx::reference {

/// Union-find over the induced edges of w.
bool induced_disconnected(const Graph& g, VertexSet w);

/// All k-subsets in lexicographic order, filtered with the union-find test.
std::vector<Facet> enumerate_facets(const Graph& g, int k);

/// Face vector from an explicitly materialized downward closure.
std::vector<std::int64_t> face_counts(std::span<const Facet> facets, int n);

/// D_s by scanning all earlier facets and intersecting.
std::vector<VertexSet> drop_sets(std::span<const Facet> ordered, int n);

/// Shelling test straight from the definition: for every s > 0, each
/// intersection F_r & F_s (r < s) lies inside some F_t & F_s of size |F_s|-1.
bool is_shelling_order(std::span<const Facet> ordered, int n);

}  // namespace cutcx::reference
