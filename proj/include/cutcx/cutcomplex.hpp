#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "cutcx/graph.hpp"
#include "cutcx/vertex_set.hpp"

namespace cutcx {

/// Parameters of Delta_k(C_n^p) together with the center c.
struct ComplexParams {
    int n = 0;
    int p = 0;
    int k = 3;
    int c = 0;                     // (n+1)/2 for odd n, n/2 for even n
    bool theorem_applies = false;  // k == 3, p >= 2, n >= 6p-3
};

/// Validates 3 <= n <= kMaxVertices, p >= 1, 1 <= k <= n. Throws ParameterError.
ComplexParams make_params(int n, int p, int k = 3);

inline int center_of(int n) { return (n + 1) / 2; }

/// The inequalities between c, n and p that hold throughout the theorem range.
/// Fractional bounds are compared after doubling both sides.
struct CenterBounds {
    bool chain = false;          // p < 3p-1 <= c <= n-3p+2 < n-p
    bool half_p_below = false;   // c - p/2 <= n-2p-1
    bool upper_margin = false;   // c + (3p-2)/2 <= n-p
    bool lower_margin = false;   // c - 3p/2 >= p
    bool all() const { return chain && half_p_below && upper_margin && lower_margin; }
};
CenterBounds check_center_bounds(const ComplexParams& params);

/// A facet of a k-cut complex, stored by its k-element complement.
class Facet {
public:
    Facet() = default;
    explicit Facet(VertexSet complement) : complement_(complement) {}
    static Facet from_vertices(int n, VertexSet vertices) { return Facet(vertices.complement(n)); }

    VertexSet complement() const { return complement_; }
    VertexSet vertices(int n) const { return complement_.complement(n); }
    std::vector<int> complement_labels() const { return complement_.to_vector(); }

    friend bool operator==(Facet, Facet) = default;
    /// Canonical order: lexicographic on the ascending complement.
    friend bool operator<(Facet a, Facet b) { return lex_less(a.complement_, b.complement_); }

private:
    VertexSet complement_;
};

/// All facets of Delta_k(g): k-subsets W with g[W] disconnected, returned as
/// complements in canonical order. Empty when the complex is void.
/// Parallel over the smallest complement vertex; output is independent of
/// the worker count.
std::vector<Facet> enumerate_facets(const Graph& g, int k);

/// Vertex counts above this are refused by face_counts: it scans all 2^n subsets.
inline constexpr int kMaxFaceScanVertices = 30;

/// f_{-1}, f_0, ..., f_{d} where d = n - k - 1 is the facet dimension.
/// A subset T is a face iff some facet complement is disjoint from T.
/// Throws VoidComplexError on an empty list, ResourceCapError above kMaxFaceScanVertices.
std::vector<std::int64_t> face_counts(std::span<const Facet> facets, int n);

/// Reduced Euler characteristic sum_{j>=0} (-1)^j f_j - 1; -1 for a void complex.
std::int64_t reduced_euler(std::span<const Facet> facets, int n);

/// Image of a facet under v -> v + shift (mod n).
Facet rotate(Facet f, int shift, int n);

// Facet-list text format:
//   n=<n> k=<k>
//   <a> <b> <c>        one complement per line, ascending labels
struct FacetList {
    int n = 0;
    int k = 0;
    std::vector<Facet> facets;
};

void write_facet_list(std::ostream& out, int n, int k, std::span<const Facet> facets);

/// Throws ParameterError on malformed headers, wrong arity, unsorted or
/// out-of-range labels, and duplicate lines.
FacetList read_facet_list(std::istream& in);

}  // namespace cutcx
