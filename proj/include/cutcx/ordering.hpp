#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "cutcx/cutcomplex.hpp"

namespace cutcx {

/// Vertex order fanning out from the center: c, c-1, c+1, c-2, c+2, ... mod n.
class OmegaOrder {
public:
    explicit OmegaOrder(const ComplexParams& params);

    int size() const { return static_cast<int>(seq_.size()); }
    /// Vertex at 0-based position i (position i holds omega_{i+1}).
    int at(int i) const { return seq_[static_cast<std::size_t>(i)]; }
    /// 0-based position of vertex v.
    int rank(int v) const { return rank_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& sequence() const { return seq_; }

    /// True iff u comes strictly before v.
    bool precedes(int u, int v) const { return rank(u) < rank(v); }

    /// Earliest member of a nonempty set.
    int first_of(VertexSet s) const;

private:
    std::vector<int> seq_;
    std::vector<int> rank_;
};

OmegaOrder omega_order(const ComplexParams& params);

/// A 3-element complement split as {omega} + {i1 < i2}, omega the earliest in Omega.
struct Decomposition {
    int omega = 0;
    int i1 = 0;
    int i2 = 0;
    int omega_rank = 0;  // 0-based position of omega in Omega
};

/// Throws ParameterError unless the complement has exactly three vertices.
Decomposition decompose(Facet f, const OmegaOrder& order);

/// Condition tags X1..X10 are stored as the integers 1..10.
struct FacetClass {
    int alpha = 0;
    std::vector<int> conditions;  // ascending; empty iff alpha == 0
};

std::string condition_name(int tag);

/// Evaluates the conditions X1..X10 for a single alpha in [1, p-1]; returns
/// the matched tags in ascending order.
std::vector<int> matched_conditions(const Decomposition& d, int alpha, const ComplexParams& params);

/// Class index in [0, p-1] and every matched tag for that index.
/// Throws ClassificationConflict if two distinct alpha values match.
FacetClass classify(Facet f, const ComplexParams& params, const OmegaOrder& order);

/// Sort key of the facet order: (alpha, Omega-rank of omega, i1, i2).
struct OrderKey {
    int alpha = 0;
    int omega_rank = 0;
    int i1 = 0;
    int i2 = 0;
    friend auto operator<=>(const OrderKey&, const OrderKey&) = default;
};

OrderKey order_key(Facet f, const ComplexParams& params, const OmegaOrder& order);

enum class Precedence { before, after };

/// Throws ParameterError when f == g.
Precedence compare(Facet f, Facet g, const ComplexParams& params, const OmegaOrder& order);

/// Facets ordered by class, then Omega-rank of the head, then (i1, i2).
/// Classification runs in parallel; output is deterministic.
std::vector<Facet> sort_facets(std::span<const Facet> facets, const ComplexParams& params, const OmegaOrder& order);

/// Classes for every facet, computed in parallel, same order as the input.
std::vector<FacetClass> classify_all(std::span<const Facet> facets, const ComplexParams& params,
                                     const OmegaOrder& order);

}  // namespace cutcx
