#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cutcx/cutcomplex.hpp"

namespace cutcx {

/// Closed-form spanning-facet counts.
struct SpanningFormula {
    std::int64_t sigma1 = 0;  // p^2 + np - 2cp - p - n + 2c
    std::int64_t sigma2 = 0;  // 3p^2 - c^2 + cn + 2cp - 3np + n - p - c
    std::int64_t sigma3 = 0;  // cn - c^2 - 4p^2 - n + 2p + 1
    std::int64_t total = 0;   // C(n-2p, 2) - (2p^2 + p - 1)
};

/// Evaluates the three per-block forms and the total, and checks that the
/// blocks sum to the total and to (n^2 - 4np - n + 2)/2.
/// Throws ParameterError outside the theorem range, InvariantViolation if the
/// identities disagree.
SpanningFormula spanning_count_formula(const ComplexParams& params);

/// The head ranges U_1, U_2, U_3 (inclusive bounds, possibly empty).
struct HeadRange {
    int lo = 0;
    int hi = -1;
    bool contains(int u) const { return lo <= u && u <= hi; }
    int size() const { return hi >= lo ? hi - lo + 1 : 0; }
};
std::array<HeadRange, 3> head_ranges(const ComplexParams& params);

/// Excluded window V^u for a head u in one of the ranges (block is 1, 2 or 3).
VertexSet excluded_window(const ComplexParams& params, int block, int u);

/// Spanning facets predicted in closed form, as complements {omega, i1, n-1}.
struct Census {
    std::array<std::vector<Facet>, 3> sigma;  // Sigma_1, Sigma_2, Sigma_3, canonical order each
    std::array<std::int64_t, 3> counts{};
    std::int64_t total = 0;
    std::int64_t formula_total = 0;

    /// Union of the three blocks in canonical order.
    std::vector<Facet> all() const;
};

/// Builds Sigma_1..3 from U_m and V^u, then checks that every emitted triple
/// is a facet of Delta_3(C_n^p) whose Omega-head is omega with i1 < n-1, that
/// the blocks are disjoint, and that the total matches the formula.
/// Throws ParameterError outside the theorem range, InvariantViolation on any
/// failed check.
Census sigma_sets(const ComplexParams& params);

}  // namespace cutcx
