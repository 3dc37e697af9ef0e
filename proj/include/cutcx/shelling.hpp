#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cutcx/cutcomplex.hpp"

namespace cutcx {

struct ShellingViolation {
    std::size_t r = 0;  // 0-based, r < s
    std::size_t s = 0;
    std::string explanation;
};

/// Result of checking an ordered facet list against the shelling definition.
/// Indices are 0-based positions in `order`.
struct ShellingReport {
    int n = 0;
    std::vector<Facet> order;
    bool ok = false;
    /// Lexicographically least violating (r, s), if any.
    std::optional<ShellingViolation> violation;
    /// drop_sets[s] = { u in F_s : F_t meets F_s in F_s - {u} for some t < s }.
    std::vector<VertexSet> drop_sets;
    /// Positions s > 0 with drop_sets[s] == F_s.
    std::vector<std::size_t> spanning;
};

/// D_s for every position, via lookup of the k(n-k) neighbouring complements.
/// Parallel over s.
std::vector<VertexSet> drop_sets(std::span<const Facet> ordered, int n);

/// Checks that for all r < s, (F_s - F_r) meets D_s. Works over complements:
/// F_s - F_r equals C_r - C_s.
/// Throws ParameterError on duplicate facets, mixed dimensions or labels >= n.
ShellingReport check_shelling(std::span<const Facet> ordered, int n);

/// Facets at the spanning positions. Throws ParameterError if !report.ok.
std::vector<Facet> spanning_facets(const ShellingReport& report);

enum class SearchOutcome { found, not_shellable, budget_exhausted };

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::budget_exhausted;
    std::vector<Facet> order;  // set iff outcome == found
    std::uint64_t nodes = 0;   // facet placements tried
};

std::string to_string(SearchOutcome outcome);

/// Backtracking search for a shelling order. Candidates are tried by
/// descending number of ridges shared with the prefix, then by position in
/// `seed` (if given), then canonically. Prefix sets already shown to be dead
/// ends are memoized, so running out of candidates certifies non-shellability.
SearchResult search_shelling(std::span<const Facet> facets, int n, std::uint64_t node_budget,
                             std::span<const Facet> seed = {});

}  // namespace cutcx
