#include "cutcx/reference.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cutcx/errors.hpp"

namespace cutcx::reference {

namespace {

class DisjointSet {
public:
    explicit DisjointSet(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x)
    {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }

    void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace

bool induced_disconnected(const Graph& g, VertexSet w)
{
    if (!w.subset_of(g.vertices())) throw ParameterError("vertex label outside graph");
    const auto members = w.to_vector();
    if (members.size() <= 1) return false;
    DisjointSet ds(g.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (g.adjacent(members[i], members[j])) ds.unite(members[i], members[j]);
        }
    }
    const int root = ds.find(members.front());
    return std::any_of(members.begin(), members.end(), [&](int v) { return ds.find(v) != root; });
}

std::vector<Facet> enumerate_facets(const Graph& g, int k)
{
    const int n = g.size();
    if (k < 1 || k > n) throw ParameterError("k must lie in [1, n]");
    // selector[i] == 1 marks a chosen vertex; prev_permutation walks the
    // k-subsets in lexicographic order of their member lists.
    std::vector<int> selector(static_cast<std::size_t>(n), 0);
    std::fill(selector.begin(), selector.begin() + k, 1);
    std::vector<Facet> out;
    do {
        VertexSet w;
        for (int i = 0; i < n; ++i) {
            if (selector[static_cast<std::size_t>(i)]) w.insert(i);
        }
        if (reference::induced_disconnected(g, w)) out.emplace_back(w);
    } while (std::prev_permutation(selector.begin(), selector.end()));
    return out;
}

std::vector<std::int64_t> face_counts(std::span<const Facet> facets, int n)
{
    if (facets.empty()) throw VoidComplexError("face vector undefined");
    std::set<std::uint64_t> faces;
    std::vector<std::uint64_t> stack;
    for (const Facet& f : facets) stack.push_back(f.vertices(n).bits());
    while (!stack.empty()) {
        const std::uint64_t face = stack.back();
        stack.pop_back();
        if (!faces.insert(face).second) continue;
        for (std::uint64_t rest = face; rest != 0; rest &= rest - 1) {
            stack.push_back(face & ~(rest & (~rest + 1)));
        }
    }
    const int top = facets.front().vertices(n).size();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(top + 1), 0);
    for (std::uint64_t face : faces) ++counts[static_cast<std::size_t>(std::popcount(face))];
    return counts;
}

std::vector<VertexSet> drop_sets(std::span<const Facet> ordered, int n)
{
    std::vector<VertexSet> drops(ordered.size());
    for (std::size_t s = 0; s < ordered.size(); ++s) {
        const VertexSet fs = ordered[s].vertices(n);
        for (std::size_t t = 0; t < s; ++t) {
            const VertexSet missing = fs - (ordered[t].vertices(n) & fs);
            if (missing.size() == 1) drops[s] |= missing;
        }
    }
    return drops;
}

bool is_shelling_order(std::span<const Facet> ordered, int n)
{
    for (std::size_t s = 1; s < ordered.size(); ++s) {
        const VertexSet fs = ordered[s].vertices(n);
        std::vector<VertexSet> ridges;
        for (std::size_t t = 0; t < s; ++t) {
            const VertexSet meet = ordered[t].vertices(n) & fs;
            if (meet.size() == fs.size() - 1) ridges.push_back(meet);
        }
        for (std::size_t r = 0; r < s; ++r) {
            const VertexSet meet = ordered[r].vertices(n) & fs;
            const bool covered =
                std::any_of(ridges.begin(), ridges.end(), [&](VertexSet ridge) { return meet.subset_of(ridge); });
            if (!covered) return false;
        }
    }
    return true;
}

}  // namespace cutcx::reference
