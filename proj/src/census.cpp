#include "cutcx/census.hpp"

#include <algorithm>
#include <string>

#include "cutcx/errors.hpp"
#include "cutcx/graph.hpp"
#include "cutcx/ordering.hpp"

namespace cutcx {

namespace {

void require_theorem_range(const ComplexParams& params)
{
    if (!params.theorem_applies) {
        throw ParameterError("census needs k = 3, p >= 2 and n >= 6p-3 (got n=" + std::to_string(params.n) +
                             ", p=" + std::to_string(params.p) + ", k=" + std::to_string(params.k) + ")");
    }
}

int mod(int x, int n) { return ((x % n) + n) % n; }

}  // namespace

SpanningFormula spanning_count_formula(const ComplexParams& params)
{
    require_theorem_range(params);
    const std::int64_t n = params.n, p = params.p, c = params.c;

    SpanningFormula f;
    f.sigma1 = p * p + n * p - 2 * c * p - p - n + 2 * c;
    f.sigma2 = 3 * p * p - c * c + c * n + 2 * c * p - 3 * n * p + n - p - c;
    f.sigma3 = c * n - c * c - 4 * p * p - n + 2 * p + 1;
    const std::int64_t m = n - 2 * p;
    f.total = m * (m - 1) / 2 - (2 * p * p + p - 1);

    const std::int64_t quadratic = n * n - 4 * n * p - n + 2;
    if (f.sigma1 + f.sigma2 + f.sigma3 != f.total || quadratic % 2 != 0 || quadratic / 2 != f.total) {
        throw InvariantViolation("spanning count identities disagree for n=" + std::to_string(n) +
                                 ", p=" + std::to_string(p));
    }
    return f;
}

std::array<HeadRange, 3> head_ranges(const ComplexParams& params)
{
    const int n = params.n, p = params.p, c = params.c;
    return {HeadRange{p + 1, 2 * p - 1}, HeadRange{2 * p, c - p}, HeadRange{c - p + 1, n - p - 1}};
}

VertexSet excluded_window(const ComplexParams& params, int block, int u)
{
    const int n = params.n, p = params.p, c = params.c;
    VertexSet window;
    auto add_range = [&](int lo, int hi) {
        for (int v = lo; v <= hi; ++v) window.insert(mod(v, n));
    };
    switch (block) {
        case 1:
            // {u-2p (mod n), ..., n-1} and {0, ..., 2c-u-1}
            add_range(mod(u - 2 * p, n), n - 1);
            add_range(0, 2 * c - u - 1);
            break;
        case 2:
            add_range(u - 2 * p, u - 2);
            add_range(u, 2 * c - u - 1);
            window.insert(n - 1);
            break;
        case 3: {
            const int mu = std::min(2 * c - u, u - 2 * p);
            add_range(mu, u + p);
            for (int t = p + 1; t <= 2 * p - 1; ++t) window.insert(mod(u + t, n));
            const int nu = u < n - 2 * p - 1 ? n - 1 : mod(u + 2 * p, n);
            window.insert(nu);
            break;
        }
        default: throw ParameterError("block must be 1, 2 or 3");
    }
    return window;
}

std::vector<Facet> Census::all() const
{
    std::vector<Facet> out;
    for (const auto& block : sigma) out.insert(out.end(), block.begin(), block.end());
    std::sort(out.begin(), out.end());
    return out;
}

Census sigma_sets(const ComplexParams& params)
{
    require_theorem_range(params);
    const int n = params.n;
    const Graph g = cycle_power(n, params.p);
    const OmegaOrder order(params);
    const auto ranges = head_ranges(params);

    Census census;
    VertexSet seen_heads;
    for (int m = 0; m < 3; ++m) {
        auto& block = census.sigma[static_cast<std::size_t>(m)];
        for (int u = ranges[static_cast<std::size_t>(m)].lo; u <= ranges[static_cast<std::size_t>(m)].hi; ++u) {
            if (seen_heads.contains(u)) throw InvariantViolation("head ranges overlap at " + std::to_string(u));
            seen_heads.insert(u);
            const VertexSet allowed = VertexSet::full(n) - excluded_window(params, m + 1, u);
            allowed.for_each([&](int i1) {
                const VertexSet comp{u, i1, n - 1};
                const std::string label =
                    "{" + std::to_string(u) + "," + std::to_string(i1) + "," + std::to_string(n - 1) + "}";
                if (comp.size() != 3) throw InvariantViolation("degenerate census triple " + label);
                if (!induced_disconnected(g, comp)) throw InvariantViolation("census triple " + label + " is not a facet");
                const Decomposition d = decompose(Facet(comp), order);
                if (d.omega != u || d.i2 != n - 1 || d.i1 != i1) {
                    throw InvariantViolation("census triple " + label + " has Omega-head " + std::to_string(d.omega));
                }
                block.emplace_back(comp);
            });
        }
        std::sort(block.begin(), block.end());
        census.counts[static_cast<std::size_t>(m)] = static_cast<std::int64_t>(block.size());
        census.total += census.counts[static_cast<std::size_t>(m)];
    }

    const SpanningFormula formula = spanning_count_formula(params);
    census.formula_total = formula.total;
    if (census.counts[0] != formula.sigma1 || census.counts[1] != formula.sigma2 ||
        census.counts[2] != formula.sigma3 || census.total != formula.total) {
        throw InvariantViolation("census block sizes disagree with the closed forms");
    }
    return census;
}

}  // namespace cutcx
