#include "cutcx/ordering.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "cutcx/errors.hpp"

namespace cutcx {

OmegaOrder::OmegaOrder(const ComplexParams& params)
{
    const int n = params.n;
    const int c = params.c;
    seq_.resize(static_cast<std::size_t>(n));
    rank_.assign(static_cast<std::size_t>(n), -1);
    for (int i = 1; i <= n; ++i) {
        const int offset = (i % 2 == 1) ? i / 2 : -(i / 2);
        const int v = ((c + offset) % n + n) % n;
        seq_[static_cast<std::size_t>(i - 1)] = v;
        rank_[static_cast<std::size_t>(v)] = i - 1;
    }
}

int OmegaOrder::first_of(VertexSet s) const
{
    int best = -1;
    s.for_each([&](int v) {
        if (best < 0 || rank(v) < rank(best)) best = v;
    });
    return best;
}

OmegaOrder omega_order(const ComplexParams& params) { return OmegaOrder(params); }

Decomposition decompose(Facet f, const OmegaOrder& order)
{
    const VertexSet comp = f.complement();
    if (comp.size() != 3) throw ParameterError("decomposition needs a 3-element complement");
    Decomposition d;
    d.omega = order.first_of(comp);
    d.omega_rank = order.rank(d.omega);
    VertexSet rest = comp;
    rest.erase(d.omega);
    d.i1 = rest.min();
    d.i2 = rest.max();
    return d;
}

std::string condition_name(int tag) { return "X" + std::to_string(tag); }

std::vector<int> matched_conditions(const Decomposition& d, int alpha, const ComplexParams& params)
{
    const int n = params.n, p = params.p, c = params.c;
    const int w = d.omega, i1 = d.i1, i2 = d.i2, a = alpha;

    const bool below = i1 < i2 && i2 < w;    // i1 < i2 < omega
    const bool between = i1 < w && w < i2;   // i1 < omega < i2
    const bool above = w < i1 && i1 < i2;    // omega < i1 < i2

    std::vector<int> tags;
    auto hit = [&](int tag, bool cond) {
        if (cond) tags.push_back(tag);
    };

    hit(1, below && 2 * w < 2 * c + p && i1 == 2 * c - w - p + a - 1);
    hit(2, below && 2 * w >= 2 * c + p && i1 == w - 2 * p + a - 1);
    hit(3, between && 2 * w < 2 * c - p && i2 == i1 + 2 * p - a + 1);
    hit(4, between && 2 * w >= 2 * c - p && w - p + a <= i1 && i1 <= 2 * c - w - p - 1 &&
               i2 == i1 + 2 * p - a + 1);
    hit(5, between && 2 * w <= 2 * c - (a + 1) && i2 == 2 * c - w + p - a && i1 >= i2 - 2 * p + a);
    hit(6, between && 2 * w >= 2 * c + a && i1 == 2 * c - w - p + a - 1 && i2 <= i1 + 2 * p - a);
    hit(7, between && 2 * w < 2 * c + p && i1 == i2 - 2 * p + a - 1 && 2 * c - w + p <= i2 &&
               i2 <= w + p - a);
    hit(8, between && 2 * w >= 2 * c + p && i1 == i2 - 2 * p + a - 1);
    hit(9, above && w <= n - 2 * p - 2 && i1 >= w + p + 1 && i2 == w + 2 * p - a + 1);
    hit(10, above && w > n - 2 * p - 2 && i1 >= w + p + 1 && i2 == n - a - 1);

    // Consequences stated alongside X5 and X6; checked rather than assumed.
    for (int tag : tags) {
        if (tag == 5 && !(i1 >= 2 * c - w - p)) throw InvariantViolation("X5 matched but i1 < 2c - omega - p");
        if (tag == 6 && !(i2 <= 2 * c - w + p - 1)) throw InvariantViolation("X6 matched but i2 > 2c - omega + p - 1");
    }
    return tags;
}

FacetClass classify(Facet f, const ComplexParams& params, const OmegaOrder& order)
{
    const Decomposition d = decompose(f, order);
    FacetClass cls;
    for (int alpha = 1; alpha <= params.p - 1; ++alpha) {
        auto tags = matched_conditions(d, alpha, params);
        if (tags.empty()) continue;
        if (cls.alpha != 0) {
            throw ClassificationConflict("facet {" + std::to_string(d.omega) + "," + std::to_string(d.i1) + "," +
                                         std::to_string(d.i2) + "} matches alpha=" + std::to_string(cls.alpha) +
                                         " and alpha=" + std::to_string(alpha));
        }
        cls.alpha = alpha;
        cls.conditions = std::move(tags);
    }
    return cls;
}

OrderKey order_key(Facet f, const ComplexParams& params, const OmegaOrder& order)
{
    const Decomposition d = decompose(f, order);
    return OrderKey{classify(f, params, order).alpha, d.omega_rank, d.i1, d.i2};
}

Precedence compare(Facet f, Facet g, const ComplexParams& params, const OmegaOrder& order)
{
    if (f == g) throw ParameterError("compare needs distinct facets");
    return order_key(f, params, order) < order_key(g, params, order) ? Precedence::before : Precedence::after;
}

std::vector<FacetClass> classify_all(std::span<const Facet> facets, const ComplexParams& params,
                                     const OmegaOrder& order)
{
    std::vector<FacetClass> classes(facets.size());
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(facets.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            classes[static_cast<std::size_t>(i)] = classify(facets[static_cast<std::size_t>(i)], params, order);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return classes;
}

std::vector<Facet> sort_facets(std::span<const Facet> facets, const ComplexParams& params, const OmegaOrder& order)
{
    const auto classes = classify_all(facets, params, order);
    std::vector<std::pair<OrderKey, Facet>> keyed;
    keyed.reserve(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const Decomposition d = decompose(facets[i], order);
        keyed.emplace_back(OrderKey{classes[i].alpha, d.omega_rank, d.i1, d.i2}, facets[i]);
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<Facet> sorted;
    sorted.reserve(keyed.size());
    for (const auto& [key, f] : keyed) sorted.push_back(f);
    return sorted;
}

}  // namespace cutcx
