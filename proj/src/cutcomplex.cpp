#include "cutcx/cutcomplex.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <unordered_set>

#include "cutcx/errors.hpp"

namespace cutcx {

ComplexParams make_params(int n, int p, int k)
{
    if (n < 3 || n > kMaxVertices) {
        throw ParameterError("n must lie in [3, " + std::to_string(kMaxVertices) + "], got " + std::to_string(n));
    }
    if (p < 1) throw ParameterError("p must be >= 1, got " + std::to_string(p));
    if (k < 1 || k > n) throw ParameterError("k must lie in [1, n], got " + std::to_string(k));

    ComplexParams params;
    params.n = n;
    params.p = p;
    params.k = k;
    params.c = center_of(n);
    params.theorem_applies = k == 3 && p >= 2 && n >= 6 * p - 3;
    return params;
}

CenterBounds check_center_bounds(const ComplexParams& params)
{
    const int n = params.n, p = params.p, c = params.c;
    CenterBounds b;
    b.chain = p < 3 * p - 1 && 3 * p - 1 <= c && c <= n - 3 * p + 2 && n - 3 * p + 2 < n - p;
    b.half_p_below = 2 * c - p <= 2 * (n - 2 * p - 1);
    b.upper_margin = 2 * c + 3 * p - 2 <= 2 * (n - p);
    b.lower_margin = 2 * c - 3 * p >= 2 * p;
    return b;
}

namespace {

// Calls f for every r-subset of the low `width` bits, in increasing numeric order.
template <typename F>
void for_each_subset_of_size(int width, int r, F&& f)
{
    if (r == 0) {
        f(std::uint64_t{0});
        return;
    }
    if (r > width) return;
    const std::uint64_t limit = width >= 64 ? 0 : std::uint64_t{1} << width;
    std::uint64_t s = (r >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
    while (true) {
        f(s);
        // Gosper's hack
        const std::uint64_t low = s & (~s + 1);
        const std::uint64_t ripple = s + low;
        if (ripple == 0) break;
        s = (((ripple ^ s) >> 2) / low) | ripple;
        if (limit != 0 && s >= limit) break;
    }
}

}  // namespace

std::vector<Facet> enumerate_facets(const Graph& g, int k)
{
    const int n = g.size();
    if (k < 1 || k > n) throw ParameterError("k must lie in [1, n]");

    std::vector<std::vector<Facet>> per_head(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (int head = 0; head < n; ++head) {
        auto& bucket = per_head[static_cast<std::size_t>(head)];
        const int width = n - head - 1;
        for_each_subset_of_size(width, k - 1, [&](std::uint64_t tail) {
            const VertexSet w(VertexSet::singleton(head).bits() | (tail << (head + 1)));
            if (induced_disconnected(g, w)) bucket.emplace_back(w);
        });
    }

    std::vector<Facet> facets;
    for (auto& bucket : per_head) facets.insert(facets.end(), bucket.begin(), bucket.end());
    std::sort(facets.begin(), facets.end());
    return facets;
}

std::vector<std::int64_t> face_counts(std::span<const Facet> facets, int n)
{
    if (facets.empty()) throw VoidComplexError("face vector undefined");
    if (n > kMaxFaceScanVertices) {
        throw ResourceCapError("face scan over 2^" + std::to_string(n) + " subsets refused (limit n <= " +
                               std::to_string(kMaxFaceScanVertices) + ")");
    }
    const int k = facets.front().complement().size();
    for (const Facet& f : facets) {
        if (f.complement().size() != k) throw ParameterError("facets of mixed dimension");
        if (!f.complement().subset_of(VertexSet::full(n))) throw ParameterError("facet label outside vertex range");
    }

    std::vector<std::uint64_t> complements;
    complements.reserve(facets.size());
    for (const Facet& f : facets) complements.push_back(f.complement().bits());

    const int top = n - k;  // largest face cardinality
    std::vector<std::int64_t> by_size(static_cast<std::size_t>(top + 1), 0);
    const std::int64_t total = std::int64_t{1} << n;

#pragma omp parallel
    {
        std::vector<std::int64_t> local(by_size.size(), 0);
#pragma omp for schedule(static)
        for (std::int64_t t = 0; t < total; ++t) {
            const auto mask = static_cast<std::uint64_t>(t);
            const int card = std::popcount(mask);
            if (card > top) continue;
            for (std::uint64_t c : complements) {
                if ((c & mask) == 0) {
                    ++local[static_cast<std::size_t>(card)];
                    break;
                }
            }
        }
#pragma omp critical
        for (std::size_t i = 0; i < local.size(); ++i) by_size[i] += local[i];
    }
    return by_size;  // index j+1 holds f_j
}

std::int64_t reduced_euler(std::span<const Facet> facets, int n)
{
    if (facets.empty()) return -1;
    const auto f = face_counts(facets, n);
    std::int64_t chi = 0;
    for (std::size_t i = 1; i < f.size(); ++i) {
        const std::int64_t sign = (i - 1) % 2 == 0 ? 1 : -1;
        chi += sign * f[i];
    }
    return chi - 1;
}

Facet rotate(Facet f, int shift, int n)
{
    VertexSet out;
    f.complement().for_each([&](int v) { out.insert(((v + shift) % n + n) % n); });
    return Facet(out);
}

void write_facet_list(std::ostream& out, int n, int k, std::span<const Facet> facets)
{
    out << "n=" << n << " k=" << k << '\n';
    for (const Facet& f : facets) {
        bool first = true;
        f.complement().for_each([&](int v) {
            if (!first) out << ' ';
            out << v;
            first = false;
        });
        out << '\n';
    }
}

FacetList read_facet_list(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) throw ParameterError("facet list: missing header");

    FacetList list;
    {
        std::istringstream header(line);
        std::string n_tok, k_tok, extra;
        header >> n_tok >> k_tok;
        if (n_tok.rfind("n=", 0) != 0 || k_tok.rfind("k=", 0) != 0 || (header >> extra)) {
            throw ParameterError("facet list: header must read 'n=<n> k=<k>'");
        }
        try {
            std::size_t used = 0;
            list.n = std::stoi(n_tok.substr(2), &used);
            if (used != n_tok.size() - 2) throw ParameterError("");
            list.k = std::stoi(k_tok.substr(2), &used);
            if (used != k_tok.size() - 2) throw ParameterError("");
        } catch (const std::exception&) {
            throw ParameterError("facet list: non-integer n or k in header");
        }
    }
    if (list.n < 1 || list.n > kMaxVertices) throw ParameterError("facet list: n out of range");
    if (list.k < 1 || list.k > list.n) throw ParameterError("facet list: k out of range");

    std::unordered_set<VertexSet> seen;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        VertexSet complement;
        int count = 0, prev = -1;
        std::string tok;
        while (row >> tok) {
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(tok, &used);
                if (used != tok.size()) throw ParameterError("");
            } catch (const std::exception&) {
                throw ParameterError("facet list line " + std::to_string(line_no) + ": bad label '" + tok + "'");
            }
            if (v < 0 || v >= list.n) {
                throw ParameterError("facet list line " + std::to_string(line_no) + ": label out of range");
            }
            if (v <= prev) {
                throw ParameterError("facet list line " + std::to_string(line_no) + ": labels must be ascending");
            }
            prev = v;
            complement.insert(v);
            ++count;
        }
        if (count != list.k) {
            throw ParameterError("facet list line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(list.k) + " labels");
        }
        if (!seen.insert(complement).second) {
            throw ParameterError("facet list line " + std::to_string(line_no) + ": duplicate facet");
        }
        list.facets.emplace_back(complement);
    }
    return list;
}

}  // namespace cutcx
