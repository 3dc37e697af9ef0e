#include "cutcx/homology.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "cutcx/errors.hpp"

namespace cutcx {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0)
{
}

bool Gf2Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Gf2Matrix::rank() const
{
    Gf2Matrix m = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        const std::size_t word = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows_ && (m.row(pivot)[word] & bit) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank) std::swap_ranges(m.row(pivot), m.row(pivot) + words_, m.row(rank));
        const std::uint64_t* src = m.row(rank);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            std::uint64_t* dst = m.row(r);
            if ((dst[word] & bit) == 0) continue;
            for (std::size_t w = word; w < words_; ++w) dst[w] ^= src[w];
        }
        ++rank;
    }
    return rank;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const
{
    if (cols_ != rhs.rows_) throw ParameterError("GF(2) product shape mismatch");
    Gf2Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t* dst = out.row(r);
        for (std::size_t k = 0; k < cols_; ++k) {
            if (!get(r, k)) continue;
            const std::uint64_t* src = rhs.row(k);
            for (std::size_t w = 0; w < out.words_; ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

std::uint64_t projected_face_count(std::span<const Facet> facets, int n)
{
    if (facets.empty()) return 0;
    const int k = facets.front().complement().size();
    const int facet_size = n - k;
    const long double by_facets = static_cast<long double>(facets.size()) * std::pow(2.0L, facet_size);
    const long double by_vertices = std::pow(2.0L, n);
    const long double bound = std::min(by_facets, by_vertices);
    if (bound >= 1.8e19L) return ~std::uint64_t{0};
    return static_cast<std::uint64_t>(bound);
}

namespace {

std::vector<VertexSet> shrink(const std::vector<VertexSet>& upper)
{
    std::vector<std::vector<std::uint64_t>> partial;
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(upper.size()); ++i) {
            const VertexSet face = upper[static_cast<std::size_t>(i)];
            face.for_each([&](int v) {
                VertexSet sub = face;
                sub.erase(v);
                local.push_back(sub.bits());
            });
        }
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
#pragma omp critical
        partial.push_back(std::move(local));
    }
    std::vector<std::uint64_t> merged;
    for (auto& part : partial) merged.insert(merged.end(), part.begin(), part.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    std::vector<VertexSet> out;
    out.reserve(merged.size());
    for (std::uint64_t bits : merged) out.emplace_back(bits);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

ChainComplex build_chain_complex(std::span<const Facet> facets, int n, const ChainOptions& options)
{
    if (facets.empty()) throw VoidComplexError("no chain complex");
    const std::uint64_t projected = projected_face_count(facets, n);
    if (projected > options.max_faces) {
        throw ResourceCapError("projected face count " + std::to_string(projected) + " exceeds cap " +
                               std::to_string(options.max_faces) + "; use reduced_euler instead");
    }

    ChainComplex cc;
    cc.n = n;
    const int k = facets.front().complement().size();
    cc.dimension = n - k - 1;
    cc.top_dim = options.max_dim ? std::clamp(*options.max_dim, -1, cc.dimension) : cc.dimension;
    cc.faces.resize(static_cast<std::size_t>(cc.dimension + 2));

    std::vector<VertexSet> level;
    level.reserve(facets.size());
    for (const Facet& f : facets) {
        if (f.complement().size() != k) throw ParameterError("facets of mixed dimension");
        level.push_back(f.vertices(n));
    }
    std::sort(level.begin(), level.end(), lex_less);
    level.erase(std::unique(level.begin(), level.end()), level.end());
    cc.faces[static_cast<std::size_t>(cc.dimension + 1)] = level;
    for (int j = cc.dimension - 1; j >= -1; --j) {
        level = shrink(level);
        cc.faces[static_cast<std::size_t>(j + 1)] = level;
    }
    cc.faces.resize(static_cast<std::size_t>(cc.top_dim + 2));

    cc.boundaries.resize(static_cast<std::size_t>(std::max(cc.top_dim + 1, 0)));
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j <= cc.top_dim; ++j) {
        const auto& lower = cc.faces[static_cast<std::size_t>(j)];
        const auto& upper = cc.faces[static_cast<std::size_t>(j + 1)];
        std::unordered_map<VertexSet, std::size_t> row_of;
        row_of.reserve(lower.size() * 2);
        for (std::size_t r = 0; r < lower.size(); ++r) row_of.emplace(lower[r], r);
        Gf2Matrix d(lower.size(), upper.size());
        for (std::size_t col = 0; col < upper.size(); ++col) {
            upper[col].for_each([&](int v) {
                VertexSet sub = upper[col];
                sub.erase(v);
                d.set(row_of.at(sub), col);
            });
        }
        cc.boundaries[static_cast<std::size_t>(j)] = std::move(d);
    }
    return cc;
}

bool boundary_squares_to_zero(const ChainComplex& cc)
{
    for (std::size_t j = 1; j < cc.boundaries.size(); ++j) {
        if (!(cc.boundaries[j - 1] * cc.boundaries[j]).is_zero()) return false;
    }
    return true;
}

namespace {

template <typename RankFn>
std::vector<std::int64_t> betti_from_ranks(const ChainComplex& cc, RankFn&& rank_of)
{
    const int built = cc.top_dim;
    std::vector<std::int64_t> ranks(static_cast<std::size_t>(built + 2), 0);  // ranks[j] = rank d_j
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j <= built; ++j) ranks[static_cast<std::size_t>(j)] = rank_of(j);

    const bool complete = built == cc.dimension;
    const int last = complete ? built : built - 1;
    std::vector<std::int64_t> betti;
    for (int j = 0; j <= last; ++j) {
        const auto f = static_cast<std::int64_t>(cc.face_count(j));
        betti.push_back(f - ranks[static_cast<std::size_t>(j)] - ranks[static_cast<std::size_t>(j + 1)]);
    }
    return betti;
}

std::int64_t rational_rank(const ChainComplex& cc, int j)
{
    using boost::multiprecision::cpp_rational;
    const auto& lower = cc.faces[static_cast<std::size_t>(j)];
    const auto& upper = cc.faces[static_cast<std::size_t>(j + 1)];
    std::unordered_map<VertexSet, std::size_t> row_of;
    for (std::size_t r = 0; r < lower.size(); ++r) row_of.emplace(lower[r], r);

    std::vector<std::vector<cpp_rational>> m(lower.size(), std::vector<cpp_rational>(upper.size()));
    for (std::size_t col = 0; col < upper.size(); ++col) {
        int position = 0;
        upper[col].for_each([&](int v) {
            VertexSet sub = upper[col];
            sub.erase(v);
            m[row_of.at(sub)][col] = (position % 2 == 0) ? 1 : -1;
            ++position;
        });
    }

    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = upper.size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const cpp_rational factor = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return static_cast<std::int64_t>(rank);
}

}  // namespace

std::vector<std::int64_t> betti_numbers(const ChainComplex& cc)
{
    return betti_from_ranks(cc, [&](int j) {
        return static_cast<std::int64_t>(cc.boundaries[static_cast<std::size_t>(j)].rank());
    });
}

std::vector<std::int64_t> rational_betti_numbers(const ChainComplex& cc)
{
    return betti_from_ranks(cc, [&](int j) { return rational_rank(cc, j); });
}

}  // namespace cutcx
