#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cutcx/cutcomplex.hpp"

namespace cutcx {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1U; }
    void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }
    void flip(std::size_t r, std::size_t c) { row(r)[c / 64] ^= std::uint64_t{1} << (c % 64); }

    bool is_zero() const;
    /// Rank by Gaussian elimination on a copy.
    std::size_t rank() const;
    /// Product this * rhs over GF(2). Throws ParameterError on shape mismatch.
    Gf2Matrix operator*(const Gf2Matrix& rhs) const;

private:
    std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Augmented simplicial chain complex of a pure complex given by facets.
struct ChainComplex {
    int n = 0;
    int dimension = -1;  // dimension of the complex
    int top_dim = -1;    // highest dimension actually built (<= dimension)
    /// faces[j+1] holds the j-faces in lexicographic order, j = -1..top_dim.
    std::vector<std::vector<VertexSet>> faces;
    /// boundaries[j] is d_j : C_j -> C_{j-1} (rows (j-1)-faces, cols j-faces), j = 0..top_dim.
    std::vector<Gf2Matrix> boundaries;

    std::size_t face_count(int j) const { return faces[static_cast<std::size_t>(j + 1)].size(); }
};

inline constexpr std::uint64_t kDefaultMaxFaces = 5'000'000;

struct ChainOptions {
    std::optional<int> max_dim;
    std::uint64_t max_faces = kDefaultMaxFaces;
};

/// Upper bound on the total number of faces: min(2^n, F * 2^(n-k)).
std::uint64_t projected_face_count(std::span<const Facet> facets, int n);

/// Downward closure of the facets plus mod-2 boundary matrices.
/// Throws VoidComplexError for an empty list and ResourceCapError when the
/// projected face count exceeds options.max_faces.
ChainComplex build_chain_complex(std::span<const Facet> facets, int n, const ChainOptions& options = {});

/// d_j d_{j+1} == 0 for every built pair.
bool boundary_squares_to_zero(const ChainComplex& cc);

/// Reduced Betti numbers over GF(2): b_j = f_j - rank d_j - rank d_{j+1}.
/// Returns b_0..b_top when the complex was built to full dimension, otherwise
/// b_0..b_{top_dim - 1}.
std::vector<std::int64_t> betti_numbers(const ChainComplex& cc);

/// Same quantity over the rationals using signed boundaries and exact
/// fraction-free elimination. Slow; meant for small exploratory inputs where
/// torsion could make GF(2) and Q disagree.
std::vector<std::int64_t> rational_betti_numbers(const ChainComplex& cc);

}  // namespace cutcx
