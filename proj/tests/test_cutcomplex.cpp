#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include "cutcx/cutcomplex.hpp"
#include "cutcx/errors.hpp"
#include "cutcx/parallel.hpp"
#include "cutcx/reference.hpp"

using namespace cutcx;

namespace {

// Independent oracle: a 3-set induces a connected graph iff it spans >= 2
// edges, and u ~ v in C_n^p iff their cyclic distance is at most p.
std::size_t brute_force_facet_count(int n, int p)
{
    auto adjacent = [&](int u, int v) {
        const int d = ((u - v) % n + n) % n;
        return std::min(d, n - d) <= p;
    };
    std::size_t count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const int edges = adjacent(a, b) + adjacent(a, c) + adjacent(b, c);
                if (edges <= 1) ++count;
            }
    return count;
}

}  // namespace

TEST_CASE("make_params: center and theorem range")
{
    CHECK(make_params(9, 2).c == 5);
    CHECK(make_params(10, 2).c == 5);
    CHECK(make_params(15, 3).c == 8);
    CHECK(make_params(9, 2).theorem_applies);
    CHECK_FALSE(make_params(8, 2).theorem_applies);
    CHECK_FALSE(make_params(9, 1).theorem_applies);
    CHECK_FALSE(make_params(9, 2, 4).theorem_applies);
    CHECK(make_params(15, 3).theorem_applies);
    CHECK_FALSE(make_params(14, 3).theorem_applies);

    CHECK_THROWS_AS(make_params(2, 1), ParameterError);
    CHECK_THROWS_AS(make_params(9, 0), ParameterError);
    CHECK_THROWS_AS(make_params(9, 2, 0), ParameterError);
    CHECK_THROWS_AS(make_params(9, 2, 10), ParameterError);
    CHECK_THROWS_AS(make_params(65, 2), ParameterError);
}

TEST_CASE("center bounds hold throughout the theorem range")
{
    for (int p = 2; p <= 10; ++p) {
        for (int n = 6 * p - 3; n <= std::min(kMaxVertices, 6 * p + 20); ++n) {
            const ComplexParams params = make_params(n, p);
            CHECK(2 * params.c >= n);
            CHECK(2 * params.c <= n + 1);
            CHECK(check_center_bounds(params).all());
        }
    }
    // just below the range the chain p < 3p-1 <= c fails
    CHECK_FALSE(check_center_bounds(make_params(8, 2)).chain);
}

TEST_CASE("enumerate_facets: void below n = 2p+3")
{
    CHECK(enumerate_facets(cycle_power(6, 2), 3).empty());
    for (int p = 2; p <= 4; ++p)
        for (int n = 3; n <= 2 * p + 2; ++n) CHECK(enumerate_facets(cycle_power(n, p), 3).empty());
}

TEST_CASE("enumerate_facets: counts match brute force")
{
    const auto facets = enumerate_facets(cycle_power(9, 2), 3);
    CHECK(facets.size() == 48);
    CHECK(std::find(facets.begin(), facets.end(), Facet(VertexSet{3, 7, 8})) != facets.end());
    CHECK(std::find(facets.begin(), facets.end(), Facet(VertexSet{0, 1, 5})) != facets.end());
    CHECK(std::find(facets.begin(), facets.end(), Facet(VertexSet{0, 1, 2})) == facets.end());

    // frozen from the cyclic-distance oracle above
    CHECK(enumerate_facets(cycle_power(10, 2), 3).size() == 80);
    CHECK(enumerate_facets(cycle_power(11, 2), 3).size() == 121);
    CHECK(enumerate_facets(cycle_power(12, 2), 3).size() == 172);
    CHECK(enumerate_facets(cycle_power(15, 3), 3).size() == 320);
    CHECK(enumerate_facets(cycle_power(16, 3), 3).size() == 416);

    for (int p = 1; p <= 5; ++p)
        for (int n = 3; n <= 30; ++n)
            CHECK(enumerate_facets(cycle_power(n, p), 3).size() == brute_force_facet_count(n, p));
}

TEST_CASE("enumerate_facets: sorted, canonical, and equal to the serial reference")
{
    for (int k = 1; k <= 5; ++k) {
        for (int n = std::max(k, 3); n <= 14; ++n) {
            for (int p = 1; p <= 3; ++p) {
                const Graph g = cycle_power(n, p);
                const auto fast = enumerate_facets(g, k);
                CHECK(std::is_sorted(fast.begin(), fast.end()));
                CHECK(fast == reference::enumerate_facets(g, k));
                for (Facet f : fast) CHECK(f.complement().size() == k);
            }
        }
    }
}

TEST_CASE("enumerate_facets: independent of worker count")
{
    const int saved = worker_count();
    const Graph g = cycle_power(20, 3);
    set_worker_count(1);
    const auto one = enumerate_facets(g, 3);
    set_worker_count(4);
    const auto four = enumerate_facets(g, 3);
    set_worker_count(saved);
    CHECK(one == four);
}

TEST_CASE("enumerate_facets: rotation permutes the facet set")
{
    for (int p = 1; p <= 4; ++p) {
        for (int n = 2 * p + 3; n <= 26; ++n) {
            const auto facets = enumerate_facets(cycle_power(n, p), 3);
            std::vector<Facet> rotated;
            for (Facet f : facets) rotated.push_back(rotate(f, 1, n));
            std::sort(rotated.begin(), rotated.end());
            CHECK(rotated == facets);
        }
    }
}

TEST_CASE("face_counts: simplices and Delta_3(C_9^2)")
{
    const Facet full_simplex(VertexSet{});  // k = 0: the facet is all of {0,1,2}
    CHECK(face_counts(std::vector<Facet>{full_simplex}, 3) == std::vector<std::int64_t>{1, 3, 3, 1});

    const std::vector<Facet> hollow{Facet(VertexSet{2}), Facet(VertexSet{1}), Facet(VertexSet{0})};
    CHECK(face_counts(hollow, 3) == std::vector<std::int64_t>{1, 3, 3});

    const auto facets = enumerate_facets(cycle_power(9, 2), 3);
    // frozen from an explicit downward closure
    CHECK(face_counts(facets, 9) == std::vector<std::int64_t>{1, 9, 36, 84, 126, 117, 48});

    CHECK_THROWS_AS(face_counts(std::vector<Facet>{}, 5), VoidComplexError);
    CHECK_THROWS_AS(face_counts(std::vector<Facet>{Facet(VertexSet{0})}, kMaxFaceScanVertices + 1),
                    ResourceCapError);
}

TEST_CASE("face_counts: equals explicit closure and is pure")
{
    for (int p = 1; p <= 3; ++p) {
        for (int n = 2 * p + 3; n <= 13; ++n) {
            const auto facets = enumerate_facets(cycle_power(n, p), 3);
            const auto f = face_counts(facets, n);
            CHECK(f == reference::face_counts(facets, n));
            CHECK(f.back() == static_cast<std::int64_t>(facets.size()));
            CHECK(f.size() == static_cast<std::size_t>(n - 3 + 1));
        }
    }
}

TEST_CASE("reduced_euler")
{
    CHECK(reduced_euler(std::vector<Facet>{Facet(VertexSet{})}, 3) == 0);
    // circle: 3 - 3 - 1
    const std::vector<Facet> hollow{Facet(VertexSet{2}), Facet(VertexSet{1}), Facet(VertexSet{0})};
    CHECK(reduced_euler(hollow, 3) == -1);
    CHECK(reduced_euler(enumerate_facets(cycle_power(9, 2), 3), 9) == -1);
    CHECK(reduced_euler(std::vector<Facet>{}, 9) == -1);
}

TEST_CASE("facet list format: exact layout")
{
    const std::vector<Facet> facets{Facet(VertexSet{0, 1, 5}), Facet(VertexSet{3, 7, 8})};
    std::ostringstream out;
    write_facet_list(out, 9, 3, facets);
    CHECK(out.str() == "n=9 k=3\n0 1 5\n3 7 8\n");
}

TEST_CASE("facet list format: round trip on random lists")
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 40)(rng);
        const int k = std::uniform_int_distribution<int>(1, std::min(n, 6))(rng);
        std::unordered_set<VertexSet> seen;
        std::vector<Facet> facets;
        const int want = std::uniform_int_distribution<int>(0, 30)(rng);
        std::vector<int> labels(static_cast<std::size_t>(n));
        std::iota(labels.begin(), labels.end(), 0);
        for (int i = 0; i < want; ++i) {
            std::shuffle(labels.begin(), labels.end(), rng);
            VertexSet s;
            for (int j = 0; j < k; ++j) s.insert(labels[static_cast<std::size_t>(j)]);
            if (seen.insert(s).second) facets.emplace_back(s);
        }
        std::stringstream io;
        write_facet_list(io, n, k, facets);
        const FacetList back = read_facet_list(io);
        CHECK(back.n == n);
        CHECK(back.k == k);
        CHECK(back.facets == facets);
    }
}

TEST_CASE("facet list format: malformed input")
{
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_facet_list(in);
    };
    CHECK(parse("n=9 k=3\n\n0 1 5\n").facets.size() == 1);
    CHECK_THROWS_AS(parse(""), ParameterError);
    CHECK_THROWS_AS(parse("n=9\n0 1 5\n"), ParameterError);
    CHECK_THROWS_AS(parse("9 3\n0 1 5\n"), ParameterError);
    CHECK_THROWS_AS(parse("n=9x k=3\n"), ParameterError);
    CHECK_THROWS_AS(parse("n=9 k=3\n0 1\n"), ParameterError);
    CHECK_THROWS_AS(parse("n=9 k=3\n0 1 2 3\n"), ParameterError);
    CHECK_THROWS_AS(parse("n=9 k=3\n1 0 5\n"), ParameterError);
    CHECK_THROWS_AS(parse("n=9 k=3\n0 1 9\n"), ParameterError);
    CHECK_THROWS_AS(parse("n=9 k=3\n0 1 a\n"), ParameterError);
    CHECK_THROWS_AS(parse("n=9 k=3\n0 1 5\n0 1 5\n"), ParameterError);
}
