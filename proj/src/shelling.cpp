#include "cutcx/shelling.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cutcx/errors.hpp"

namespace cutcx {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void validate(std::span<const Facet> facets, int n)
{
    if (n < 1 || n > kMaxVertices) throw ParameterError("vertex count out of range");
    if (facets.empty()) return;
    const int k = facets.front().complement().size();
    std::unordered_set<VertexSet> seen;
    for (const Facet& f : facets) {
        if (!f.complement().subset_of(VertexSet::full(n))) throw ParameterError("facet label outside vertex range");
        if (f.complement().size() != k) throw ParameterError("facets of mixed dimension");
        if (!seen.insert(f.complement()).second) throw ParameterError("duplicate facet in order");
    }
}

std::unordered_map<VertexSet, std::size_t> index_by_complement(std::span<const Facet> facets)
{
    std::unordered_map<VertexSet, std::size_t> index;
    index.reserve(facets.size() * 2);
    for (std::size_t i = 0; i < facets.size(); ++i) index.emplace(facets[i].complement(), i);
    return index;
}

std::string format_set(VertexSet s)
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    s.for_each([&](int v) {
        out << (first ? "" : ",") << v;
        first = false;
    });
    out << '}';
    return out.str();
}

}  // namespace

std::vector<VertexSet> drop_sets(std::span<const Facet> ordered, int n)
{
    validate(ordered, n);
    const auto index = index_by_complement(ordered);
    std::vector<VertexSet> drops(ordered.size());
    const auto count = static_cast<std::int64_t>(ordered.size());

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t si = 0; si < count; ++si) {
        const auto s = static_cast<std::size_t>(si);
        const VertexSet comp = ordered[s].complement();
        VertexSet drop;
        comp.complement(n).for_each([&](int u) {
            bool found = false;
            comp.for_each([&](int v) {
                if (found) return;
                VertexSet neighbour = comp;
                neighbour.erase(v);
                neighbour.insert(u);
                const auto it = index.find(neighbour);
                if (it != index.end() && it->second < s) found = true;
            });
            if (found) drop.insert(u);
        });
        drops[s] = drop;
    }
    return drops;
}

ShellingReport check_shelling(std::span<const Facet> ordered, int n)
{
    ShellingReport report;
    report.n = n;
    report.order.assign(ordered.begin(), ordered.end());
    report.drop_sets = drop_sets(ordered, n);

    const auto count = static_cast<std::int64_t>(ordered.size());
    std::vector<std::size_t> first_bad_r(ordered.size(), kNone);

#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t si = 1; si < count; ++si) {
        const auto s = static_cast<std::size_t>(si);
        const VertexSet cs = ordered[s].complement();
        const VertexSet ds = report.drop_sets[s];
        for (std::size_t r = 0; r < s; ++r) {
            if (!((ordered[r].complement() - cs) & ds).empty()) continue;
            first_bad_r[s] = r;
            break;
        }
    }

    std::size_t best_r = kNone, best_s = kNone;
    for (std::size_t s = 1; s < ordered.size(); ++s) {
        if (first_bad_r[s] < best_r) {
            best_r = first_bad_r[s];
            best_s = s;
        }
    }
    report.ok = best_s == kNone;
    if (!report.ok) {
        const VertexSet gap = ordered[best_r].complement() - ordered[best_s].complement();
        report.violation = ShellingViolation{
            best_r, best_s,
            "F_s - F_r = " + format_set(gap) + " misses D_s = " + format_set(report.drop_sets[best_s]) +
                " (r=" + std::to_string(best_r) + ", s=" + std::to_string(best_s) + ")"};
    }

    for (std::size_t s = 1; s < ordered.size(); ++s) {
        if (report.drop_sets[s] == ordered[s].vertices(n)) report.spanning.push_back(s);
    }
    return report;
}

std::vector<Facet> spanning_facets(const ShellingReport& report)
{
    if (!report.ok) throw ParameterError("spanning facets are only defined for a shelling order");
    std::vector<Facet> out;
    out.reserve(report.spanning.size());
    for (std::size_t s : report.spanning) out.push_back(report.order[s]);
    return out;
}

std::string to_string(SearchOutcome outcome)
{
    switch (outcome) {
        case SearchOutcome::found: return "found";
        case SearchOutcome::not_shellable: return "not_shellable";
        case SearchOutcome::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

namespace {

class ShellingSearch {
public:
    ShellingSearch(std::span<const Facet> facets, int n, std::uint64_t budget, std::span<const Facet> seed)
        : facets_(facets.begin(), facets.end()),
          n_(n),
          budget_(budget),
          index_(index_by_complement(facets)),
          placed_(facets.size(), false),
          seed_pos_(facets.size(), facets.size())
    {
        for (std::size_t i = 0; i < seed.size(); ++i) {
            const auto it = index_.find(seed[i].complement());
            if (it != index_.end() && seed_pos_[it->second] == facets.size()) seed_pos_[it->second] = i;
        }
    }

    SearchResult run()
    {
        SearchResult result;
        const bool found = extend();
        result.nodes = nodes_;
        if (found) {
            result.outcome = SearchOutcome::found;
            for (std::size_t i : prefix_) result.order.push_back(facets_[i]);
        } else {
            result.outcome = exhausted_ ? SearchOutcome::budget_exhausted : SearchOutcome::not_shellable;
        }
        return result;
    }

private:
    struct Candidate {
        int ridges;
        std::size_t seed_pos;
        std::size_t idx;
    };

    // Returns the number of placed facets sharing a ridge with x, or -1 if
    // appending x would violate the shelling condition.
    int score(std::size_t x) const
    {
        if (prefix_.empty()) return 0;
        const VertexSet comp = facets_[x].complement();
        VertexSet drop;
        int ridges = 0;
        comp.complement(n_).for_each([&](int u) {
            comp.for_each([&](int v) {
                VertexSet neighbour = comp;
                neighbour.erase(v);
                neighbour.insert(u);
                const auto it = index_.find(neighbour);
                if (it != index_.end() && placed_[it->second]) {
                    drop.insert(u);
                    ++ridges;
                }
            });
        });
        for (std::size_t r : prefix_) {
            if (((facets_[r].complement() - comp) & drop).empty()) return -1;
        }
        return ridges;
    }

    std::string key() const
    {
        std::string k((placed_.size() + 7) / 8, '\0');
        for (std::size_t i = 0; i < placed_.size(); ++i) {
            if (placed_[i]) k[i / 8] = static_cast<char>(k[i / 8] | (1 << (i % 8)));
        }
        return k;
    }

    bool extend()
    {
        if (prefix_.size() == facets_.size()) return true;
        const std::string state = key();
        if (dead_.contains(state)) return false;

        std::vector<Candidate> candidates;
        for (std::size_t x = 0; x < facets_.size(); ++x) {
            if (placed_[x]) continue;
            const int s = score(x);
            if (s >= 0) candidates.push_back({s, seed_pos_[x], x});
        }
        std::sort(candidates.begin(), candidates.end(), [&](const Candidate& a, const Candidate& b) {
            if (a.ridges != b.ridges) return a.ridges > b.ridges;
            if (a.seed_pos != b.seed_pos) return a.seed_pos < b.seed_pos;
            return facets_[a.idx] < facets_[b.idx];
        });

        for (const Candidate& c : candidates) {
            if (++nodes_ > budget_) {
                exhausted_ = true;
                return false;
            }
            placed_[c.idx] = true;
            prefix_.push_back(c.idx);
            if (extend()) return true;
            prefix_.pop_back();
            placed_[c.idx] = false;
            if (exhausted_) return false;
        }
        dead_.insert(state);
        return false;
    }

    std::vector<Facet> facets_;
    int n_;
    std::uint64_t budget_;
    std::unordered_map<VertexSet, std::size_t> index_;
    std::vector<bool> placed_;
    std::vector<std::size_t> seed_pos_;
    std::vector<std::size_t> prefix_;
    std::unordered_set<std::string> dead_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

SearchResult search_shelling(std::span<const Facet> facets, int n, std::uint64_t node_budget,
                             std::span<const Facet> seed)
{
    validate(facets, n);
    if (node_budget == 0) throw ParameterError("node budget must be positive");
    return ShellingSearch(facets, n, node_budget, seed).run();
}

}  // namespace cutcx
