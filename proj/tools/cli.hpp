#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cutcx/homology.hpp"

namespace cutcx::cli {

enum class Format { json, csv, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitResource = 3;

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
    std::string command;  // facets, order, classify, shell-check, census, homology, euler, verify
    int n = 0;
    int p = 0;  // 0 = not given
    int k = 3;
    Format format = Format::json;
    std::uint64_t max_faces = kDefaultMaxFaces;
    std::optional<std::pair<int, int>> n_range;  // inclusive sweep over n
    std::string export_path;
    std::string import_path;
    bool homology = false;  // verify: also compute Betti numbers
    bool rational = false;  // homology: rational ranks instead of GF(2)
    bool search = false;    // shell-check: backtracking search instead of the class order
    std::uint64_t budget = 1'000'000;
    int threads = 0;        // 0 = OpenMP default
};

/// Runs one configuration, writing the report to `out` and diagnostics to `err`.
/// Exit codes: 0 ok, 1 cross-check mismatch, 2 parameter or void-complex error,
/// 3 resource cap refusal. Sweep mode emits one report per n.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and dispatches to run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses "a..b" into an inclusive range; throws ParameterError.
std::pair<int, int> parse_range(const std::string& text);

}  // namespace cutcx::cli
