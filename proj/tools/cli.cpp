#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutcx/census.hpp"
#include "cutcx/cutcomplex.hpp"
#include "cutcx/errors.hpp"
#include "cutcx/graph.hpp"
#include "cutcx/homology.hpp"
#include "cutcx/ordering.hpp"
#include "cutcx/parallel.hpp"
#include "cutcx/shelling.hpp"

namespace cutcx::cli {

namespace {

using json = nlohmann::ordered_json;

struct Report {
    json body;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    int exit_code = kExitOk;
};

json facet_json(Facet f) { return json(f.complement_labels()); }

std::string facet_text(Facet f)
{
    std::string out;
    f.complement().for_each([&](int v) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    });
    return out;
}

json facets_json(std::span<const Facet> facets)
{
    json arr = json::array();
    for (Facet f : facets) arr.push_back(facet_json(f));
    return arr;
}

json params_json(const ComplexParams& params)
{
    return json{{"n", params.n},
                {"p", params.p},
                {"k", params.k},
                {"c", params.c},
                {"theorem_applies", params.theorem_applies},
                {"exploratory", !params.theorem_applies}};
}

json header(const std::string& command)
{
    return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

std::string tags_text(const std::vector<int>& tags)
{
    std::string out;
    for (int t : tags) {
        if (!out.empty()) out += ';';
        out += condition_name(t);
    }
    return out;
}

json tags_json(const std::vector<int>& tags)
{
    json arr = json::array();
    for (int t : tags) arr.push_back(condition_name(t));
    return arr;
}

struct Check {
    std::string name;
    std::string status;  // pass, fail, skipped
    std::string detail;
};

json checks_json(const std::vector<Check>& checks)
{
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(json{{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    return arr;
}

// An imported facet list or an enumerated Delta_k(C_n^p).
struct Instance {
    std::optional<ComplexParams> params;
    int n = 0;
    int k = 0;
    std::vector<Facet> facets;
    bool imported = false;
};

ComplexParams require_params(const RunConfig& cfg)
{
    if (cfg.p < 1) throw ParameterError("--p is required for '" + cfg.command + "'");
    return make_params(cfg.n, cfg.p, cfg.k);
}

Instance load_instance(const RunConfig& cfg)
{
    Instance inst;
    if (!cfg.import_path.empty()) {
        std::ifstream in(cfg.import_path);
        if (!in) throw ParameterError("cannot open " + cfg.import_path);
        FacetList list = read_facet_list(in);
        inst.n = list.n;
        inst.k = list.k;
        inst.facets = std::move(list.facets);
        inst.imported = true;
        if (cfg.p >= 1) inst.params = make_params(list.n, cfg.p, list.k);
        return inst;
    }
    inst.params = require_params(cfg);
    inst.n = inst.params->n;
    inst.k = inst.params->k;
    inst.facets = enumerate_facets(cycle_power(inst.n, inst.params->p), inst.k);
    return inst;
}

json instance_params(const Instance& inst)
{
    if (inst.params) {
        json j = params_json(*inst.params);
        if (inst.imported) j["source"] = "import";
        return j;
    }
    return json{{"n", inst.n}, {"k", inst.k}, {"source", "import"}};
}

void require_generated(const RunConfig& cfg)
{
    if (!cfg.import_path.empty()) throw ParameterError("'" + cfg.command + "' does not accept --import");
}

json histogram_json(const std::vector<FacetClass>& classes, int p)
{
    std::vector<std::int64_t> hist(static_cast<std::size_t>(std::max(p, 1)), 0);
    for (const auto& c : classes) ++hist[static_cast<std::size_t>(c.alpha)];
    json j = json::object();
    for (std::size_t a = 0; a < hist.size(); ++a) j["M" + std::to_string(a)] = hist[a];
    return j;
}

Report cmd_facets(const RunConfig& cfg)
{
    const Instance inst = load_instance(cfg);
    Report rep;
    rep.body = header("facets");
    rep.body["params"] = instance_params(inst);
    rep.body["facet_count"] = inst.facets.size();
    rep.body["void"] = inst.facets.empty();
    if (inst.imported && inst.params) {
        auto sorted = inst.facets;
        std::sort(sorted.begin(), sorted.end());
        const bool same = sorted == enumerate_facets(cycle_power(inst.n, inst.params->p), inst.k);
        rep.body["matches_enumeration"] = same;
        if (!same) rep.exit_code = kExitMismatch;
    }
    rep.body["facets"] = facets_json(inst.facets);

    if (!cfg.export_path.empty()) {
        std::ofstream out(cfg.export_path);
        if (!out) throw ParameterError("cannot write " + cfg.export_path);
        write_facet_list(out, inst.n, inst.k, inst.facets);
        rep.body["exported_to"] = cfg.export_path;
    }

    rep.columns = {"complement"};
    for (Facet f : inst.facets) rep.rows.push_back({facet_text(f)});
    return rep;
}

Report cmd_order(const RunConfig& cfg, bool canonical)
{
    require_generated(cfg);
    const ComplexParams params = require_params(cfg);
    const OmegaOrder order(params);
    const auto facets = enumerate_facets(cycle_power(params.n, params.p), params.k);
    const auto listed = canonical ? facets : sort_facets(facets, params, order);
    const auto classes = classify_all(listed, params, order);

    Report rep;
    rep.body = header(canonical ? "classify" : "order");
    rep.body["params"] = params_json(params);
    rep.body["omega"] = order.sequence();
    rep.body["facet_count"] = listed.size();
    rep.body["class_histogram"] = histogram_json(classes, params.p);
    std::size_t multi = 0;
    json entries = json::array();
    rep.columns = {"position", "complement", "omega", "i1", "i2", "alpha", "conditions"};
    for (std::size_t i = 0; i < listed.size(); ++i) {
        const Decomposition d = decompose(listed[i], order);
        if (classes[i].conditions.size() > 1) ++multi;
        entries.push_back(json{{"position", i + 1},
                               {"complement", facet_json(listed[i])},
                               {"omega", d.omega},
                               {"i1", d.i1},
                               {"i2", d.i2},
                               {"alpha", classes[i].alpha},
                               {"conditions", tags_json(classes[i].conditions)}});
        rep.rows.push_back({std::to_string(i + 1), facet_text(listed[i]), std::to_string(d.omega),
                            std::to_string(d.i1), std::to_string(d.i2), std::to_string(classes[i].alpha),
                            tags_text(classes[i].conditions)});
    }
    rep.body["multi_condition_facets"] = multi;
    rep.body[canonical ? "facets" : "order"] = std::move(entries);
    return rep;
}

Report cmd_shell_check(const RunConfig& cfg)
{
    const Instance inst = load_instance(cfg);
    Report rep;
    rep.body = header("shell-check");
    rep.body["params"] = instance_params(inst);
    rep.body["facet_count"] = inst.facets.size();

    std::vector<Facet> ordered;
    if (cfg.search) {
        std::vector<Facet> seed;
        if (inst.params && inst.params->k == 3) seed = sort_facets(inst.facets, *inst.params, OmegaOrder(*inst.params));
        const SearchResult found = search_shelling(inst.facets, inst.n, cfg.budget, seed);
        rep.body["order_source"] = "search";
        rep.body["search"] = json{{"outcome", to_string(found.outcome)}, {"nodes", found.nodes}, {"budget", cfg.budget}};
        if (found.outcome != SearchOutcome::found) {
            rep.body["ok"] = false;
            rep.exit_code = found.outcome == SearchOutcome::budget_exhausted ? kExitResource : kExitOk;
            return rep;
        }
        ordered = found.order;
    } else if (inst.imported) {
        rep.body["order_source"] = "import";
        ordered = inst.facets;
    } else {
        if (inst.k != 3) throw ParameterError("the class order is defined for k = 3 only");
        rep.body["order_source"] = "class_order";
        ordered = sort_facets(inst.facets, *inst.params, OmegaOrder(*inst.params));
    }

    const ShellingReport report = check_shelling(ordered, inst.n);
    rep.body["ok"] = report.ok;
    if (report.violation) {
        rep.body["violation"] = json{{"r", report.violation->r + 1},
                                     {"s", report.violation->s + 1},
                                     {"explanation", report.violation->explanation}};
        rep.exit_code = kExitMismatch;
    }
    rep.columns = {"position", "complement", "spanning"};
    std::vector<bool> is_spanning(ordered.size(), false);
    for (std::size_t s : report.spanning) is_spanning[s] = true;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        rep.rows.push_back({std::to_string(i + 1), facet_text(ordered[i]), is_spanning[i] ? "1" : "0"});
    }
    if (report.ok) {
        const auto spanning = spanning_facets(report);
        rep.body["spanning_count"] = spanning.size();
        json positions = json::array();
        for (std::size_t s : report.spanning) positions.push_back(s + 1);
        rep.body["spanning_positions"] = positions;
        rep.body["spanning"] = facets_json(spanning);
    }
    if (cfg.search) rep.body["order"] = facets_json(ordered);
    return rep;
}

Report cmd_census(const RunConfig& cfg)
{
    require_generated(cfg);
    const ComplexParams params = require_params(cfg);
    const Census census = sigma_sets(params);
    const SpanningFormula formula = spanning_count_formula(params);

    Report rep;
    rep.body = header("census");
    rep.body["params"] = params_json(params);
    rep.body["counts"] = json{{"sigma1", census.counts[0]},
                              {"sigma2", census.counts[1]},
                              {"sigma3", census.counts[2]},
                              {"total", census.total}};
    rep.body["formula"] = json{{"sigma1", formula.sigma1},
                               {"sigma2", formula.sigma2},
                               {"sigma3", formula.sigma3},
                               {"total", formula.total}};
    const auto ranges = head_ranges(params);
    json heads = json::object();
    for (std::size_t m = 0; m < 3; ++m) heads["U" + std::to_string(m + 1)] = json::array({ranges[m].lo, ranges[m].hi});
    rep.body["head_ranges"] = heads;
    rep.body["sets"] = json{{"sigma1", facets_json(census.sigma[0])},
                            {"sigma2", facets_json(census.sigma[1])},
                            {"sigma3", facets_json(census.sigma[2])}};
    rep.columns = {"block", "complement"};
    for (std::size_t m = 0; m < 3; ++m) {
        for (Facet f : census.sigma[m]) rep.rows.push_back({"sigma" + std::to_string(m + 1), facet_text(f)});
    }
    return rep;
}

Report cmd_homology(const RunConfig& cfg)
{
    const Instance inst = load_instance(cfg);
    if (inst.facets.empty()) throw VoidComplexError("no homology to compute");
    ChainOptions options;
    options.max_faces = cfg.max_faces;
    const ChainComplex cc = build_chain_complex(inst.facets, inst.n, options);
    const auto betti = cfg.rational ? rational_betti_numbers(cc) : betti_numbers(cc);
    const bool squares_zero = boundary_squares_to_zero(cc);

    Report rep;
    rep.body = header("homology");
    rep.body["params"] = instance_params(inst);
    rep.body["facet_count"] = inst.facets.size();
    rep.body["coefficients"] = cfg.rational ? "Q" : "GF(2)";
    json fv = json::array();
    for (int j = -1; j <= cc.top_dim; ++j) fv.push_back(cc.face_count(j));
    rep.body["face_counts"] = fv;
    rep.body["boundary_squares_zero"] = squares_zero;
    rep.body["reduced_betti"] = betti;
    if (!squares_zero) rep.exit_code = kExitMismatch;
    rep.columns = {"dim", "reduced_betti"};
    for (std::size_t j = 0; j < betti.size(); ++j) rep.rows.push_back({std::to_string(j), std::to_string(betti[j])});
    return rep;
}

Report cmd_euler(const RunConfig& cfg)
{
    const Instance inst = load_instance(cfg);
    if (inst.facets.empty()) throw VoidComplexError("reduced Euler characteristic not reported");
    const auto f = face_counts(inst.facets, inst.n);
    std::int64_t chi = 0;
    for (std::size_t i = 1; i < f.size(); ++i) chi += ((i - 1) % 2 == 0 ? 1 : -1) * f[i];
    chi -= 1;

    Report rep;
    rep.body = header("euler");
    rep.body["params"] = instance_params(inst);
    rep.body["facet_count"] = inst.facets.size();
    rep.body["face_counts"] = f;
    rep.body["reduced_euler"] = chi;
    rep.columns = {"dim", "faces"};
    for (std::size_t i = 0; i < f.size(); ++i) {
        rep.rows.push_back({std::to_string(static_cast<int>(i) - 1), std::to_string(f[i])});
    }
    return rep;
}

Report cmd_verify(const RunConfig& cfg)
{
    require_generated(cfg);
    const ComplexParams params = require_params(cfg);
    if (params.k != 3) throw ParameterError("verify is defined for k = 3 only");
    const int n = params.n, p = params.p;
    const auto facets = enumerate_facets(cycle_power(n, p), 3);
    if (facets.empty()) throw VoidComplexError("Delta_3(C_" + std::to_string(n) + "^" + std::to_string(p) + ") has no facets");

    const OmegaOrder order(params);
    std::vector<Check> checks;
    auto add = [&](std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass ? "pass" : "fail", std::move(detail)});
    };
    auto skip = [&](std::string name, std::string why) { checks.push_back({std::move(name), "skipped", std::move(why)}); };

    Report rep;
    rep.body = header("verify");
    rep.body["params"] = params_json(params);
    rep.body["facet_count"] = facets.size();

    std::vector<FacetClass> classes;
    try {
        classes = classify_all(facets, params, order);
        add("classification_disjoint", true);
    } catch (const ClassificationConflict& e) {
        add("classification_disjoint", false, e.what());
        rep.body["checks"] = checks_json(checks);
        rep.exit_code = kExitMismatch;
        return rep;
    }
    rep.body["class_histogram"] = histogram_json(classes, p);

    bool shape_ok = true;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (classes[i].alpha == 0) continue;
        const auto t = facets[i].complement_labels();
        if (!(t[2] <= t[0] + 2 * p)) shape_ok = false;
    }
    add("alpha_class_shape", shape_ok, "u < v < w <= u + 2p for alpha >= 1");

    const auto sorted = sort_facets(facets, params, order);
    const ShellingReport shell = check_shelling(sorted, n);
    if (shell.ok || params.theorem_applies) {
        add("shelling", shell.ok, shell.violation ? shell.violation->explanation : "");
    } else {
        checks.push_back({"shelling", "exploratory", "class order is not a shelling: " + shell.violation->explanation});
    }

    std::vector<Facet> spanning;
    if (shell.ok) {
        spanning = spanning_facets(shell);
        std::sort(spanning.begin(), spanning.end());
        rep.body["spanning_count"] = spanning.size();
        rep.body["spanning"] = facets_json(spanning);

        bool structure_ok = true;
        for (Facet f : spanning) {
            const Decomposition d = decompose(f, order);
            const bool in_class_zero = classify(f, params, order).alpha == 0;
            if (d.i2 != n - 1 || d.omega < p + 1 || d.omega > n - p - 1 || !in_class_zero) structure_ok = false;
        }
        add("spanning_structure", structure_ok, "i2 = n-1, omega in [p+1, n-p-1], class M0");
    } else {
        skip("spanning_structure", "order is not a shelling");
    }

    std::optional<std::int64_t> formula_total;
    if (params.theorem_applies) {
        const SpanningFormula formula = spanning_count_formula(params);
        formula_total = formula.total;
        rep.body["formula"] = formula.total;
        const Census census = sigma_sets(params);
        rep.body["census_counts"] = json::array({census.counts[0], census.counts[1], census.counts[2]});
        rep.body["census"] = facets_json(census.all());
        if (shell.ok) {
            add("spanning_equals_census", spanning == census.all());
            add("spanning_count_formula", static_cast<std::int64_t>(spanning.size()) == formula.total,
                std::to_string(spanning.size()) + " vs " + std::to_string(formula.total));
        } else {
            skip("spanning_equals_census", "order is not a shelling");
            skip("spanning_count_formula", "order is not a shelling");
        }
        add("census_count_formula", census.total == formula.total);
    } else {
        skip("spanning_equals_census", "outside the theorem range");
        skip("spanning_count_formula", "outside the theorem range");
    }

    const std::int64_t sign = (n - 4) % 2 == 0 ? 1 : -1;
    const bool have_expected = formula_total.has_value() || shell.ok;
    const std::int64_t expected_chi =
        sign * (formula_total ? *formula_total : static_cast<std::int64_t>(spanning.size()));
    const bool euler_affordable = n <= kMaxFaceScanVertices && (std::uint64_t{1} << n) <= cfg.max_faces;
    if (!euler_affordable) {
        skip("reduced_euler", "2^n subsets exceed --max-faces");
    } else {
        const std::int64_t chi = reduced_euler(facets, n);
        rep.body["reduced_euler"] = chi;
        if (have_expected) {
            add("reduced_euler", chi == expected_chi,
                std::to_string(chi) + " vs " + std::to_string(expected_chi));
        } else {
            skip("reduced_euler", "no sphere count to compare against");
        }
    }

    if (cfg.homology) {
        ChainOptions options;
        options.max_faces = cfg.max_faces;
        const ChainComplex cc = build_chain_complex(facets, n, options);
        const auto betti = betti_numbers(cc);
        rep.body["reduced_betti"] = betti;
        if (have_expected) {
            const std::int64_t spheres = sign * expected_chi;
            bool ok = !betti.empty() && betti.back() == spheres;
            for (std::size_t j = 0; j + 1 < betti.size(); ++j) ok = ok && betti[j] == 0;
            add("homology_wedge", ok, "top reduced Betti " + std::to_string(betti.empty() ? -1 : betti.back()) +
                                          " vs " + std::to_string(spheres));
        } else {
            skip("homology_wedge", "no sphere count to compare against");
        }
        add("boundary_squares_zero", boundary_squares_to_zero(cc));
    }

    rep.body["checks"] = checks_json(checks);
    const bool all_pass = std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == "fail"; });
    rep.body["pass"] = all_pass;
    if (!all_pass) rep.exit_code = kExitMismatch;

    rep.columns = {"check", "status", "detail"};
    for (const auto& c : checks) rep.rows.push_back({c.name, c.status, c.detail});
    return rep;
}

Report dispatch(const RunConfig& cfg)
{
    if (cfg.command == "facets") return cmd_facets(cfg);
    if (cfg.command == "order") return cmd_order(cfg, false);
    if (cfg.command == "classify") return cmd_order(cfg, true);
    if (cfg.command == "shell-check") return cmd_shell_check(cfg);
    if (cfg.command == "census") return cmd_census(cfg);
    if (cfg.command == "homology") return cmd_homology(cfg);
    if (cfg.command == "euler") return cmd_euler(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    throw ParameterError("unknown command '" + cfg.command + "'");
}

Report error_report(const RunConfig& cfg, const std::string& message, int code)
{
    Report rep;
    rep.body = header(cfg.command);
    rep.body["params"] = json{{"n", cfg.n}, {"p", cfg.p}, {"k", cfg.k}};
    rep.body["error"] = message;
    rep.body["exit_code"] = code;
    rep.exit_code = code;
    rep.columns = {"error"};
    rep.rows.push_back({message});
    return rep;
}

Report run_one(const RunConfig& cfg)
{
    try {
        return dispatch(cfg);
    } catch (const VoidComplexError& e) {
        return error_report(cfg, e.what(), kExitParameter);
    } catch (const ParameterError& e) {
        return error_report(cfg, e.what(), kExitParameter);
    } catch (const ResourceCapError& e) {
        return error_report(cfg, e.what(), kExitResource);
    } catch (const ClassificationConflict& e) {
        return error_report(cfg, std::string("classification conflict: ") + e.what(), kExitMismatch);
    } catch (const InvariantViolation& e) {
        return error_report(cfg, std::string("invariant violated: ") + e.what(), kExitMismatch);
    } catch (const std::exception& e) {
        return error_report(cfg, std::string("internal error: ") + e.what(), kExitMismatch);
    }
}

std::string scalar_text(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render(const std::vector<Report>& reports, Format format, bool sweep, std::ostream& out)
{
    switch (format) {
        case Format::json:
            for (const auto& r : reports) out << (sweep ? r.body.dump() : r.body.dump(2)) << '\n';
            break;
        case Format::csv: {
            if (reports.empty()) break;
            const auto first = std::find_if(reports.begin(), reports.end(),
                                            [](const Report& r) { return !r.body.contains("error"); });
            const Report& head = first != reports.end() ? *first : reports.front();
            if (sweep) out << "n,";
            for (std::size_t i = 0; i < head.columns.size(); ++i) out << (i ? "," : "") << head.columns[i];
            out << '\n';
            for (const auto& r : reports) {
                for (const auto& row : r.rows) {
                    if (sweep) out << r.body["params"]["n"].dump() << ',';
                    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
                    out << '\n';
                }
            }
            break;
        }
        case Format::text:
            for (const auto& r : reports) {
                for (const auto& [key, value] : r.body.items()) {
                    if (key == "params") {
                        for (const auto& [pk, pv] : value.items()) out << pk << ": " << scalar_text(pv) << '\n';
                    } else if (value.is_primitive()) {
                        out << key << ": " << scalar_text(value) << '\n';
                    }
                }
                for (const auto& row : r.rows) {
                    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
                    out << '\n';
                }
                if (sweep) out << '\n';
            }
            break;
    }
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw ParameterError("range must look like a..b");
    try {
        std::size_t used_a = 0, used_b = 0;
        const std::string a_text = text.substr(0, dots), b_text = text.substr(dots + 2);
        const int a = std::stoi(a_text, &used_a);
        const int b = std::stoi(b_text, &used_b);
        if (used_a != a_text.size() || used_b != b_text.size()) throw ParameterError("");
        if (a > b) throw ParameterError("");
        return {a, b};
    } catch (const std::exception&) {
        throw ParameterError("range must look like a..b with a <= b");
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    if (config.threads > 0) set_worker_count(config.threads);

    std::vector<Report> reports;
    const bool sweep = config.n_range.has_value();
    if (sweep) {
        const auto [lo, hi] = *config.n_range;
        reports.resize(static_cast<std::size_t>(hi - lo + 1));
#pragma omp parallel for schedule(dynamic)
        for (int n = lo; n <= hi; ++n) {
            RunConfig one = config;
            one.n = n;
            one.n_range.reset();
            reports[static_cast<std::size_t>(n - lo)] = run_one(one);
        }
    } else {
        reports.push_back(run_one(config));
    }

    int code = kExitOk;
    for (const auto& r : reports) {
        if (r.body.contains("error")) err << "error: " << r.body["error"].get<std::string>() << '\n';
        code = std::max(code, r.exit_code);
    }
    render(reports, config.format, sweep, out);
    return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cut complexes of cycle powers: facets, shelling order, spanning census, homology"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "json";
    std::string n_range;
    std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};

    const std::vector<std::pair<std::string, std::string>> commands{
        {"facets", "enumerate facets (complement triples)"},
        {"order", "facets in the shelling order with decompositions"},
        {"classify", "class M_alpha and matched conditions per facet"},
        {"shell-check", "verify a shelling order and list spanning facets"},
        {"census", "closed-form spanning facet sets Sigma_1..3"},
        {"homology", "reduced Betti numbers"},
        {"euler", "face vector and reduced Euler characteristic"},
        {"verify", "full cross-checked pipeline"}};

    for (const auto& [name, description] : commands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("--n", cfg.n, "number of vertices");
        sub->add_option("--p", cfg.p, "power of the cycle");
        sub->add_option("--k", cfg.k, "cut size")->capture_default_str();
        sub->add_option("--format", format, "json, csv or text")->capture_default_str();
        sub->add_option("--max-faces", cfg.max_faces, "face count cap")->capture_default_str();
        sub->add_option("--n-range", n_range, "sweep n over a..b, one report per line");
        sub->add_option("--threads", cfg.threads, "OpenMP worker count");
        sub->add_option("--import", cfg.import_path, "read facets from a facet-list file");
        if (name == "facets") sub->add_option("--export", cfg.export_path, "write facets as a facet-list file");
        if (name == "verify") sub->add_flag("--homology", cfg.homology, "also compute Betti numbers");
        if (name == "homology") sub->add_flag("--rational", cfg.rational, "exact rational ranks");
        if (name == "shell-check") {
            sub->add_flag("--search", cfg.search, "search for a shelling order by backtracking");
            sub->add_option("--budget", cfg.budget, "node budget for --search")->capture_default_str();
        }
        sub->callback([&cfg, name = name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitParameter;
    }

    try {
        if (!formats.contains(format)) throw ParameterError("unknown format '" + format + "'");
        cfg.format = formats.at(format);
        if (!n_range.empty()) cfg.n_range = parse_range(n_range);
        else if (cfg.n == 0 && cfg.import_path.empty()) throw ParameterError("--n is required");
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParameter;
    }
    return run(cfg, out, err);
}

}  // namespace cutcx::cli
