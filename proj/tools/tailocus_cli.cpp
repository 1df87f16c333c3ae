// Command-line surface over the tail-locus engine: stratum enumeration,
// blow-up schedules, branch lattices, smoothability verdicts, and the
// plane-cubics dossier. Exit codes: 0 success, 2 usage error, 3 bad input.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "tailocus/branches.hpp"
#include "tailocus/dualgraph.hpp"
#include "tailocus/errors.hpp"
#include "tailocus/io.hpp"
#include "tailocus/smoothcheck.hpp"
#include "tailocus/strata.hpp"

namespace {

using namespace tailocus;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw ConfigError("cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) {
        throw ConfigError("cannot write '" + out_path + "'");
    }
    file << text;
}

std::string mu_text(const std::vector<std::int64_t>& mu) {
    std::ostringstream out;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i > 0) out << "+";
        out << mu[i];
    }
    return out.str();
}

std::string set_text(const std::vector<int>& S) {
    if (S.empty()) return "-";
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (i > 0) out << ",";
        out << S[i];
    }
    out << "}";
    return out.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void warn_if_degenerate(const ModuliContext& ctx) {
    if (main_locus_empty(ctx)) {
        std::cerr << "warning: in degree 1 no smooth genus-1 curve maps non-degenerately, "
                     "so the main locus is empty; dimension counts are still reported\n";
    }
}

int require_positive_degree(std::int64_t d) {
    if (d == 0) {
        std::cerr << "error: d = 0 is excluded: every map contracts the whole curve, so "
                     "the space is the product of the k-marked genus-1 moduli space with "
                     "the target projective space, which is already smooth\n";
        return 2;
    }
    return 0;
}

// --- strata -------------------------------------------------------------

std::string strata_table(const std::vector<StratumIndex>& strata, const ModuliContext& ctx) {
    std::ostringstream out;
    out << "strata of the tail loci for n=" << ctx.n << " d=" << ctx.d << " k=" << ctx.k
        << " (main component dimension " << main_dimension(ctx) << ")\n";
    if (strata.empty()) {
        out << "  (none)\n";
        return out.str();
    }
    out << std::left << std::setw(4) << "  m" << std::setw(4) << "m'" << std::setw(12)
        << "mu" << std::setw(10) << "S" << std::setw(6) << "dim" << std::setw(12)
        << "obstructed" << "generically-in-main\n";
    for (const auto& idx : strata) {
        out << "  " << std::left << std::setw(2) << idx.m() << std::setw(4) << idx.m_prime
            << std::setw(12) << mu_text(idx.mu) << std::setw(10) << set_text(idx.S)
            << std::setw(6) << stratum_dimension(idx, ctx) << std::setw(12)
            << yes_no(dimension_obstructed(idx, ctx)) << yes_no(generically_in_main(idx, ctx))
            << "\n";
    }
    return out.str();
}

int cmd_strata(const ModuliContext& ctx, std::optional<int> m, const std::string& format,
               const std::string& out_path) {
    if (int code = require_positive_degree(ctx.d)) return code;
    check_context(ctx);
    warn_if_degenerate(ctx);

    std::vector<StratumIndex> strata;
    if (m.has_value()) {
        strata = enumerate_strata(ctx, *m);
    } else {
        for (int stage = 1; stage <= static_cast<int>(ctx.d) + ctx.k; ++stage) {
            auto part = enumerate_strata(ctx, stage);
            strata.insert(strata.end(), part.begin(), part.end());
        }
    }

    if (format == "json") {
        Json j = Json::array();
        for (const auto& idx : strata) j.push_back(stratum_to_json(idx, ctx));
        write_output(out_path, j.dump(2) + "\n");
    } else {
        write_output(out_path, strata_table(strata, ctx));
    }
    return 0;
}

// --- schedule -----------------------------------------------------------

std::string schedule_table(const BlowupSchedule& schedule) {
    std::ostringstream out;
    const auto& ctx = schedule.ctx;
    out << "blow-up schedule for n=" << ctx.n << " d=" << ctx.d << " k=" << ctx.k << " ("
        << (schedule.variant == ScheduleVariant::main_component ? "main component"
                                                                : "full space")
        << ")\n";
    for (const auto& stage : schedule.stages) {
        out << "stage m=" << stage.m << ": " << stage.note << "\n";
        if (stage.strata.empty()) {
            out << "  (no strata at this stage)\n";
            continue;
        }
        for (const auto& idx : stage.strata) {
            out << "  (" << idx.m_prime << ", " << mu_text(idx.mu) << ", "
                << set_text(idx.S) << ")  dim " << stratum_dimension(idx, schedule.ctx)
                << "\n";
        }
    }
    return out.str();
}

int cmd_schedule(const ModuliContext& ctx, const std::string& variant_name,
                 const std::string& format, const std::string& out_path) {
    if (int code = require_positive_degree(ctx.d)) return code;
    check_context(ctx);
    warn_if_degenerate(ctx);

    const auto variant = variant_name == "main" ? ScheduleVariant::main_component
                                                : ScheduleVariant::full_space;
    const auto schedule = blowup_schedule(ctx, variant);
    if (format == "json") {
        write_output(out_path, schedule_to_json(schedule).dump(2) + "\n");
    } else {
        write_output(out_path, schedule_table(schedule));
    }
    return 0;
}

// --- branches -----------------------------------------------------------

int reject_invalid(const DualGraph& g) {
    const auto report = validate(g);
    if (report.empty()) return 0;
    std::cerr << "error: the graph violates " << report.size()
              << (report.size() == 1 ? " invariant:\n" : " invariants:\n");
    for (const auto& issue : report) {
        std::cerr << "  ["
                  << (issue.kind == IssueKind::structural ? "structural" : "invariant")
                  << "] " << issue.code << ": " << issue.detail << "\n";
    }
    return 3;
}

std::string subcurve_text(const ContractedSubcurve& e) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < e.vertices.size(); ++i) {
        if (i > 0) out << ",";
        out << e.vertices[i];
    }
    out << "}";
    return out.str();
}

std::string branches_table(const DualGraph& g,
                           const std::vector<ContractedSubcurve>& branches) {
    std::ostringstream out;
    out << branches.size() << (branches.size() == 1 ? " branch" : " branches") << "\n";
    for (std::size_t i = 0; i < branches.size(); ++i) {
        out << "  [" << i << "] " << subcurve_text(branches[i]) << "  tails="
            << tail_count(g, branches[i]) << "\n";
    }
    if (branches.size() > 1) {
        out << "separation stages\n";
        for (std::size_t a = 0; a < branches.size(); ++a) {
            for (std::size_t b = a + 1; b < branches.size(); ++b) {
                out << "  [" << a << "] x [" << b << "] -> stage "
                    << separation_stage(g, branches[a], branches[b]) << "\n";
            }
        }
    }
    const auto maximal = maximal_contracted_subcurve(g);
    out << "maximal contracted subcurve: "
        << (maximal.has_value() ? subcurve_text(*maximal) : std::string("none")) << "\n";
    return out.str();
}

int cmd_branches(const std::string& input, const std::string& format,
                 const std::string& out_path) {
    const auto g = graph_from_string(read_input(input));
    if (int code = reject_invalid(g)) return code;
    const auto branches = enumerate_branches(g);
    if (format == "json") {
        write_output(out_path, branches_to_json(g, branches).dump(2) + "\n");
    } else if (format == "dot") {
        write_output(out_path, branch_lattice_dot(g, branches));
    } else {
        write_output(out_path, branches_table(g, branches));
    }
    return 0;
}

// --- smoothable ---------------------------------------------------------

SmoothabilityVerdict run_smoothable(const SmoothConfig& cfg) {
    if (cfg.graph.has_value()) {
        if (cfg.n.has_value() && *cfg.n != cfg.graph->n) {
            throw ConfigError("config \"n\" disagrees with the graph's n");
        }
        std::map<std::string, ParamTail> tails;
        for (const auto& [edge, tail] : cfg.tails) {
            if (edge.empty()) {
                throw ConfigError("each tail needs an \"edge\" name when a graph is given");
            }
            if (!tails.emplace(edge, tail).second) {
                throw ConfigError("tail for edge '" + edge + "' given twice");
            }
        }
        return is_smoothable(*cfg.graph, tails);
    }
    std::vector<ParamTail> tails;
    tails.reserve(cfg.tails.size());
    for (const auto& [edge, tail] : cfg.tails) tails.push_back(tail);
    return smoothability_from_tails(*cfg.n, tails);
}

std::string verdict_table(const SmoothabilityVerdict& verdict) {
    std::ostringstream out;
    out << "case: " << (verdict.smooth_case == SmoothCase::no_contracted_curve ? "i" : "ii")
        << "\n";
    out << "nodes on the contracted curve (m): " << verdict.m << "\n";
    if (verdict.tangent_rank.has_value()) {
        out << "tangent rank: " << *verdict.tangent_rank << "\n";
    }
    out << "smoothable: " << yes_no(verdict.smoothable) << "\n";
    switch (verdict.certificate.type) {
        case Certificate::Type::none:
            break;
        case Certificate::Type::dependence: {
            out << "dependence certificate:";
            for (const auto& c : verdict.certificate.dependence) {
                out << " " << format_rational(c);
            }
            out << "\n";
            break;
        }
        case Certificate::Type::independent: {
            out << "independent: full-rank minor on columns";
            for (const auto c : verdict.certificate.pivot_cols) {
                out << " " << c;
            }
            out << "\n";
            break;
        }
    }
    return out.str();
}

int cmd_smoothable(const std::string& input, const std::string& format,
                   const std::string& out_path) {
    const auto cfg = smooth_config_from_string(read_input(input));
    if (cfg.graph.has_value()) {
        if (int code = reject_invalid(*cfg.graph)) return code;
    }
    const auto verdict = run_smoothable(cfg);
    if (format == "json") {
        write_output(out_path, verdict_to_json(verdict).dump(2) + "\n");
    } else {
        write_output(out_path, verdict_table(verdict));
    }
    return 0;
}

// --- report -------------------------------------------------------------

std::string stratum_label(const StratumIndex& idx, const ModuliContext& ctx) {
    if (dimension_obstructed(idx, ctx)) {
        return "irreducible component (dimension obstruction)";
    }
    if (generically_in_main(idx, ctx)) {
        return "in main component closure";
    }
    return "outside main closure generically (special configurations may smooth)";
}

struct BoundaryCheck {
    std::string name;
    std::string expectation;
    SmoothabilityVerdict verdict;
};

std::vector<BoundaryCheck> boundary_checks() {
    // every verdict below is computed, not asserted: the dossier doubles as
    // an integration test of the smoothability engine
    std::vector<BoundaryCheck> checks;

    const auto one_tail = make_graph(2, 0, {{"E", 1, 0, {}}, {"T", 0, 3, {}}}, {{"E", "T"}});
    checks.push_back({"one-tail, cubic with a cusp at the attachment",
                      "the tail needs a cusp",
                      is_smoothable(one_tail, {{"T", ParamTail{{{0, 0, 1}, {0, 0, 0, 1}}}}})});
    checks.push_back({"one-tail, immersed cubic",
                      "no cusp, no smoothing",
                      is_smoothable(one_tail, {{"T", ParamTail{{{0, 1}, {0, 0, 1}}}}})});

    const auto two_tail = make_graph(
        2, 0, {{"E", 1, 0, {}}, {"A", 0, 2, {}}, {"B", 0, 1, {}}}, {{"E", "A"}, {"E", "B"}});
    checks.push_back({"two-tail, conic tangent to the line",
                      "the branches must be tangent",
                      is_smoothable(two_tail, {{"A", ParamTail{{{0, 1}, {0, 0, 1}}}},
                                               {"B", ParamTail{{{0, 1}, {0}}}}})});
    checks.push_back({"two-tail, conic transverse to the line",
                      "no tangency, no smoothing",
                      is_smoothable(two_tail, {{"A", ParamTail{{{0, 1}, {0, 0, 1}}}},
                                               {"B", ParamTail{{{0}, {0, 1}}}}})});

    const auto three_tail = make_graph(
        2, 0, {{"E", 1, 0, {}}, {"L1", 0, 1, {}}, {"L2", 0, 1, {}}, {"L3", 0, 1, {}}},
        {{"E", "L1"}, {"E", "L2"}, {"E", "L3"}});
    checks.push_back({"three-tail, three concurrent lines",
                      "coplanarity is automatic in the plane",
                      is_smoothable(three_tail, {{"L1", ParamTail{{{0, 1}, {0}}}},
                                                 {"L2", ParamTail{{{0}, {0, 1}}}},
                                                 {"L3", ParamTail{{{0, 1}, {0, 1}}}}})});
    return checks;
}

int cmd_report(const std::string& format, const std::string& out_path) {
    const ModuliContext cubics{2, 3, 0};
    const auto checks = boundary_checks();

    if (format == "json") {
        Json j;
        j["n"] = cubics.n;
        j["d"] = cubics.d;
        j["k"] = cubics.k;
        j["main_dimension"] = main_dimension(cubics);
        j["strata"] = Json::array();
        for (int m = 1; m <= 3; ++m) {
            for (const auto& idx : enumerate_strata(cubics, m)) {
                auto sj = stratum_to_json(idx, cubics);
                sj["label"] = stratum_label(idx, cubics);
                j["strata"].push_back(std::move(sj));
            }
        }
        j["schedule"] = schedule_to_json(blowup_schedule(cubics, ScheduleVariant::full_space));
        j["boundary_checks"] = Json::array();
        for (const auto& check : checks) {
            Json cj;
            cj["name"] = check.name;
            cj["expectation"] = check.expectation;
            cj["verdict"] = verdict_to_json(check.verdict);
            j["boundary_checks"].push_back(std::move(cj));
        }
        write_output(out_path, j.dump(2) + "\n");
        return 0;
    }

    std::ostringstream out;
    out << "plane cubics: genus-1 degree-3 maps to the projective plane\n";
    out << "main component dimension: " << main_dimension(cubics) << "\n\n";
    out << "tail loci:\n";
    for (int m = 1; m <= 3; ++m) {
        for (const auto& idx : enumerate_strata(cubics, m)) {
            out << "  m=" << idx.m() << "  mu=" << mu_text(idx.mu) << "  dim "
                << stratum_dimension(idx, cubics) << "  " << stratum_label(idx, cubics)
                << "\n";
        }
    }
    out << "\n" << schedule_table(blowup_schedule(cubics, ScheduleVariant::full_space));
    out << "\nboundary-meeting conditions (exact tangent data):\n";
    for (const auto& check : checks) {
        out << "  " << check.name << " -> smoothable: " << yes_no(check.verdict.smoothable)
            << " (" << check.expectation << ")\n";
    }
    write_output(out_path, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tail-locus engine for genus-1 stable maps: strata, schedules, branch "
                 "lattices, smoothability"};
    app.require_subcommand(1);

    ModuliContext ctx;
    std::optional<int> m_flag;
    std::string variant = "full";
    std::string format = "table";
    std::string out_path;
    std::string input;

    auto* strata_cmd = app.add_subcommand("strata", "enumerate tail-locus strata");
    strata_cmd->add_option("--n", ctx.n, "target projective space dimension")->required();
    strata_cmd->add_option("--d", ctx.d, "total map degree")->required();
    strata_cmd->add_option("--k", ctx.k, "number of marked points");
    strata_cmd->add_option("--m", m_flag, "restrict to tail count m");
    strata_cmd->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    strata_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    auto* schedule_cmd = app.add_subcommand("schedule", "ordered blow-up schedule");
    schedule_cmd->add_option("--n", ctx.n, "target projective space dimension")->required();
    schedule_cmd->add_option("--d", ctx.d, "total map degree")->required();
    schedule_cmd->add_option("--k", ctx.k, "number of marked points");
    schedule_cmd->add_option("--variant", variant, "full or main")
        ->check(CLI::IsMember({"full", "main"}));
    schedule_cmd->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    schedule_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    auto* branches_cmd =
        app.add_subcommand("branches", "branch lattice of a dual graph");
    branches_cmd->add_option("input", input, "graph JSON file, or - for stdin")->required();
    branches_cmd->add_option("--format", format, "table, json or dot")
        ->check(CLI::IsMember({"table", "json", "dot"}));
    branches_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    auto* smoothable_cmd =
        app.add_subcommand("smoothable", "decide smoothability of a configuration");
    smoothable_cmd->add_option("input", input, "config JSON file, or - for stdin")
        ->required();
    smoothable_cmd->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    smoothable_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    auto* report_cmd = app.add_subcommand("report", "plane-cubics dossier");
    report_cmd->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    report_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(strata_cmd)) {
            return cmd_strata(ctx, m_flag, format, out_path);
        }
        if (app.got_subcommand(schedule_cmd)) {
            return cmd_schedule(ctx, variant, format, out_path);
        }
        if (app.got_subcommand(branches_cmd)) {
            return cmd_branches(input, format, out_path);
        }
        if (app.got_subcommand(smoothable_cmd)) {
            return cmd_smoothable(input, format, out_path);
        }
        if (app.got_subcommand(report_cmd)) {
            return cmd_report(format, out_path);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
