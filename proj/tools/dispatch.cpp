#include "dispatch.hpp"

#include <berge/bounds.hpp>
#include <berge/constructions.hpp>
#include <berge/containment.hpp>
#include <berge/error.hpp>
#include <berge/io.hpp>
#include <berge/search.hpp>
#include <berge/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace berge::cli {

namespace {

// Raised for problems in files the user pointed at; these map to exit 3.
struct InputFileError {
    std::string message;
};

Json load_json_file(const std::string& path)
{
    try {
        return parse_json(read_file(path));
    } catch (const Error& e) {
        throw InputFileError{path + ": " + std::string(to_string(e.code())) + ": " + e.what()};
    }
}

// Accepts the interchange format or a construction report holding one.
Hypergraph load_hypergraph(const std::string& path)
{
    const Json doc = load_json_file(path);
    try {
        if (doc.is_object() && doc.contains("hypergraph"))
            return hypergraph_from_json(doc.at("hypergraph"));
        return hypergraph_from_json(doc);
    } catch (const Error& e) {
        throw InputFileError{path + ": " + std::string(to_string(e.code())) + ": " + e.what()};
    }
}

std::string document(const Json& j)
{
    return j.dump(2) + "\n";
}

struct Args {
    // construct
    std::string family, params, out_file;
    // check
    std::string in_file, forest;
    bool witness = false;
    // bound
    std::string theorem;
    // turan
    int n = 0, r = 0, workers = 1, split_depth = 3, iterations = 2000;
    bool connected = false, no_symmetry = false, iso = false, timings = false, local = false;
    std::optional<double> time_limit;
    std::string seed_file;
    // verify
    std::string suite, grid, report_file;
    std::uint64_t rng_seed = 20240601;
    double search_time_limit = 120.0;
};

CommandResult run_construct(const Args& a)
{
    const auto report = construct(a.family, parse_params(a.params));
    if (!a.out_file.empty())
        write_file(a.out_file, serialize(report.hypergraph) + "\n");
    return {0, document(to_json(report)), {}};
}

CommandResult run_check(const Args& a)
{
    const FamilySpec f = FamilySpec::parse(a.forest);
    const Hypergraph h = load_hypergraph(a.in_file);
    const auto w = contains(h, f);
    Json out = {{"contains", w.has_value()}};
    if (w && a.witness)
        out["witness"] = to_json(*w);
    return {0, document(out), {}};
}

CommandResult run_bound(const Args& a)
{
    return {0, document(to_json(eval_bound(a.theorem, parse_params(a.params)))), {}};
}

CommandResult run_turan(const Args& a)
{
    const FamilySpec f = FamilySpec::parse(a.forest);
    SearchOptions opts;
    opts.workers = a.workers;
    opts.time_limit_seconds = a.time_limit;
    opts.symmetry_fixing = !a.no_symmetry;
    opts.isomorphism_pruning = a.iso;
    opts.split_depth = a.split_depth;
    opts.rng_seed = a.rng_seed;
    opts.iterations = a.iterations;
    if (!a.seed_file.empty())
        opts.seed = load_hypergraph(a.seed_file);
    SearchOutcome outcome;
    if (a.local)
        outcome = local_lower_bound(a.n, a.r, f, opts);
    else if (a.connected)
        outcome = turan_connected(a.n, a.r, f, opts);
    else
        outcome = turan_exact(a.n, a.r, f, opts);
    std::ostringstream err;
    err << "search finished in " << outcome.stats.wall_seconds << " s\n";
    return {0, document(to_json(outcome, a.timings)), err.str()};
}

CommandResult run_verify(const Args& a)
{
    VerifyOptions opts;
    opts.rng_seed = a.rng_seed;
    opts.workers = a.workers;
    opts.search_time_limit = a.search_time_limit;
    const auto report = verify_suite(a.suite, a.grid, opts);
    const std::string lines = to_json_lines(report);
    CommandResult result;
    result.exit_code = report.ok() ? 0 : 1;
    if (a.report_file.empty()) {
        result.out = lines;
        result.err = summary_table(report);
    } else {
        write_file(a.report_file, lines);
        result.out = summary_table(report);
    }
    return result;
}

bool usage_error(ErrorCode code)
{
    switch (code) {
    case ErrorCode::malformed_input:
    case ErrorCode::io_error:
        return false;
    default:
        return true;
    }
}

} // namespace

CommandResult dispatch(const std::vector<std::string>& args)
{
    CLI::App app{"Berge hypergraph containment, constructions, bounds and exact Turan numbers", "berge"};
    app.require_subcommand(1);
    Args a;

    auto* construct_cmd = app.add_subcommand("construct", "Generate an extremal construction");
    construct_cmd->add_option("--family", a.family, "hstar | hhat | htilde | clique-blocks | partition-regular")
        ->required()
        ->check(CLI::IsMember({"hstar", "hhat", "htilde", "clique-blocks", "partition-regular"}));
    construct_cmd->add_option("--params", a.params, "k=v,... (htilde takes l1,l2,...)")->required();
    construct_cmd->add_option("--out", a.out_file, "Also write the hypergraph to FILE");

    auto* check_cmd = app.add_subcommand("check", "Test a hypergraph file for a Berge copy");
    check_cmd->add_option("--in", a.in_file, "Hypergraph JSON file")->required();
    check_cmd->add_option("--forest", a.forest, "Family DSL, e.g. P3+2S2")->required();
    check_cmd->add_flag("--witness", a.witness, "Include the witness when one exists");

    auto* bound_cmd = app.add_subcommand("bound", "Evaluate a closed-form bound");
    bound_cmd->add_option("--theorem", a.theorem, "Bound identifier")->required();
    bound_cmd->add_option("--params", a.params, "k=v,...")->required();

    auto* turan_cmd = app.add_subcommand("turan", "Exact Turan number by exhaustive search");
    turan_cmd->add_option("--n", a.n, "Vertex count")->required();
    turan_cmd->add_option("--r", a.r, "Uniformity")->required();
    turan_cmd->add_option("--forest", a.forest, "Family DSL")->required();
    auto* connected_flag = turan_cmd->add_flag("--connected", a.connected, "Restrict to connected hypergraphs");
    turan_cmd->add_option("--workers", a.workers, "Worker threads")->check(CLI::PositiveNumber);
    turan_cmd->add_option("--time-limit", a.time_limit, "Seconds before giving up")->check(CLI::PositiveNumber);
    turan_cmd->add_option("--seed-construction", a.seed_file, "Free hypergraph giving a starting value");
    turan_cmd->add_flag("--no-symmetry", a.no_symmetry, "Do not fix the first edge");
    turan_cmd->add_flag("--iso-pruning", a.iso, "Skip nodes with a smaller relabeling");
    turan_cmd->add_option("--split-depth", a.split_depth, "Depth of the parallel task frontier")
        ->check(CLI::PositiveNumber);
    turan_cmd->add_flag("--local", a.local, "Randomized local search lower bound instead")->excludes(connected_flag);
    turan_cmd->add_option("--iterations", a.iterations, "Local search iterations")->check(CLI::NonNegativeNumber);
    turan_cmd->add_option("--rng-seed", a.rng_seed, "Local search seed");
    turan_cmd->add_flag("--timings", a.timings, "Put wall time in the output document");

    auto* verify_cmd = app.add_subcommand("verify", "Run a cross-check suite");
    verify_cmd->add_option("--suite", a.suite, "constructions | lemma3.1 | bounds-vs-search | thm2.7-desk")
        ->required();
    verify_cmd->add_option("--grid", a.grid, "e.g. n=5..12;l=1..3;f=P1|P2");
    verify_cmd->add_option("--report", a.report_file, "Write JSON lines to FILE, summary to stdout");
    verify_cmd->add_option("--rng-seed", a.rng_seed, "Seed for randomized suites");
    verify_cmd->add_option("--workers", a.workers, "Worker threads per search")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--time-limit", a.search_time_limit, "Seconds per search")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help(), {}};
    } catch (const CLI::CallForAllHelp&) {
        return {0, app.help("", CLI::AppFormatMode::All), {}};
    } catch (const CLI::ParseError& e) {
        return {2, {}, "error: " + std::string(e.what()) + "\n" + app.help()};
    }

    try {
        if (*construct_cmd)
            return run_construct(a);
        if (*check_cmd)
            return run_check(a);
        if (*bound_cmd)
            return run_bound(a);
        if (*turan_cmd)
            return run_turan(a);
        return run_verify(a);
    } catch (const InputFileError& e) {
        return {3, {}, "error: " + e.message + "\n"};
    } catch (const Error& e) {
        std::string msg = "error: " + std::string(to_string(e.code())) + ": " + e.what() + "\n";
        return {usage_error(e.code()) ? 2 : 3, {}, msg};
    } catch (const std::exception& e) {
        return {3, {}, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace berge::cli
