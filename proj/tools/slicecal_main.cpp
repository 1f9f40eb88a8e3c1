// slicecal: generate instances, run the schedulers, validate schedules and
// run the acceptance-rate / usage experiments.
//
// Exit status: 0 success, 1 invalid input, 2 VALIDATE found violations.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "slicecal/error.hpp"
#include "slicecal/exact.hpp"
#include "slicecal/experiments.hpp"
#include "slicecal/file_util.hpp"
#include "slicecal/heuristics.hpp"
#include "slicecal/json_io.hpp"
#include "slicecal/workload.hpp"

namespace {

using namespace slicecal;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInfeasible = 2;

struct Options {
    std::string config;
    std::string instance;
    std::string schedule;
    std::string algo;
    std::string mode;
    std::string validate_mode = "shared";
    std::string spec;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> seeds_per_point;

    // generate overrides
    std::optional<int> horizon;
    std::optional<int> capacity;
    std::optional<int> requests;

    // usage-report
    int k = 50;
    int r = 50;
    int seeds = 100;
};

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_file_atomic(path, text);
}

int cmd_generate(const Options& o) {
    GenConfig cfg;
    if (!o.config.empty()) cfg = parse_config(read_text_file(o.config), o.config);
    if (o.horizon) cfg.horizon = *o.horizon;
    if (o.capacity) cfg.capacity = *o.capacity;
    if (o.requests) cfg.num_requests = *o.requests;
    if (o.seed) cfg.seed = *o.seed;
    const Instance inst = generate(cfg);
    auto doc = to_json(inst);
    doc["generator"] = {{"rng", std::string(kRngAlgorithm)}, {"seed", cfg.seed}};
    write_or_print(o.out, doc.dump(2) + "\n");
    std::cerr << "generated " << inst.requests.size() << " requests (rng " << kRngAlgorithm
              << ", seed " << cfg.seed << ")\n";
    return kExitOk;
}

int cmd_solve(const Options& o) {
    const Instance inst = instance_from_json(read_json_file(o.instance));

    Schedule schedule;
    SolveMode mode = SolveMode::Shared;
    std::string extra;
    if (o.algo == "dra") {
        mode = o.mode.empty() ? SolveMode::Dedicated : *parse_mode(o.mode);
        schedule = dra(inst);
    } else if (o.algo == "sra") {
        mode = o.mode.empty() ? SolveMode::Shared : *parse_mode(o.mode);
        schedule = sra(inst);
    } else {
        if (o.mode.empty())
            throw Error(ErrorCode::InvalidInput, "--mode: required with --algo exact (shared|dedicated)");
        mode = *parse_mode(o.mode);
        auto result = solve_exact(inst, mode, node_budget_from_env());
        schedule = std::move(result.schedule);
        extra = " nodes=" + std::to_string(result.nodes_explored) +
                " proven_optimal=" + (result.proven_optimal ? "true" : "false");
    }

    write_file_atomic(o.out, to_json(schedule).dump(2) + "\n");
    const auto report = validate(inst, schedule, mode == SolveMode::Dedicated);
    std::cout << "algorithm=" << o.algo << " mode=" << to_string(mode)
              << " requests=" << inst.requests.size() << " accepted=" << schedule.accepted_count()
              << " welfare=" << welfare(inst, schedule)
              << " feasible=" << (report.feasible() ? "true" : "false") << extra << "\n";
    return kExitOk;
}

int cmd_validate(const Options& o) {
    const Instance inst = instance_from_json(read_json_file(o.instance));
    const Schedule schedule = schedule_from_json(read_json_file(o.schedule));
    const bool caps = o.validate_mode == "dedicated";
    const auto report = validate(inst, schedule, caps);
    auto doc = to_json(report);
    if (report.feasible()) doc["welfare"] = welfare(inst, schedule);
    write_or_print(o.out, doc.dump(2) + "\n");
    return report.feasible() ? kExitOk : kExitInfeasible;
}

int cmd_sweep(const Options& o) {
    SweepSpec spec = spec_from_json(read_json_file(o.spec));
    if (o.seed) spec.base.seed = *o.seed;
    if (o.seeds_per_point) spec.seeds_per_point = *o.seeds_per_point;
    write_or_print(o.out, to_csv(run_sweep(spec)));
    return kExitOk;
}

int cmd_usage_report(const Options& o) {
    GenConfig cfg;
    if (!o.config.empty()) cfg = parse_config(read_text_file(o.config), o.config);
    if (o.seed) cfg.seed = *o.seed;
    write_or_print(o.out, to_csv(tenant_usage_report(cfg, o.k, o.r, o.seeds)));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slice-aware radio resource calendaring toolkit"};
    app.require_subcommand(1, 1);
    Options o;

    auto* gen = app.add_subcommand("generate", "Generate a random instance from a config");
    gen->add_option("--config", o.config, "Generator config (JSON or key = value lines)")
        ->check(CLI::ExistingFile);
    gen->add_option("--horizon", o.horizon, "Override number of slots");
    gen->add_option("--capacity", o.capacity, "Override units per slot");
    gen->add_option("--requests", o.requests, "Override number of requests");
    gen->add_option("--seed", o.seed, "Override the config seed");
    gen->add_option("--out", o.out, "Instance JSON output (stdout when omitted)");

    auto* solve = app.add_subcommand("solve", "Schedule an instance");
    solve->add_option("--instance", o.instance, "Instance JSON")->required()->check(CLI::ExistingFile);
    solve->add_option("--algo", o.algo, "Scheduler")
        ->required()
        ->check(CLI::IsMember({"dra", "sra", "exact"}));
    solve->add_option("--mode", o.mode, "Constraint regime")
        ->check(CLI::IsMember({"shared", "dedicated"}));
    solve->add_option("--out", o.out, "Schedule JSON output")->required();

    auto* val = app.add_subcommand("validate", "Check a schedule against an instance");
    val->add_option("--instance", o.instance, "Instance JSON")->required()->check(CLI::ExistingFile);
    val->add_option("--schedule", o.schedule, "Schedule JSON")->required()->check(CLI::ExistingFile);
    val->add_option("--mode", o.validate_mode, "dedicated also enforces per-tenant caps")
        ->check(CLI::IsMember({"shared", "dedicated"}))
        ->capture_default_str();
    val->add_option("--out", o.out, "Report JSON output (stdout when omitted)");

    auto* sweep = app.add_subcommand("sweep", "Run an acceptance-rate sweep");
    sweep->add_option("--spec", o.spec, "Sweep spec JSON")->required()->check(CLI::ExistingFile);
    sweep->add_option("--seed", o.seed, "Override the base seed");
    sweep->add_option("--seeds-per-point", o.seeds_per_point, "Override seeds per point")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--out", o.out, "CSV output (stdout when omitted)");

    auto* usage = app.add_subcommand("usage-report", "Per-tenant usage of DRA and SRA");
    usage->add_option("--config", o.config, "Base generator config")->check(CLI::ExistingFile);
    usage->add_option("--k", o.k, "Number of requests")->check(CLI::PositiveNumber);
    usage->add_option("--r", o.r, "Units per slot")->check(CLI::PositiveNumber);
    usage->add_option("--seeds", o.seeds, "Instances to average")->check(CLI::PositiveNumber);
    usage->add_option("--seeds-per-point", o.seeds, "Alias of --seeds")->check(CLI::PositiveNumber);
    usage->add_option("--seed", o.seed, "Override the base seed");
    usage->add_option("--out", o.out, "CSV output (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (gen->parsed()) return cmd_generate(o);
        if (solve->parsed()) return cmd_solve(o);
        if (val->parsed()) return cmd_validate(o);
        if (sweep->parsed()) return cmd_sweep(o);
        if (usage->parsed()) return cmd_usage_report(o);
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
