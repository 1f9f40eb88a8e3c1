// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [csv-output-dir]
//
// When a directory is given, the sweep CSVs behind criteria 4-6 are written
// there as well.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "slicecal/exact.hpp"
#include "slicecal/experiments.hpp"
#include "slicecal/file_util.hpp"
#include "slicecal/heuristics.hpp"
#include "slicecal/workload.hpp"

using namespace slicecal;

namespace {

constexpr int kOracleInstances = 250;
constexpr int kFeasibilityInstances = 1000;
constexpr int kSeedsPerPoint = 100;
constexpr double kOracleSeconds = 60.0;
constexpr double kFig1Seconds = 300.0;
constexpr double kMonotoneSlackPct = 0.5;
constexpr double kFullAcceptancePct = 99.0;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

std::vector<int> steps_of_ten() { return {10, 20, 30, 40, 50, 60, 70, 80, 90, 100}; }

SweepSpec fig1_spec() {
    SweepSpec spec;
    spec.name = "table2a";
    spec.varied = Varied::Requests;
    spec.points = steps_of_ten();
    spec.base = GenConfig{};  // N=10, T=3, R=20, shares 0.2/0.2/0.6
    spec.seeds_per_point = kSeedsPerPoint;
    return spec;
}

SweepSpec fig2_spec() {
    SweepSpec spec = fig1_spec();
    spec.name = "table2b";
    spec.varied = Varied::Capacity;
    spec.base.num_requests = 50;
    return spec;
}

testing::TinyShape oracle_shape() { return {6, 5, 4, 3}; }

Outcome oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    int mismatches = 0;
    for (int i = 0; i < kOracleInstances; ++i) {
        const Instance inst = testing::random_tiny_instance(static_cast<std::uint64_t>(i), oracle_shape());
        for (auto mode : {SolveMode::Shared, SolveMode::Dedicated}) {
            const auto result = solve_exact(inst, mode);
            if (!result.proven_optimal || result.optimum != testing::enumerate_all(inst, mode))
                ++mismatches;
        }
    }
    const double secs = seconds_since(t0);
    return {mismatches == 0 && secs < kOracleSeconds,
            std::to_string(kOracleInstances) + " instances x 2 modes, " +
                std::to_string(mismatches) + " mismatches, " + fmt(secs, 2) + " s"};
}

Outcome heuristic_feasibility() {
    int violations = 0;
    const auto points = steps_of_ten();
    for (int i = 0; i < kFeasibilityInstances; ++i) {
        GenConfig cfg;
        // Alternate between the two evaluation columns.
        if (i % 2 == 0)
            cfg.num_requests = points[static_cast<std::size_t>(i / 2 % 10)];
        else
            cfg.capacity = points[static_cast<std::size_t>(i / 2 % 10)];
        cfg.seed = derive_seed(12345, static_cast<std::uint64_t>(i));
        const Instance inst = generate(cfg);
        violations += static_cast<int>(validate(inst, dra(inst), true).violations.size());
        violations += static_cast<int>(validate(inst, sra(inst), false).violations.size());
    }
    return {violations == 0, std::to_string(kFeasibilityInstances) + " instances, " +
                                 std::to_string(violations) + " violations"};
}

Outcome dominance_chain() {
    int broken = 0;
    for (int i = 0; i < kOracleInstances; ++i) {
        const Instance inst =
            testing::random_tiny_instance(static_cast<std::uint64_t>(10'000 + i), oracle_shape());
        const auto shared = solve_exact(inst, SolveMode::Shared).optimum;
        const auto dedicated = solve_exact(inst, SolveMode::Dedicated).optimum;
        if (!(shared >= dedicated)) ++broken;
        if (!(shared >= welfare(inst, sra(inst)))) ++broken;
        if (!(dedicated >= welfare(inst, dra(inst)))) ++broken;
    }
    return {broken == 0, std::to_string(kOracleInstances) + " instances, " +
                             std::to_string(broken) + " broken comparisons"};
}

Outcome fig1_trend(const SweepResult& r, double secs) {
    bool sra_ahead = true;
    std::string worst;
    for (int k : steps_of_ten()) {
        const double gap = r.at(k, Algorithm::Sra).mean_acceptance_pct -
                           r.at(k, Algorithm::Dra).mean_acceptance_pct;
        if (gap < 0) {
            sra_ahead = false;
            worst += " K=" + std::to_string(k) + " gap " + fmt(gap);
        }
    }
    const double gap40 = r.at(40, Algorithm::Sra).mean_acceptance_pct -
                         r.at(40, Algorithm::Dra).mean_acceptance_pct;
    const double gap100 = r.at(100, Algorithm::Sra).mean_acceptance_pct -
                          r.at(100, Algorithm::Dra).mean_acceptance_pct;
    const bool narrowing = gap100 <= gap40;
    return {sra_ahead && narrowing && secs < kFig1Seconds,
            std::string("SRA>=DRA at all K: ") + (sra_ahead ? "yes" : "no" + worst) +
                "; gap K=40 " + fmt(gap40) + " vs K=100 " + fmt(gap100) + "; " + fmt(secs, 2) + " s"};
}

Outcome fig2_trend(const SweepResult& r) {
    bool ok = true;
    std::string detail;
    for (auto algo : {Algorithm::Dra, Algorithm::Sra}) {
        int decreases = 0;
        double largest = 0.0;
        const auto points = steps_of_ten();
        for (std::size_t i = 1; i < points.size(); ++i) {
            const double drop = r.at(points[i - 1], algo).mean_acceptance_pct -
                                r.at(points[i], algo).mean_acceptance_pct;
            if (drop > 0) {
                ++decreases;
                largest = std::max(largest, drop);
            }
        }
        const double at100 = r.at(100, algo).mean_acceptance_pct;
        const bool monotone = decreases == 0 || (decreases == 1 && largest <= kMonotoneSlackPct);
        ok = ok && monotone && at100 >= kFullAcceptancePct;
        detail += std::string(to_string(algo)) + ": " + std::to_string(decreases) +
                  " decreases, R=100 " + fmt(at100) + "%; ";
    }
    return {ok, detail};
}

Outcome fig3_trend(const SweepResult& r) {
    const auto& d = r.at(50, Algorithm::Dra).mean_tenant_usage;
    const auto& s = r.at(50, Algorithm::Sra).mean_tenant_usage;
    bool ok = d.size() == 3 && s.size() == 3;
    std::string detail;
    for (std::size_t t = 0; t < d.size() && t < s.size(); ++t) {
        ok = ok && s[t] >= d[t];
        detail += "tenant " + std::to_string(t) + " DRA " + fmt(d[t]) + " SRA " + fmt(s[t]) + "; ";
    }
    return {ok, detail};
}

Outcome determinism(const SweepResult& fig1, const SweepResult& fig2, const SweepResult& fig3) {
    const bool same = to_csv(run_sweep(fig1_spec())) == to_csv(fig1) &&
                      to_csv(run_sweep(fig2_spec())) == to_csv(fig2) &&
                      to_csv(tenant_usage_report(GenConfig{}, 50, 50, kSeedsPerPoint)) == to_csv(fig3);
    return {same, same ? "all three CSVs byte-identical on rerun" : "CSV differs on rerun"};
}

Outcome generator_statistics() {
    GenConfig cfg;
    cfg.num_requests = 10'000;
    cfg.seed = 8;
    const Instance inst = generate(cfg);
    int embb = 0;
    std::vector<int> per_tenant(3, 0);
    for (const auto& r : inst.requests) {
        embb += r.slice == SliceType::Embb;
        ++per_tenant[static_cast<std::size_t>(r.tenant)];
    }
    const double n = 10'000.0;
    const double frac = embb / n;
    const double sigma = std::sqrt(n * (1.0 / 3.0) * (2.0 / 3.0));
    bool ok = frac >= 0.47 && frac <= 0.53;
    std::string detail = "eMBB fraction " + fmt(frac) + "; tenant counts";
    for (int c : per_tenant) {
        ok = ok && std::abs(c - n / 3.0) <= 3.0 * sigma;
        detail += " " + std::to_string(c);
    }
    return {ok, detail + " (3 sigma = " + fmt(3.0 * sigma, 1) + ")"};
}

}  // namespace

int main(int argc, char** argv) {
    int failures = 0;
    auto report = [&failures](int id, const std::string& name, const Outcome& o) {
        std::printf("[%s] AC%d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    };

    report(1, "oracle equivalence", oracle_equivalence());
    report(2, "heuristic feasibility", heuristic_feasibility());
    report(3, "dominance chain", dominance_chain());

    auto t0 = std::chrono::steady_clock::now();
    const SweepResult fig1 = run_sweep(fig1_spec());
    const double fig1_secs = seconds_since(t0);
    report(4, "acceptance vs requests trend", fig1_trend(fig1, fig1_secs));

    const SweepResult fig2 = run_sweep(fig2_spec());
    report(5, "acceptance vs capacity trend", fig2_trend(fig2));

    const SweepResult fig3 = tenant_usage_report(GenConfig{}, 50, 50, kSeedsPerPoint);
    report(6, "per-tenant usage trend", fig3_trend(fig3));

    report(7, "determinism", determinism(fig1, fig2, fig3));
    report(8, "generator statistics", generator_statistics());

    if (argc > 1) {
        const std::filesystem::path dir = argv[1];
        std::filesystem::create_directories(dir);
        write_file_atomic(dir / "table2a.csv", to_csv(fig1));
        write_file_atomic(dir / "table2b.csv", to_csv(fig2));
        write_file_atomic(dir / "tenant_usage.csv", to_csv(fig3));
    }

    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
