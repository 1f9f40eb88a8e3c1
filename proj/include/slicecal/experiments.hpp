#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "slicecal/workload.hpp"

namespace slicecal {

enum class Algorithm { Dra, Sra, ExactShared, ExactDedicated };

std::string_view to_string(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

enum class Varied { Requests, Capacity };

std::string_view to_string(Varied v) noexcept;

struct SweepSpec {
    std::string name = "sweep";
    Varied varied = Varied::Requests;
    std::vector<int> points;
    GenConfig base;
    int seeds_per_point = 100;
    std::vector<Algorithm> algorithms{Algorithm::Dra, Algorithm::Sra};
    std::optional<std::uint64_t> node_budget;  // exact solver; env/default when unset
};

/// Throws Error(InvalidInput) naming the offending field.
void check_spec(const SweepSpec& spec);

SweepSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const SweepSpec& spec);

struct PointStats {
    int point = 0;
    Algorithm algorithm = Algorithm::Dra;
    int seeds = 0;
    double mean_acceptance_pct = 0.0;
    double std_acceptance_pct = 0.0;  // sample standard deviation, 0 for one seed
    double mean_welfare = 0.0;
    std::vector<double> mean_tenant_usage;  // units per slot, per tenant
};

struct SweepResult {
    std::string name;
    Varied varied = Varied::Requests;
    std::vector<PointStats> rows;  // point-major, algorithms in spec order

    const PointStats& at(int point, Algorithm algorithm) const;
};

/// 100 * accepted / requests, or 100 when there are no requests.
double acceptance_pct(int accepted, int requests) noexcept;

/// Runs every (point, seed, algorithm) combination. Seed i at every point
/// uses derive_seed(base.seed, i), so points share their random streams.
SweepResult run_sweep(const SweepSpec& spec);

/// Heuristic per-tenant usage at fixed request count and capacity.
SweepResult tenant_usage_report(const GenConfig& base, int requests, int capacity, int seeds);

/// Header plus one row per PointStats; fixed four-decimal floats.
std::string to_csv(const SweepResult& result);

}  // namespace slicecal
