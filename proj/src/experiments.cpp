#include "slicecal/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "slicecal/error.hpp"
#include "slicecal/exact.hpp"
#include "slicecal/heuristics.hpp"

namespace slicecal {

using nlohmann::json;

std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
        case Algorithm::Dra: return "dra";
        case Algorithm::Sra: return "sra";
        case Algorithm::ExactShared: return "exact-shared";
        case Algorithm::ExactDedicated: return "exact-dedicated";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    for (auto a : {Algorithm::Dra, Algorithm::Sra, Algorithm::ExactShared, Algorithm::ExactDedicated})
        if (to_string(a) == name) return a;
    return std::nullopt;
}

std::string_view to_string(Varied v) noexcept {
    return v == Varied::Requests ? "requests" : "capacity";
}

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::InvalidInput, field + ": " + what);
}

}  // namespace

void check_spec(const SweepSpec& spec) {
    if (spec.points.empty()) invalid("points", "must not be empty");
    for (std::size_t i = 1; i < spec.points.size(); ++i)
        if (spec.points[i] <= spec.points[i - 1]) invalid("points", "must be strictly increasing");
    if (spec.points.front() < 0) invalid("points", "must be >= 0");
    if (spec.seeds_per_point < 1) invalid("seeds_per_point", "must be >= 1");
    if (spec.algorithms.empty()) invalid("algorithms", "must not be empty");
    for (std::size_t i = 0; i < spec.algorithms.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (spec.algorithms[i] == spec.algorithms[j]) invalid("algorithms", "duplicate entry");
    if (spec.node_budget && *spec.node_budget == 0) invalid("node_budget", "must be >= 1");
}

SweepSpec spec_from_json(const json& doc) {
    if (!doc.is_object()) invalid("spec", "expected an object");
    SweepSpec spec;
    for (const auto& [key, v] : doc.items()) {
        if (key == "name") {
            if (!v.is_string()) invalid(key, "expected a string");
            spec.name = v.get<std::string>();
        } else if (key == "varied") {
            const std::string s = v.is_string() ? v.get<std::string>() : "";
            if (s == "requests" || s == "REQUESTS") spec.varied = Varied::Requests;
            else if (s == "capacity" || s == "CAPACITY") spec.varied = Varied::Capacity;
            else invalid(key, "expected \"requests\" or \"capacity\"");
        } else if (key == "points") {
            if (!v.is_array()) invalid(key, "expected an array of integers");
            spec.points.clear();
            for (const auto& p : v) {
                if (!p.is_number_integer()) invalid(key, "expected an array of integers");
                spec.points.push_back(p.get<int>());
            }
        } else if (key == "base") {
            try {
                spec.base = config_from_json(v);
            } catch (const Error& e) {
                invalid("base", e.what());
            }
        } else if (key == "seeds_per_point") {
            if (!v.is_number_integer()) invalid(key, "expected an integer");
            spec.seeds_per_point = v.get<int>();
        } else if (key == "algorithms") {
            if (!v.is_array()) invalid(key, "expected an array of names");
            spec.algorithms.clear();
            for (const auto& a : v) {
                auto parsed = a.is_string() ? parse_algorithm(a.get<std::string>()) : std::nullopt;
                if (!parsed)
                    invalid(key, "unknown algorithm " + a.dump() +
                                     " (valid: dra, sra, exact-shared, exact-dedicated)");
                spec.algorithms.push_back(*parsed);
            }
        } else if (key == "node_budget") {
            if (!v.is_number_unsigned()) invalid(key, "expected a positive integer");
            spec.node_budget = v.get<std::uint64_t>();
        } else {
            invalid(key, "unknown spec key");
        }
    }
    check_spec(spec);
    return spec;
}

json to_json(const SweepSpec& spec) {
    json algos = json::array();
    for (auto a : spec.algorithms) algos.push_back(std::string(to_string(a)));
    json doc = {{"name", spec.name},
                {"varied", std::string(to_string(spec.varied))},
                {"points", spec.points},
                {"base", to_json(spec.base)},
                {"seeds_per_point", spec.seeds_per_point},
                {"algorithms", std::move(algos)}};
    if (spec.node_budget) doc["node_budget"] = *spec.node_budget;
    return doc;
}

const PointStats& SweepResult::at(int point, Algorithm algorithm) const {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const PointStats& s) {
        return s.point == point && s.algorithm == algorithm;
    });
    if (it == rows.end())
        throw Error(ErrorCode::InvalidInput, "no row for point " + std::to_string(point) +
                                                 " algorithm " + std::string(to_string(algorithm)));
    return *it;
}

double acceptance_pct(int accepted, int requests) noexcept {
    return requests == 0 ? 100.0 : 100.0 * accepted / requests;
}

namespace {

struct RunOutcome {
    double acceptance = 0.0;
    double welfare = 0.0;
    std::vector<double> usage;
};

RunOutcome run_one(const Instance& inst, Algorithm algo, std::uint64_t budget) {
    Schedule schedule;
    switch (algo) {
        case Algorithm::Dra: schedule = dra(inst); break;
        case Algorithm::Sra: schedule = sra(inst); break;
        case Algorithm::ExactShared:
        case Algorithm::ExactDedicated: {
            if (search_space_size(inst) > budget)
                throw Error(ErrorCode::ExactTooLarge,
                            "exact solver requested on an instance whose search space exceeds "
                            "the node budget of " + std::to_string(budget));
            const auto mode =
                algo == Algorithm::ExactShared ? SolveMode::Shared : SolveMode::Dedicated;
            auto result = solve_exact(inst, mode, budget);
            if (!result.proven_optimal)
                throw Error(ErrorCode::ExactTooLarge, "exact solver exhausted its node budget");
            schedule = std::move(result.schedule);
            break;
        }
    }
    const int k = static_cast<int>(inst.requests.size());
    return RunOutcome{acceptance_pct(schedule.accepted_count(), k),
                      static_cast<double>(welfare(inst, schedule)), tenant_usage(inst, schedule)};
}

PointStats aggregate(int point, Algorithm algo, const std::vector<RunOutcome>& runs,
                     std::size_t num_tenants) {
    PointStats s;
    s.point = point;
    s.algorithm = algo;
    s.seeds = static_cast<int>(runs.size());
    s.mean_tenant_usage.assign(num_tenants, 0.0);
    for (const auto& r : runs) {
        s.mean_acceptance_pct += r.acceptance;
        s.mean_welfare += r.welfare;
        for (std::size_t t = 0; t < num_tenants; ++t) s.mean_tenant_usage[t] += r.usage[t];
    }
    const double n = static_cast<double>(runs.size());
    s.mean_acceptance_pct /= n;
    s.mean_welfare /= n;
    for (auto& u : s.mean_tenant_usage) u /= n;
    if (runs.size() > 1) {
        double ss = 0.0;
        for (const auto& r : runs) ss += (r.acceptance - s.mean_acceptance_pct) * (r.acceptance - s.mean_acceptance_pct);
        s.std_acceptance_pct = std::sqrt(ss / (n - 1.0));
    }
    return s;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    check_spec(spec);
    check_config(spec.base);
    const std::uint64_t budget = spec.node_budget.value_or(node_budget_from_env());
    const std::size_t num_tenants = spec.base.tenant_shares.size();

    SweepResult result;
    result.name = spec.name;
    result.varied = spec.varied;
    for (int point : spec.points) {
        std::vector<std::vector<RunOutcome>> runs(spec.algorithms.size());
        for (int i = 0; i < spec.seeds_per_point; ++i) {
            GenConfig cfg = spec.base;
            (spec.varied == Varied::Requests ? cfg.num_requests : cfg.capacity) = point;
            cfg.seed = derive_seed(spec.base.seed, static_cast<std::uint64_t>(i));
            const Instance inst = generate(cfg);
            for (std::size_t a = 0; a < spec.algorithms.size(); ++a)
                runs[a].push_back(run_one(inst, spec.algorithms[a], budget));
        }
        for (std::size_t a = 0; a < spec.algorithms.size(); ++a)
            result.rows.push_back(aggregate(point, spec.algorithms[a], runs[a], num_tenants));
    }
    return result;
}

SweepResult tenant_usage_report(const GenConfig& base, int requests, int capacity, int seeds) {
    SweepSpec spec;
    spec.name = "tenant_usage";
    spec.varied = Varied::Capacity;
    spec.points = {capacity};
    spec.base = base;
    spec.base.num_requests = requests;
    spec.seeds_per_point = seeds;
    spec.algorithms = {Algorithm::Dra, Algorithm::Sra};
    return run_sweep(spec);
}

std::string to_csv(const SweepResult& result) {
    std::size_t num_tenants = 0;
    for (const auto& r : result.rows) num_tenants = std::max(num_tenants, r.mean_tenant_usage.size());

    std::string out = "sweep,point,algorithm,seeds,mean_acceptance_pct,std_acceptance_pct,mean_welfare";
    for (std::size_t t = 0; t < num_tenants; ++t) out += ",tenant_usage_" + std::to_string(t);
    out += '\n';

    char buf[64];
    auto fixed = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.4f", v);
        return std::string(buf);
    };
    for (const auto& r : result.rows) {
        out += result.name + ',' + std::to_string(r.point) + ',' + std::string(to_string(r.algorithm)) +
               ',' + std::to_string(r.seeds) + ',' + fixed(r.mean_acceptance_pct) + ',' +
               fixed(r.std_acceptance_pct) + ',' + fixed(r.mean_welfare);
        for (std::size_t t = 0; t < num_tenants; ++t)
            out += ',' + fixed(t < r.mean_tenant_usage.size() ? r.mean_tenant_usage[t] : 0.0);
        out += '\n';
    }
    return out;
}

}  // namespace slicecal
