#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "slicecal/model.hpp"

namespace slicecal {

enum class SolveMode {
    Shared,     // per-slot capacity only
    Dedicated,  // additionally, per-slot per-tenant usage <= reservation
};

std::string_view to_string(SolveMode mode) noexcept;
std::optional<SolveMode> parse_mode(std::string_view name) noexcept;

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Node budget from SLICE_CAL_NODE_BUDGET, or kDefaultNodeBudget.
std::uint64_t node_budget_from_env();

struct ExactResult {
    Schedule schedule;
    std::int64_t optimum = 0;
    std::uint64_t nodes_explored = 0;
    bool proven_optimal = false;  // false: budget exhausted, schedule is the incumbent
};

/// Maximum-welfare schedule by depth-first branch and bound over start
/// slots. Units are interchangeable, so the search tracks per-slot counts
/// and only materializes unit indices for the final schedule.
ExactResult solve_exact(const Instance& instance, SolveMode mode,
                        std::optional<std::uint64_t> node_budget = std::nullopt);

/// Product over requests of (number of admissible starts + 1). Saturates at
/// UINT64_MAX.
std::uint64_t search_space_size(const Instance& instance);

}  // namespace slicecal
