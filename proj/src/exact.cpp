#include "slicecal/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <tuple>

namespace slicecal {

std::string_view to_string(SolveMode mode) noexcept {
    return mode == SolveMode::Shared ? "shared" : "dedicated";
}

std::optional<SolveMode> parse_mode(std::string_view name) noexcept {
    if (name == "shared") return SolveMode::Shared;
    if (name == "dedicated") return SolveMode::Dedicated;
    return std::nullopt;
}

std::uint64_t node_budget_from_env() {
    const char* raw = std::getenv("SLICE_CAL_NODE_BUDGET");
    if (!raw || !*raw) return kDefaultNodeBudget;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(raw, &used);
        if (used == std::string(raw).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    return kDefaultNodeBudget;
}

std::uint64_t search_space_size(const Instance& instance) {
    std::uint64_t size = 1;
    for (const auto& r : instance.requests) {
        const int choices = std::max(0, latest_start(r, instance.horizon) - r.arrival + 1);
        const auto factor = static_cast<std::uint64_t>(choices) + 1;
        if (size > std::numeric_limits<std::uint64_t>::max() / factor)
            return std::numeric_limits<std::uint64_t>::max();
        size *= factor;
    }
    return size;
}

namespace {

struct Item {
    const Request* request;
    int tenant_index;
    Slot first;
    Slot last;
};

class BranchAndBound {
public:
    BranchAndBound(const Instance& instance, SolveMode mode, std::uint64_t budget)
        : instance_(instance), mode_(mode), budget_(budget) {
        const auto slots = static_cast<std::size_t>(instance.horizon) + 1;
        free_.assign(slots, instance.capacity);
        if (mode == SolveMode::Dedicated) {
            tenant_free_.resize(instance.tenants.size());
            for (std::size_t t = 0; t < instance.tenants.size(); ++t)
                tenant_free_[t].assign(slots, instance.tenants[t].reserved);
        }

        for (const auto& r : instance.requests) {
            const int ti = instance.tenant_index(r.tenant);
            const int cap = mode == SolveMode::Dedicated
                                ? instance.tenants[static_cast<std::size_t>(ti)].reserved
                                : instance.capacity;
            if (!servable(r, instance.horizon) || r.demand > cap) continue;
            items_.push_back(Item{&r, ti, r.arrival, latest_start(r, instance.horizon)});
        }
        std::sort(items_.begin(), items_.end(), [](const Item& a, const Item& b) {
            return std::make_tuple(a.last, -a.request->demand, a.request->id) <
                   std::make_tuple(b.last, -b.request->demand, b.request->id);
        });
        current_.assign(items_.size(), 0);
        best_starts_ = current_;
    }

    ExactResult run() {
        const bool complete = search(0, 0);
        ExactResult result;
        result.optimum = best_;
        result.nodes_explored = nodes_;
        result.proven_optimal = complete;

        ScheduleBuilder builder(instance_);
        for (std::size_t i = 0; i < items_.size(); ++i)
            if (best_starts_[i] != 0) builder.accept(*items_[i].request, best_starts_[i]);
        result.schedule = std::move(builder).finish();
        return result;
    }

private:
    bool fits(const Item& item, Slot start) const {
        const int demand = item.request->demand;
        const Slot end = start + item.request->duration;
        for (Slot n = start; n < end; ++n) {
            if (free_[static_cast<std::size_t>(n)] < demand) return false;
            if (mode_ == SolveMode::Dedicated &&
                tenant_free_[static_cast<std::size_t>(item.tenant_index)]
                            [static_cast<std::size_t>(n)] < demand)
                return false;
        }
        return true;
    }

    void charge(const Item& item, Slot start, int sign) {
        const int delta = sign * item.request->demand;
        const Slot end = start + item.request->duration;
        for (Slot n = start; n < end; ++n) {
            free_[static_cast<std::size_t>(n)] -= delta;
            if (mode_ == SolveMode::Dedicated)
                tenant_free_[static_cast<std::size_t>(item.tenant_index)]
                            [static_cast<std::size_t>(n)] -= delta;
        }
    }

    // Returns false when the node budget ran out.
    bool search(std::size_t depth, std::int64_t accepted) {
        if (++nodes_ > budget_) return false;
        const auto remaining = static_cast<std::int64_t>(items_.size() - depth);
        if (accepted + remaining <= best_) return true;
        if (depth == items_.size()) {
            best_ = accepted;
            best_starts_ = current_;
            return true;
        }

        const Item& item = items_[depth];
        for (Slot start = item.first; start <= item.last; ++start) {
            if (!fits(item, start)) continue;
            charge(item, start, +1);
            current_[depth] = start;
            const bool ok = search(depth + 1, accepted + 1);
            current_[depth] = 0;
            charge(item, start, -1);
            if (!ok) return false;
        }
        return search(depth + 1, accepted);
    }

    const Instance& instance_;
    SolveMode mode_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;

    std::vector<Item> items_;
    std::vector<int> free_;
    std::vector<std::vector<int>> tenant_free_;
    std::vector<Slot> current_;  // 0 = rejected
    std::vector<Slot> best_starts_;
    std::int64_t best_ = 0;
};

}  // namespace

ExactResult solve_exact(const Instance& instance, SolveMode mode,
                        std::optional<std::uint64_t> node_budget) {
    BranchAndBound bnb(instance, mode, node_budget.value_or(kDefaultNodeBudget));
    return bnb.run();
}

}  // namespace slicecal
