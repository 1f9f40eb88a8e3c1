#pragma once

// Greedy slot-sweeping schedulers.
//
// Both sweep slots 1..horizon and, at every slot, walk the not-yet-accepted
// requests that may still start there in priority order: earlier latest
// start first, then larger demand, then lower id. A request that cannot be
// placed stays pending until its latest start has passed.
//
// DRA confines every tenant to its own reservation. SRA lets a tenant whose
// reservation falls short borrow the remainder from one other tenant with
// idle reserved units across the whole request window.

#include <set>
#include <tuple>
#include <vector>

#include "slicecal/model.hpp"

namespace slicecal {

struct PriorityKey {
    Slot deadline;
    int demand;
    RequestId id;

    friend bool operator<(const PriorityKey& a, const PriorityKey& b) {
        return std::tie(a.deadline, b.demand, a.id) < std::tie(b.deadline, a.demand, b.id);
    }
    friend bool operator==(const PriorityKey&, const PriorityKey&) = default;
};

PriorityKey priority_key(const Request& request, int horizon) noexcept;

/// Pending requests eligible to start at `slot`, highest priority first.
std::vector<RequestId> priority_list(const Instance& instance, Slot slot,
                                     const std::set<RequestId>& pending);

/// Per-slot accounting shared by the heuristics. Vectors are indexed by
/// slot (1-based, index 0 unused) and tenant position in the instance.
class LedgerView {
public:
    explicit LedgerView(const Instance& instance);

    int free_units(Slot n) const { return free_[idx(n)]; }
    int tenant_used(Slot n, int tenant) const { return used_[t(tenant)][idx(n)]; }
    int borrowed_out(Slot n, int tenant) const { return lent_[t(tenant)][idx(n)]; }

    /// Units of the tenant's own reservation still idle in slot n: not
    /// consumed by its own requests and not lent out.
    int own_slack(Slot n, int tenant) const;

    /// Minimum own_slack over [start, start + duration).
    int min_own_slack(int tenant, Slot start, int duration) const;
    int min_free(Slot start, int duration) const;

    /// Charges `demand` units per slot of the window to `tenant`, drawing
    /// first from its own pool and the remainder from `donor`'s pool.
    void charge(int tenant, Slot start, int duration, int demand, int donor = -1);

private:
    static std::size_t idx(Slot n) { return static_cast<std::size_t>(n); }
    static std::size_t t(int tenant) { return static_cast<std::size_t>(tenant); }

    std::vector<int> reserved_;
    std::vector<int> free_;
    std::vector<std::vector<int>> used_;        // units used by the tenant's requests
    std::vector<std::vector<int>> own_charge_;  // part of used_ taken from its own pool
    std::vector<std::vector<int>> lent_;        // units of the tenant's pool lent out
};

/// SRA donor choice for `tenant` needing `demand` units over the window:
/// among tenants whose idle units close the tenant's shortfall in every
/// slot, the one with the largest minimum idle count; earliest in
/// `candidates` on ties. -1 when none qualifies.
int pick_donor(const LedgerView& ledger, const std::vector<int>& candidates, int tenant,
               Slot start, int duration, int demand);

/// Dedicated resource allocation: tenant by tenant, each within its reservation.
Schedule dra(const Instance& instance);

/// Sharing-based resource allocation: one global sweep with single-donor borrowing.
Schedule sra(const Instance& instance);

}  // namespace slicecal
