#include "slicecal/heuristics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace slicecal {

PriorityKey priority_key(const Request& request, int horizon) noexcept {
    return PriorityKey{latest_start(request, horizon), request.demand, request.id};
}

std::vector<RequestId> priority_list(const Instance& instance, Slot slot,
                                     const std::set<RequestId>& pending) {
    std::vector<PriorityKey> keys;
    for (RequestId id : pending) {
        const Request* r = instance.find_request(id);
        if (!r) continue;
        const PriorityKey key = priority_key(*r, instance.horizon);
        if (r->arrival <= slot && slot <= key.deadline) keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    std::vector<RequestId> ids;
    ids.reserve(keys.size());
    for (const auto& k : keys) ids.push_back(k.id);
    return ids;
}

LedgerView::LedgerView(const Instance& instance)
    : free_(static_cast<std::size_t>(instance.horizon) + 1, instance.capacity) {
    const auto slots = free_.size();
    for (const auto& tenant : instance.tenants) {
        reserved_.push_back(tenant.reserved);
        used_.emplace_back(slots, 0);
        own_charge_.emplace_back(slots, 0);
        lent_.emplace_back(slots, 0);
    }
}

int LedgerView::own_slack(Slot n, int tenant) const {
    return reserved_[t(tenant)] - own_charge_[t(tenant)][idx(n)] - lent_[t(tenant)][idx(n)];
}

int LedgerView::min_own_slack(int tenant, Slot start, int duration) const {
    int slack = std::numeric_limits<int>::max();
    for (Slot n = start; n < start + duration; ++n) slack = std::min(slack, own_slack(n, tenant));
    return slack;
}

int LedgerView::min_free(Slot start, int duration) const {
    int f = std::numeric_limits<int>::max();
    for (Slot n = start; n < start + duration; ++n) f = std::min(f, free_[idx(n)]);
    return f;
}

void LedgerView::charge(int tenant, Slot start, int duration, int demand, int donor) {
    for (Slot n = start; n < start + duration; ++n) {
        const int own = std::clamp(own_slack(n, tenant), 0, demand);
        const int borrowed = demand - own;
        own_charge_[t(tenant)][idx(n)] += own;
        used_[t(tenant)][idx(n)] += demand;
        if (borrowed > 0) lent_[t(donor)][idx(n)] += borrowed;
        free_[idx(n)] -= demand;
    }
}

namespace {

// Tenant positions ordered by tenant id.
std::vector<int> tenants_by_id(const Instance& instance) {
    std::vector<int> order(instance.tenants.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return instance.tenants[static_cast<std::size_t>(a)].id <
               instance.tenants[static_cast<std::size_t>(b)].id;
    });
    return order;
}

// Drops requests whose last admissible start is `slot` or earlier.
void expire(const Instance& instance, Slot slot, std::set<RequestId>& pending) {
    std::erase_if(pending, [&](RequestId id) {
        return latest_start(*instance.find_request(id), instance.horizon) <= slot;
    });
}

}  // namespace

int pick_donor(const LedgerView& ledger, const std::vector<int>& candidates, int tenant,
               Slot start, int duration, int demand) {
    int donor = -1;
    int donor_slack = -1;
    for (int cand : candidates) {
        if (cand == tenant) continue;
        bool covers = true;
        for (Slot n = start; n < start + duration && covers; ++n)
            covers = std::max(ledger.own_slack(n, tenant), 0) +
                         std::max(ledger.own_slack(n, cand), 0) >=
                     demand;
        if (!covers) continue;
        const int slack = ledger.min_own_slack(cand, start, duration);
        if (slack > donor_slack) {
            donor = cand;
            donor_slack = slack;
        }
    }
    return donor;
}

Schedule dra(const Instance& instance) {
    ScheduleBuilder builder(instance);
    LedgerView ledger(instance);

    for (int ti : tenants_by_id(instance)) {
        const Tenant& tenant = instance.tenants[static_cast<std::size_t>(ti)];
        std::set<RequestId> pending;
        for (const auto& r : instance.requests)
            if (r.tenant == tenant.id && servable(r, instance.horizon)) pending.insert(r.id);

        for (Slot n = 1; n <= instance.horizon && !pending.empty(); ++n) {
            for (RequestId id : priority_list(instance, n, pending)) {
                const Request& r = *instance.find_request(id);
                if (r.demand > tenant.reserved) {
                    pending.erase(id);
                    continue;
                }
                if (ledger.min_own_slack(ti, n, r.duration) >= r.demand &&
                    ledger.min_free(n, r.duration) >= r.demand) {
                    ledger.charge(ti, n, r.duration, r.demand);
                    builder.accept(r, n);
                    pending.erase(id);
                }
            }
            expire(instance, n, pending);
        }
    }
    return std::move(builder).finish();
}

Schedule sra(const Instance& instance) {
    ScheduleBuilder builder(instance);
    LedgerView ledger(instance);
    const std::vector<int> tenant_order = tenants_by_id(instance);

    std::set<RequestId> pending;
    for (const auto& r : instance.requests)
        if (servable(r, instance.horizon)) pending.insert(r.id);

    for (Slot n = 1; n <= instance.horizon && !pending.empty(); ++n) {
        for (RequestId id : priority_list(instance, n, pending)) {
            const Request& r = *instance.find_request(id);
            const int ti = instance.tenant_index(r.tenant);
            if (ledger.min_free(n, r.duration) < r.demand) continue;

            if (ledger.min_own_slack(ti, n, r.duration) >= r.demand) {
                ledger.charge(ti, n, r.duration, r.demand);
                builder.accept(r, n);
                pending.erase(id);
                continue;
            }

            const int donor = pick_donor(ledger, tenant_order, ti, n, r.duration, r.demand);
            if (donor < 0) continue;
            ledger.charge(ti, n, r.duration, r.demand, donor);
            builder.accept(r, n);
            pending.erase(id);
        }
        expire(instance, n, pending);
    }
    return std::move(builder).finish();
}

}  // namespace slicecal
