#include "slicecal/model.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "slicecal/error.hpp"

namespace slicecal {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidInput: return "INVALID_INPUT";
        case ErrorCode::ConfigInvalid: return "CONFIG_INVALID";
        case ErrorCode::SpaceTooLarge: return "SPACE_TOO_LARGE";
        case ErrorCode::ExactTooLarge: return "EXACT_TOO_LARGE";
    }
    return "UNKNOWN";
}

std::string_view to_string(SliceType slice) noexcept {
    return slice == SliceType::Embb ? "EMBB" : "EMBBRLLC";
}

std::optional<SliceType> parse_slice(std::string_view name) noexcept {
    if (name == "EMBB") return SliceType::Embb;
    if (name == "EMBBRLLC") return SliceType::EmbbRllc;
    return std::nullopt;
}

std::string_view to_string(Constraint c) noexcept {
    switch (c) {
        case Constraint::Admission: return "ADMISSION";
        case Constraint::Exclusivity: return "EXCLUSIVITY";
        case Constraint::Demand: return "DEMAND";
        case Constraint::Capacity: return "CAPACITY";
        case Constraint::TenantCap: return "TENANT_CAP";
    }
    return "UNKNOWN";
}

const Request* Instance::find_request(RequestId id) const noexcept {
    auto it = std::find_if(requests.begin(), requests.end(),
                           [id](const Request& r) { return r.id == id; });
    return it == requests.end() ? nullptr : &*it;
}

const Tenant* Instance::find_tenant(TenantId id) const noexcept {
    int idx = tenant_index(id);
    return idx < 0 ? nullptr : &tenants[static_cast<std::size_t>(idx)];
}

int Instance::tenant_index(TenantId id) const noexcept {
    for (std::size_t i = 0; i < tenants.size(); ++i)
        if (tenants[i].id == id) return static_cast<int>(i);
    return -1;
}

namespace {

[[noreturn]] void invalid(const std::string& msg) {
    throw Error(ErrorCode::InvalidInput, msg);
}

}  // namespace

void check_instance(const Instance& instance) {
    if (instance.horizon < 1) invalid("horizon: must be >= 1");
    if (instance.capacity < 0) invalid("capacity: must be >= 0");

    std::set<TenantId> tenant_ids;
    long long reserved_total = 0;
    for (const auto& t : instance.tenants) {
        if (!tenant_ids.insert(t.id).second)
            invalid("tenants.id: duplicate tenant id " + std::to_string(t.id));
        if (t.reserved < 0)
            invalid("tenants.reserved: negative for tenant " + std::to_string(t.id));
        if (t.reserved > instance.capacity)
            invalid("tenants.reserved: tenant " + std::to_string(t.id) +
                    " reserves more than capacity");
        if (t.share < 0.0 || t.share > 1.0)
            invalid("tenants.share: outside [0,1] for tenant " + std::to_string(t.id));
        reserved_total += t.reserved;
    }
    if (reserved_total > instance.capacity)
        invalid("tenants.reserved: reservations sum to " + std::to_string(reserved_total) +
                " which exceeds capacity " + std::to_string(instance.capacity));

    std::set<RequestId> request_ids;
    for (const auto& r : instance.requests) {
        const std::string who = "request " + std::to_string(r.id);
        if (!request_ids.insert(r.id).second) invalid("requests.id: duplicate " + who);
        if (!tenant_ids.contains(r.tenant))
            invalid("requests.tenant: " + who + " refers to unknown tenant " +
                    std::to_string(r.tenant));
        if (r.arrival < 1 || r.arrival > instance.horizon)
            invalid("requests.arrival: " + who + " arrives outside 1..horizon");
        if (r.demand < 1) invalid("requests.demand: " + who + " must be >= 1");
        if (r.duration < 1) invalid("requests.duration: " + who + " must be >= 1");
    }
}

std::optional<Slot> Schedule::start_of(RequestId id) const {
    auto it = starts.find(id);
    return it == starts.end() ? std::nullopt : it->second;
}

int Schedule::accepted_count() const noexcept {
    return static_cast<int>(std::count_if(starts.begin(), starts.end(),
                                          [](const auto& kv) { return kv.second.has_value(); }));
}

Slot latest_start(const Request& request, int horizon) noexcept {
    if (request.duration > horizon) return 0;
    const Slot last_fit = horizon - request.duration + 1;
    if (request.slice == SliceType::EmbbRllc) return std::min(request.arrival, last_fit);
    return last_fit;
}

bool servable(const Request& request, int horizon) noexcept {
    return latest_start(request, horizon) >= request.arrival;
}

int utility(const Request& request, Slot n, int horizon) noexcept {
    return (n >= request.arrival && n <= latest_start(request, horizon)) ? 1 : 0;
}

std::size_t ValidationReport::count(Constraint c) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        violations.begin(), violations.end(), [c](const Violation& v) { return v.constraint == c; }));
}

ValidationReport validate(const Instance& instance, const Schedule& schedule,
                          bool tenant_caps_enforced) {
    ValidationReport report;
    auto add = [&report](Constraint c, Slot slot, RequestId id, std::string detail) {
        report.violations.push_back(Violation{c, slot, id, std::move(detail)});
    };

    // ADMISSION
    for (const auto& [id, start] : schedule.starts) {
        if (!start) continue;
        const Request* r = instance.find_request(id);
        if (!r) {
            add(Constraint::Admission, *start, id, "unknown request id");
            continue;
        }
        const Slot last = latest_start(*r, instance.horizon);
        if (*start < r->arrival || *start > last)
            add(Constraint::Admission, *start, id,
                "start " + std::to_string(*start) + " outside admissible window [" +
                    std::to_string(r->arrival) + ", " + std::to_string(last) + "]");
    }

    // EXCLUSIVITY
    std::map<std::pair<Slot, int>, std::vector<RequestId>> cells;
    for (const auto& a : schedule.assignment) cells[{a.slot, a.unit}].push_back(a.request);
    for (const auto& [cell, holders] : cells) {
        if (holders.size() > 1)
            add(Constraint::Exclusivity, cell.first, holders[1],
                "unit " + std::to_string(cell.second) + " held by " +
                    std::to_string(holders.size()) + " assignments");
    }

    // DEMAND
    std::map<RequestId, std::map<Slot, int>> per_request;
    for (const auto& a : schedule.assignment) ++per_request[a.request][a.slot];
    for (const auto& r : instance.requests) {
        const auto start = schedule.start_of(r.id);
        const auto found = per_request.find(r.id);
        const std::map<Slot, int> empty;
        const auto& used = found == per_request.end() ? empty : found->second;
        if (start) {
            const Slot first = std::max(*start, 1);
            const Slot last = std::min(*start + r.duration - 1, instance.horizon);
            for (Slot n = first; n <= last; ++n) {
                auto it = used.find(n);
                const int got = it == used.end() ? 0 : it->second;
                if (got != r.demand)
                    add(Constraint::Demand, n, r.id,
                        "assigned " + std::to_string(got) + " units, demand " +
                            std::to_string(r.demand));
            }
            for (const auto& [n, got] : used)
                if (n < *start || n > *start + r.duration - 1)
                    add(Constraint::Demand, n, r.id,
                        std::to_string(got) + " units assigned outside active window");
        } else {
            for (const auto& [n, got] : used)
                add(Constraint::Demand, n, r.id,
                    std::to_string(got) + " units assigned to a rejected request");
        }
    }
    for (const auto& [id, used] : per_request) {
        if (instance.find_request(id)) continue;
        for (const auto& [n, got] : used)
            add(Constraint::Demand, n, id, "units assigned to unknown request id");
    }

    // CAPACITY
    std::map<Slot, std::vector<int>> units_by_slot;
    for (const auto& a : schedule.assignment) units_by_slot[a.slot].push_back(a.unit);
    for (const auto& [n, units] : units_by_slot) {
        if (n < 1 || n > instance.horizon) {
            add(Constraint::Capacity, n, -1, "slot outside horizon");
            continue;
        }
        const int total = static_cast<int>(units.size());
        const bool out_of_range = std::any_of(units.begin(), units.end(), [&](int u) {
            return u < 1 || u > instance.capacity;
        });
        if (total > instance.capacity || out_of_range)
            add(Constraint::Capacity, n, -1,
                std::to_string(total) + " units assigned, capacity " +
                    std::to_string(instance.capacity) +
                    (out_of_range ? " (unit index out of range)" : ""));
    }

    // TENANT_CAP
    if (tenant_caps_enforced) {
        std::map<std::pair<Slot, TenantId>, int> usage;
        for (const auto& a : schedule.assignment)
            if (const Request* r = instance.find_request(a.request)) ++usage[{a.slot, r->tenant}];
        for (const auto& [key, used] : usage) {
            const Tenant* t = instance.find_tenant(key.second);
            if (t && used > t->reserved)
                add(Constraint::TenantCap, key.first, -1,
                    "tenant " + std::to_string(t->id) + " uses " + std::to_string(used) +
                        " units, reserved " + std::to_string(t->reserved));
        }
    }
    return report;
}

std::int64_t welfare(const Instance& instance, const Schedule& schedule) {
    std::int64_t total = 0;
    for (const auto& [id, start] : schedule.starts) {
        if (!start) continue;
        if (const Request* r = instance.find_request(id))
            total += utility(*r, *start, instance.horizon);
    }
    return total;
}

std::vector<double> tenant_usage(const Instance& instance, const Schedule& schedule) {
    std::vector<double> usage(instance.tenants.size(), 0.0);
    for (const auto& a : schedule.assignment) {
        const Request* r = instance.find_request(a.request);
        if (!r) continue;
        const int idx = instance.tenant_index(r->tenant);
        if (idx >= 0) usage[static_cast<std::size_t>(idx)] += 1.0;
    }
    for (auto& u : usage) u /= instance.horizon;
    return usage;
}

ScheduleBuilder::ScheduleBuilder(const Instance& instance)
    : instance_(&instance), next_unit_(static_cast<std::size_t>(instance.horizon) + 1, 1) {}

void ScheduleBuilder::accept(const Request& request, Slot start) {
    schedule_.starts[request.id] = start;
    for (Slot n = start; n < start + request.duration; ++n) {
        auto& next = next_unit_[static_cast<std::size_t>(n)];
        for (int i = 0; i < request.demand; ++i)
            schedule_.assignment.push_back(UnitAssignment{n, next++, request.id});
    }
}

void ScheduleBuilder::reject(RequestId id) { schedule_.starts[id] = std::nullopt; }

Schedule ScheduleBuilder::finish() && {
    for (const auto& r : instance_->requests) schedule_.starts.try_emplace(r.id, std::nullopt);
    std::sort(schedule_.assignment.begin(), schedule_.assignment.end(),
              [](const UnitAssignment& a, const UnitAssignment& b) {
                  return std::tie(a.slot, a.unit) < std::tie(b.slot, b.unit);
              });
    return std::move(schedule_);
}

}  // namespace slicecal
