#pragma once

// Core domain model for slice-aware radio resource calendaring.
//
// Time is divided into slots 1..horizon; every slot offers `capacity`
// interchangeable resource units numbered 1..capacity. A request asks for
// `demand` units in each of `duration` consecutive slots and cannot be
// interrupted once started. Each request belongs to a tenant that holds a
// contractual reservation of units per slot.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slicecal {

using RequestId = int;
using TenantId = int;
using Slot = int;

enum class SliceType {
    Embb,      // delay tolerant, may start at any slot after arrival
    EmbbRllc,  // must start at its arrival slot
};

std::string_view to_string(SliceType slice) noexcept;
std::optional<SliceType> parse_slice(std::string_view name) noexcept;

struct Tenant {
    TenantId id = 0;
    int reserved = 0;
    double share = 0.0;

    friend bool operator==(const Tenant&, const Tenant&) = default;
};

struct Request {
    RequestId id = 0;
    TenantId tenant = 0;
    SliceType slice = SliceType::Embb;
    Slot arrival = 1;
    int demand = 1;
    int duration = 1;

    friend bool operator==(const Request&, const Request&) = default;
};

struct Instance {
    int horizon = 1;
    int capacity = 0;
    std::vector<Tenant> tenants;
    std::vector<Request> requests;

    friend bool operator==(const Instance&, const Instance&) = default;

    const Request* find_request(RequestId id) const noexcept;
    const Tenant* find_tenant(TenantId id) const noexcept;
    // Position of a tenant in `tenants`, or -1.
    int tenant_index(TenantId id) const noexcept;
};

// Throws Error(InvalidInput) naming the offending field.
void check_instance(const Instance& instance);

/// One occupied (slot, unit) cell of the resource grid.
struct UnitAssignment {
    Slot slot = 1;
    int unit = 1;
    RequestId request = 0;

    friend bool operator==(const UnitAssignment&, const UnitAssignment&) = default;
};

/// A calendaring decision. `starts` maps every decided request to its start
/// slot, or to nullopt when rejected. `assignment` lists the occupied cells
/// of the slot x unit grid.
struct Schedule {
    std::map<RequestId, std::optional<Slot>> starts;
    std::vector<UnitAssignment> assignment;

    friend bool operator==(const Schedule&, const Schedule&) = default;

    std::optional<Slot> start_of(RequestId id) const;
    int accepted_count() const noexcept;
};

/// Last slot from which the request can start. 0 when the duration exceeds
/// the horizon; a value below `arrival` marks the request as unservable.
Slot latest_start(const Request& request, int horizon) noexcept;

bool servable(const Request& request, int horizon) noexcept;

/// 0/1 utility of starting `request` at slot `n`.
int utility(const Request& request, Slot n, int horizon) noexcept;

enum class Constraint { Admission, Exclusivity, Demand, Capacity, TenantCap };

std::string_view to_string(Constraint c) noexcept;

struct Violation {
    Constraint constraint;
    Slot slot = 0;           // 0 when not slot specific
    RequestId request = -1;  // -1 when not request specific
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool feasible() const noexcept { return violations.empty(); }
    std::size_t count(Constraint c) const noexcept;
};

ValidationReport validate(const Instance& instance, const Schedule& schedule,
                          bool tenant_caps_enforced);

/// Sum of utilities of accepted requests.
std::int64_t welfare(const Instance& instance, const Schedule& schedule);

/// Average units consumed per slot by each tenant's requests, indexed like
/// `instance.tenants`.
std::vector<double> tenant_usage(const Instance& instance, const Schedule& schedule);

/// Builds a Schedule from accept decisions, placing each accepted request on
/// the lowest-numbered free units of every slot it occupies.
class ScheduleBuilder {
public:
    explicit ScheduleBuilder(const Instance& instance);

    void accept(const Request& request, Slot start);
    void reject(RequestId id);

    /// Marks every request without a decision as rejected.
    Schedule finish() &&;

private:
    const Instance* instance_;
    std::vector<int> next_unit_;  // per slot, 1-based; index 0 unused
    Schedule schedule_;
};

}  // namespace slicecal
