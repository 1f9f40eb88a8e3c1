#include "slicecal/json_io.hpp"

#include <limits>

#include "slicecal/error.hpp"
#include "slicecal/file_util.hpp"

namespace slicecal {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::InvalidInput, field + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& field) {
    if (!obj.is_object()) invalid(field, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) invalid(field + "." + key, "missing");
    return *it;
}

int as_int(const json& v, const std::string& field) {
    if (!v.is_number_integer()) invalid(field, "expected an integer");
    const auto x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        invalid(field, "integer out of range");
    return static_cast<int>(x);
}

int int_member(const json& obj, const char* key, const std::string& field) {
    return as_int(member(obj, key, field), field + "." + key);
}

}  // namespace

json to_json(const Instance& instance) {
    json tenants = json::array();
    for (const auto& t : instance.tenants)
        tenants.push_back({{"id", t.id}, {"reserved", t.reserved}, {"share", t.share}});
    json requests = json::array();
    for (const auto& r : instance.requests)
        requests.push_back({{"id", r.id},
                            {"tenant", r.tenant},
                            {"slice", std::string(to_string(r.slice))},
                            {"arrival", r.arrival},
                            {"demand", r.demand},
                            {"duration", r.duration}});
    return {{"horizon", instance.horizon},
            {"capacity", instance.capacity},
            {"tenants", std::move(tenants)},
            {"requests", std::move(requests)}};
}

json to_json(const Schedule& schedule) {
    json starts = json::object();
    for (const auto& [id, start] : schedule.starts)
        starts[std::to_string(id)] = start ? json(*start) : json(nullptr);
    json cells = json::array();
    for (const auto& a : schedule.assignment)
        cells.push_back({{"slot", a.slot}, {"unit", a.unit}, {"request", a.request}});
    return {{"starts", std::move(starts)}, {"assignment", std::move(cells)}};
}

json to_json(const ValidationReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"constraint", std::string(to_string(v.constraint))},
                              {"slot", v.slot},
                              {"request", v.request},
                              {"detail", v.detail}});
    return {{"feasible", report.feasible()}, {"violations", std::move(violations)}};
}

Instance instance_from_json(const json& doc) {
    Instance inst;
    inst.horizon = int_member(doc, "horizon", "instance");
    inst.capacity = int_member(doc, "capacity", "instance");

    const json& tenants = member(doc, "tenants", "instance");
    if (!tenants.is_array()) invalid("instance.tenants", "expected an array");
    for (std::size_t i = 0; i < tenants.size(); ++i) {
        const std::string f = "tenants[" + std::to_string(i) + "]";
        Tenant t;
        t.id = int_member(tenants[i], "id", f);
        t.reserved = int_member(tenants[i], "reserved", f);
        if (auto it = tenants[i].find("share"); it != tenants[i].end()) {
            if (!it->is_number()) invalid(f + ".share", "expected a number");
            t.share = it->get<double>();
        }
        inst.tenants.push_back(t);
    }

    const json& requests = member(doc, "requests", "instance");
    if (!requests.is_array()) invalid("instance.requests", "expected an array");
    for (std::size_t i = 0; i < requests.size(); ++i) {
        const std::string f = "requests[" + std::to_string(i) + "]";
        Request r;
        r.id = int_member(requests[i], "id", f);
        r.tenant = int_member(requests[i], "tenant", f);
        const json& slice = member(requests[i], "slice", f);
        if (!slice.is_string()) invalid(f + ".slice", "expected \"EMBB\" or \"EMBBRLLC\"");
        auto parsed = parse_slice(slice.get<std::string>());
        if (!parsed)
            invalid(f + ".slice", "unknown slice \"" + slice.get<std::string>() +
                                      "\" (expected EMBB or EMBBRLLC)");
        r.slice = *parsed;
        r.arrival = int_member(requests[i], "arrival", f);
        r.demand = int_member(requests[i], "demand", f);
        r.duration = int_member(requests[i], "duration", f);
        inst.requests.push_back(r);
    }

    check_instance(inst);
    return inst;
}

Schedule schedule_from_json(const json& doc) {
    Schedule s;
    const json& starts = member(doc, "starts", "schedule");
    if (!starts.is_object()) invalid("schedule.starts", "expected an object");
    for (const auto& [key, value] : starts.items()) {
        const std::string f = "schedule.starts." + key;
        RequestId id = 0;
        try {
            std::size_t used = 0;
            id = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            invalid(f, "key is not an integer request id");
        }
        if (value.is_null())
            s.starts[id] = std::nullopt;
        else
            s.starts[id] = as_int(value, f);
    }

    const json& cells = member(doc, "assignment", "schedule");
    if (!cells.is_array()) invalid("schedule.assignment", "expected an array");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string f = "assignment[" + std::to_string(i) + "]";
        s.assignment.push_back(UnitAssignment{int_member(cells[i], "slot", f),
                                              int_member(cells[i], "unit", f),
                                              int_member(cells[i], "request", f)});
    }
    return s;
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, origin + ": malformed JSON: " + e.what());
    }
}

json read_json_file(const std::filesystem::path& path) {
    return parse_json(read_text_file(path), path.string());
}

}  // namespace slicecal
