#include "slicecal/workload.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "slicecal/error.hpp"
#include "slicecal/json_io.hpp"

namespace slicecal {

using nlohmann::json;

int Rng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
    // Largest multiple of span that fits, to avoid modulo bias.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return static_cast<int>(static_cast<std::int64_t>(lo) + static_cast<std::int64_t>(x % span));
}

double Rng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::ConfigInvalid, field + ": " + what);
}

void check_range(const IntRange& r, const std::string& field) {
    if (r.lo < 1) bad(field, "lower bound must be >= 1");
    if (r.hi < r.lo) bad(field, "empty range");
}

}  // namespace

void check_config(const GenConfig& c) {
    if (c.horizon < 1) bad("horizon", "must be >= 1");
    if (c.capacity < 0) bad("capacity", "must be >= 0");
    if (c.num_requests < 0) bad("num_requests", "must be >= 0");
    if (c.tenant_shares.empty()) bad("tenant_shares", "at least one tenant required");
    double sum = 0.0;
    for (double s : c.tenant_shares) {
        if (!(s >= 0.0)) bad("tenant_shares", "shares must be >= 0");
        sum += s;
    }
    if (std::abs(sum - 1.0) > 1e-9) bad("tenant_shares", "shares must sum to 1");
    if (!(c.embb_fraction >= 0.0 && c.embb_fraction <= 1.0))
        bad("embb_fraction", "must lie in [0, 1]");
    check_range(c.arrival_range, "arrival_range");
    check_range(c.demand_range, "demand_range");
    check_range(c.duration_range, "duration_range");
    if (c.arrival_range.hi > c.horizon) bad("arrival_range", "upper bound exceeds horizon");
}

std::vector<int> reservations(const std::vector<double>& shares, int capacity) {
    std::vector<int> out;
    out.reserve(shares.size());
    int assigned = 0;
    for (double s : shares) {
        // Tolerance keeps products like 0.6 * 20 from flooring to 11.
        const int units = static_cast<int>(std::floor(s * capacity + 1e-9));
        out.push_back(units);
        assigned += units;
    }
    if (!shares.empty() && assigned < capacity) {
        const auto largest = std::max_element(shares.begin(), shares.end()) - shares.begin();
        out[static_cast<std::size_t>(largest)] += capacity - assigned;
    }
    return out;
}

Instance generate(const GenConfig& config) {
    check_config(config);
    Instance inst;
    inst.horizon = config.horizon;
    inst.capacity = config.capacity;

    const auto reserved = reservations(config.tenant_shares, config.capacity);
    for (std::size_t t = 0; t < config.tenant_shares.size(); ++t)
        inst.tenants.push_back(Tenant{static_cast<TenantId>(t), reserved[t], config.tenant_shares[t]});

    Rng rng(config.seed);
    const int num_tenants = static_cast<int>(config.tenant_shares.size());
    inst.requests.reserve(static_cast<std::size_t>(config.num_requests));
    for (int k = 0; k < config.num_requests; ++k) {
        Request r;
        r.id = k;
        r.tenant = rng.uniform_int(0, num_tenants - 1);
        r.slice = rng.bernoulli(config.embb_fraction) ? SliceType::Embb : SliceType::EmbbRllc;
        r.arrival = rng.uniform_int(config.arrival_range.lo, config.arrival_range.hi);
        r.demand = rng.uniform_int(config.demand_range.lo, config.demand_range.hi);
        r.duration = rng.uniform_int(config.duration_range.lo, config.duration_range.hi);
        inst.requests.push_back(r);
    }
    return inst;
}

json to_json(const GenConfig& c) {
    return {{"horizon", c.horizon},
            {"capacity", c.capacity},
            {"num_requests", c.num_requests},
            {"tenant_shares", c.tenant_shares},
            {"embb_fraction", c.embb_fraction},
            {"arrival_range", {c.arrival_range.lo, c.arrival_range.hi}},
            {"demand_range", {c.demand_range.lo, c.demand_range.hi}},
            {"duration_range", {c.duration_range.lo, c.duration_range.hi}},
            {"seed", c.seed}};
}

namespace {

int json_int(const json& v, const std::string& field) {
    if (!v.is_number_integer()) bad(field, "expected an integer");
    const auto x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        bad(field, "integer out of range");
    return static_cast<int>(x);
}

IntRange json_range(const json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 2) bad(field, "expected [lo, hi]");
    return IntRange{json_int(v[0], field), json_int(v[1], field)};
}

}  // namespace

GenConfig config_from_json(const json& doc) {
    if (!doc.is_object()) bad("config", "expected an object");
    GenConfig c;
    for (const auto& [key, v] : doc.items()) {
        if (key == "horizon") c.horizon = json_int(v, key);
        else if (key == "capacity") c.capacity = json_int(v, key);
        else if (key == "num_requests") c.num_requests = json_int(v, key);
        else if (key == "tenant_shares") {
            if (!v.is_array()) bad(key, "expected an array of numbers");
            c.tenant_shares.clear();
            for (const auto& s : v) {
                if (!s.is_number()) bad(key, "expected an array of numbers");
                c.tenant_shares.push_back(s.get<double>());
            }
        } else if (key == "embb_fraction") {
            if (!v.is_number()) bad(key, "expected a number");
            c.embb_fraction = v.get<double>();
        } else if (key == "arrival_range") c.arrival_range = json_range(v, key);
        else if (key == "demand_range") c.demand_range = json_range(v, key);
        else if (key == "duration_range") c.duration_range = json_range(v, key);
        else if (key == "seed") {
            if (!v.is_number_unsigned()) bad(key, "expected a non-negative integer");
            c.seed = v.get<std::uint64_t>();
        } else {
            bad(key, "unknown configuration key");
        }
    }
    return c;
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// Flat values become JSON scalars or arrays so both formats share one reader.
json flat_value(const std::string& raw, const std::string& key) {
    std::vector<json> items;
    std::stringstream ss(raw);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const std::string p = trim(part);
        if (p.empty()) bad(key, "empty list element");
        try {
            items.push_back(json::parse(p));
        } catch (const json::parse_error&) {
            bad(key, "cannot parse value \"" + p + "\"");
        }
    }
    const bool is_list = key == "tenant_shares" || key.ends_with("_range");
    if (is_list) return json(items);
    if (items.size() != 1) bad(key, "expected a single value");
    return items.front();
}

}  // namespace

GenConfig config_from_flat(std::string_view text) {
    json doc = json::object();
    std::stringstream ss{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string content = trim(line);
        if (content.empty()) continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos)
            bad("line " + std::to_string(lineno), "expected key = value");
        const std::string key = trim(std::string_view(content).substr(0, eq));
        doc[key] = flat_value(trim(std::string_view(content).substr(eq + 1)), key);
    }
    return config_from_json(doc);
}

GenConfig parse_config(const std::string& text, const std::string& origin) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return config_from_json(parse_json(text, origin));
    return config_from_flat(text);
}

}  // namespace slicecal
