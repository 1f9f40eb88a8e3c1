#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "slicecal/model.hpp"

namespace slicecal {

struct IntRange {
    int lo = 1;
    int hi = 1;

    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Generator settings. Defaults reproduce the evaluation settings with the
/// request count at 50.
struct GenConfig {
    int horizon = 10;
    int capacity = 20;
    int num_requests = 50;
    std::vector<double> tenant_shares{0.2, 0.2, 0.6};
    double embb_fraction = 0.5;
    IntRange arrival_range{1, 5};
    IntRange demand_range{1, 5};
    IntRange duration_range{1, 5};
    std::uint64_t seed = 1;

    friend bool operator==(const GenConfig&, const GenConfig&) = default;
};

/// Identifies the random stream; recorded next to generated results.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/rejection-bounded;splitmix64-derive";

/// mt19937_64 with portable bounded draws (the standard distributions are
/// implementation defined, so they would break cross-platform replay).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();
    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer over (base, stream); used to derive per-run seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

/// Throws Error(ConfigInvalid) naming the offending field.
void check_config(const GenConfig& config);

/// Reservation per tenant: floor(share * capacity), leftover units to the
/// largest share (lowest index on ties).
std::vector<int> reservations(const std::vector<double>& shares, int capacity);

Instance generate(const GenConfig& config);

nlohmann::json to_json(const GenConfig& config);
/// Missing keys keep their defaults.
GenConfig config_from_json(const nlohmann::json& doc);
/// `key = value` lines; lists are comma separated, `#` starts a comment.
GenConfig config_from_flat(std::string_view text);
/// Dispatches on the first non-blank character: '{' means JSON.
GenConfig parse_config(const std::string& text, const std::string& origin);

}  // namespace slicecal
