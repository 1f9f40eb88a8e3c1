#include <cmath>
#include <numeric>

#include <doctest.h>

#include "slicecal/error.hpp"
#include "slicecal/workload.hpp"

using namespace slicecal;

TEST_CASE("default configuration reserves 4, 4, 12 of 20 units") {
    const Instance inst = generate(GenConfig{});
    REQUIRE(inst.tenants.size() == 3);
    CHECK(inst.horizon == 10);
    CHECK(inst.capacity == 20);
    CHECK(inst.tenants[0].reserved == 4);
    CHECK(inst.tenants[1].reserved == 4);
    CHECK(inst.tenants[2].reserved == 12);
    CHECK(inst.requests.size() == 50);
}

TEST_CASE("reservations: floor plus remainder to the largest share") {
    CHECK(reservations({0.2, 0.2, 0.6}, 25) == std::vector<int>{5, 5, 15});
    CHECK(reservations({0.2, 0.2, 0.6}, 23) == std::vector<int>{4, 4, 15});
    CHECK(reservations({0.5, 0.5}, 3) == std::vector<int>{2, 1});
    CHECK(reservations({1.0}, 7) == std::vector<int>{7});
    CHECK(reservations({0.2, 0.2, 0.6}, 0) == std::vector<int>{0, 0, 0});

    for (int r = 0; r <= 200; ++r) {
        const auto res = reservations({0.2, 0.2, 0.6}, r);
        CHECK(std::accumulate(res.begin(), res.end(), 0) == r);
        const auto odd = reservations({0.15, 0.35, 0.5}, r);
        CHECK(std::accumulate(odd.begin(), odd.end(), 0) == r);
    }
}

TEST_CASE("zero requests") {
    GenConfig cfg;
    cfg.num_requests = 0;
    CHECK(generate(cfg).requests.empty());
}

TEST_CASE("same seed, same instance; different seed, different instance") {
    GenConfig cfg;
    cfg.seed = 42;
    CHECK(generate(cfg) == generate(cfg));
    GenConfig other = cfg;
    other.seed = 43;
    CHECK_FALSE(generate(cfg) == generate(other));
}

TEST_CASE("generated requests respect their ranges") {
    GenConfig cfg;
    cfg.num_requests = 2000;
    cfg.arrival_range = {2, 4};
    cfg.demand_range = {3, 3};
    cfg.duration_range = {1, 6};
    const Instance inst = generate(cfg);
    CHECK_NOTHROW(check_instance(inst));
    bool saw_lo = false, saw_hi = false;
    for (const auto& r : inst.requests) {
        CHECK(r.arrival >= 2);
        CHECK(r.arrival <= 4);
        CHECK(r.demand == 3);
        CHECK(r.duration >= 1);
        CHECK(r.duration <= 6);
        saw_lo |= r.duration == 1;
        saw_hi |= r.duration == 6;
    }
    CHECK(saw_lo);
    CHECK(saw_hi);
}

TEST_CASE("slice and tenant proportions over 10,000 requests") {
    GenConfig cfg;
    cfg.num_requests = 10'000;
    cfg.seed = 2024;
    const Instance inst = generate(cfg);
    int embb = 0;
    std::vector<int> per_tenant(3, 0);
    for (const auto& r : inst.requests) {
        embb += r.slice == SliceType::Embb;
        ++per_tenant[static_cast<std::size_t>(r.tenant)];
    }
    const double frac = embb / 10'000.0;
    CHECK(frac >= 0.47);
    CHECK(frac <= 0.53);
    const double sigma = std::sqrt(10'000.0 * (1.0 / 3) * (2.0 / 3));
    for (int c : per_tenant) CHECK(std::abs(c - 10'000.0 / 3) <= 3 * sigma);
}

TEST_CASE("Rng bounded draws are uniform and in range") {
    Rng rng(5);
    std::vector<int> hist(7, 0);
    for (int i = 0; i < 70'000; ++i) {
        const int v = rng.uniform_int(-3, 3);
        REQUIRE(v >= -3);
        REQUIRE(v <= 3);
        ++hist[static_cast<std::size_t>(v + 3)];
    }
    for (int h : hist) CHECK(std::abs(h - 10'000) < 500);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("derive_seed separates streams") {
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

TEST_CASE("invalid configurations are rejected with the field name") {
    auto field_of = [](const GenConfig& c) {
        try {
            check_config(c);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ConfigInvalid);
            const std::string what = e.what();
            return what.substr(0, what.find(':'));
        }
        return std::string("ok");
    };
    GenConfig c;
    CHECK(field_of(c) == "ok");
    c.tenant_shares = {0.2, 0.2, 0.5};
    CHECK(field_of(c) == "tenant_shares");
    c = GenConfig{};
    c.tenant_shares = {1.2, -0.2};
    CHECK(field_of(c) == "tenant_shares");
    c = GenConfig{};
    c.demand_range = {3, 2};
    CHECK(field_of(c) == "demand_range");
    c = GenConfig{};
    c.duration_range = {0, 2};
    CHECK(field_of(c) == "duration_range");
    c = GenConfig{};
    c.arrival_range = {1, 11};
    CHECK(field_of(c) == "arrival_range");
    c = GenConfig{};
    c.embb_fraction = 1.5;
    CHECK(field_of(c) == "embb_fraction");
    c = GenConfig{};
    c.num_requests = -1;
    CHECK(field_of(c) == "num_requests");
    CHECK_THROWS_AS(generate(c), Error);
}

TEST_CASE("config files: JSON and flat keys") {
    const GenConfig from_json = parse_config(R"({"capacity": 25, "tenant_shares": [0.5, 0.5],
        "demand_range": [2, 4], "seed": 9})", "cfg.json");
    CHECK(from_json.capacity == 25);
    CHECK(from_json.tenant_shares == std::vector<double>{0.5, 0.5});
    CHECK(from_json.demand_range == IntRange{2, 4});
    CHECK(from_json.seed == 9);
    CHECK(from_json.horizon == 10);

    const GenConfig flat = parse_config(
        "# evaluation defaults with more capacity\n"
        "capacity = 25\n"
        "tenant_shares = 0.5, 0.5\n"
        "demand_range = 2,4\n"
        "seed=9\n",
        "cfg.txt");
    CHECK(flat == from_json);

    CHECK(config_from_json(to_json(from_json)) == from_json);

    CHECK_THROWS_AS(parse_config("capacity: 3\n", "x"), Error);
    CHECK_THROWS_AS(parse_config(R"({"capacty": 3})", "x"), Error);
    CHECK_THROWS_AS(parse_config(R"({"seed": -1})", "x"), Error);
}
