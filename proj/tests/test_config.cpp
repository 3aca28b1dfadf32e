#include <doctest.h>

#include <stdexcept>
#include <string>

#include "tbp/config.hpp"

using namespace tbp;

namespace {

void expect_error(const std::string& text, const std::string& fragment) {
    try {
        parse_config(text);
        FAIL("expected parse_config to reject: " << text);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
}

} // namespace

TEST_CASE("full config round-trip") {
    LoadedConfig loaded = parse_config(R"({
        "means": [0.1, 0.6, 0.9],
        "threshold": 0.4,
        "budgets": [100, 200],
        "runs": 50,
        "seed": 9,
        "threads": 2,
        "policies": [
            {"kind": "LSA", "alpha": 2.0},
            {"kind": "APT", "epsilon": 0.05},
            {"kind": "UCBE", "exponent": -1},
            {"kind": "OptKG", "prior_a": 0.5, "prior_b": 0.5},
            {"kind": "Uniform"}
        ],
        "alphas": [0.5, 1.35]
    })");
    const ExperimentConfig& cfg = loaded.experiment;
    CHECK(cfg.instance.means == std::vector<double>{0.1, 0.6, 0.9});
    CHECK(cfg.instance.threshold == 0.4);
    CHECK(cfg.setup_id == 0);
    CHECK(cfg.budgets == std::vector<long long>{100, 200});
    CHECK(cfg.runs == 50);
    CHECK(cfg.seed == 9);
    CHECK(loaded.seed_set);
    CHECK(cfg.threads == 2);
    REQUIRE(cfg.policies.size() == 5);
    CHECK(cfg.policies[0].kind == PolicyKind::LSA);
    CHECK(cfg.policies[0].alpha == 2.0);
    CHECK(cfg.policies[1].epsilon == 0.05);
    CHECK(cfg.policies[2].exponent == -1);
    CHECK(cfg.policies[3].prior_a == 0.5);
    CHECK(cfg.policies[4].kind == PolicyKind::Uniform);
    CHECK(cfg.alphas == std::vector<double>{0.5, 1.35});
}

TEST_CASE("config defaults") {
    LoadedConfig loaded = parse_config(R"({"setup": 3, "budgets": [500]})");
    const ExperimentConfig& cfg = loaded.experiment;
    CHECK(cfg.setup_id == 3);
    CHECK(cfg.instance.threshold == 0.5);
    CHECK(cfg.runs == 1000);
    CHECK(cfg.threads == 1);
    CHECK(cfg.seed == 1);
    CHECK_FALSE(loaded.seed_set);
    REQUIRE(cfg.policies.size() == 1);
    CHECK(cfg.policies[0].kind == PolicyKind::LSA);
    CHECK(cfg.policies[0].alpha == 1.35);
    CHECK(cfg.alphas.empty());
}

TEST_CASE("config rejections name the offending field") {
    expect_error(R"({"setup": 1, "budgets": [100], "bogus": 3})", "bogus");
    expect_error(R"({"budgets": [100]})", "exactly one of");
    expect_error(R"({"setup": 1, "means": [0.5], "budgets": [100]})", "exactly one of");
    expect_error(R"({"setup": 1, "threshold": 0.4, "budgets": [100]})", "threshold");
    expect_error(R"({"setup": 1})", "budgets");
    expect_error(R"({"setup": 1, "budgets": []})", "budgets");
    expect_error(R"({"setup": 1, "budgets": [5]})", "budget");
    expect_error(R"({"setup": 1, "budgets": [100], "runs": 0})", "runs");
    expect_error(R"({"setup": 1, "budgets": [100], "threads": 0})", "threads");
    expect_error(R"({"setup": 1, "budgets": [100], "policies": []})", "policies");
    expect_error(R"({"setup": 1, "budgets": [100],
                     "policies": [{"kind": "XYZ"}]})", "XYZ");
    expect_error(R"({"setup": 1, "budgets": [100],
                     "policies": [{"kind": "LSA", "gamma": 2}]})", "gamma");
    expect_error(R"({"setup": 1, "budgets": [100],
                     "policies": [{"kind": "LSA", "alpha": 0}]})", "alpha");
    expect_error(R"({"setup": 1, "budgets": [100], "seed": -4})", "seed");
    expect_error(R"({"setup": 1, "budgets": [100], "seed": 1.5})", "seed");
    expect_error(R"({"setup": 1, "budgets": [100], "alphas": [0.5, 0]})", "alphas");
    expect_error(R"({"setup": 9, "budgets": [100]})", "setup");
    expect_error("[1, 2]", "object");
    expect_error("{nonsense", "JSON");
    expect_error(R"({"setup": 1, "budgets": "many"})", "type");
}

TEST_CASE("large seeds survive the unsigned path") {
    LoadedConfig loaded =
        parse_config(R"({"setup": 1, "budgets": [100], "seed": 18446744073709551615})");
    CHECK(loaded.experiment.seed == 18446744073709551615ULL);
}

TEST_CASE("loading a missing config file fails cleanly") {
    CHECK_THROWS_AS(load_config_file("/nonexistent/path.json"), std::invalid_argument);
}

TEST_CASE("policy spec strings") {
    PolicyConfig p = parse_policy_spec("LSA");
    CHECK(p.kind == PolicyKind::LSA);
    CHECK(p.alpha == 1.35);
    CHECK(parse_policy_spec("LSA(2.5)").alpha == 2.5);
    CHECK(parse_policy_spec("APT(0.05)").epsilon == 0.05);
    CHECK(parse_policy_spec("APT").epsilon == 0.0);
    CHECK(parse_policy_spec("UCBE(-1)").exponent == -1);
    CHECK(parse_policy_spec("UCBE").exponent == 0);
    PolicyConfig kg = parse_policy_spec("OptKG(0.5,2)");
    CHECK(kg.prior_a == 0.5);
    CHECK(kg.prior_b == 2.0);
    CHECK(parse_policy_spec("Uniform").kind == PolicyKind::Uniform);

    CHECK_THROWS_AS(parse_policy_spec("Foo"), std::invalid_argument);
    CHECK_THROWS_AS(parse_policy_spec("Uniform(1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_policy_spec("OptKG(1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_policy_spec("LSA(1,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_policy_spec("LSA(abc)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_policy_spec("LSA(1.5x)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_policy_spec("UCBE(1.5)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_policy_spec("LSA(1.35"), std::invalid_argument);
    CHECK_THROWS_AS(parse_policy_spec("LSA(0)"), std::invalid_argument);
}
