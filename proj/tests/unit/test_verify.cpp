#include <doctest.h>

#include "lipcex/verify.hpp"

using namespace lipcex;

namespace {

VerifyConfig small_config() {
    VerifyConfig cfg;
    cfg.pair_samples = 200;
    cfg.sample_size = 32;
    return cfg;
}

const ordered_json* find_check(const ordered_json& report, const std::string& op,
                               const std::string& check) {
    for (const auto& c : report.at("operators").at(op).at("checks"))
        if (c.at("check") == check) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("witness report values") {
    const VerifyConfig cfg = small_config();

    // t3 inherits nu_p = max(sigma_p, tau_p) = 16 at p = 2
    const ordered_json r3 = verify_report("t3", cfg);
    const ordered_json* th = find_check(r3, "t3", "thresholds");
    REQUIRE(th != nullptr);
    CHECK(th->at("certificate").at("sigma_p").at("threshold") == 16);
    CHECK(th->at("certificate").at("tau_p").at("threshold") == 6);
    CHECK(th->at("certificate").at("nu_p") == 16);
    CHECK(r3.at("operators").at("t3").at("verdict") == "pass");

    // q = inf drops the Lorentz separation to gamma_p * 1
    VerifyConfig cfg_inf = cfg;
    cfg_inf.q = kInf;
    const ordered_json r1 = verify_report("t1", cfg_inf);
    const ordered_json* ds = find_check(r1, "t1", "witness_distances");
    REQUIRE(ds != nullptr);
    CHECK(ds->at("params").at("required_lorentz") == 1.0);
    CHECK(ds->at("params").at("q") == "inf");
    CHECK(r1.at("verdict") == "pass");
}

TEST_CASE("suites pass for every named operator at small scale") {
    const VerifyConfig cfg = small_config();
    for (const std::string& name : known_operators()) {
        const std::vector<CheckResult> checks = verify_operator(name, cfg);
        CHECK(!checks.empty());
        for (const CheckResult& c : checks) {
            INFO(name, ".", c.name);
            if (c.hard) CHECK(c.pass);
        }
    }
}

TEST_CASE("reports are deterministic") {
    const VerifyConfig cfg = small_config();
    const std::string a = verify_report("t2", cfg).dump();
    const std::string b = verify_report("t2", cfg).dump();
    CHECK(a == b);

    VerifyConfig other = cfg;
    other.seed = 43;
    CHECK(verify_report("t2", other).dump() != a);
}

TEST_CASE("unknown operators are rejected") {
    CHECK_THROWS_AS(verify_operator("t9", small_config()), DomainError);
}

TEST_CASE("collapse witness for the ramp operators") {
    VerifyConfig cfg = small_config();
    cfg.pair_samples = 60;
    cfg.sample_size = 16;
    const ordered_json r = verify_report("t5", cfg);
    const ordered_json* w = find_check(r, "t5", "witness_norm_collapse");
    REQUIRE(w != nullptr);
    CHECK(w->at("verdict") == "pass");
    const auto& rows = w->at("certificate").at("rows");
    CHECK(rows.size() == 12);
    for (const auto& row : rows) {
        CHECK(row.at("lp").get<double>() >= 1.0 / (1.0 + std::sqrt(2.0)) - 1e-12);
    }
    // the L1 norms really do vanish along the sequence
    CHECK(rows.back().at("l1").get<double>() < 1e-3);

    const ordered_json r6 = verify_report("t6", cfg);
    const ordered_json* w6 = find_check(r6, "t6", "witness_norm_collapse");
    REQUIRE(w6 != nullptr);
    CHECK(w6->at("certificate").at("t6_equals_t5_on_psi") == true);
}
