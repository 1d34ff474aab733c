#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lipcex/construction.hpp"
#include "lipcex/interpolation.hpp"
#include "lipcex/operators.hpp"
#include "lipcex/random_functions.hpp"
#include "lipcex/serialize.hpp"

namespace lipcex {

struct VerifyConfig {
    double p = 2.0;
    double theta = 0.5;
    double q = 2.0;  // kInf for q = infinity
    int n_max = 64;
    int big_n_max = 40;     // ramp terms and table depth for t5/t6
    int sample_size = 256;  // epsilon-net sample
    int pair_samples = 10000;
    int witness_count = 6;  // N values taken from the certified range
    double tol = 1e-9;
    uint64_t seed = 42;

    ordered_json to_json() const;
};

/// Outcome of one named check. Hard checks decide the exit code;
/// informational ones (epsilon-net statistics) do not.
struct CheckResult {
    std::string name;
    ordered_json params = ordered_json::object();
    ordered_json certificate = ordered_json::object();
    double margin = 0.0;
    bool pass = false;
    bool hard = true;

    ordered_json to_json() const;
};

/// Operator names addressable by the harness and the CLI.
const std::vector<std::string>& known_operators();

/// Runs every suite applicable to the named operator.
std::vector<CheckResult> verify_operator(const std::string& name, const VerifyConfig& cfg);

/// Full JSON report for one operator or "all". Deterministic: identical
/// config (including seed) gives byte-identical output.
ordered_json verify_report(const std::string& name, const VerifyConfig& cfg);

bool report_passed(const ordered_json& report);

// Individual suites, exposed for the acceptance harness.

/// psi_N for the dyadic witnesses: 2^{N/p} on I_N = [2^-N, 2^-N+1).
StepFunction dyadic_psi(int N, double p);
/// psi_N for the sequence couple: 2^{-N/p} on the index block [2^N, 2^{N+1}).
StepFunction block_psi(int N, double p);
/// psi_N for the geometric ramps: (2^N - 1) chi_{I_N}.
StepFunction geometric_psi(const IntervalFamily& fam, int N);

ordered_json scan_to_json(const ScanCertificate& c);

std::vector<CheckResult> zero_fixed_check(const std::string& name, const VerifyConfig& cfg);
std::vector<CheckResult> pointwise_inequality_checks(const VerifyConfig& cfg);
std::vector<CheckResult> lipschitz_sweep(const std::string& name, const VerifyConfig& cfg);
std::vector<CheckResult> noncompact_witness(const std::string& name, const VerifyConfig& cfg);
std::vector<CheckResult> compactness_evidence(const std::string& name, const VerifyConfig& cfg);
std::vector<CheckResult> interpolation_bound_check(const std::string& name,
                                                   const VerifyConfig& cfg);
std::vector<CheckResult> threshold_checks(const std::string& name, const VerifyConfig& cfg);

}  // namespace lipcex
