#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qmpl/identities.hpp"

namespace qmpl {

/// Batch configuration for the suite runner. Defaults give the standard
/// desk-scale sweep.
struct SuiteConfig {
    std::string suite = "all";
    int n_max = 6;
    int weight_max = 4;
    int depth_max = 3;
    std::string mode = "exact";  // "exact" | "eval"
    int points = 20;
    std::uint64_t seed = 42;
    std::size_t term_budget = 1'000'000;
    int jobs = 0;  // 0 = available parallelism

    std::vector<Rational> q_pool = {Rational(2), Rational(1, 2), Rational(3, 2), Rational(-2),
                                    Rational(5, 3)};
    std::vector<Rational> t_pool = {Rational(1), Rational(2), Rational(1, 2), Rational(-1),
                                    Rational(3), Rational(-2, 3)};
    std::vector<Rational> p_grid = {Rational(1, 3), Rational(2, 5), Rational(1)};
    std::vector<Rational> a_grid = {Rational(1, 2), Rational(1), Rational(2)};
    std::vector<std::pair<Rational, Rational>> lambda_mu_grid = {
        {Rational(1), Rational(1)}, {Rational(2), Rational(-1)}, {Rational(1, 2), Rational(1, 3)}};

    /// Throws UsageError on bad values (unknown suite/mode, |q| in {0,1},
    /// zero t values, depth_max > weight_max, nonpositive bounds).
    void validate() const;
};

/// Complete run result. Case order is deterministic for a given config.
struct Report {
    SuiteConfig config;
    std::vector<Verdict> verdicts;
    std::size_t passes = 0;
    std::size_t fails = 0;
    std::size_t errors = 0;
    std::chrono::milliseconds elapsed{0};

    int exit_code() const { return (fails + errors) ? 1 : 0; }

    /// Machine-readable document; identical configs yield identical bytes
    /// (wall-clock timings are deliberately excluded).
    std::string to_json() const;
    /// Human table with per-case timings.
    std::string to_table() const;
};

/// All suite ids with one-line descriptions, in canonical order.
const std::vector<std::pair<std::string, std::string>>& suite_list();

/// Runs the configured sweep; cases may execute in parallel, the report is
/// assembled in case order.
Report run_suite(const SuiteConfig& config);

}  // namespace qmpl
