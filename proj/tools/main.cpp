// Command-line driver: runs identity verification suites over parameter
// grids and writes human and machine-readable reports.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qmpl/suite.hpp"

namespace {

std::vector<qmpl::Rational> parse_csv_rationals(const std::string& csv) {
    std::vector<qmpl::Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(qmpl::Rational::parse(item));
        } catch (const qmpl::Error&) {
            throw qmpl::UsageError("cannot parse rational value: '" + item + "'");
        }
    }
    if (out.empty()) throw qmpl::UsageError("empty value list: '" + csv + "'");
    return out;
}

int run_verify(const qmpl::SuiteConfig& config, const std::string& out_file) {
    const qmpl::Report report = qmpl::run_suite(config);
    std::cout << report.to_table();
    if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw qmpl::UsageError("cannot open report file: " + out_file);
        f << report.to_json();
    }
    return report.exit_code();
}

int run_list_suites() {
    for (const auto& [id, desc] : qmpl::suite_list()) std::cout << id << "\t" << desc << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for q-binomial and multi-polylogarithm identity families"};
    app.require_subcommand(1);

    qmpl::SuiteConfig config;
    std::string out_file;
    std::string q_values, t_values;

    CLI::App* verify = app.add_subcommand("verify", "run one suite (or all) over a parameter grid");
    verify->add_option("--suite", config.suite, "suite id (see list-suites)")
        ->default_val("all");
    verify->add_option("--n-max", config.n_max, "largest n in the sweep")->default_val(6);
    verify->add_option("--weight-max", config.weight_max, "largest index weight")->default_val(4);
    verify->add_option("--depth-max", config.depth_max, "largest index depth")->default_val(3);
    verify->add_option("--mode", config.mode, "exact | eval")->default_val("exact");
    verify->add_option("--points", config.points, "evaluation points per case (eval mode)")
        ->default_val(20);
    verify->add_option("--seed", config.seed, "seed for point and sequence generators")
        ->default_val(42);
    verify->add_option("--q-values", q_values, "comma-separated rational q pool (|q| not 0 or 1)");
    verify->add_option("--t-values", t_values, "comma-separated nonzero rational t pool");
    verify->add_option("--term-budget", config.term_budget, "polynomial term budget")
        ->default_val(1000000);
    verify->add_option("--jobs", config.jobs, "worker threads (0 = available parallelism)")
        ->default_val(0);
    verify->add_option("--out", out_file, "write the machine-readable report here");

    CLI::App* list = app.add_subcommand("list-suites", "print suite ids with descriptions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (list->parsed()) return run_list_suites();
        if (!q_values.empty()) config.q_pool = parse_csv_rationals(q_values);
        if (!t_values.empty()) config.t_pool = parse_csv_rationals(t_values);
        config.validate();
        return run_verify(config, out_file);
    } catch (const qmpl::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const qmpl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
