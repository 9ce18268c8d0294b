#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "qmpl/suite.hpp"

using namespace qmpl;

namespace {
SuiteConfig small_config(const std::string& suite) {
    SuiteConfig c;
    c.suite = suite;
    c.n_max = 3;
    c.weight_max = 2;
    c.depth_max = 2;
    c.jobs = 4;
    return c;
}
}  // namespace

TEST_CASE("composition enumeration") {
    auto strs = [](const std::vector<Index>& v) {
        std::vector<std::string> out;
        for (const Index& s : v) out.push_back(s.str());
        return out;
    };
    CHECK(strs(enumerate_compositions(2, 2)) == std::vector<std::string>{"(1)", "(2)", "(1,1)"});
    CHECK(strs(enumerate_compositions(3, 1)) == std::vector<std::string>{"(1)", "(2)", "(3)"});
    CHECK(enumerate_compositions(4, 4).size() == 15);
    CHECK(enumerate_compositions(4, 3).size() == 14);
}

TEST_CASE("config validation") {
    SuiteConfig c;
    CHECK_NOTHROW(c.validate());
    c.suite = "nope";
    CHECK_THROWS_AS(c.validate(), UsageError);
    c = SuiteConfig{};
    c.depth_max = 9;
    CHECK_THROWS_AS(c.validate(), UsageError);
    c = SuiteConfig{};
    c.q_pool.push_back(Rational(-1));
    CHECK_THROWS_AS(c.validate(), UsageError);
    c = SuiteConfig{};
    c.t_pool.push_back(Rational(0));
    CHECK_THROWS_AS(c.validate(), UsageError);
    c = SuiteConfig{};
    c.mode = "approximate";
    CHECK_THROWS_AS(c.validate(), UsageError);
}

TEST_CASE("seeded evaluation points are deterministic") {
    SuiteConfig c;
    const auto a = draw_points(10, 3, 99, c.q_pool, c.t_pool);
    const auto b = draw_points(10, 3, 99, c.q_pool, c.t_pool);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].str() == b[i].str());
    const auto other = draw_points(10, 3, 100, c.q_pool, c.t_pool);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.size(); ++i) any_diff = any_diff || a[i].str() != other[i].str();
    CHECK(any_diff);
    for (const EvalPoint& p : a) {
        CHECK(p.q.abs() != Rational(1));
        CHECK(!p.q.is_zero());
        for (const Rational& t : p.t) CHECK(!t.is_zero());
    }
}

TEST_CASE("identical configs give byte-identical reports, under parallel execution") {
    for (const std::string mode : {"exact", "eval"}) {
        SuiteConfig c = small_config("lemma22");
        c.mode = mode;
        c.points = 5;
        const Report r1 = run_suite(c);
        const Report r2 = run_suite(c);
        CHECK(r1.to_json() == r2.to_json());
        CHECK(r1.fails + r1.errors == 0);
    }
}

TEST_CASE("main-theorem suite at n-max=1 passes everywhere") {
    SuiteConfig c;
    c.suite = "main-theorem";
    c.n_max = 1;
    const Report r = run_suite(c);
    CHECK(r.verdicts.size() == 14);  // compositions of weight <= 4, depth <= 3
    CHECK(r.passes == r.verdicts.size());
    CHECK(r.exit_code() == 0);
}

TEST_CASE("bradley suite case grid") {
    SuiteConfig c;
    c.suite = "bradley";
    c.n_max = 4;
    const Report r = run_suite(c);
    CHECK(r.verdicts.size() == 12);  // 4 x 3 grid
    CHECK(r.passes == 12);
}

TEST_CASE("eval mode never fails where exact mode passes") {
    for (const std::string suite :
         {"schutzenberger", "lemma21", "lemma22", "main-theorem", "corollary", "ss1", "ss2",
          "cauchy-binomial", "lemma41", "cauchy-bm", "bradley"}) {
        SuiteConfig exact = small_config(suite);
        const Report re = run_suite(exact);
        REQUIRE(re.fails + re.errors == 0);
        SuiteConfig eval = small_config(suite);
        eval.mode = "eval";
        eval.points = 6;
        const Report rv = run_suite(eval);
        CHECK(rv.fails + rv.errors == 0);
    }
}

TEST_CASE("exit codes derive from the summary") {
    Report r;
    CHECK(r.exit_code() == 0);
    r.fails = 1;
    CHECK(r.exit_code() == 1);
    r.fails = 0;
    r.errors = 2;
    CHECK(r.exit_code() == 1);
}

TEST_CASE("summary counts equal the verdict tallies") {
    const Report r = run_suite(small_config("ss1"));
    std::size_t p = 0, f = 0, e = 0;
    for (const Verdict& v : r.verdicts) {
        if (v.status == Verdict::Status::pass) ++p;
        if (v.status == Verdict::Status::fail) ++f;
        if (v.status == Verdict::Status::error) ++e;
    }
    CHECK(p == r.passes);
    CHECK(f == r.fails);
    CHECK(e == r.errors);
    CHECK(r.to_json().find("\"passes\": " + std::to_string(p)) != std::string::npos);
}

TEST_CASE("resource limit surfaces as an error verdict, not a crash") {
    const std::size_t saved = term_budget();
    SuiteConfig c = small_config("main-theorem");
    c.n_max = 3;
    c.weight_max = 3;
    c.depth_max = 2;
    c.term_budget = 4;  // absurdly small
    const Report r = run_suite(c);
    set_term_budget(saved);
    CHECK(r.errors > 0);
    CHECK(r.exit_code() == 1);
    bool saw_limit_witness = false;
    for (const Verdict& v : r.verdicts)
        if (v.status == Verdict::Status::error && !v.witness.empty()) saw_limit_witness = true;
    CHECK(saw_limit_witness);
}

TEST_CASE("mutation hook fails with a witness for every suite") {
    for (const auto& [id, desc] : suite_list()) {
        if (id == "all") continue;
        const Verdict v = verify_mutated(id, 12345);
        CHECK(v.status == Verdict::Status::fail);
        CHECK(!v.witness.empty());
    }
}

#ifdef QMPL_CLI_PATH
namespace {
int run_cli(const std::string& args) {
    const std::string cmd = std::string(QMPL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WEXITSTATUS(raw);
}
}  // namespace

TEST_CASE("CLI process exit codes") {
    CHECK(run_cli("list-suites") == 0);
    CHECK(run_cli("verify --suite mneimneh --n-max 3") == 0);
    CHECK(run_cli("verify --suite nope") == 2);
    CHECK(run_cli("verify --q-values 0,2") == 2);
    CHECK(run_cli("verify --no-such-flag") == 2);
}

TEST_CASE("CLI writes the report file") {
    const std::string out = "/tmp/qmpl_cli_report_test.json";
    std::remove(out.c_str());
    CHECK(run_cli("verify --suite inversion --seed 7 --out " + out) == 0);
    std::ifstream f(out);
    REQUIRE(f.good());
    std::string body((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(body.find("\"suite\": \"inversion\"") != std::string::npos);
    CHECK(body.find("\"fails\": 0") != std::string::npos);
    std::remove(out.c_str());
}
#endif
