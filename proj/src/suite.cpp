#include "qmpl/suite.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace qmpl {

namespace {

using CaseFn = std::function<Verdict()>;

struct Case {
    std::string suite;
    CaseFn run;
};

struct CaseList {
    std::vector<Case> cases;
    const SuiteConfig& config;

    void add(std::string suite, CaseFn fn) { cases.push_back({std::move(suite), std::move(fn)}); }

    bool eval_mode() const { return config.mode == "eval"; }

    // per-case deterministic point stream; the derived seed is recorded on
    // the verdict so failures are replayable
    std::vector<EvalPoint> points_for(int depth) const {
        const std::uint64_t case_seed = mix_seed(config.seed, cases.size());
        return draw_points(config.points, depth, case_seed, config.q_pool, config.t_pool);
    }

    std::string eval_tag() const {
        return " points=" + std::to_string(config.points) + " case-seed=" +
               std::to_string(mix_seed(config.seed, cases.size()));
    }
};

void add_schutzenberger(CaseList& out) {
    for (int n = 0; n <= out.config.n_max; ++n) {
        if (out.eval_mode()) {
            auto pts = out.points_for(0);
            auto tag = out.eval_tag();
            out.add("schutzenberger", [n, pts, tag] {
                Verdict v = verify_schutzenberger_eval(n, pts);
                v.params += tag;
                return v;
            });
        } else {
            out.add("schutzenberger", [n] { return verify_schutzenberger(n); });
        }
    }
}

void add_lemma21(CaseList& out) {
    for (int n = 1; n <= out.config.n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int s = 1; s <= out.config.weight_max; ++s) {
                if (out.eval_mode()) {
                    auto pts = out.points_for(0);
                    auto tag = out.eval_tag();
                    out.add("lemma21", [n, k, s, pts, tag] {
                        Verdict v = verify_lemma21_eval(n, k, s, pts);
                        v.params += tag;
                        return v;
                    });
                } else {
                    out.add("lemma21", [n, k, s] { return verify_lemma21(n, k, s); });
                }
            }
        }
    }
}

template <class ExactFn, class EvalFn>
void add_composition_sweep(CaseList& out, const std::string& suite, int n_min, ExactFn exact,
                           EvalFn eval) {
    const auto comps = enumerate_compositions(out.config.weight_max, out.config.depth_max);
    for (int n = n_min; n <= out.config.n_max; ++n) {
        for (const Index& s : comps) {
            if (out.eval_mode()) {
                auto pts = out.points_for(s.depth());
                auto tag = out.eval_tag();
                out.add(suite, [n, s, pts, tag, eval] {
                    Verdict v = eval(n, s, pts);
                    v.params += tag;
                    return v;
                });
            } else {
                out.add(suite, [n, s, exact] { return exact(n, s); });
            }
        }
    }
}

void add_corollary(CaseList& out) {
    const auto comps = enumerate_compositions(out.config.weight_max, out.config.depth_max);
    for (int n = 1; n <= out.config.n_max; ++n) {
        for (const Index& s : comps) {
            if (out.eval_mode()) {
                auto pts = out.points_for(s.depth());
                auto tag = out.eval_tag();
                out.add("corollary", [n, s, pts, tag] {
                    Verdict v = verify_corollary_eval(n, s, pts);
                    v.params += tag;
                    return v;
                });
            } else {
                out.add("corollary", [n, s] { return verify_corollary_direct(n, s); });
                out.add("corollary", [n, s] { return verify_corollary_limit(n, s); });
            }
        }
    }
}

void add_gencev(CaseList& out) {
    const auto comps = enumerate_compositions(out.config.weight_max, out.config.depth_max);
    for (int n = 1; n <= out.config.n_max; ++n)
        for (const Index& s : comps)
            for (const Rational& a : out.config.a_grid)
                for (const Rational& p : out.config.p_grid)
                    out.add("gencev", [n, s, a, p] { return verify_gencev(n, s, a, p); });
}

void add_mneimneh(CaseList& out) {
    for (int n = 1; n <= out.config.n_max; ++n)
        for (const Rational& p : out.config.p_grid)
            out.add("mneimneh", [n, p] { return verify_mneimneh(n, p); });
}

void add_boyadzhiev(CaseList& out) {
    for (int n = 1; n <= out.config.n_max; ++n)
        for (const auto& lm : out.config.lambda_mu_grid)
            out.add("boyadzhiev",
                    [n, lm] { return verify_boyadzhiev(n, lm.first, lm.second); });
}

void add_ss1(CaseList& out) {
    add_composition_sweep(out, "ss1", 1, [](int n, const Index& s) { return verify_ss1(n, s); },
                          [](int n, const Index& s, std::span<const EvalPoint> pts) {
                              return verify_ss1_eval(n, s, pts);
                          });
    // the classical alternating special case at t = 1, s = (1)
    for (int n = 1; n <= out.config.n_max; ++n)
        out.add("ss1", [n] { return verify_euler(n); });
}

void add_ss2(CaseList& out) {
    add_composition_sweep(out, "ss2", 1, [](int n, const Index& s) { return verify_ss2(n, s); },
                          [](int n, const Index& s, std::span<const EvalPoint> pts) {
                              return verify_ss2_eval(n, s, pts);
                          });
    if (!out.eval_mode()) {
        const auto comps = enumerate_compositions(out.config.weight_max, out.config.depth_max);
        for (const Index& s : comps)
            out.add("ss2", [s, n = out.config.n_max] { return verify_ss_inversion_link(n, s); });
    }
}

void add_inversion(CaseList& out) {
    auto frac_of = [](long v) { return Frac(SparsePoly(Rational(v))); };
    out.add("inversion", [frac_of] {
        std::vector<Frac> a{frac_of(1), frac_of(0), frac_of(0), frac_of(0), frac_of(0)};
        const auto b = binomial_inversion(a, InversionDirection::forward);
        for (const Frac& v : b)
            if (!(v == Frac::one()))
                return Verdict{"inversion", "delta-sequence", "exact", Verdict::Status::fail,
                               "forward transform of (1,0,0,...) is not all ones"};
        return Verdict{"inversion", "delta-sequence", "exact", Verdict::Status::pass, ""};
    });
    out.add("inversion", [frac_of] {
        std::vector<Frac> b{frac_of(1), frac_of(2), frac_of(4), frac_of(8)};
        const auto a = binomial_inversion(b, InversionDirection::backward);
        for (const Frac& v : a)
            if (!(v == Frac::one()))
                return Verdict{"inversion", "doubling-sequence", "exact", Verdict::Status::fail,
                               "backward transform of 2^n is not all ones"};
        return Verdict{"inversion", "doubling-sequence", "exact", Verdict::Status::pass, ""};
    });
    std::mt19937_64 rng(mix_seed(out.config.seed, 0x1457));
    for (int i = 0; i < 50; ++i) {
        const int len = 1 + static_cast<int>(rng() % 10);
        std::vector<Frac> seq;
        for (int j = 0; j < len; ++j) {
            const long num = static_cast<long>(rng() % 41) - 20;
            const long den = 1 + static_cast<long>(rng() % 9);
            seq.push_back(Frac(SparsePoly(Rational(num, den))));
        }
        const std::string label = "roundtrip #" + std::to_string(i) + " len=" + std::to_string(len);
        out.add("inversion", [seq, label] { return verify_inversion_roundtrip(seq, label); });
    }
}

void add_cauchy_binomial(CaseList& out) {
    for (int n = 0; n <= out.config.n_max; ++n) {
        if (out.eval_mode()) {
            auto pts = out.points_for(0);
            auto tag = out.eval_tag();
            out.add("cauchy-binomial", [n, pts, tag] {
                Verdict v = verify_cauchy_binomial_eval(n, pts);
                v.params += tag;
                return v;
            });
        } else {
            out.add("cauchy-binomial", [n] { return verify_cauchy_binomial(n, Frac::var(Symbol::A())); });
        }
    }
}

void add_lemma41(CaseList& out) {
    for (int k = 0; k <= out.config.n_max; ++k) {
        if (out.eval_mode()) {
            auto pts = out.points_for(1);
            auto tag = out.eval_tag();
            out.add("lemma41", [k, pts, tag] {
                Verdict v = verify_xy_power_eval(k, pts);
                v.params += tag;
                return v;
            });
        } else {
            out.add("lemma41", [k] { return verify_xy_power(k); });
        }
    }
    const int cap = std::min(out.config.n_max, 5);
    for (int m = 0; m <= cap; ++m) {
        for (int n = 0; n <= cap; ++n) {
            if (out.eval_mode()) {
                auto pts = out.points_for(1);
                auto tag = out.eval_tag();
                out.add("lemma41", [m, n, pts, tag] {
                    Verdict v = verify_shifted_rising_eval(m, n, pts);
                    v.params += tag;
                    return v;
                });
            } else {
                out.add("lemma41", [m, n] { return verify_shifted_rising(m, n); });
            }
        }
    }
}

void add_bradley(CaseList& out) {
    for (int n = 1; n <= out.config.n_max; ++n) {
        for (int d = 1; d <= out.config.depth_max; ++d) {
            if (out.eval_mode()) {
                auto pts = out.points_for(0);
                auto tag = out.eval_tag();
                out.add("bradley", [n, d, pts, tag] {
                    Verdict v = verify_bradley_eval(n, d, pts);
                    v.params += tag;
                    return v;
                });
            } else {
                out.add("bradley", [n, d] { return verify_bradley(n, d); });
            }
        }
    }
}

void add_suite_cases(CaseList& out, const std::string& id) {
    if (id == "schutzenberger") {
        add_schutzenberger(out);
    } else if (id == "lemma21") {
        add_lemma21(out);
    } else if (id == "lemma22") {
        add_composition_sweep(out, "lemma22", 1,
                              [](int n, const Index& s) { return verify_lemma22(n, s); },
                              [](int n, const Index& s, std::span<const EvalPoint> pts) {
                                  return verify_lemma22_eval(n, s, pts);
                              });
    } else if (id == "main-theorem") {
        add_composition_sweep(out, "main-theorem", 1,
                              [](int n, const Index& s) { return verify_main_theorem(n, s); },
                              [](int n, const Index& s, std::span<const EvalPoint> pts) {
                                  return verify_main_theorem_eval(n, s, pts);
                              });
    } else if (id == "corollary") {
        add_corollary(out);
    } else if (id == "gencev") {
        add_gencev(out);
    } else if (id == "mneimneh") {
        add_mneimneh(out);
    } else if (id == "boyadzhiev") {
        add_boyadzhiev(out);
    } else if (id == "ss1") {
        add_ss1(out);
    } else if (id == "ss2") {
        add_ss2(out);
    } else if (id == "inversion") {
        add_inversion(out);
    } else if (id == "cauchy-binomial") {
        add_cauchy_binomial(out);
    } else if (id == "lemma41") {
        add_lemma41(out);
    } else if (id == "cauchy-bm") {
        add_composition_sweep(out, "cauchy-bm", 1,
                              [](int n, const Index& s) { return verify_cauchy_bm(n, s); },
                              [](int n, const Index& s, std::span<const EvalPoint> pts) {
                                  return verify_cauchy_bm_eval(n, s, pts);
                              });
    } else if (id == "bradley") {
        add_bradley(out);
    } else {
        throw UsageError("unknown suite: " + id);
    }
}

std::vector<Rational> check_q_pool(const std::vector<Rational>& pool) {
    for (const Rational& q : pool) {
        const Rational mag = q.abs();
        if (mag == Rational(0) || mag == Rational(1))
            throw UsageError("q value with |q| in {0,1}: " + q.str());
    }
    return pool;
}

nlohmann::ordered_json rational_list(const std::vector<Rational>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Rational& r : v) arr.push_back(r.str());
    return arr;
}

}  // namespace

void SuiteConfig::validate() const {
    if (n_max < 1) throw UsageError("n-max must be >= 1");
    if (weight_max < 1) throw UsageError("weight-max must be >= 1");
    if (depth_max < 1) throw UsageError("depth-max must be >= 1");
    if (depth_max > weight_max) throw UsageError("depth-max must not exceed weight-max");
    if (points < 1) throw UsageError("points must be >= 1");
    if (term_budget < 1) throw UsageError("term-budget must be >= 1");
    if (jobs < 0) throw UsageError("jobs must be >= 0");
    if (mode != "exact" && mode != "eval") throw UsageError("mode must be exact or eval");
    check_q_pool(q_pool);
    for (const Rational& t : t_pool)
        if (t.is_zero()) throw UsageError("t pool values must be nonzero");
    bool known = suite == "all";
    for (const auto& [id, desc] : suite_list()) known = known || id == suite;
    if (!known) throw UsageError("unknown suite: " + suite);
}

const std::vector<std::pair<std::string, std::string>>& suite_list() {
    static const std::vector<std::pair<std::string, std::string>> kSuites = {
        {"schutzenberger", "noncommutative q-binomial theorem: (x+y)^n in normal form"},
        {"lemma21", "Gaussian binomial over q-integer powers as weakly decreasing sums"},
        {"lemma22", "recurrence for binomial sums of finite q-multi-polylogarithms"},
        {"main-theorem", "binomial sums of finite q-multi-polylogarithms vs tuple expansion"},
        {"corollary", "commutative limit of the binomial-sum identity"},
        {"gencev", "Gencev's binomial sums of zeta-star truncations at rational points"},
        {"mneimneh", "Mneimneh's harmonic-number binomial identity"},
        {"boyadzhiev", "Boyadzhiev's two-parameter harmonic binomial identity"},
        {"ss1", "Sakugawa-Seki alternating-sum identity (with Euler special case)"},
        {"ss2", "Sakugawa-Seki plain-sum identity (with inversion linkage)"},
        {"inversion", "binomial inversion transform and roundtrips"},
        {"cauchy-binomial", "Cauchy q-binomial theorem for shifted products"},
        {"lemma41", "quantum-plane power identities: (xy)^k and shifted rising factors"},
        {"cauchy-bm", "Cauchy-type binomial sums of finite q-multi-polylogarithms"},
        {"bradley", "Bradley's alternating q-binomial nested-harmonic identity"},
        {"all", "every suite above with the same configuration"},
    };
    return kSuites;
}

Report run_suite(const SuiteConfig& config) {
    config.validate();
    set_term_budget(config.term_budget);

    CaseList list{{}, config};
    if (config.suite == "all") {
        for (const auto& [id, desc] : suite_list())
            if (id != "all") add_suite_cases(list, id);
    } else {
        add_suite_cases(list, config.suite);
    }

    Report report;
    report.config = config;
    report.verdicts.resize(list.cases.size());

    const auto started = std::chrono::steady_clock::now();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= list.cases.size()) break;
            const auto case_started = std::chrono::steady_clock::now();
            Verdict v;
            try {
                v = list.cases[i].run();
            } catch (const ResourceLimitError& e) {
                v.suite = list.cases[i].suite;
                v.status = Verdict::Status::error;
                v.witness = std::string("resource limit: ") + e.what();
            } catch (const Error& e) {
                v.suite = list.cases[i].suite;
                v.status = Verdict::Status::error;
                v.witness = e.what();
            }
            v.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                std::chrono::steady_clock::now() - case_started);
            report.verdicts[i] = std::move(v);
        }
    };

    unsigned jobs = config.jobs > 0 ? static_cast<unsigned>(config.jobs)
                                    : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, std::max<std::size_t>(1, list.cases.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    for (const Verdict& v : report.verdicts) {
        switch (v.status) {
            case Verdict::Status::pass: ++report.passes; break;
            case Verdict::Status::fail: ++report.fails; break;
            case Verdict::Status::error: ++report.errors; break;
        }
    }
    return report;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = "qmpl";
    j["version"] = "0.1.0";
    nlohmann::ordered_json cfg;
    cfg["suite"] = config.suite;
    cfg["n_max"] = config.n_max;
    cfg["weight_max"] = config.weight_max;
    cfg["depth_max"] = config.depth_max;
    cfg["mode"] = config.mode;
    cfg["points"] = config.points;
    cfg["seed"] = config.seed;
    cfg["term_budget"] = config.term_budget;
    cfg["jobs"] = config.jobs;
    cfg["q_pool"] = rational_list(config.q_pool);
    cfg["t_pool"] = rational_list(config.t_pool);
    cfg["p_grid"] = rational_list(config.p_grid);
    cfg["a_grid"] = rational_list(config.a_grid);
    nlohmann::ordered_json lm = nlohmann::ordered_json::array();
    for (const auto& [l, m] : config.lambda_mu_grid) lm.push_back({l.str(), m.str()});
    cfg["lambda_mu_grid"] = lm;
    j["config"] = cfg;
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const Verdict& v : verdicts) {
        nlohmann::ordered_json c;
        c["suite"] = v.suite;
        c["params"] = v.params;
        c["mode"] = v.mode;
        c["status"] = v.status == Verdict::Status::pass   ? "pass"
                      : v.status == Verdict::Status::fail ? "fail"
                                                          : "error";
        c["witness"] = v.witness;
        cases.push_back(std::move(c));
    }
    j["cases"] = std::move(cases);
    nlohmann::ordered_json summary;
    summary["cases"] = verdicts.size();
    summary["passes"] = passes;
    summary["fails"] = fails;
    summary["errors"] = errors;
    j["summary"] = std::move(summary);
    return j.dump(2) + "\n";
}

std::string Report::to_table() const {
    std::ostringstream os;
    std::size_t suite_w = 5, params_w = 6;
    for (const Verdict& v : verdicts) {
        suite_w = std::max(suite_w, v.suite.size());
        params_w = std::max(params_w, v.params.size());
    }
    params_w = std::min<std::size_t>(params_w, 56);
    auto pad = [](const std::string& s, std::size_t w) {
        return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
    };
    os << pad("suite", suite_w) << "  " << pad("params", params_w) << "  mode   status  ms\n";
    for (const Verdict& v : verdicts) {
        os << pad(v.suite, suite_w) << "  " << pad(clip(v.params, 56), params_w) << "  "
           << pad(v.mode, 5) << "  "
           << pad(v.status == Verdict::Status::pass   ? "pass"
                  : v.status == Verdict::Status::fail ? "FAIL"
                                                      : "ERROR",
                  6)
           << "  " << v.elapsed.count() / 1000 << "\n";
        if (!v.witness.empty()) os << "    " << clip(v.witness, 200) << "\n";
    }
    os << "summary: " << verdicts.size() << " cases, " << passes << " passed, " << fails
       << " failed, " << errors << " errors in " << elapsed.count() << " ms\n";
    return os.str();
}

}  // namespace qmpl
