#include "shufalg/expr.hpp"
#include "shufalg/rtt.hpp"
#include "shufalg/specmaps.hpp"
#include "shufalg/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace shufalg;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string type = "G2";
    int n = 0;
    std::string flavor = "trig";
    bool json = false;

    RootSystem rs() const { return RootSystem::parse(type, n); }
    ShuffleContext ctx() const { return {rs(), flavor == "rational" ? Flavor::Rational : Flavor::Trig}; }
};

void add_common(CLI::App* app, Common& c, bool with_flavor = true) {
    app->add_option("--type", c.type, "root system: A, B, G2 (or A3, B2, ...)");
    app->add_option("--n", c.n, "rank for types A and B");
    if (with_flavor)
        app->add_option("--flavor", c.flavor, "trig or rational")->check(CLI::IsMember({"trig", "rational"}));
    app->add_flag("--json", c.json, "JSON output");
}

std::pair<int, int> parse_window(const std::string& w) {
    auto colon = w.find(':');
    if (colon == std::string::npos)
        throw UsageError("window must be lo:hi, got '" + w + "'");
    try {
        size_t a = 0, b = 0;
        int lo = std::stoi(w.substr(0, colon), &a);
        int hi = std::stoi(w.substr(colon + 1), &b);
        if (a != colon || b != w.size() - colon - 1)
            throw std::invalid_argument(w);
        if (hi < lo)
            throw UsageError("window needs lo <= hi");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("window must be lo:hi, got '" + w + "'");
    }
}

json root_json(const RootSystem& rs, int idx) {
    const PosRoot& r = rs.root(idx);
    return {{"index", idx}, {"root", rs.root_name(idx)}, {"word", r.word},
            {"nu", r.nu},   {"height", r.height},        {"half_norm", rs.half_norm(idx)}};
}

json pbwd_json(const RootSystem& rs, const PBWDIndex& h) {
    json a = json::array();
    for (auto& [k, m] : h.h)
        a.push_back({{"root", rs.root_name(k.first)}, {"s", k.second}, {"mult", m}});
    return a;
}

int cmd_roots(const Common& c) {
    RootSystem rs = c.rs();
    if (c.json) {
        json a = json::array();
        for (int i = 0; i < rs.num_roots(); ++i)
            a.push_back(root_json(rs, i));
        std::cout << json{{"type", rs.name()}, {"roots", a}}.dump(2) << "\n";
        return 0;
    }
    for (int i = 0; i < rs.num_roots(); ++i)
        std::cout << rs.root_name(i) << "  word " << word_str(rs.root(i).word) << "  height " << rs.root(i).height
                  << "\n";
    return 0;
}

int cmd_kp(const Common& c, const std::vector<int>& k, const std::string& window, bool pbwd) {
    RootSystem rs = c.rs();
    if (int(k.size()) != rs.rank())
        throw UsageError("grading needs " + std::to_string(rs.rank()) + " entries");
    for (int x : k)
        if (x < 0)
            throw UsageError("grading entries must be nonnegative");
    auto kps = kostant_partitions(rs, k);
    std::vector<PBWDIndex> hs;
    if (pbwd) {
        auto [lo, hi] = parse_window(window);
        hs = pbwd_indices(rs, k, lo, hi);
    }
    if (c.json) {
        json out{{"type", rs.name()}, {"grading", k}, {"partitions", json::array()}};
        for (auto& d : kps)
            out["partitions"].push_back(json::parse(kp_str(rs, d)));
        if (pbwd) {
            out["pbwd"] = json::array();
            for (auto& h : hs)
                out["pbwd"].push_back(pbwd_json(rs, h));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (auto& d : kps)
        std::cout << kp_str(rs, d) << "\n";
    std::cout << kps.size() << " Kostant partitions\n";
    if (pbwd) {
        for (auto& h : hs)
            std::cout << pbwd_str(rs, h) << "\n";
        std::cout << hs.size() << " PBWD indices in window " << window << "\n";
    }
    return 0;
}

Verdict run_predicate(const std::string& name, const ShuffleElement& F) {
    if (name == "in_bold_S")
        return in_bold_S(F);
    if (name == "in_cal_S")
        return in_cal_S(F);
    if (name == "is_good")
        return is_good(F);
    return is_integral_rational(F);
}

int cmd_eval(const Common& c, const std::string& expr, bool to_psi, const std::vector<std::string>& checks) {
    ShuffleContext ctx = c.ctx();
    FreeElement e = parse_expression(ctx, expr);
    if (!to_psi && checks.empty()) {
        std::cout << (c.json ? e.to_json().dump(2) : e.str()) << "\n";
        return 0;
    }
    ShuffleElement F = psi(e);
    json verdicts = json::object();
    bool ok = true;
    for (auto& name : checks) {
        Verdict v = run_predicate(name, F);
        ok = ok && v.ok;
        verdicts[name] = {{"ok", v.ok}, {"detail", v.detail}};
    }
    if (c.json) {
        json out = F.to_json();
        if (!checks.empty())
            out = {{"element", out}, {"checks", verdicts}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << F.str() << "\n";
        for (auto& [name, v] : verdicts.items())
            std::cout << name << ": " << (v["ok"].get<bool>() ? "yes" : "no")
                      << (v["detail"].get<std::string>().empty() ? "" : "  " + v["detail"].get<std::string>()) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_specialize(const Common& c, const std::string& partition, const std::string& expr) {
    ShuffleContext ctx = c.ctx();
    KostantPartition d;
    try {
        d = parse_kp(ctx.rs(), partition);
    } catch (const json::exception& e) {
        throw UsageError(std::string("partition is not valid JSON: ") + e.what());
    }
    ShuffleElement F = psi(parse_expression(ctx, expr));
    if (grading_of(ctx.rs(), d) != F.grading())
        throw UsageError("partition grading does not match the expression grading");
    SpecResult r = phi(d, F);
    if (c.json)
        std::cout << r.to_json(ctx).dump(2) << "\n";
    else
        std::cout << kp_str(ctx.rs(), d) << "\n" << r.poly.str(ctx.coef_var(), root_namer(ctx.rs())) << "\n";
    return 0;
}

void print_report(const SuiteReport& r) {
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << r.elapsed;
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << "  " << r.type << " " << r.flavor << "  " << r.checks
              << " checks  " << t.str() << " s\n";
    for (auto& ctl : r.controls)
        std::cout << "  control " << ctl.name << ": " << (ctl.detected ? "detected" : "NOT detected") << "\n";
    size_t shown = 0;
    for (auto& f : r.failures) {
        if (shown++ == 10) {
            std::cout << "  ... " << r.failures.size() - 10 << " more failures\n";
            break;
        }
        std::cout << "  failed " << f.check << " " << f.input.dump() << ": " << f.detail << "\n";
    }
}

int cmd_verify(const Common& c, const std::string& suite, const std::string& window, uint64_t seed, int max_vars,
               int samples, double budget) {
    SuiteConfig cfg;
    cfg.rs = c.rs();
    cfg.flavor = c.flavor == "rational" ? Flavor::Rational : Flavor::Trig;
    std::tie(cfg.lo, cfg.hi) = parse_window(window);
    cfg.seed = seed;
    cfg.max_vars = max_vars;
    cfg.samples = samples;
    cfg.budget = budget;
    std::vector<SuiteReport> reports;
    if (suite == "all") {
        reports = run_all(cfg);
    } else {
        auto names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end())
            throw UsageError("unknown suite '" + suite + "'");
        if (!suite_applies(suite, cfg))
            throw UsageError("suite " + suite + " does not apply to " + cfg.rs.name() + " " + c.flavor);
        reports.push_back(run_suite(suite, cfg));
    }
    bool ok = true;
    for (auto& r : reports)
        ok = ok && r.ok();
    if (c.json) {
        std::cout << (suite == "all" ? aggregate_json(reports) : reports[0].to_json()).dump(2) << "\n";
    } else {
        for (auto& r : reports)
            print_report(r);
        if (suite == "all")
            std::cout << (ok ? "all suites pass" : "some suites fail") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_ybe(int n, int trials, uint64_t seed, const std::string& mutate, bool as_json) {
    std::optional<RMutation> mut;
    if (!mutate.empty()) {
        auto comma = mutate.find(',');
        if (comma == std::string::npos)
            throw UsageError("mutation must be row,col");
        mut = RMutation{std::stoi(mutate.substr(0, comma)), std::stoi(mutate.substr(comma + 1))};
    }
    YbeReport r = check_ybe(RMatrixContext(n), trials, seed, mut);
    if (as_json) {
        std::cout << r.to_json().dump(2) << "\n";
    } else {
        for (size_t t = 0; t < r.samples.size(); ++t) {
            auto& s = r.samples[t];
            std::cout << "trial " << t << "  u=" << s.u << " w1=" << s.w1 << " w2=" << s.w2 << " v=" << s.v
                      << "  residual entries " << s.residual_nonzeros << "\n";
        }
        std::cout << (r.ok() ? "PASS" : "FAIL") << " yang-baxter n=" << n << " in " << r.elapsed << " s\n";
    }
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact shuffle algebra computations"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Common c;
    std::string expr, partition, suite = "all", window = "0:1", mutate;
    bool to_psi = false, pbwd = false;
    std::vector<int> grading;
    std::vector<std::string> checks;
    uint64_t seed = 42;
    int max_vars = 5, samples = 0, trials = 5, rtt_n = 2;
    double budget = 0;

    auto* roots = app.add_subcommand("roots", "positive roots in convex order");
    add_common(roots, c, false);

    auto* kp = app.add_subcommand("kp", "Kostant partitions of a grading");
    add_common(kp, c, false);
    kp->add_option("--grading", grading, "grading vector, e.g. 1,2")->delimiter(',')->required();
    kp->add_flag("--pbwd", pbwd, "also list PBWD indices in the window");
    kp->add_option("--window", window, "exponent window lo:hi");

    auto* eval = app.add_subcommand("eval", "evaluate an expression in the free algebra");
    add_common(eval, c);
    eval->add_option("--expr", expr, "expression")->required();
    eval->add_flag("--psi", to_psi, "map to the shuffle algebra");

    auto* psi_cmd = app.add_subcommand("psi", "image of an expression in the shuffle algebra");
    add_common(psi_cmd, c);
    psi_cmd->add_option("--expr", expr, "expression")->required();
    psi_cmd->add_option("--check", checks, "membership predicate")
        ->check(CLI::IsMember({"in_bold_S", "in_cal_S", "is_good", "is_integral_rational"}));

    auto* spec = app.add_subcommand("specialize", "specialization phi_d of the image of an expression");
    add_common(spec, c);
    spec->add_option("--partition", partition, "Kostant partition as JSON, e.g. {\"[1,2]\":1}")->required();
    spec->add_option("--expr", expr, "expression")->required();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, c);
    verify->add_option("--suite", suite, "suite name or all");
    verify->add_option("--window", window, "exponent window lo:hi");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--max-vars", max_vars, "largest number of variables");
    verify->add_option("--samples", samples, "random draws per randomized check (0: default)");
    verify->add_option("--budget", budget, "time budget per suite in seconds (0: none)");

    auto* rtt = app.add_subcommand("rtt", "R-matrix checks");
    rtt->require_subcommand(1);
    bool rtt_json = false;
    auto* ybe = rtt->add_subcommand("ybe", "Yang-Baxter equation at random points");
    ybe->add_option("--n", rtt_n, "rank, N = 2n+1");
    ybe->add_option("--trials", trials, "number of sample points");
    ybe->add_option("--seed", seed, "random seed");
    ybe->add_option("--mutate", mutate, "perturb the constant R entry row,col by 1");
    ybe->add_flag("--json", rtt_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*roots)
            return cmd_roots(c);
        if (*kp)
            return cmd_kp(c, grading, window, pbwd);
        if (*eval)
            return cmd_eval(c, expr, to_psi, {});
        if (*psi_cmd)
            return cmd_eval(c, expr, true, checks);
        if (*spec)
            return cmd_specialize(c, partition, expr);
        if (*verify)
            return cmd_verify(c, suite, window, seed, max_vars, samples, budget);
        if (*ybe)
            return cmd_ybe(rtt_n, trials, seed, mutate, rtt_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.position() <= expr.size())
            std::cerr << "  " << expr << "\n  " << std::string(e.position(), ' ') << "^\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
