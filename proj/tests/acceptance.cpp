#include "shufalg/rtt.hpp"
#include "shufalg/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace shufalg;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

bool controls_detected(const SuiteReport& r) {
    for (auto& c : r.controls)
        if (!c.detected)
            return false;
    return true;
}

// runs one suite per root system and folds the reports into one outcome
Outcome suites(const std::string& name, const std::vector<SuiteConfig>& cfgs,
               const std::function<void(const SuiteReport&, Outcome&)>& extra = {}) {
    Outcome o;
    std::ostringstream os;
    for (auto& cfg : cfgs) {
        SuiteReport r = run_suite(name, cfg);
        bool ok = r.ok() && controls_detected(r) && r.checks > 0;
        o.ok = o.ok && ok;
        os << r.type << (r.flavor == "rational" ? "(rat)" : "") << " " << r.checks << (ok ? " ok" : " FAIL") << "; ";
        if (!r.failures.empty())
            os << r.failures.size() << " failed, first " << r.failures[0].check << " " << r.failures[0].input.dump()
               << "; ";
        if (extra)
            extra(r, o);
    }
    o.detail = os.str() + o.detail;
    return o;
}

SuiteConfig cfg(RootSystem rs, int lo = 0, int hi = 1, Flavor f = Flavor::Trig) {
    SuiteConfig c;
    c.rs = std::move(rs);
    c.lo = lo;
    c.hi = hi;
    c.flavor = f;
    return c;
}

std::vector<SuiteConfig> g2_b2_b3(int lo = 0, int hi = 1) {
    return {cfg(RootSystem::G2(), lo, hi), cfg(RootSystem::B(2), lo, hi), cfg(RootSystem::B(3), lo, hi)};
}

Outcome rank_one() {
    Outcome o;
    int count = 0;
    for (int d : {1, 2, 3}) {
        RootSystem rs = d == 3 ? RootSystem::G2() : d == 2 ? RootSystem::B(2) : RootSystem::A(1);
        ShuffleContext c(rs, Flavor::Trig);
        for (int r : {-2, -1, 0, 1, 2, 3})
            for (int l = 1; l <= 4; ++l) {
                auto F = shuffle_power(ShuffleElement::generator(c, 1, r), l);
                MultiLaurent mono(1);
                for (int s = 1; s <= l; ++s)
                    mono *= MultiLaurent::variable(xvar(1, s), r);
                ULaurent expect = ULaurent::var(-d * l * (l - 1) / 2) * qfact(l, ULaurent::var(d));
                ++count;
                if (F.numerator() != VRatFunc(expect) * mono) {
                    o.ok = false;
                    o.detail += "trig d=" + std::to_string(d) + " r=" + std::to_string(r) + " l=" + std::to_string(l) + "; ";
                }
            }
    }
    for (auto rs : {RootSystem::A(1), RootSystem::B(2), RootSystem::G2()}) {
        ShuffleContext c(rs, Flavor::Rational);
        for (int i = 1; i <= rs.rank(); ++i)
            for (int r : {0, 1, 2, 3})
                for (int l = 1; l <= 4; ++l) {
                    auto F = shuffle_power(ShuffleElement::generator(c, i, r), l);
                    Rational fact = 1;
                    MultiLaurent mono(1);
                    for (int s = 1; s <= l; ++s) {
                        fact *= s;
                        mono *= MultiLaurent::variable(xvar(i, s), r);
                    }
                    ++count;
                    if (F.numerator() != VRatFunc(fact) * mono) {
                        o.ok = false;
                        o.detail += "rational " + rs.name() + " i=" + std::to_string(i) + " r=" + std::to_string(r) +
                                    " l=" + std::to_string(l) + "; ";
                    }
                }
    }
    o.detail = std::to_string(count) + " powers compared exactly; " + o.detail;
    return o;
}

Outcome diagonal() {
    std::vector<SuiteConfig> cs = g2_b2_b3(0, 2);
    for (auto& c : cs)
        c.samples = 10;
    return suites("diagonal", cs);
}

Outcome factorization() {
    auto g2 = cfg(RootSystem::G2());
    g2.max_vars = 10;
    auto b2 = cfg(RootSystem::B(2));
    b2.max_vars = 6;
    return suites("factorization", {g2, b2}, [](const SuiteReport& r, Outcome& o) {
        int skipped = r.info.value("partitions_over_ceiling", 0);
        if (skipped) {
            o.ok = false;
            o.detail += r.type + " skipped " + std::to_string(skipped) + " partitions; ";
        }
    });
}

Outcome integral_forms() {
    std::vector<SuiteConfig> cs{cfg(RootSystem::G2()), cfg(RootSystem::B(2))};
    Outcome o;
    std::ostringstream os;
    for (auto& c : cs) {
        c.samples = 50;
        SuiteReport r = run_suite("integral_forms", c);
        size_t bold = 0, bold_fail = 0, cal = 0, cal_fail = 0;
        for (auto& f : r.failures)
            (f.check == "divided powers" ? bold_fail : cal_fail)++;
        bold = 50;
        cal = c.rs.kind() == RootType::B ? 50 : 0;
        o.ok = o.ok && r.ok() && controls_detected(r);
        os << r.type << " in_bold_S " << bold - bold_fail << "/" << bold;
        if (cal) {
            os << ", in_cal_S " << cal - cal_fail << "/" << cal;
            auto w = r.info["rtt_products_with_doubled_roots"];
            auto wo = r.info["rtt_products_without_doubled_roots"];
            os << " (without doubled roots " << wo["count"].get<int>() - wo["failed"].get<int>() << "/"
               << wo["count"] << ", with doubled roots " << w["count"].get<int>() - w["failed"].get<int>() << "/"
               << w["count"] << ")";
        }
        os << "; ";
    }
    o.detail = os.str();
    return o;
}

Outcome yangian() {
    std::vector<SuiteConfig> cs = g2_b2_b3();
    for (auto& c : cs) {
        c.flavor = Flavor::Rational;
        c.samples = 30;
    }
    return suites("yangian", cs);
}

Outcome ybe() {
    Outcome o;
    std::ostringstream os;
    os.precision(3);
    for (auto [n, trials, limit] : {std::tuple{2, 5, 30.0}, std::tuple{3, 2, 600.0}}) {
        RMatrixContext ctx(n);
        YbeReport r = check_ybe(ctx, trials, 42);
        bool ok = r.ok() && r.elapsed < limit;
        o.ok = o.ok && ok;
        os << "n=" << n << " " << trials << " trials " << (r.ok() ? "zero residual" : "NONZERO residual") << " in "
           << r.elapsed << " s (limit " << limit << "); ";
    }
    RMatrixContext ctx(2);
    YbeReport m = check_ybe(ctx, 1, 42, RMutation{ctx.pair_index(3, 3), ctx.pair_index(3, 3)});
    o.ok = o.ok && !m.ok();
    os << "mutation " << (m.ok() ? "NOT detected" : "detected");
    o.detail = os.str();
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double limit;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> cs{
        {1, "homomorphism G2 B2 B3, window [0,1]", 60, [] { return suites("homomorphism", g2_b2_b3()); }},
        {2, "rank-one powers, l <= 4, both flavors", 0, rank_one},
        {3, "root images G2 B2 B3, both signs", 120, [] { return suites("root_images", g2_b2_b3()); }},
        {4, "diagonal specializations G2 B2 B3, s in {0,1,2}, 10 random choices", 0, diagonal},
        {5, "vanishing below deg h, G2 and B2", 0,
         [] { return suites("vanishing", {cfg(RootSystem::G2()), cfg(RootSystem::B(2))}); }},
        {6, "triangular independence, G2 and B2", 0,
         [] { return suites("triangular_independence", {cfg(RootSystem::G2()), cfg(RootSystem::B(2))}); }},
        {7, "factorization for all d with sum <= 2, G2 and B2", 0, factorization},
        {8, "integral forms: in_bold_S G2 B2, in_cal_S B2", 0, integral_forms},
        {9, "yangian G2 B2 B3", 0, yangian},
        {10, "yang-baxter n=2 and n=3 with mutation control", 0, ybe},
    };
    int failed = 0;
    auto all = std::chrono::steady_clock::now();
    for (auto& c : cs) {
        auto t = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double el = seconds_since(t);
        if (c.limit > 0 && el > c.limit) {
            o.ok = false;
            o.detail += " over the " + std::to_string(int(c.limit)) + " s limit";
        }
        failed += !o.ok;
        std::printf("[%s] criterion %2d  %-66s %8.2f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, el,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria pass in %.1f s\n", int(cs.size()) - failed, cs.size(), seconds_since(all));
    return failed ? 1 : 0;
}
