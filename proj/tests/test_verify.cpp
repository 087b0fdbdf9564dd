#include "doctest.h"
#include "shufalg/rootvec.hpp"
#include "shufalg/specmaps.hpp"
#include "shufalg/verify.hpp"

using namespace shufalg;

namespace {

SuiteConfig config(RootSystem rs, Flavor f = Flavor::Trig) {
    SuiteConfig cfg;
    cfg.rs = std::move(rs);
    cfg.flavor = f;
    return cfg;
}

bool all_detected(const SuiteReport& r) {
    for (auto& c : r.controls)
        if (!c.detected)
            return false;
    return !r.controls.empty();
}

}  // namespace

TEST_CASE("closed forms of root images") {
    ShuffleContext c(RootSystem::G2(), Flavor::Trig);
    const auto& rs = c.rs();
    int bl = rs.parse_root("[1,2,1,2,2]");
    CHECK(tilde_weights(rs, bl) == std::vector<int>{2, 3});
    auto F = psi(tilde_root_vector(c, bl, 5, 1, {1, 1}));
    auto G = displayed_root_image(c, bl, 5, 1, {1, 1});
    REQUIRE(G);
    CHECK(proportional_up_to_unit(F, *G));
    CHECK(!proportional_up_to_unit(F, *displayed_root_image(c, bl, 5, -1, {1, 1})));
    CHECK_THROWS(displayed_root_image(c, bl, 4, 1, {1, 1}));

    ShuffleContext b3(RootSystem::B(3), Flavor::Trig);
    int r = b3.rs().parse_root("[1,3,2]");
    CHECK(tilde_weights(b3.rs(), r) == std::vector<int>{1, 2, 2});
    for (int sign : {1, -1})
        CHECK(proportional_up_to_unit(psi(tilde_root_vector(b3, r, 3, sign, {1, 0, 1})),
                                      *displayed_root_image(b3, r, 3, sign, {1, 0, 1})));

    ShuffleContext y(RootSystem::B(3), Flavor::Rational);
    CHECK(proportional_up_to_unit(psi(yangian_tilde_root_vector(y, r, 1)), *displayed_root_image(y, r, 1, 1, {})));
    ShuffleContext yg(RootSystem::G2(), Flavor::Rational);
    CHECK(!displayed_root_image(yg, bl, 0, 1, {}));
}

TEST_CASE("factorwise images") {
    ShuffleContext c(RootSystem::B(2), Flavor::Trig);
    for (auto& h : pbwd_indices(c.rs(), Grading{2, 2}, 0, 1)) {
        auto F = psi(pbwd_monomial(c, h, powers_of(c, tilde_choice(c, -1))));
        CHECK(pbwd_image(c, h, tilde_choice(c, -1)) == F);
        CHECK(pbwd_image(c, h, divided_power_choice(c, 1)) == psi(pbwd_monomial(c, h, divided_power_choice(c, 1))));
    }
}

TEST_CASE("suites pass on B2") {
    auto cfg = config(RootSystem::B(2));
    for (auto& name : {"homomorphism", "root_images", "diagonal", "vanishing", "factorization",
                       "triangular_independence", "ybe"}) {
        auto r = run_suite(name, cfg);
        INFO(r.to_json().dump());
        CHECK(r.ok());
        CHECK(r.checks > 0);
        CHECK(all_detected(r));
        CHECK(r.name == name);
    }
}

TEST_CASE("rational suites") {
    auto cfg = config(RootSystem::B(2), Flavor::Rational);
    for (auto& name : {"homomorphism", "root_images", "diagonal", "vanishing"}) {
        auto r = run_suite(name, cfg);
        INFO(r.to_json().dump());
        CHECK(r.ok());
        CHECK(r.flavor == "rational");
    }
    cfg.samples = 5;
    auto y = suite_yangian(cfg);
    CHECK(y.ok());
    CHECK(all_detected(y));
    CHECK_THROWS(run_suite("factorization", cfg));
}

TEST_CASE("integral forms on B2 separate doubled roots") {
    auto cfg = config(RootSystem::B(2));
    cfg.samples = 12;
    auto r = suite_integral_forms(cfg);
    CHECK(all_detected(r));
    auto with = r.info["rtt_products_with_doubled_roots"];
    auto without = r.info["rtt_products_without_doubled_roots"];
    CHECK(without["failed"] == 0);
    CHECK(with["failed"] == with["count"]);
    for (auto& f : r.failures)
        CHECK(f.check == "rtt root vectors");
}

TEST_CASE("type A suites") {
    auto cfg = config(RootSystem::A(2));
    CHECK(!suite_applies("root_images", cfg));
    CHECK(!suite_applies("ybe", cfg));
    CHECK_THROWS(run_suite("root_images", cfg));
    cfg.gradings = {{2, 0}, {1, 1}, {2, 1}};
    auto t = suite_triangular_independence(cfg);
    CHECK(t.ok());
    // A1-like block k = (2, 0) in window [0, 1]: partitions (0,0), (0,1), (1,1)
    CHECK(t.info["blocks"][0]["rank"] == 3);
}

TEST_CASE("configuration errors and determinism") {
    auto cfg = config(RootSystem::G2());
    cfg.lo = 1;
    cfg.hi = 0;
    CHECK_THROWS(suite_homomorphism(cfg));
    cfg = config(RootSystem::G2());
    cfg.gradings = {{3, 3}};
    CHECK_THROWS(suite_vanishing(cfg));
    CHECK_THROWS(run_suite("nonsense", cfg));
    cfg = config(RootSystem::B(2));
    cfg.samples = 3;
    auto a = suite_integral_forms(cfg).to_json(), b = suite_integral_forms(cfg).to_json();
    a.erase("elapsed");
    b.erase("elapsed");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("time budget") {
    auto cfg = config(RootSystem::G2());
    cfg.budget = 1e-9;
    auto r = suite_diagonal(cfg);
    CHECK(!r.ok());
    CHECK(r.failures.back().check == "time budget");
}
