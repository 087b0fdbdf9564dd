#include "shufalg/rtt.hpp"

#include <doctest.h>

#include <set>

using namespace shufalg;

TEST_CASE("index bookkeeping") {
    RMatrixContext c(2);
    CHECK(c.N() == 5);
    std::vector<int> bars;
    for (int i = 1; i <= 5; ++i)
        bars.push_back(c.bar2(i));
    CHECK(bars == std::vector<int>{3, 1, 0, -1, -3});
    CHECK(c.prime(1) == 5);
    CHECK(c.prime(3) == 3);
    CHECK(c.xi() == VRatFunc::v(-6));
    RMatrixContext c3(3);
    for (int i = 1; i <= 7; ++i)
        CHECK(c3.bar2(i) == -c3.bar2(c3.prime(i)));
}

TEST_CASE("constant matrices") {
    for (int n : {2, 3}) {
        RMatrixContext c(n);
        auto m = build_PQR(c);
        int N = c.N();
        CHECK(m.P * m.P == identity_matrix(N * N));
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                CHECK(m.Q.at(c.pair_index(c.prime(i), i), c.pair_index(c.prime(j), j)) == c.q_bar(i, j));
        for (int i = 1; i <= N; ++i) {
            auto d = m.R.at(c.pair_index(i, i), c.pair_index(i, i));
            CHECK(d == (i == n + 1 ? VRatFunc(1) : c.q()));
        }
        CHECK(m.P.entries.size() == size_t(N * N));
        CHECK(m.Q.entries.size() == size_t(N * N));
    }
}

TEST_CASE("spectral R at u = 1") {
    for (int n : {2, 3}) {
        RMatrixContext c(n);
        auto m = build_PQR(c);
        auto R = build_Rtrig(c);
        CHECK(R.at(1) == m.P);
        std::set<MatrixKey> support;
        for (auto* M : {&m.P, &m.Q, &m.R})
            for (auto& [k, x] : M->entries)
                support.insert(k);
        CHECK(R.num.size() <= support.size());
        for (auto& [k, x] : R.num)
            CHECK(support.count(k));
        auto e = R.eval(Rational(3, 7), Rational(-5, 2));
        REQUIRE(e);
        CHECK(!e->empty());
        CHECK(!R.eval(c.xi().eval(2), 2));
    }
}

TEST_CASE("yang baxter") {
    auto rep = check_ybe(RMatrixContext(2), 5, 42);
    CHECK(rep.ok());
    CHECK(rep.samples.size() == 5);
    auto again = check_ybe(RMatrixContext(2), 5, 42);
    CHECK(again.to_json()["samples"] == rep.to_json()["samples"]);
    auto bad = check_ybe(RMatrixContext(2), 2, 42, RMutation{0, 0});
    CHECK(!bad.ok());
    RMatrixContext c3(3);
    CHECK(check_ybe(c3, 2, 42).ok());
    int k = c3.pair_index(4, 4);
    CHECK(!check_ybe(c3, 1, 42, RMutation{k, k}).ok());
}
