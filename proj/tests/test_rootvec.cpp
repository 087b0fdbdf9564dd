#include "doctest.h"
#include "shufalg/rootvec.hpp"

#include <random>

using namespace shufalg;

namespace {

ShuffleContext trig(RootSystem rs) { return {std::move(rs), Flavor::Trig}; }
ShuffleContext rat(RootSystem rs) { return {std::move(rs), Flavor::Rational}; }
FreeElement e(const ShuffleContext& c, int i, int r) { return FreeElement::letter(c, i, r); }
VRatFunc V(int z) { return VRatFunc::v(z); }

FreeElement random_free(std::mt19937& g, const ShuffleContext& c) {
    std::uniform_int_distribution<int> len(0, 3), col(1, c.rank()), ex(0, 2), cf(-3, 3);
    FreeElement r(c);
    for (int t = 0; t < 3; ++t) {
        FreeElement w = FreeElement::one(c);
        int l = len(g);
        for (int k = 0; k < l; ++k)
            w = w * e(c, col(g), ex(g));
        r += w * VRatFunc(cf(g));
    }
    return r;
}

}  // namespace

TEST_CASE("v-commutators") {
    auto c = trig(RootSystem::G2());
    auto a = e(c, 1, 0), b = e(c, 2, 0);
    CHECK(vcomm(a, a, 1).is_zero());
    CHECK(vcomm(a, b, V(3)) == a * b - V(3) * (b * a));
    CHECK(vcomm(a, b, 0) == a * b);
    std::mt19937 g(1);
    for (int t = 0; t < 20; ++t) {
        auto x = random_free(g, c), y = random_free(g, c), z = random_free(g, c);
        CHECK(vcomm(x + y, z, V(2)) == vcomm(x, z, V(2)) + vcomm(y, z, V(2)));
        CHECK(vcomm(x, y + z, V(-1)) == vcomm(x, y, V(-1)) + vcomm(x, z, V(-1)));
        // Jacobi identity for plain brackets
        auto j = vcomm(x, vcomm(y, z)) + vcomm(y, vcomm(z, x)) + vcomm(z, vcomm(x, y));
        CHECK(j.is_zero());
        // [x, yz]_{uw} = [x, y]_u z + u y [x, z]_w
        VRatFunc u = V(2), w = V(-3);
        CHECK(vcomm(x, y * z, u * w) == vcomm(x, y, u) * z + u * (y * vcomm(x, z, w)));
    }
}

TEST_CASE("root vector shapes") {
    auto g2 = trig(RootSystem::G2());
    const auto& rs = g2.rs();
    int b12 = rs.parse_root("[1,2]"), b122 = rs.parse_root("[1,2,2]");
    int b1222 = rs.parse_root("[1,2,2,2]"), bl = rs.parse_root("[1,2,1,2,2]");
    CHECK(tilde_root_vector(g2, rs.simple(1), 4, 1) == e(g2, 1, 4));
    CHECK(tilde_root_vector(g2, b12, 0, 1) == vcomm(e(g2, 1, 0), e(g2, 2, 0), V(3)));
    CHECK(tilde_root_vector(g2, b122, 0, -1) ==
          vcomm(vcomm(e(g2, 1, 0), e(g2, 2, 0), V(-3)), e(g2, 2, 0), V(-1)));
    CHECK(tilde_root_vector(g2, b1222, 5, 1, {2, 1}) ==
          vcomm(vcomm(vcomm(e(g2, 1, 2), e(g2, 2, 1), V(3)), e(g2, 2, 1), V(1)), e(g2, 2, 1), V(-1)));
    auto inner = vcomm(e(g2, 1, 1), e(g2, 2, -1), V(3));
    CHECK(tilde_root_vector(g2, bl, -1, 1, {1, -1}) ==
          vcomm(inner, vcomm(inner, e(g2, 2, -1), V(1)), V(-1)));
    CHECK_THROWS(tilde_root_vector(g2, bl, 0, 1, {1, 1}));
    CHECK_THROWS(root_vector(g2, b12, {0}, {V(3)}));
    CHECK_THROWS(root_vector(g2, b12, {0, 0}, {VRatFunc(2)}));
    auto general = root_vector(g2, bl, {0, 1, 2, 3, 4}, {V(1), V(2), V(3), V(4)});
    CHECK(general ==
          vcomm(vcomm(e(g2, 1, 0), e(g2, 2, 1), V(1)),
                vcomm(vcomm(e(g2, 1, 2), e(g2, 2, 3), V(2)), e(g2, 2, 4), V(3)), V(4)));

    auto b2 = trig(RootSystem::B(2));
    int c12 = b2.rs().parse_root("[1,2]"), c122 = b2.rs().parse_root("[1,2,2]");
    CHECK(tilde_root_vector(b2, c12, 0, 1) == vcomm(e(b2, 1, 0), e(b2, 2, 0), V(2)));
    CHECK(tilde_root_vector(b2, c122, 0, 1) == vcomm(vcomm(e(b2, 1, 0), e(b2, 2, 0), V(2)), e(b2, 2, 0)));
    CHECK(rtt_root_vector(b2, c12, 0, 1) == vcomm(e(b2, 1, 0), e(b2, 2, 0), V(2)) * VRatFunc(angle(2)));
    auto b3 = trig(RootSystem::B(3));
    int r132 = b3.rs().parse_root("[1,3,2]");
    // s = s1 + 2 s2 + 2 s3
    auto t = tilde_root_vector(b3, r132, 5, -1, {1, 1, 1});
    auto x = vcomm(vcomm(e(b3, 1, 1), e(b3, 2, 1), V(-2)), e(b3, 3, 1), V(-2));
    CHECK(t == vcomm(vcomm(x, e(b3, 3, 1)), e(b3, 2, 1), V(-2)));
    CHECK_THROWS(tilde_root_vector(b3, r132, 4, -1, {1, 1, 1}));
    CHECK_THROWS(rtt_root_vector(g2, b12, 0, 1));
}

TEST_CASE("divided powers") {
    auto g2 = trig(RootSystem::G2());
    const auto& rs = g2.rs();
    CHECK(divided_power(g2, rs.simple(1), 3, 0, 1) == FreeElement::one(g2));
    int b122 = rs.parse_root("[1,2,2]");
    CHECK(divided_power(g2, b122, 0, 1, 1) == tilde_root_vector(g2, b122, 0, 1) * VRatFunc(1, qfact(2)));
    CHECK(divided_power(g2, rs.simple(1), 2, 2, 1) ==
          e(g2, 1, 2) * e(g2, 1, 2) * VRatFunc(1, qfact(2, ULaurent::var(3))));
    int bl = rs.parse_root("[1,2,1,2,2]");
    CHECK(divided_power_denominator(rs, bl, 2) == qfact(3).pow(2) * qfact(2, ULaurent::var(3)));
    auto b3 = RootSystem::B(3);
    CHECK(divided_power_denominator(b3, b3.parse_root("[1,3,2]"), 2) ==
          qfact(2).pow(2) * qfact(2, ULaurent::var(2)));
    CHECK(divided_power_denominator(b3, b3.parse_root("[2,3]"), 3) == qfact(3, ULaurent::var(1)));
}

TEST_CASE("yangian root vectors") {
    auto c = rat(RootSystem::G2());
    const auto& rs = c.rs();
    CHECK(yangian_tilde_root_vector(c, rs.parse_root("[1,2]"), 2) == vcomm(e(c, 1, 2), e(c, 2, 0)));
    auto x = yangian_tilde_root_vector(c, rs.parse_root("[1,2,1,2,2]"), 1);
    CHECK(x == vcomm(vcomm(e(c, 1, 1), e(c, 2, 0)), vcomm(vcomm(e(c, 1, 0), e(c, 2, 0)), e(c, 2, 0))));
    VRatFunc h(ULaurent::var(1));
    CHECK(yangian_bar_root_vector(c, 1, {1, 0}) == yangian_root_vector(c, 1, {1, 0}) * h);
    CHECK_THROWS(yangian_root_vector(c, 1, {-1, 0}));
    CHECK_THROWS(yangian_root_vector(trig(RootSystem::G2()), 1, {0, 0}));
}

TEST_CASE("yangian root vectors are divisible by powers of hbar") {
    for (auto rs : {RootSystem::G2(), RootSystem::B(2), RootSystem::B(3)}) {
        auto c = rat(rs);
        for (int b = 0; b < rs.num_roots(); ++b)
            for (int s = 0; s <= 2; ++s) {
                int len = rs.root(b).height;
                std::vector<int> exps(len, 0);
                exps[0] = s;
                if (len > 1 && s > 0) {
                    exps[0] = s - 1;
                    exps[len - 1] = 1;
                }
                auto F = psi(yangian_root_vector(c, b, exps));
                CHECK(coefficient_valuation(F.numerator()) == len - 1);
            }
    }
}

TEST_CASE("pbwd monomials") {
    auto g2 = trig(RootSystem::G2());
    const auto& rs = g2.rs();
    PBWDIndex h;
    h.h[{rs.simple(1), 0}] = 1;
    h.h[{rs.simple(2), 0}] = 1;
    CHECK(pbwd_monomial(g2, h, powers_of(g2, tilde_choice(g2, 1))) == e(g2, 1, 0) * e(g2, 2, 0));
    PBWDIndex h2;
    int b12 = rs.parse_root("[1,2]");
    h2.h[{b12, 0}] = 2;
    auto E = tilde_root_vector(g2, b12, 0, 1);
    CHECK(pbwd_monomial(g2, h2, powers_of(g2, tilde_choice(g2, 1))) == E * E);
    PBWDIndex h3;
    h3.h[{b12, 1}] = 1;
    CHECK(pbwd_monomial(g2, h3, powers_of(g2, tilde_choice(g2, -1))) == tilde_root_vector(g2, b12, 1, -1));
}

TEST_CASE("pbwd images are independent") {
    auto g2 = trig(RootSystem::G2());
    auto idx = pbwd_indices(g2.rs(), Grading{1, 1}, 0, 1);
    CHECK(idx.size() == 6);
    std::vector<ShuffleElement> im;
    for (auto& h : idx)
        im.push_back(psi(pbwd_monomial(g2, h, powers_of(g2, tilde_choice(g2, 1)))));
    CHECK(rank_over_field(im) == idx.size());
    auto b2 = rat(RootSystem::B(2));
    auto idy = pbwd_indices(b2.rs(), Grading{1, 2}, 0, 1);
    std::vector<ShuffleElement> iy;
    for (auto& h : idy)
        iy.push_back(psi(pbwd_monomial(b2, h, powers_of(b2, yangian_tilde_choice(b2)))));
    CHECK(rank_over_field(iy) == idy.size());
}
