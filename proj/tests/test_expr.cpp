#include "doctest.h"
#include "shufalg/expr.hpp"

using namespace shufalg;

namespace {

size_t error_at(const ShuffleContext& c, const char* s) {
    try {
        parse_expression(c, s);
    } catch (const ParseError& e) {
        return e.position();
    }
    return std::string::npos;
}

}  // namespace

TEST_CASE("expressions build free elements") {
    ShuffleContext c(RootSystem::G2(), Flavor::Trig);
    auto e1 = FreeElement::letter(c, 1, 0), e2 = FreeElement::letter(c, 2, -1);
    CHECK(parse_expression(c, "e[1,0]*e[2,-1]") == e1 * e2);
    CHECK(parse_expression(c, "comm(e[1,0], e[2,-1]; v^3)") == vcomm(e1, e2, VRatFunc::v(3)));
    CHECK(parse_expression(c, "comm(e[1,0], e[2,-1])") == e1 * e2 - e2 * e1);
    CHECK(parse_expression(c, "3/4*e[1,0] - v^-2*e[1,0]") ==
          e1 * (VRatFunc(Rational(3, 4)) - VRatFunc::v(-2)));
    CHECK(parse_expression(c, "e[1,0]/(v - v^-1)") == e1 * (VRatFunc::v() - VRatFunc::v(-1)).inverse());
    CHECK(parse_expression(c, "e[1,0]^3") == e1 * e1 * e1);
    CHECK(parse_expression(c, "-(e[1,0] + e[2,-1])") == -(e1 + e2));
    CHECK(parse_expression(c, "x[1,0]") == e1);
    CHECK(parse_expression(c, "0*e[1,0]").is_zero());
    CHECK(parse_expression(c, "(v^2)^-1") == FreeElement::scalar(c, VRatFunc::v(-2)));

    ShuffleContext y(RootSystem::B(2), Flavor::Rational);
    CHECK(parse_expression(y, "hbar*x[1,2]") == FreeElement::letter(y, 1, 2) * VRatFunc::v());
}

TEST_CASE("parse errors carry positions") {
    ShuffleContext c(RootSystem::G2(), Flavor::Trig);
    CHECK(error_at(c, "e[1,0] +") == 8);
    CHECK(error_at(c, "e[3,0]") == 2);
    CHECK(error_at(c, "comm(e[1,0], e[2,0]; e[1,0])") == 21);
    CHECK(error_at(c, "e[1,0] / e[2,0]") == 9);
    CHECK(error_at(c, "e[1,0] / 0") == 9);
    CHECK(error_at(c, "hbar") == 0);
    CHECK(error_at(c, "e[1,0] e[2,0]") == 7);
    CHECK(error_at(c, "e[1,0]^-1") == 0);
    CHECK(error_at(c, "vv") == 0);
    CHECK(error_at(c, "q") == 0);
    ShuffleContext y(RootSystem::G2(), Flavor::Rational);
    CHECK(error_at(y, "x[1,-1]") == 4);
    CHECK(error_at(y, "v") == 0);
    try {
        parse_expression(c, "comm(e[1,0] e[2,0])");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 12);
        CHECK(e.expected() == "','");
    }
}

TEST_CASE("free element json round trip") {
    for (auto fl : {Flavor::Trig, Flavor::Rational}) {
        ShuffleContext c(RootSystem::B(3), fl);
        auto e = parse_expression(c, fl == Flavor::Trig ? "comm(e[1,0], comm(e[2,1], e[3,-1]; v^-2); 1/3 - v^4) + 7"
                                                        : "comm(x[1,0], x[2,3]) * hbar^2 - 5/2*x[3,1]");
        auto back = FreeElement::from_json(nlohmann::json::parse(e.to_json().dump()));
        CHECK(back == e);
        CHECK(back.ctx() == e.ctx());
    }
}
