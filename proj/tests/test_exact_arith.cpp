#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "biharm/error.hpp"
#include "biharm/format.hpp"
#include "support.hpp"

using namespace biharm;
using biharm::testing::Gen;

namespace {
GaussRat G(const char* s) { return GaussRat::parse(s); }
} // namespace

TEST_CASE("field arithmetic examples") {
    CHECK(G("1+i") * G("1-i") == GaussRat(2));
    CHECK(GaussRat(0) + G("3/5+4/5*i") == G("3/5+4/5*i"));
    CHECK(G("1/2+i") * GaussRat(2) == G("1+2*i"));
    CHECK((G("1/2+i") * GaussRat(2)).str() == "1+2*i");
}

TEST_CASE("inverse examples") {
    CHECK(GaussRat::i().inverse() == G("-i"));
    CHECK(GaussRat(2).inverse() == G("1/2"));
    GaussRat inv = G("3+4*i").inverse();
    CHECK(inv == G("3/25-4/25*i"));
    CHECK(inv * G("3+4*i") == GaussRat(1));
    CHECK_THROWS_AS(GaussRat(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(GaussRat(1) / GaussRat(0), DivisionByZero);
}

TEST_CASE("normalization") {
    GaussRat a(Rational(6, 4), Rational(-3, -9));
    CHECK(a.re().get_den() == 2);
    CHECK(a.re().get_num() == 3);
    CHECK(a.im() == Rational(1, 3));
    GaussRat z = G("2/3") - G("4/6");
    CHECK(z.is_zero());
    CHECK(z.re().get_den() == 1);
    CHECK(z.im().get_den() == 1);
    CHECK(z == GaussRat());
}

TEST_CASE("string and JSON forms") {
    CHECK(GaussRat(0).str() == "0");
    CHECK(G("3/25-4/25*i").str() == "3/25-4/25*i");
    CHECK(GaussRat::i().str() == "i");
    CHECK((-GaussRat::i()).str() == "-i");
    CHECK(G("-7/2").str() == "-7/2");
    CHECK(G("5*i").str() == "5*i");
    CHECK(G("(3+4*i)") == GaussRat(Rational(3), Rational(4)));
    CHECK_THROWS_AS(G("3x"), Error);
    CHECK_THROWS_AS(G("1/0"), DivisionByZero);
    Json j = to_json(G("1/2-3*i"));
    CHECK(j.dump() == R"({"re":"1/2","im":"-3"})");
    CHECK(gauss_from_json(j) == G("1/2-3*i"));
}

TEST_CASE("unbounded integers") {
    GaussRat big = GaussRat(Integer("123456789012345678901234567890"));
    GaussRat sq = big * big;
    CHECK(sq.re().get_str() == "15241578753238836750495351562536198787501905199875019052100");
    CHECK((sq / big) == big);
    CHECK(G("1+i").pow(64) == GaussRat(Integer("4294967296")));
}

TEST_CASE("field axioms on random inputs") {
    Gen gen(17);
    for (int k = 0; k < 300; ++k) {
        GaussRat a = gen.gauss(), b = gen.gauss(), c = gen.gauss();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == GaussRat(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussRat(1));
        GaussRat r = a * b + c;
        CHECK(r.re().get_den() > 0);
        CHECK(gcd(r.re().get_num(), r.re().get_den()) == 1);
        CHECK(gcd(r.im().get_num(), r.im().get_den()) == 1);
        CHECK(GaussRat::parse(r.str()) == r);
    }
}
