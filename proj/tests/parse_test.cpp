#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conicring/error.hpp"
#include "conicring/parse.hpp"
#include "support.hpp"

using namespace conicring;

namespace {

std::string eval(std::string_view text) { return evaluate_ring_document(text).to_string(); }

template <typename F>
ParseError parse_error(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a ParseError");
    return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("conic list") {
    ConicProduct p = parse_conic_list("# header\n1 1\n\n  -1/2   3  # trailing\n4 9\r\n");
    REQUIRE(p.size() == 3);
    CHECK(p[0].to_string() == "Conic(1,1)");
    CHECK(p[1].to_string() == "Conic(-2,3)");
    CHECK(p[2].to_string() == "Conic(1,1)");
    CHECK(parse_conic_list("").empty());
    CHECK(parse_conic_list("# only a comment\n\n").empty());
}

TEST_CASE("conic list errors carry positions") {
    ParseError degenerate = parse_error([] { parse_conic_list("1 1\n0 1\n"); });
    CHECK(degenerate.line() == 2);

    ParseError bad = parse_error([] { parse_conic_list("1 1\n-1 x3\n"); });
    CHECK(bad.line() == 2);
    CHECK(bad.column() == 4);

    ParseError extra = parse_error([] { parse_conic_list("1 2 3\n"); });
    CHECK(extra.line() == 1);
    CHECK(extra.column() == 5);

    ParseError missing = parse_error([] { parse_conic_list("\n\n7\n"); });
    CHECK(missing.line() == 3);

    CHECK_THROWS_AS(parse_conic_list("1/0 1\n"), ParseError);
}

TEST_CASE("ring expressions") {
    CHECK(eval("(P1 - [(-1,-1)]) * [(-1,-1)]") == "0");
    CHECK(eval("(P1 - [(-1,-1)])^2") == "C(0)[L]^2 - C({2,inf})[L]^1");
    CHECK(eval("x = [(-1,3)] + 2*P1\n1 * x") == eval("[(-1,3)] + 2*P1"));
    CHECK(eval("[]") == "C(0)[L]^0");
    CHECK(eval("[(1,1)]") == "C(0)[L]^1");
    CHECK(eval("[L]^3") == "C(0)[L]^3");
    CHECK(eval("-P1 + 3") == "3*C(0)[L]^0 - C(0)[L]^1");
    CHECK(eval("2 - 2") == "0");
    CHECK(eval("[(-1,-1), (-1,-1), (-1,3)]") == "C({2,inf},{3,inf})[L]^1");
    CHECK(eval("[(-1/2, 3)]") == "C(0)[L]^1");
    CHECK(eval("a = P1; b = a * a; b - a^2") == "0");
    CHECK(eval("# comment\n[(-1,-1)]   # trailing\n") == "C({2,inf})[L]^0");
    CHECK(eval("(P1\n - [(-1,-1)])") == "C(0)[L]^1 - C({2,inf})[L]^0");
}

TEST_CASE("term literals") {
    CHECK(eval("C(0)") == "C(0)[L]^0");
    CHECK(eval("C({2,inf})[L]") == "C({2,inf})[L]^1");
    CHECK(eval("C((-1,-1))[L]^2") == "C({2,inf})[L]^2");
    CHECK(eval("C({2,3},{3,inf},{2,inf})") == "C({2,inf},{3,inf})[L]^0");
    CHECK(eval("C({inf,2}) * C({2,inf})") == "C({2,inf})[L]^1");
}

TEST_CASE("canonical output parses back") {
    testing::Gen gen(71);
    const auto places = testing::small_places();
    for (int i = 0; i < 100; ++i) {
        RingElement x = gen.ring_element(places, 4);
        CHECK(evaluate_ring_document(x.to_string()) == x);
    }
}

TEST_CASE("ring expression errors") {
    CHECK_THROWS_AS(eval(""), ParseError);
    CHECK_THROWS_AS(eval("y"), ParseError);
    CHECK_THROWS_AS(eval("P1 +"), ParseError);
    CHECK_THROWS_AS(eval("(P1"), ParseError);
    CHECK_THROWS_AS(eval("[(0,1)]"), ParseError);
    CHECK_THROWS_AS(eval("C({2})"), ParseError);
    CHECK_THROWS_AS(eval("C({2,4})"), ParseError);
    CHECK_THROWS_AS(eval("P1 ^ -1"), ParseError);
    CHECK_THROWS_AS(eval("P1 $"), ParseError);
    CHECK_THROWS_AS(eval("P1 = 3"), ParseError);
    CHECK_THROWS_AS(eval("P1 P1"), ParseError);

    ParseError e = parse_error([] { evaluate_ring_document("P1\n[(1,2) + 3"); });
    CHECK(e.line() == 2);
}
