#include <doctest.h>

#include "tieknot/error.hpp"
#include "tieknot/genfunc.hpp"

using namespace tieknot;

namespace {

Series ex(std::string_view gf, std::size_t order) { return expand(parse_rational(gf), order); }

}  // namespace

TEST_CASE("expand the printed rational functions") {
  CHECK(ex("z^3/((1+z)(1-2z))", 10) == Series({0, 0, 0, 1, 1, 3, 5, 11, 21, 43}));
  CHECK(ex("2z^3(2z+1)/(1-6z^2)", 14) ==
        Series({0, 0, 0, 2, 4, 12, 24, 72, 144, 432, 864, 2592, 5184, 15552}));
  CHECK(ex("z^3(2z^3-2z^2+z+1)/(1-6z^2)", 14) ==
        Series({0, 0, 0, 1, 1, 4, 8, 24, 48, 144, 288, 864, 1728, 5184}));
  CHECK(ex("z^3/(1-z-2z^2)", 14) ==
        Series({0, 0, 0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341, 683}));
  CHECK(ex("2z^4/((1-2z)(1+z))", 14) ==
        Series({0, 0, 0, 0, 2, 2, 6, 10, 22, 42, 86, 170, 342, 682}));
  CHECK(ex("1/(1-z)", 5) == Series({1, 1, 1, 1, 1}));
  CHECK(ex("0", 3) == Series({0, 0, 0}));
}

TEST_CASE("expand rejects non-power-series input") {
  CHECK_THROWS_AS(ex("1/z", 3), Error);
  CHECK_THROWS_AS(ex("1/(2-z)", 3), Error);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("z^2/z").to_string() == "z");
  CHECK(parse_rational("-(1-z)").numerator == Polynomial{-1, 1});
  CHECK(parse_rational("2/(4-4z)") == parse_rational("1/(2-2z)"));
  CHECK(parse_rational("z^-1*z^2").numerator == Polynomial{0, 1});
  for (const char* bad : {"", "z^", "(1+z", "1/0", "1 + * z", "y"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("compare") {
  const Series a{1, 2, 3};
  CHECK(compare(a, a).equal);
  CHECK(compare(a, Series{1, 2}).equal);
  const auto c = compare(a, Series{1, 5, 3});
  CHECK_FALSE(c.equal);
  CHECK(c.index == 1);
  CHECK(c.a == 2);
  CHECK(c.b == 5);
}

TEST_CASE("the printed L-final rational form disagrees with its printed series") {
  const Series printed{0, 0, 0, 0, 2, 4, 8, 24, 48, 144, 288, 864, 1728, 5184};
  const auto literal = ex("2z^4(2z^2-2z-1)/(1-6z^2)", 14);
  const auto c = compare(literal, printed);
  CHECK_FALSE(c.equal);
  CHECK(c.index == 4);
  CHECK(c.a == -2);
  CHECK(c.b == 2);
  CHECK(ex("2z^4(1+2z-2z^2)/(1-6z^2)", 14) == printed);
  const auto fitted = fit_recurrence(printed, 4);
  REQUIRE(fitted);
  CHECK(*fitted == parse_rational("2z^4(1+2z-2z^2)/(1-6z^2)"));
}

TEST_CASE("fit_recurrence") {
  SUBCASE("FM") {
    const auto gf = fit_recurrence(Series{0, 0, 0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341, 683}, 4);
    REQUIRE(gf);
    CHECK(gf->denominator == Polynomial{1, -1, -2});
    CHECK(gf->numerator == Polynomial::monomial(1, 3));
  }
  SUBCASE("all ones") {
    const auto gf = fit_recurrence(Series{1, 1, 1, 1, 1, 1, 1}, 3);
    REQUIRE(gf);
    CHECK(*gf == parse_rational("1/(1-z)"));
  }
  SUBCASE("the full series is not rational at small order") {
    const Series full{0, 0, 2, 4, 20, 40, 192, 384, 1896, 3792, 19320, 38640, 202392};
    CHECK_FALSE(fit_recurrence(full, 6).has_value());
  }
  SUBCASE("expand inverts fit") {
    const Series s{3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9, 3, 2, 3, 8, 4};
    if (auto gf = fit_recurrence(s, 6)) CHECK(expand(*gf, s.order()) == s);
  }
}

TEST_CASE("series arithmetic") {
  const Series a{1, 2, 3};
  const Series b{4, 5};
  CHECK(a + b == Series{5, 7});
  CHECK(a - a == Series{0, 0, 0});
  CHECK(a * Series{1, 1, 1} == Series{1, 3, 6});
  CHECK(a.sum() == 6);
  CHECK(a.truncated(2) == Series{1, 2});
  CHECK(Series{0, 0, 2, 4}.to_text() == "2z^2 + 4z^3 + O(z^4)");
  CHECK(a.to_list() == "1, 2, 3");
}

TEST_CASE("linearity of expand") {
  const auto f = parse_rational("z/(1-2z)");
  const auto g = parse_rational("(1+z)/(1-2z)");
  const RationalGF sum{f.numerator + g.numerator, f.denominator};
  CHECK(expand(sum, 12) == expand(f, 12) + expand(g, 12));
}

TEST_CASE("big coefficients do not overflow") {
  const auto s = ex("1/(1-1000z)", 12);
  CHECK(s[11].str() == "1000000000000000000000000000000000");
}

TEST_CASE("polynomials") {
  const Polynomial p{1, -1, -2};
  CHECK(p.degree() == 2);
  CHECK(Polynomial{}.is_zero());
  CHECK((Polynomial{1, 1} * Polynomial{1, -2}) == p);
  CHECK(p.to_string() == "1 - z - 2z^2");
}
