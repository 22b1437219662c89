#include "elsv/error.hpp"
#include "elsv/laurent.hpp"

#include <doctest.h>

using namespace elsv;

TEST_CASE("Laurent polynomial arithmetic") {
    const auto x = LaurentPoly::power(1);
    const auto xi = LaurentPoly::power(-1);
    CHECK(x * xi == LaurentPoly(1));
    const auto p = (x + 1) * (x - 1);
    CHECK(p.coefficient(2) == 1);
    CHECK(p.coefficient(1) == 0);
    CHECK(p.coefficient(0) == -1);
    CHECK(p.terms().size() == 2);
    CHECK((p - p).is_zero());
    CHECK(p.evaluate(3) == 8);
    CHECK(p.derivative() == x * 2);
    CHECK(p.truncated(1) == LaurentPoly(-1));
    CHECK(p.min_power() == 0);
    CHECK(p.max_power() == 2);
    CHECK(LaurentPoly(5).is_constant());
    CHECK_FALSE(x.is_constant());
    CHECK_THROWS_AS(xi.evaluate(0), Error);
}

TEST_CASE("Laurent polynomial text") {
    CHECK(LaurentPoly().to_string() == "0");
    const auto p = LaurentPoly::monomial(make_rational(1, 2), -1) + LaurentPoly(3) + LaurentPoly::monomial(2, 1);
    CHECK(p.to_string() == "1/2 u^-1 + 3 + 2 u");
    CHECK(p.to_string("q") == "1/2 q^-1 + 3 + 2 q");
}
