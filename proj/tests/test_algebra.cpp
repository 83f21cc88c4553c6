// Exact-arithmetic foundations: scalar helpers, univariate and multivariate
// polynomials, extended-precision reals, and trigonometric polynomials.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "asmice/errors.hpp"
#include "asmice/mpoly.hpp"
#include "asmice/real.hpp"
#include "asmice/scalars.hpp"
#include "asmice/trigpoly.hpp"
#include "asmice/upoly.hpp"

using namespace asmice;

TEST_CASE("scalar helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int("2432902008176640000"));
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(hyperfactorial(4) == 27648);  // 1*4*27*256
    CHECK(pow_int(Int(3), 4) == 81);
    CHECK(pow_rat(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(pow_rat(Rat(5), 0) == 1);
    CHECK(is_integer(Rat(6, 3)));
    CHECK(!is_integer(Rat(1, 3)));
    CHECK(to_string(Rat(-7, 2)) == "-7/2");
    CHECK(to_string(Int(42)) == "42");
}

TEST_CASE("generalized binomial coefficients") {
    // C(1/3, 2) = (1/3)(1/3 - 1)/2 = -1/9
    CHECK(gbinomial(Rat(1, 3), 2) == Rat(-1, 9));
    CHECK(gbinomial(Rat(5, 2), 0) == 1);
    CHECK(gbinomial(Rat(4), 2) == 6);  // agrees with the integer version
}

TEST_CASE("univariate polynomial ring") {
    const UPoly p(std::vector<Rat>{1, 2, 1});  // (t+1)^2
    const UPoly q(std::vector<Rat>{-1, 1});    // t - 1
    CHECK(p.degree() == 2);
    CHECK(UPoly::zero().degree() == std::nullopt);
    CHECK((p * q).coef(3) == 1);
    CHECK((p * q).eval(Rat(2)) == 9);  // 9 * 1
    CHECK(p.eval(Rat(1, 2)) == Rat(9, 4));
    CHECK(p + (-p) == UPoly::zero());
    CHECK(p.shifted(2).degree() == 4);
    CHECK(p.scaled(Rat(3)).coef(1) == 6);
    CHECK(q.to_string() == "t - 1");
    CHECK((p - p).is_zero());
}

TEST_CASE("multivariate polynomial ring") {
    const MPoly x = MPoly::var(3, 0);
    const MPoly y = MPoly::var(3, 1);
    const MPoly z = MPoly::var(3, 2);
    const MPoly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.total_degree() == 2);
    CHECK((x * y * z).term_count() == 1);
    CHECK((x + y) * (y + z) == (y + z) * (x + y));
    CHECK(((x + y) + z) == (x + (y + z)));
    CHECK(p.eval({Rat(3), Rat(2), Rat(0)}) == 5);
    CHECK(MPoly::constant(3, Rat(0)).is_zero());

    const UPoly sq(std::vector<Rat>{0, 0, 1});
    CHECK(MPoly::from_upoly(sq, 3, 2) == z * z);
}

TEST_CASE("grlex order and rendering") {
    const MPoly x = MPoly::var(2, 0);
    const MPoly y = MPoly::var(2, 1);
    const MPoly p = x * y + x + y * y;
    // Leading term under grlex: total degree 2, x-heavier first.
    CHECK(p.to_string() == "x*y + y^2 + x");
}

TEST_CASE("determinants and exact division") {
    const MPoly x = MPoly::var(2, 0);
    const MPoly y = MPoly::var(2, 1);
    CHECK(mpoly_det({{x, y}, {x, y}}).is_zero());
    CHECK(mpoly_det({{x, y}, {y, x}}) == x * x - y * y);

    // (x^2 - y^2) / (x - y) = x + y by both division routes.
    const MPoly diff = x * x - y * y;
    CHECK(mpoly_exact_div(diff, x - y) == x + y);
    CHECK(divide_linear_difference(diff, 0, 1) == x + y);

    const MPoly p = (x + y) * (x * y + MPoly::constant(2, Rat(3)));
    CHECK(mpoly_exact_div(p, x + y) == x * y + MPoly::constant(2, Rat(3)));
    CHECK_THROWS_AS(mpoly_exact_div(x * x + y, x + y), NonzeroRemainder);
    CHECK_THROWS_AS(divide_linear_difference(x * x + y, 0, 1),
                    NonzeroRemainder);
}

TEST_CASE("vandermonde products and quotients") {
    const MPoly x = MPoly::var(3, 0);
    const MPoly y = MPoly::var(3, 1);
    const MPoly z = MPoly::var(3, 2);
    const MPoly v = vandermonde_product(3, 3);
    CHECK(v == (x - y) * (x - z) * (y - z));
    CHECK(vandermonde_quotient(v * (x + y + z), 3) == x + y + z);
    // Row swap flips the sign of the alternant.
    CHECK(vandermonde_quotient(-v, 3) == MPoly::constant(3, Rat(-1)));
}

TEST_CASE("extended-precision reals") {
    const PrecisionGuard guard(60);
    CHECK(to_real(Rat(1, 4)) == Real("0.25"));
    const Real third_pi = pi() / 3;
    CHECK(rel_close(sin(third_pi), sqrt3() / 2, singular_threshold(60, 20)));
    CHECK(rel_diff(Real(2), Real(2)) == 0);
    CHECK(rel_close(Real(1), Real(1) + Real("1e-50"), Real("1e-45")));
    CHECK(!rel_close(Real(1), Real(1) + Real("1e-20"), Real("1e-45")));
    CHECK_THROWS_AS(PrecisionGuard(10), RangeError);

    std::vector<std::vector<Real>> m{{Real(2), Real(1)}, {Real(1), Real(2)}};
    CHECK(rel_close(real_det(m), Real(3), Real("1e-40")));
    std::vector<std::vector<Real>> s{{Real(1), Real(2)}, {Real(2), Real(4)}};
    CHECK(real_det(s) == 0);
}

TEST_CASE("precision guard restores on scope exit") {
    const unsigned before = Real::default_precision();
    {
        const PrecisionGuard guard(90);
        CHECK(Real::default_precision() == 90);
    }
    CHECK(Real::default_precision() == before);
}

TEST_CASE("trigonometric polynomials") {
    TrigPoly f;
    f.add_sin(2, Rat(1, 2));
    f.add_cos(5, Rat(-1));

    // Normalization: sin(-3u) = -sin(3u), cos(-3u) = cos(3u), sin(0u) = 0.
    TrigPoly g;
    g.add_sin(-3, Rat(1));
    TrigPoly g2;
    g2.add_sin(3, Rat(-1));
    CHECK(g == g2);
    TrigPoly h;
    h.add_cos(-4, Rat(2));
    TrigPoly h2;
    h2.add_cos(4, Rat(2));
    CHECK(h == h2);
    TrigPoly zero_sin;
    zero_sin.add_sin(0, Rat(7));
    CHECK(zero_sin.is_zero());

    // d/du [ 1/2 sin(2u) - cos(5u) ] = cos(2u) + 5 sin(5u)
    TrigPoly expect;
    expect.add_cos(2, Rat(1));
    expect.add_sin(5, Rat(5));
    CHECK(f.derivative() == expect);
    CHECK(f.derivative(2) == f.derivative().derivative());

    CHECK(f.eval_at_zero() == Rat(-1));
    CHECK(f.max_frequency() == 5);
    CHECK(f.has_frequency_multiple_of_3() == false);
    g.add_sin(6, Rat(1));
    CHECK(g.has_frequency_multiple_of_3());
    TrigPoly odd;
    odd.add_sin(1, Rat(1));
    odd.add_sin(5, Rat(2));
    CHECK(odd.has_parity(1));
    CHECK(odd.has_parity(3));
    CHECK(!odd.has_parity(2));

    const PrecisionGuard guard(60);
    const Real u = pi() / 7;
    const Real direct = sin(2 * u) / 2 - cos(5 * u);
    CHECK(rel_close(f.eval(u), direct, singular_threshold(60, 20)));
}

TEST_CASE("trig cancellation identity holds exactly in frequencies") {
    // sum over the three cube-root shifts kills every non-multiple-of-3
    // frequency; verified numerically for a sample polynomial.
    const PrecisionGuard guard(60);
    TrigPoly f;
    f.add_sin(1, Rat(2));
    f.add_cos(2, Rat(1, 3));
    f.add_sin(4, Rat(-1));
    REQUIRE(!f.has_frequency_multiple_of_3());
    const Real u = Real(1) / 5;
    const Real shift = 2 * pi() / 3;
    const Real total = f.eval(u) + f.eval(u + shift) + f.eval(u + 2 * shift);
    CHECK(abs(total) < Real("1e-55"));
}
