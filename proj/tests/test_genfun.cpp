// Generating-function layer: the alpha/beta/gamma/delta polynomials, the
// simplified tilde variants, the determinant constants mu/nu/rho/sigma,
// and the alternant quotient machinery.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "asmice/errors.hpp"
#include "asmice/formulas.hpp"
#include "asmice/genfun.hpp"

using namespace asmice;

TEST_CASE("alpha is the refined generating polynomial") {
    CHECK(alpha(1) == UPoly(Rat(1)));
    CHECK(alpha(4) == UPoly(std::vector<Rat>{7, 14, 14, 7}));
    for (int n = 1; n <= 12; ++n) {
        const UPoly a = alpha(n);
        CHECK(a.degree() == static_cast<std::size_t>(n - 1));
        CHECK(a.eval(Rat(1)) == Rat(a_total(n)));
        for (int k = 1; k <= n; ++k)
            CHECK(a.coef(static_cast<std::size_t>(k) - 1) ==
                  Rat(a_refined(n, k)));
    }
}

TEST_CASE("beta shifts the previous alpha") {
    for (int n = 2; n <= 10; ++n) CHECK(beta(n) == alpha(n - 1).shifted(1));
}

TEST_CASE("gamma and delta frozen at order 3") {
    CHECK(gamma(3) == UPoly(std::vector<Rat>{-2, 1, 18, 1, -2}));
    CHECK(delta(3) == UPoly(std::vector<Rat>{0, -99, 147, 147, -99}));
    CHECK(gamma(4) == UPoly(std::vector<Rat>{-4, 0, 46, 46, 0, -4}));
}

TEST_CASE("gamma and delta are palindromic") {
    // gamma_n(t) = t^{n+1} gamma_n(1/t) and delta_n(t) = t^{n+2} delta_n(1/t)
    // reflect the vertical-flip symmetry of the refined counts.
    for (int n = 2; n <= 8; ++n) {
        const UPoly g = gamma(n);
        const UPoly d = delta(n);
        for (int k = 0; k <= n + 1; ++k)
            CHECK(g.coef(static_cast<std::size_t>(k)) ==
                  g.coef(static_cast<std::size_t>(n + 1 - k)));
        for (int k = 0; k <= n + 2; ++k)
            CHECK(d.coef(static_cast<std::size_t>(k)) ==
                  d.coef(static_cast<std::size_t>(n + 2 - k)));
    }
}

TEST_CASE("mu and nu frozen values") {
    CHECK(mu(3) == Rat(16));
    CHECK(mu(4) == Rat(42));
    CHECK(mu(5) == Rat(96));
    CHECK(mu(6) == Rat(1430, 7));
    CHECK(nu(4) == Rat(840));
    CHECK(nu(5) == Rat(4704));
    CHECK(nu(6) == Rat(154440, 7));
    CHECK_THROWS_AS(mu(2), RangeError);
    CHECK_THROWS_AS(nu(3), RangeError);
}

TEST_CASE("tilde variants are exact row replacements") {
    for (int n = 3; n <= 7; ++n)
        CHECK(gamma_tilde(n) == alpha(n - 2).shifted(2).scaled(mu(n)));
    for (int n = 4; n <= 7; ++n)
        CHECK(delta_tilde(n) == alpha(n - 3).shifted(3).scaled(nu(n)));
}

TEST_CASE("rho and sigma frozen values") {
    CHECK(rho(2) == Rat(1, 4));
    CHECK(rho(3) == Rat(1, 32));
    CHECK(rho(4) == Rat(1, 588));
    CHECK(rho(5) == Rat(1, 28224));
    CHECK(sigma(2) == Rat(1, 32));
    CHECK(sigma(3) == Rat(1, 3072));
    CHECK(sigma(4) == Rat(1, 493920));
    CHECK(sigma(5) == Rat(1, 265531392));
}

TEST_CASE("alternant quotient basics") {
    // Rows {1, t}: determinant is y - x, so the quotient is -1.
    const UPoly one = UPoly::one();
    const UPoly t(std::vector<Rat>{0, 1});
    CHECK(alternant_quotient({one, t}) == MPoly::constant(2, Rat(-1)));
    // Rows {1, t, t^2} give the classic Vandermonde, transposed order.
    const UPoly t2(std::vector<Rat>{0, 0, 1});
    const MPoly q3 = alternant_quotient({t2, t, one});
    CHECK(q3 == MPoly::constant(3, Rat(1)));
    CHECK_THROWS_AS(alternant_quotient({one}), RangeError);
}

TEST_CASE("equal determinant rows are detected as non-divisible or zero") {
    // Two identical rows make the determinant zero; the quotient is zero.
    const UPoly t(std::vector<Rat>{0, 1});
    CHECK(alternant_quotient({t, t}).is_zero());
}

TEST_CASE("top-left generating function") {
    const MPoly g3 = tl_genfun(3);
    const MPoly x = MPoly::var(2, 0);
    const MPoly y = MPoly::var(2, 1);
    CHECK(g3 == x * y + x + y + MPoly::constant(2, Rat(2)));
    // The coefficient sum counts every matrix except those pinned to the
    // top-left corner, which sit at the excluded index (1,1).
    CHECK(tl_genfun(4).eval({Rat(1), Rat(1)}) ==
          Rat(a_total(4) - a_total(3)));
}

TEST_CASE("determinant constants stay exact through order 8") {
    for (int n = 3; n <= 8; ++n) CHECK_NOTHROW(mu(n));
    for (int n = 4; n <= 8; ++n) CHECK_NOTHROW(nu(n));
}
