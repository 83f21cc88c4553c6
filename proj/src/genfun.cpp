#include "asmice/genfun.hpp"

#include <vector>

#include "asmice/errors.hpp"
#include "asmice/formulas.hpp"

namespace asmice {

namespace {

// The common constant (n-2)!(3n-2)!/((2n-3)!(2n-1)!) entering rho and sigma.
Rat corner_ratio(int n) {
    return Rat(factorial(n - 2)) * Rat(factorial(3 * n - 2)) /
           (Rat(factorial(2 * n - 3)) * Rat(factorial(2 * n - 1)));
}

// 3x3 determinant with rows (t-1)^2 alpha_n, (t-1) beta_n, `third`, each row
// instantiated in one of three variables, divided exactly by the Vandermonde.
MPoly reduced_det3(int n, const UPoly& third) {
    const UPoly tm1(std::vector<Rat>{-1, 1});
    return alternant_quotient({tm1 * tm1 * alpha(n), tm1 * beta(n), third});
}

// 4x4 analogue with rows (t-1)^3 alpha_n, (t-1)^2 beta_n, (t-1)*third, fourth.
MPoly reduced_det4(int n, const UPoly& third, const UPoly& fourth) {
    const UPoly tm1(std::vector<Rat>{-1, 1});
    return alternant_quotient(
        {tm1 * tm1 * tm1 * alpha(n), tm1 * tm1 * beta(n), tm1 * third, fourth});
}

// Constant ratio lhs/rhs of two polynomials that must be exact constant
// multiples: one coefficient fixes the candidate, full equality confirms it.
Rat constant_ratio(const MPoly& lhs, const MPoly& rhs, const char* what) {
    if (rhs.is_zero())
        throw NonconstantRatio(std::string(what) + ": reference polynomial is zero");
    const auto& lt = *rhs.terms().rbegin();
    const Rat candidate = lhs.coef(lt.first) / lt.second;
    if (!(lhs == rhs.scaled(candidate)))
        throw NonconstantRatio(std::string(what) +
                               ": polynomials are not constant multiples");
    return candidate;
}

}  // namespace

UPoly alpha(int n) {
    if (n < 1) throw RangeError("alpha: requires n >= 1");
    std::vector<Rat> c(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        c[static_cast<std::size_t>(k - 1)] = Rat(a_refined(n, k));
    return UPoly(std::move(c));
}

UPoly beta(int n) {
    if (n < 2) throw RangeError("beta: requires n >= 2");
    return alpha(n - 1).shifted(1);
}

UPoly gamma(int n) {
    if (n < 2) throw RangeError("gamma: requires n >= 2");
    std::vector<Rat> c(static_cast<std::size_t>(n) + 2);
    for (int k = 1; k <= n + 2; ++k) {
        const Rat term = Rat(-2 * (n - k + 3)) * Rat(a_refined(n - 1, k - 3)) +
                         Rat(5 * n - 4 * k + 6) * Rat(a_refined(n - 1, k - 2)) +
                         Rat(n + 4 * k - 6) * Rat(a_refined(n - 1, k - 1)) -
                         Rat(2 * k) * Rat(a_refined(n - 1, k));
        c[static_cast<std::size_t>(k - 1)] = term;
    }
    return UPoly(std::move(c));
}

UPoly delta(int n) {
    if (n < 2) throw RangeError("delta: requires n >= 2");
    std::vector<Rat> c(static_cast<std::size_t>(n) + 3);
    for (int k = 1; k <= n + 3; ++k) {
        const Rat term =
            Rat(4 * (n + 4 - k) * (n + 5 - k)) * Rat(a_refined(n - 1, k - 5)) -
            Rat(4 * (n + 4 - k) * (5 * n + 11 - 4 * k)) * Rat(a_refined(n - 1, k - 4)) +
            Rat(240 - 172 * k + 32 * k * k + 120 * n - 52 * k * n + 21 * n * n) *
                Rat(a_refined(n - 1, k - 3)) -
            Rat(2 * (80 - 80 * k + 20 * k * k + 42 * n - 20 * k * n - 5 * n * n)) *
                Rat(a_refined(n - 1, k - 2)) +
            Rat(64 - 84 * k + 32 * k * k - 4 * n - 12 * k * n + n * n) *
                Rat(a_refined(n - 1, k - 1)) -
            Rat(4 * k * (n - 5 + 4 * k)) * Rat(a_refined(n - 1, k)) +
            Rat(4 * k * (k + 1)) * Rat(a_refined(n - 1, k + 1));
        c[static_cast<std::size_t>(k - 1)] = term;
    }
    return UPoly(std::move(c));
}

UPoly gamma_tilde(int n) {
    if (n < 3) throw RangeError("gamma_tilde: requires n >= 3");
    return alpha(n - 2).shifted(2).scaled(mu(n));
}

UPoly delta_tilde(int n) {
    if (n < 4) throw RangeError("delta_tilde: requires n >= 4");
    return alpha(n - 3).shifted(3).scaled(nu(n));
}

Rat mu(int n) {
    if (n < 3) throw RangeError("mu: requires n >= 3");
    const MPoly original = reduced_det3(n, gamma(n));
    const MPoly replaced = reduced_det3(n, alpha(n - 2).shifted(2));
    // original = mu * replaced, because substituting gamma -> mu t^2
    // alpha_{n-2} rescales exactly one determinant row.
    return constant_ratio(original, replaced, "mu");
}

Rat nu(int n) {
    if (n < 4) throw RangeError("nu: requires n >= 4");
    const MPoly original = reduced_det4(n, gamma(n), delta(n));
    const MPoly replaced =
        reduced_det4(n, alpha(n - 2).shifted(2), alpha(n - 3).shifted(3));
    // Rows 3 and 4 rescale by mu and nu respectively, so the determinant
    // ratio is mu * nu.
    const Rat munu = constant_ratio(original, replaced, "nu");
    return munu / mu(n);
}

Rat rho(int n) {
    if (n < 2) throw RangeError("rho: requires n >= 2");
    const Rat r = corner_ratio(n);
    return r * r / (Rat(8) * Rat(a_total(n)) * Rat(a_total(n)) * Rat(2 * n - 2));
}

Rat sigma(int n) {
    if (n < 2) throw RangeError("sigma: requires n >= 2");
    const Rat r = corner_ratio(n);
    const Rat an(a_total(n));
    return r * r * r /
           (Rat(64) * an * an * an * Rat(2 * n - 2) * Rat(2 * n - 2) * Rat(2 * n - 3));
}

MPoly tl_genfun(int n) {
    if (n < 2) throw RangeError("tl_genfun: requires n >= 2");
    MPoly g(2);
    for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= n; ++j) {
            const Int v = a_tl(n, i, j);
            if (v == 0) continue;
            g = g + MPoly::monomial(2, {i - 2, j - 2, 0, 0}, Rat(v));
        }
    return g;
}

MPoly alternant_quotient(const std::vector<UPoly>& rows) {
    const int k = static_cast<int>(rows.size());
    if (k < 2 || k > 4)
        throw RangeError("alternant_quotient: need 2..4 rows");
    std::vector<std::vector<MPoly>> m(
        rows.size(), std::vector<MPoly>(rows.size(), MPoly(k)));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                MPoly::from_upoly(rows[static_cast<std::size_t>(a)], k, b);
    return vandermonde_quotient(mpoly_det(m), k);
}

}  // namespace asmice
