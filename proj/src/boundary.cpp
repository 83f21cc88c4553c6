// Boundary engines: assemble the exact right-hand sides of the triply- and
// quadruply-refined identities, divide out the corner prefactors, and read
// the refined counts off the quotient coefficients.

#include "asmice/boundary.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "asmice/errors.hpp"
#include "asmice/formulas.hpp"
#include "asmice/genfun.hpp"
#include "asmice/oracle.hpp"

namespace asmice {

namespace {

// 1 - x_v + x_u x_v on 0-based variable indices u, v.
MPoly corner_prefactor(int arity, int u, int v) {
    return MPoly::constant(arity, Rat(1)) - MPoly::var(arity, v) +
           MPoly::var(arity, u) * MPoly::var(arity, v);
}

// Cyclic 0-based variable index for the quadruply-refined geometry.
int cyc4(int t) { return ((t % 4) + 4) % 4; }

// x_var^e as a monomial of the given arity.
MPoly power_of_var(int arity, int var, int e) {
    ExpVec ev{0, 0, 0, 0};
    ev[static_cast<std::size_t>(var)] = e;
    return MPoly::monomial(arity, ev, Rat(1));
}

// A quotient coefficient that counts matrices must be a nonnegative integer.
Int count_from(const Rat& c, const std::string& where) {
    if (!is_integer(c))
        throw IntegralityViolation(where + ": non-integer coefficient " +
                                   to_string(c));
    Int v = c.get_num();
    if (v < 0)
        throw NegativeCoefficient(where + ": negative coefficient " +
                                  to_string(v));
    return v;
}

}  // namespace

MPoly tlb_rhs(int n, Variant variant) {
    if (n < 3) throw RangeError("tlb_rhs: requires n >= 3");
    const UPoly xm1(std::vector<Rat>{-1, 1});
    const UPoly third = variant == Variant::original ? gamma(n) : gamma_tilde(n);
    const MPoly det =
        alternant_quotient({xm1 * xm1 * alpha(n), xm1 * beta(n), third});
    MPoly rhs = det.scaled(rho(n));
    rhs = rhs - corner_prefactor(3, 0, 1) * power_of_var(3, 2, n - 1) *
                    MPoly::from_upoly(alpha(n - 1), 3, 0);
    rhs = rhs - corner_prefactor(3, 1, 2) * power_of_var(3, 1, n - 2) *
                    MPoly::from_upoly(alpha(n - 1), 3, 2);
    return rhs;
}

BoundaryTable3 tlb_table(int n, Variant variant) {
    if (n < 1) throw RangeError("tlb_table: requires n >= 1");
    if (n <= 2) return oracle_tables(n).tlb;

    BoundaryTable3 t = make_table3(n);
    MPoly q = mpoly_exact_div(tlb_rhs(n, variant), corner_prefactor(3, 0, 1));
    q = mpoly_exact_div(q, corner_prefactor(3, 1, 2));
    for (const auto& [e, c] : q.terms()) {
        const int i = e[0] + 2;
        const int j = n - 1 - e[1];
        const int k = n - e[2];
        if (i < 2 || i > n || j < 2 || j > n - 1 || k < 2 || k > n)
            throw RangeError(
                "tlb_table: quotient exponent outside the core box");
        t.at(i, j, k) = count_from(c, "tlb_table");
    }
    // Corner-forced boundary families; every other off-core entry is zero.
    for (int k = 2; k <= n; ++k) t.at(1, 1, k) = a_refined(n - 1, k - 1);
    for (int i = 2; i <= n; ++i) t.at(i, n, 1) = a_refined(n - 1, i - 1);
    return t;
}

MPoly tlbr_rhs(int n, Variant variant) {
    if (n < 4) throw RangeError("tlbr_rhs: requires n >= 4");
    const UPoly xm1(std::vector<Rat>{-1, 1});
    const UPoly third = variant == Variant::original ? gamma(n) : gamma_tilde(n);
    const UPoly fourth = variant == Variant::original ? delta(n) : delta_tilde(n);
    const MPoly det =
        alternant_quotient({xm1 * xm1 * xm1 * alpha(n), xm1 * xm1 * beta(n),
                            xm1 * third, fourth});
    MPoly rhs = det.scaled(sigma(n));

    // One correction per side: three consecutive corner prefactors times the
    // top-left generating function of order n-1 laid along two adjacent
    // variables with the second exponent reversed.
    for (int t = 0; t < 4; ++t) {
        const MPoly pref = corner_prefactor(4, cyc4(t - 1), t) *
                           corner_prefactor(4, t, cyc4(t + 1)) *
                           corner_prefactor(4, cyc4(t + 1), cyc4(t + 2));
        MPoly sum(4);
        for (int i = 2; i <= n - 1; ++i)
            for (int j = 2; j <= n - 1; ++j) {
                const Int v = a_tl(n - 1, i, j);
                if (v == 0) continue;
                ExpVec e{0, 0, 0, 0};
                e[static_cast<std::size_t>(t)] = i - 2;
                e[static_cast<std::size_t>(cyc4(t + 1))] = n - 1 - j;
                sum = sum + MPoly::monomial(4, e, Rat(v));
            }
        rhs = rhs - pref * power_of_var(4, cyc4(t - 1), n - 2) * sum;
    }

    // Two opposite-corner configurations, each counted by A_{n-2}.
    const Rat corner_count(a_total(n - 2));
    rhs = rhs - (corner_prefactor(4, 1, 2) * corner_prefactor(4, 3, 0) *
                 power_of_var(4, 1, n - 2) * power_of_var(4, 3, n - 2))
                    .scaled(corner_count);
    rhs = rhs - (corner_prefactor(4, 0, 1) * corner_prefactor(4, 2, 3) *
                 power_of_var(4, 0, n - 2) * power_of_var(4, 2, n - 2))
                    .scaled(corner_count);
    return rhs;
}

BoundaryTable4 tlbr_table(int n, Variant variant) {
    if (n < 1) throw RangeError("tlbr_table: requires n >= 1");
    if (n <= 3) return oracle_tables(n).tlbr;

    BoundaryTable4 t = make_table4(n);
    MPoly q = tlbr_rhs(n, variant);
    for (int e = 0; e < 4; ++e)
        q = mpoly_exact_div(q, corner_prefactor(4, e, cyc4(e + 1)));
    for (const auto& [ev, c] : q.terms()) {
        const int i = ev[0] + 2;
        const int j = n - 1 - ev[1];
        const int k = n - 1 - ev[2];
        const int l = ev[3] + 2;
        if (i < 2 || i > n - 1 || j < 2 || j > n - 1 || k < 2 || k > n - 1 ||
            l < 2 || l > n - 1)
            throw RangeError(
                "tlbr_table: quotient exponent outside the core box");
        t.at(i, j, k, l) = count_from(c, "tlbr_table");
    }

    // Boundary families from the corner analysis (1 entering a corner forces
    // the adjacent boundary indices); every other off-core entry is zero.
    t.at(1, 1, n, n) = a_total(n - 2);
    t.at(n, n, 1, 1) = a_total(n - 2);
    for (int k = 2; k <= n - 1; ++k)
        for (int l = 2; l <= n - 1; ++l)
            t.at(1, 1, k, l) = a_tl(n - 1, n + 1 - k, n + 1 - l);
    for (int i = 2; i <= n - 1; ++i)
        for (int l = 2; l <= n - 1; ++l)
            t.at(i, n, 1, l) = a_tl(n - 1, n + 1 - i, l);
    for (int i = 2; i <= n - 1; ++i)
        for (int j = 2; j <= n - 1; ++j)
            t.at(i, j, n, n) = a_tl(n - 1, i, j);
    for (int j = 2; j <= n - 1; ++j)
        for (int k = 2; k <= n - 1; ++k)
            t.at(n, j, k, 1) = a_tl(n - 1, k, n + 1 - j);
    return t;
}

PairTable tlb_sum_over_k(const BoundaryTable3& t) {
    PairTable p;
    p.n = t.n;
    p.kind = PairKind::TL;
    p.values.assign(static_cast<std::size_t>(t.n) * static_cast<std::size_t>(t.n),
                    Int(0));
    for (int i = 1; i <= t.n; ++i)
        for (int j = 1; j <= t.n; ++j)
            for (int k = 1; k <= t.n; ++k) p.at(i, j) += t.at(i, j, k);
    return p;
}

PairTable tlb_sum_over_j(const BoundaryTable3& t) {
    PairTable p;
    p.n = t.n;
    p.kind = PairKind::TB;
    p.values.assign(static_cast<std::size_t>(t.n) * static_cast<std::size_t>(t.n),
                    Int(0));
    for (int i = 1; i <= t.n; ++i)
        for (int k = 1; k <= t.n; ++k)
            for (int j = 1; j <= t.n; ++j) p.at(i, k) += t.at(i, j, k);
    return p;
}

BoundaryTable3 tlbr_sum_over_l(const BoundaryTable4& t) {
    BoundaryTable3 out = make_table3(t.n);
    for (int i = 1; i <= t.n; ++i)
        for (int j = 1; j <= t.n; ++j)
            for (int k = 1; k <= t.n; ++k)
                for (int l = 1; l <= t.n; ++l)
                    out.at(i, j, k) += t.at(i, j, k, l);
    return out;
}

}  // namespace asmice
