// Verification suites behind the `verify` subcommand.  Each suite runs a
// fixed sequence of cross-checks and reports one named result per invariant,
// with the first counterexample recorded in the detail string.

#include "asmice/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "asmice/boundary.hpp"
#include "asmice/errors.hpp"
#include "asmice/formulas.hpp"
#include "asmice/genfun.hpp"
#include "asmice/oracle.hpp"
#include "asmice/real.hpp"
#include "asmice/squareice.hpp"

namespace asmice {

namespace {

// Runs a check body and converts a thrown identity-failure exception into a
// FAIL with the exception text, so one broken invariant cannot abort the
// rest of the suite.
NamedCheck guarded(const std::string& name,
                   const std::function<CheckResult()>& body) {
    NamedCheck c;
    c.name = name;
    try {
        const CheckResult r = body();
        c.pass = r.pass;
        c.detail = r.detail;
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = e.what();
    }
    return c;
}

CheckResult ok() { return {true, std::string()}; }

CheckResult fail(std::string detail) { return {false, std::move(detail)}; }

std::string at_n(int n) { return "first failure at n=" + std::to_string(n); }

// K_{n,m} relating sum_k c_{n,m,k} t^{k-1} to beta_n / gamma_n / delta_n:
// (n-2)! (3n-2)! / (divisor * (2n-3)! (2n-2)!), divisor = 2, 4, 8.
Rat collapse_constant(int n, int divisor) {
    return Rat(factorial(n - 2) * factorial(3 * n - 2)) /
           (Rat(divisor) * Rat(factorial(2 * n - 3) * factorial(2 * n - 2)));
}

CheckResult collapse_check(int n, int m, const UPoly& target, int divisor) {
    const ABPoly c = c_table(n, m);
    const Rat k = collapse_constant(n, divisor);
    for (int kk = 1; kk <= n + m; ++kk) {
        const Rat expect = k * target.coef(static_cast<std::size_t>(kk) - 1);
        if (c.at(kk) != expect) {
            std::ostringstream os;
            os << "n=" << n << " k=" << kk << ": c=" << to_string(c.at(kk))
               << " expected " << to_string(expect);
            return fail(os.str());
        }
    }
    return ok();
}

}  // namespace

std::vector<NamedCheck> verify_formulas(int nmax) {
    std::vector<NamedCheck> out;

    out.push_back(guarded("refined-sums-to-total", [&] {
        for (int n = 1; n <= nmax; ++n)
            if (refined_vector(n).total() != a_total(n)) return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("refined-palindrome", [&] {
        for (int n = 1; n <= nmax; ++n)
            for (int k = 1; k <= n; ++k)
                if (a_refined(n, k) != a_refined(n, n + 1 - k))
                    return fail(at_n(n) + " k=" + std::to_string(k));
        return ok();
    }));

    out.push_back(guarded("refined-first-equals-previous-total", [&] {
        for (int n = 1; n <= nmax; ++n)
            if (a_refined(n, 1) != a_total(n - 1)) return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tb-marginals-are-refined", [&] {
        for (int n = 2; n <= nmax; ++n)
            for (int i = 1; i <= n; ++i) {
                Int sum = 0;
                for (int j = 1; j <= n; ++j) sum += a_tb(n, i, j);
                if (sum != a_refined(n, i))
                    return fail(at_n(n) + " i=" + std::to_string(i));
            }
        return ok();
    }));

    out.push_back(guarded("tl-marginals-are-refined", [&] {
        for (int n = 2; n <= nmax; ++n)
            for (int i = 1; i <= n; ++i) {
                Int over_left = 0, over_top = 0;
                for (int j = 1; j <= n; ++j) {
                    over_left += a_tl(n, i, j);
                    over_top += a_tl(n, j, i);
                }
                if (over_left != a_refined(n, i) || over_top != a_refined(n, i))
                    return fail(at_n(n) + " i=" + std::to_string(i));
            }
        return ok();
    }));

    out.push_back(guarded("tt-formulas-agree", [&] {
        for (int n = 2; n <= nmax; ++n)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (a_tt_kr(n, i, j) != a_tt_f(n, i, j))
                        return fail(at_n(n) + " i=" + std::to_string(i) +
                                    " j=" + std::to_string(j));
        return ok();
    }));

    out.push_back(guarded("tt-weighted-total", [&] {
        for (int n = 2; n <= nmax; ++n)
            if (tt_table(n).total() != a_total(n)) return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("stroganov-relation", [&] {
        for (int n = 2; n <= nmax; ++n) {
            const CheckResult r = stroganov_relation_check(n);
            if (!r.pass) return fail(at_n(n) + ": " + r.detail);
        }
        return ok();
    }));

    return out;
}

std::vector<NamedCheck> verify_boundary(int nmax) {
    std::vector<NamedCheck> out;
    const int oracle_cap = std::min(nmax, 6);

    // Compute each table once; every check below is a plain comparison.
    std::vector<BoundaryTable3> t3(static_cast<std::size_t>(nmax) + 1);
    std::vector<BoundaryTable4> t4(static_cast<std::size_t>(nmax) + 1);
    std::string build_error;
    try {
        for (int n = 1; n <= nmax; ++n) {
            t3[static_cast<std::size_t>(n)] = tlb_table(n, Variant::original);
            if (n >= 1) t4[static_cast<std::size_t>(n)] = tlbr_table(n, Variant::original);
        }
    } catch (const std::exception& e) {
        build_error = e.what();
    }

    out.push_back(guarded("tables-build-exactly", [&] {
        if (!build_error.empty()) return fail(build_error);
        return ok();
    }));
    if (!build_error.empty()) return out;  // nothing else is meaningful

    out.push_back(guarded("tlb-variants-identical", [&] {
        for (int n = 3; n <= nmax; ++n)
            if (tlb_table(n, Variant::simplified) != t3[static_cast<std::size_t>(n)])
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tlb-matches-oracle", [&] {
        for (int n = 3; n <= oracle_cap; ++n)
            if (t3[static_cast<std::size_t>(n)] != oracle_tables(n).tlb)
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tlb-marginal-top-left", [&] {
        for (int n = 2; n <= nmax; ++n)
            if (tlb_sum_over_k(t3[static_cast<std::size_t>(n)]) != tl_table(n))
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tlb-marginal-top-bottom", [&] {
        for (int n = 2; n <= nmax; ++n)
            if (tlb_sum_over_j(t3[static_cast<std::size_t>(n)]) != tb_table(n))
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tlb-total", [&] {
        for (int n = 1; n <= nmax; ++n)
            if (t3[static_cast<std::size_t>(n)].total() != a_total(n))
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tlbr-variants-identical", [&] {
        for (int n = 4; n <= nmax; ++n)
            if (tlbr_table(n, Variant::simplified) != t4[static_cast<std::size_t>(n)])
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tlbr-matches-oracle", [&] {
        for (int n = 4; n <= oracle_cap; ++n)
            if (t4[static_cast<std::size_t>(n)] != oracle_tables(n).tlbr)
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tlbr-marginal-triple", [&] {
        for (int n = 1; n <= nmax; ++n)
            if (tlbr_sum_over_l(t4[static_cast<std::size_t>(n)]) !=
                t3[static_cast<std::size_t>(n)])
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tlbr-total", [&] {
        for (int n = 1; n <= nmax; ++n)
            if (t4[static_cast<std::size_t>(n)].total() != a_total(n))
                return fail(at_n(n));
        return ok();
    }));

    return out;
}

std::vector<NamedCheck> verify_squareice(int nmax, std::uint64_t seed,
                                         unsigned precision) {
    std::vector<NamedCheck> out;
    const PrecisionGuard guard(precision);
    const Real tol = singular_threshold(precision, 20);
    const int ncap = std::min(nmax, 8);

    out.push_back(guarded("fn-value-at-pi-over-3", [&] {
        for (int n = 1; n <= ncap; ++n) {
            const Real lhs = fn_trig(n).eval(pi() / 3);
            const Real rhs = (Real(2) / sqrt3()) *
                             pow(Real(3) / 4, n) * to_real(a_total(n - 1));
            if (!rel_close(lhs, rhs, tol)) return fail(at_n(n));
        }
        return ok();
    }));

    out.push_back(guarded("fn-derivatives-vanish-below-top", [&] {
        for (int n = 1; n <= ncap; ++n)
            for (int m = 0; m <= 2 * n - 2; ++m)
                if (fn_deriv_trig(n, m).eval_at_zero() != 0)
                    return fail(at_n(n) + " m=" + std::to_string(m));
        return ok();
    }));

    out.push_back(guarded("fn-top-derivative-counts", [&] {
        for (int n = 1; n <= ncap; ++n) {
            const Rat expect = Rat(factorial(2 * n - 1) * a_total(n));
            if (fn_deriv_trig(n, 2 * n - 1).eval_at_zero() != expect)
                return fail(at_n(n));
        }
        return ok();
    }));

    out.push_back(guarded("fn-frequency-structure", [&] {
        for (int n = 1; n <= ncap; ++n) {
            const TrigPoly f = fn_trig(n);
            if (f.has_frequency_multiple_of_3())
                return fail(at_n(n) + ": frequency divisible by 3");
            if (!f.has_parity(n))
                return fail(at_n(n) + ": frequency parity differs from n");
        }
        return ok();
    }));

    out.push_back(guarded("summation-identity", [&] {
        for (int n = 1; n <= std::max(nmax, 20); ++n) {
            const CheckResult r = summation_identity_check(n);
            if (!r.pass) return fail(at_n(n) + ": " + r.detail);
        }
        return ok();
    }));

    out.push_back(guarded("c-collapse-m1", [&] {
        for (int n = 2; n <= std::min(nmax, 15); ++n) {
            const CheckResult r = collapse_check(n, 1, beta(n), 2);
            if (!r.pass) return r;
        }
        return ok();
    }));

    out.push_back(guarded("c-collapse-m2", [&] {
        for (int n = 2; n <= std::min(nmax, 10); ++n) {
            const CheckResult r = collapse_check(n, 2, gamma(n), 4);
            if (!r.pass) return r;
        }
        return ok();
    }));

    out.push_back(guarded("c-collapse-m3", [&] {
        for (int n = 2; n <= std::min(nmax, 10); ++n) {
            const CheckResult r = collapse_check(n, 3, delta(n), 8);
            if (!r.pass) return r;
        }
        return ok();
    }));

    out.push_back(guarded("ab-form-matches-trig", [&] {
        for (int n = 3; n <= std::min(nmax, 5); ++n)
            for (int m = 0; m <= 3; ++m) {
                const CheckResult r =
                    ab_vs_trig_consistency(n, m, seed, 5, precision);
                if (!r.pass)
                    return fail(at_n(n) + " m=" + std::to_string(m) + ": " +
                                r.detail);
            }
        return ok();
    }));

    out.push_back(guarded("partition-three-way-spot", [&] {
        for (int n = 2; n <= std::min(nmax, 4); ++n)
            for (int k = 1; k <= 2; ++k) {
                const std::vector<Rat> pts = seeded_points(k, seed + static_cast<std::uint64_t>(16 * n + k));
                std::vector<Real> us;
                for (const Rat& p : pts) us.push_back(to_real(p));
                std::vector<Real> xs(static_cast<std::size_t>(n), Real(0));
                std::vector<Real> ys(static_cast<std::size_t>(n), Real(0));
                for (std::size_t a = 0; a < us.size() && a < xs.size(); ++a)
                    xs[a] = us[a];
                const Real zw = z_wronskian(n, k, us, precision);
                const Real zi = z_ik(n, xs, ys, precision);
                const Real zd = z_direct(n, xs, ys, precision);
                if (!rel_close(zw, zi, tol))
                    return fail(at_n(n) + " k=" + std::to_string(k) +
                                ": wronskian vs ik");
                if (!rel_close(zw, zd, tol))
                    return fail(at_n(n) + " k=" + std::to_string(k) +
                                ": wronskian vs direct");
            }
        return ok();
    }));

    out.push_back(guarded("colomo-span-m1", [&] {
        for (int n = 2; n <= std::min(nmax, 6); ++n) {
            const SpanCheck s = colomo_span_check(n, 1);
            if (!s.member) return fail(at_n(n) + ": " + s.detail);
        }
        return ok();
    }));

    for (int m = 2; m <= 3; ++m) {
        out.push_back(guarded("colomo-span-m" + std::to_string(m), [&, m] {
            // Informational: membership here is an open question, so either
            // answer passes; the finding is recorded in the detail.
            std::ostringstream os;
            bool all = true, none = true;
            for (int n = m + 1; n <= std::min(nmax, 6); ++n) {
                const SpanCheck s = colomo_span_check(n, m);
                (s.member ? none : all) = false;
                if (os.tellp() > 0) os << "; ";
                os << "n=" << n << ": " << (s.member ? "member" : "not in span");
            }
            CheckResult r = ok();
            if (all) r.detail = "member for every tested order (" + os.str() + ")";
            else if (none) r.detail = "no tested order lies in the span (" + os.str() + ")";
            else r.detail = os.str();
            return r;
        }));
    }

    return out;
}

std::vector<NamedCheck> verify_oracle_xcheck(int nmax) {
    std::vector<NamedCheck> out;
    const int cap = std::min(nmax, kOracleDefaultCap);
    const int boundary_cap = std::min(cap, 6);

    std::vector<OracleTables> ot(static_cast<std::size_t>(cap) + 1);
    for (int n = 1; n <= cap; ++n) ot[static_cast<std::size_t>(n)] = oracle_tables(n);

    out.push_back(guarded("total-vs-product-formula", [&] {
        for (int n = 1; n <= cap; ++n)
            if (ot[static_cast<std::size_t>(n)].total != a_total(n))
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("refined-vs-closed-form", [&] {
        for (int n = 1; n <= cap; ++n)
            if (ot[static_cast<std::size_t>(n)].refined != refined_vector(n))
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tb-vs-closed-form", [&] {
        for (int n = 2; n <= cap; ++n)
            if (ot[static_cast<std::size_t>(n)].tb != tb_table(n))
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tl-vs-closed-form", [&] {
        for (int n = 2; n <= cap; ++n)
            if (ot[static_cast<std::size_t>(n)].tl != tl_table(n))
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tt-vs-closed-form", [&] {
        for (int n = 2; n <= cap; ++n)
            if (ot[static_cast<std::size_t>(n)].tt != tt_table(n))
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tlb-vs-engine", [&] {
        for (int n = 1; n <= boundary_cap; ++n)
            if (ot[static_cast<std::size_t>(n)].tlb != tlb_table(n))
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("tlbr-vs-engine", [&] {
        for (int n = 1; n <= boundary_cap; ++n)
            if (ot[static_cast<std::size_t>(n)].tlbr != tlbr_table(n))
                return fail(at_n(n));
        return ok();
    }));

    out.push_back(guarded("vertex-type-roundtrip", [&] {
        for (int n = 1; n <= std::min(cap, 5); ++n) {
            bool good = true;
            enumerate_asms(n, [&](const AsmMatrix& m) {
                if (!good) return;
                const AsmMatrix back = asm_from_vertex_types(n, vertex_types(m));
                if (back.entries != m.entries) good = false;
            });
            if (!good) return fail(at_n(n));
        }
        return ok();
    }));

    return out;
}

}  // namespace asmice
