#include "asmice/squareice.hpp"

#include <random>
#include <sstream>

#include "asmice/errors.hpp"
#include "asmice/formulas.hpp"
#include "asmice/genfun.hpp"
#include "asmice/oracle.hpp"
#include "asmice/upoly.hpp"

namespace asmice {

namespace {

// ---------- truncated Taylor series (fixed order, dense coefficients) ----

using Series = std::vector<Real>;  // coefficients of eps^0 .. eps^T

// sin(d0 + eps): derivative cycle sin, cos, -sin, -cos over t!.
Series sin_series(const Real& d0, int order) {
    Series s(static_cast<std::size_t>(order) + 1);
    const Real sd = sin(d0);
    const Real cd = cos(d0);
    Real fact = 1;
    for (int t = 0; t <= order; ++t) {
        if (t > 0) fact *= t;
        Real d;
        switch (t % 4) {
            case 0: d = sd; break;
            case 1: d = cd; break;
            case 2: d = -sd; break;
            default: d = -cd; break;
        }
        s[static_cast<std::size_t>(t)] = d / fact;
    }
    return s;
}

Series series_mul(const Series& a, const Series& b) {
    const std::size_t len = a.size();
    Series r(len, Real(0));
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; i + j < len; ++j) r[i + j] += a[i] * b[j];
    return r;
}

// 1/a as a truncated series; a[0] must be bounded away from zero by the
// caller's singularity checks.
Series series_recip(const Series& a) {
    Series r(a.size(), Real(0));
    r[0] = 1 / a[0];
    for (std::size_t k = 1; k < a.size(); ++k) {
        Real acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += a[i] * r[k - i];
        r[k] = -acc / a[0];
    }
    return r;
}

// psi = 1/phi with phi(d) = sin(d + pi/3) sin(d - pi/3), as a Taylor series
// at d0: psi_series(d0)[t] = psi^{(t)}(d0) / t!.
Series psi_series(const Real& d0, int order, const Real& third_pi) {
    return series_recip(
        series_mul(sin_series(d0 + third_pi, order), sin_series(d0 - third_pi, order)));
}

// ---------- exact rational linear solve (for the span check) -------------

// Solves A x = b over the rationals; returns true and fills x on success,
// false if the system is inconsistent.  Free variables are set to zero.
bool solve_exact(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                 std::vector<Rat>& x) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rat inv = 1 / a[r][c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
        b[r] *= inv;
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || a[rr][c] == 0) continue;
            const Rat f = a[rr][c];
            for (std::size_t k = c; k < cols; ++k) a[rr][k] -= f * a[r][k];
            b[rr] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t rr = r; rr < rows; ++rr)
        if (b[rr] != 0) return false;
    x.assign(cols, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return true;
}

}  // namespace

ABPoly c_table(int n, int m) {
    if (n < 1) throw RangeError("c_table: requires n >= 1");
    if (m < 0 || m > 2 * n - 1) throw RangeError("c_table: requires 0 <= m <= 2n-1");
    std::vector<Rat> cur(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        cur[static_cast<std::size_t>(k - 1)] = Rat(a_refined(n, k));
    auto get = [](const std::vector<Rat>& v, int k) -> Rat {
        if (k < 1 || k > static_cast<int>(v.size())) return 0;
        return v[static_cast<std::size_t>(k - 1)];
    };
    for (int level = 1; level <= m; ++level) {
        std::vector<Rat> next(static_cast<std::size_t>(n + level));
        for (int k = 1; k <= n + level; ++k) {
            const Rat term = Rat(-2 * k) * get(cur, k + 1) +
                             Rat(n + 4 * k - 2 * level - 2) * get(cur, k) +
                             Rat(5 * n - 4 * k + 2 * level + 2) * get(cur, k - 1) -
                             Rat(2 * (n - k + level + 1)) * get(cur, k - 2);
            next[static_cast<std::size_t>(k - 1)] = term / 2;
        }
        cur = std::move(next);
    }
    ABPoly p;
    p.n = n;
    p.m = m;
    p.c = std::move(cur);
    return p;
}

Rat kappa(int n) {
    if (n < 1) throw RangeError("kappa: requires n >= 1");
    return pow_rat(Rat(-3, 4), n - 1) * Rat(a_total(n - 1)) /
           Rat(binomial(2 * n - 2, n - 1));
}

Rat zeta(int n, int k) {
    if (n < 1) throw RangeError("zeta: requires n >= 1");
    if (k < 1 || k > 2 * n) throw RangeError("zeta: requires 1 <= k <= 2n");
    Rat denom = pow_rat(Rat(a_total(n)), k - 1);
    for (int j = 1; j <= k - 1; ++j)
        denom *= pow_rat(Rat(2 * n - j), k - j);
    return 1 / denom;
}

TrigPoly fn_trig(int n) {
    if (n < 1) throw RangeError("fn_trig: requires n >= 1");
    const Rat kn = kappa(n);
    const Rat top1 = Rat(n) - Rat(4, 3);
    const Rat top2 = Rat(n) - Rat(2, 3);
    TrigPoly f;
    for (int m = 0; m <= n - 1; ++m) {
        const Rat coef = kn * gbinomial(top1, m) * gbinomial(top2, n - m - 1);
        f.add_sin(4 - 3 * n + 6 * m, coef);
    }
    return f;
}

TrigPoly fn_deriv_trig(int n, int m) {
    if (m < 0) throw RangeError("fn_deriv_trig: negative order");
    return fn_trig(n).derivative(m);
}

CheckResult summation_identity_check(int n) {
    if (n < 1) throw RangeError("summation_identity_check: requires n >= 1");
    const Rat top1 = Rat(n) - Rat(1, 3);
    const Rat top2 = Rat(n) + Rat(1, 3);
    Rat lhs = 0;
    for (int m = 0; m <= n; ++m)
        lhs += gbinomial(top1, m) * gbinomial(top2, n - m) *
               pow_rat(Rat(1 - 3 * n + 6 * m), 2 * n + 1);
    const Rat rhs =
        pow_rat(Rat(4, 3), n) * Rat(factorial(3 * n + 1)) / Rat(factorial(n));
    if (lhs == rhs) return CheckResult{true, ""};
    std::ostringstream msg;
    msg << "summation identity fails at n=" << n << ": lhs=" << to_string(lhs)
        << " rhs=" << to_string(rhs);
    return CheckResult{false, msg.str()};
}

Real weight_a(const Real& u) {
    return 2 / sqrt3() * sin(pi() / 3 + u);
}

Real weight_b(const Real& u) { return weight_a(-u); }

Real z_ik(int n, const std::vector<Real>& xs, const std::vector<Real>& ys,
          unsigned precision) {
    if (n < 1) throw RangeError("z_ik: requires n >= 1");
    if (xs.size() != static_cast<std::size_t>(n) ||
        ys.size() != static_cast<std::size_t>(n))
        throw RangeError("z_ik: expected n row and n column parameters");
    PrecisionGuard guard(precision);
    const Real thr = singular_threshold(precision);
    const Real third_pi = pi() / 3;
    auto phi = [&](const Real& d) { return sin(d + third_pi) * sin(d - third_pi); };

    // Split off the exactly-zero parameters; they are handled exactly by the
    // confluent limit (Taylor rows/columns), not by perturbation.
    std::vector<Real> v, w;
    for (const Real& x : xs)
        if (x != 0) v.push_back(x);
    for (const Real& y : ys)
        if (y != 0) w.push_back(y);
    const int p = static_cast<int>(v.size());
    const int r = static_cast<int>(w.size());
    const int q = n - p;  // zero rows
    const int s = n - r;  // zero columns

    // Any non-exact coincidence is a genuine singularity of the formula.
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j)
            if (abs(sin(v[i] - v[j])) <= thr)
                throw SingularPoint("z_ik: coincident row parameters");
        if (q > 0 && abs(sin(v[static_cast<std::size_t>(i)])) <= thr)
            throw SingularPoint("z_ik: row parameter too close to the zero cluster");
    }
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j)
            if (abs(sin(w[i] - w[j])) <= thr)
                throw SingularPoint("z_ik: coincident column parameters");
        if (s > 0 && abs(sin(w[static_cast<std::size_t>(i)])) <= thr)
            throw SingularPoint("z_ik: column parameter too close to the zero cluster");
    }

    // Numerator product over all n^2 (x,y) pairs, with zeros substituted.
    Real num = 1;
    auto num_factor = [&](const Real& d) {
        const Real f = phi(d);
        if (abs(f) <= thr)
            throw SingularPoint("z_ik: parameter difference on the singular ray");
        num *= f;
    };
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < r; ++j) num_factor(v[i] - w[j]);
    for (int i = 0; i < p; ++i)
        for (int t = 0; t < s; ++t) num_factor(v[static_cast<std::size_t>(i)]);
    for (int j = 0; j < r; ++j)
        for (int t = 0; t < q; ++t) num_factor(-w[static_cast<std::size_t>(j)]);
    const Real phi0 = phi(Real(0));  // = -3/4 exactly
    for (int t = 0; t < q * s; ++t) num *= phi0;

    // Denominator: the Vandermonde-type factors among the nonzero parameters
    // (the factors involving zeros are absorbed by the confluent limit).
    Real den = 1;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) den *= sin(v[i] - v[j]);
    for (int i = 0; i < p; ++i)
        for (int t = 0; t < q; ++t) den *= sin(v[static_cast<std::size_t>(i)]);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) den *= sin(w[i] - w[j]);
    for (int j = 0; j < r; ++j)
        for (int t = 0; t < s; ++t) den *= sin(w[static_cast<std::size_t>(j)]);

    // The matrix: value rows for v_i, then q Taylor rows at 0; value columns
    // for w_j, then s Taylor columns at 0.  Entry conventions follow from
    // d/dy psi(x-y) = -psi'(x-y) and the confluent Vandermonde limit.
    std::vector<Series> psi_v(static_cast<std::size_t>(p));
    if (s > 0)
        for (int i = 0; i < p; ++i)
            psi_v[static_cast<std::size_t>(i)] =
                psi_series(v[static_cast<std::size_t>(i)], s - 1, third_pi);
    std::vector<Series> psi_w(static_cast<std::size_t>(r));
    if (q > 0)
        for (int j = 0; j < r; ++j)
            psi_w[static_cast<std::size_t>(j)] =
                psi_series(-w[static_cast<std::size_t>(j)], q - 1, third_pi);
    Series psi0;
    if (q + s >= 2) psi0 = psi_series(Real(0), q + s - 2, third_pi);

    std::vector<std::vector<Real>> m(static_cast<std::size_t>(n),
                                     std::vector<Real>(static_cast<std::size_t>(n)));
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < r; ++j) m[i][j] = 1 / phi(v[i] - w[j]);
        for (int b = 1; b <= s; ++b) {
            const Real entry = psi_v[static_cast<std::size_t>(i)][static_cast<std::size_t>(b - 1)];
            m[i][static_cast<std::size_t>(r + b - 1)] = (b % 2 == 1) ? entry : -entry;
        }
    }
    for (int a = 1; a <= q; ++a) {
        const std::size_t row = static_cast<std::size_t>(p + a - 1);
        for (int j = 0; j < r; ++j)
            m[row][j] = psi_w[static_cast<std::size_t>(j)][static_cast<std::size_t>(a - 1)];
        for (int b = 1; b <= s; ++b) {
            const Real entry = to_real(binomial(a + b - 2, a - 1)) *
                               psi0[static_cast<std::size_t>(a + b - 2)];
            m[row][static_cast<std::size_t>(r + b - 1)] = (b % 2 == 1) ? entry : -entry;
        }
    }

    const long sign_exp = static_cast<long>(n) * (n - 1) / 2 +
                          static_cast<long>(q) * (q - 1) / 2 +
                          static_cast<long>(s) * (s - 1) / 2;
    const Real sin_eta = sin(2 * pi() / 3);
    Real z = pow(sin_eta, -n * (n - 1)) * num / den * real_det(m);
    if (sign_exp % 2 != 0) z = -z;
    return z;
}

Real z_direct(int n, const std::vector<Real>& xs, const std::vector<Real>& ys,
              unsigned precision) {
    if (n < 1 || n > 5) throw RangeError("z_direct: direct summation limited to n <= 5");
    if (xs.size() != static_cast<std::size_t>(n) ||
        ys.size() != static_cast<std::size_t>(n))
        throw RangeError("z_direct: expected n row and n column parameters");
    PrecisionGuard guard(precision);
    std::vector<Real> aw(static_cast<std::size_t>(n) * n), bw(aw.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Real d = xs[static_cast<std::size_t>(i)] - ys[static_cast<std::size_t>(j)];
            aw[static_cast<std::size_t>(i) * n + j] = weight_a(d);
            bw[static_cast<std::size_t>(i) * n + j] = weight_b(d);
        }
    Real total = 0;
    enumerate_asms(n, [&](const AsmMatrix& m) {
        const std::vector<std::int8_t> types = vertex_types(m);
        Real w = 1;
        for (std::size_t idx = 0; idx < types.size(); ++idx) {
            switch (types[idx]) {
                case 1:
                case 2: w *= aw[idx]; break;
                case 3:
                case 4: w *= bw[idx]; break;
                default: break;  // types 5 and 6 carry weight 1
            }
        }
        total += w;
    });
    return total;
}

Real z_wronskian(int n, int k, const std::vector<Real>& us, unsigned precision) {
    if (n < 1) throw RangeError("z_wronskian: requires n >= 1");
    if (k < 1 || k > 2 * n) throw RangeError("z_wronskian: requires 1 <= k <= 2n");
    if (us.size() != static_cast<std::size_t>(k))
        throw RangeError("z_wronskian: expected k parameters");
    PrecisionGuard guard(precision);
    const Real thr = singular_threshold(precision);
    for (int i = 0; i < k; ++i) {
        if (abs(sin(us[static_cast<std::size_t>(i)])) <= thr)
            throw SingularPoint("z_wronskian: parameter too close to zero");
        for (int j = i + 1; j < k; ++j)
            if (abs(sin(us[i] - us[j])) <= thr)
                throw SingularPoint("z_wronskian: coincident parameters");
    }

    std::vector<TrigPoly> fs;
    fs.reserve(static_cast<std::size_t>(k));
    TrigPoly f = fn_trig(n);
    for (int j = 0; j < k; ++j) {
        fs.push_back(f);
        f = f.derivative();
    }
    std::vector<std::vector<Real>> w(static_cast<std::size_t>(k),
                                     std::vector<Real>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                fs[static_cast<std::size_t>(j)].eval(us[static_cast<std::size_t>(i)]);

    Real den = 1;
    for (int i = 0; i < k; ++i)
        den *= pow(sin(us[static_cast<std::size_t>(i)]), 2 * n - k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) den *= sin(us[i] - us[j]);
    return to_real(zeta(n, k)) * real_det(w) / den;
}

std::vector<Rat> seeded_points(int count, std::uint64_t seed) {
    if (count < 0) throw RangeError("seeded_points: negative count");
    std::mt19937_64 rng(seed);
    const Int two64 = pow_int(Int(2), 64);
    const Rat low(1, 10);
    const Rat span(4, 5);
    const Rat min_gap(1, 20);
    std::vector<Rat> pts;
    int attempts = 0;
    while (static_cast<int>(pts.size()) < count) {
        if (++attempts > 10000)
            throw RangeError("seeded_points: cannot place this many separated points");
        // Exact rational in (1/10, 9/10) from one raw 64-bit word; portable
        // across platforms, unlike uniform_real_distribution.
        const std::uint64_t word = rng();
        Rat u = low + span * Rat(Int(static_cast<unsigned long>(word)), two64);
        u.canonicalize();
        bool ok = true;
        for (const Rat& existing : pts)
            if (abs(u - existing) < min_gap) { ok = false; break; }
        if (ok) pts.push_back(u);
    }
    return pts;
}

CheckResult ab_vs_trig_consistency(int n, int m, std::uint64_t seed, int points,
                                   unsigned precision) {
    if (n < 1) throw RangeError("ab_vs_trig_consistency: requires n >= 1");
    if (m < 0 || m > 2 * n - 1)
        throw RangeError("ab_vs_trig_consistency: requires 0 <= m <= 2n-1");
    if (points < 1) throw RangeError("ab_vs_trig_consistency: requires points >= 1");
    PrecisionGuard guard(precision);
    const Real tol = pow(Real(10), -static_cast<int>(precision - 20));
    const ABPoly c = c_table(n, m);
    const TrigPoly f = fn_deriv_trig(n, m);
    const std::vector<Rat> pts = seeded_points(points, seed);
    for (std::size_t t = 0; t < pts.size(); ++t) {
        const Real u = to_real(pts[t]);
        const Real lhs = f.eval(u);
        const Real a = weight_a(u);
        const Real b = weight_b(u);
        Real sum = 0;
        for (int k = 1; k <= n + m; ++k)
            sum += to_real(c.at(k)) * pow(a, k - 1) * pow(b, n - k + m);
        const Real rhs = pow(sin(u), 2 * n - 1 - m) * sum;
        if (!rel_close(lhs, rhs, tol)) {
            std::ostringstream msg;
            msg << "monomial/Fourier mismatch at n=" << n << " m=" << m << " point #"
                << (t + 1) << " u=" << to_string(pts[t])
                << " rel_diff=" << rel_diff(lhs, rhs).str(6);
            return CheckResult{false, msg.str()};
        }
    }
    return CheckResult{true, ""};
}

SpanCheck colomo_span_check(int n, int m) {
    if (m < 1 || m > 3) throw RangeError("colomo_span_check: requires 1 <= m <= 3");
    if (n < m + 1) throw RangeError("colomo_span_check: requires n >= m+1");
    const ABPoly ct = c_table(n, m);
    UPoly target;
    {
        std::vector<Rat> cs(ct.c.begin(), ct.c.end());
        target = UPoly(std::move(cs));
    }
    // Candidate basis: t^j (t-1)^{m-j} alpha_{n-j}, j = 0..m.
    const UPoly tm1(std::vector<Rat>{-1, 1});
    std::vector<UPoly> basis;
    for (int j = 0; j <= m; ++j) {
        UPoly b = alpha(n - j).shifted(static_cast<std::size_t>(j));
        for (int e = 0; e < m - j; ++e) b = b * tm1;
        basis.push_back(b);
    }
    const std::size_t rows = static_cast<std::size_t>(n + m);
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(basis.size(), Rat(0)));
    std::vector<Rat> rhs(rows, Rat(0));
    for (std::size_t d = 0; d < rows; ++d) {
        for (std::size_t j = 0; j < basis.size(); ++j) a[d][j] = basis[j].coef(d);
        rhs[d] = target.coef(d);
    }
    SpanCheck result;
    std::vector<Rat> x;
    if (!solve_exact(a, rhs, x)) {
        result.member = false;
        result.detail = "no exact representation in the candidate span";
        return result;
    }
    // Defensive re-verification of the claimed combination.
    UPoly recombined;
    for (std::size_t j = 0; j < basis.size(); ++j)
        recombined = recombined + basis[j].scaled(x[j]);
    if (!(recombined == target)) {
        result.member = false;
        result.detail = "solver produced a non-solution";  // should be unreachable
        return result;
    }
    result.member = true;
    result.coefficients = std::move(x);
    std::ostringstream msg;
    msg << "lambda =";
    for (const Rat& lam : result.coefficients) msg << " " << to_string(lam);
    result.detail = msg.str();
    return result;
}

}  // namespace asmice
