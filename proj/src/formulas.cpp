#include "asmice/formulas.hpp"

#include <sstream>

#include "asmice/errors.hpp"

namespace asmice {

namespace {

// Converts a rational that is an integer by a theorem into an Int, throwing
// if the computation violated the theorem.
Int require_integer(const Rat& q, const char* what) {
    if (!is_integer(q))
        throw IntegralityViolation(std::string(what) + " produced the non-integer " +
                                   to_string(q));
    return Int(q.get_num());
}

}  // namespace

Int a_total(int n) {
    if (n < 0) throw RangeError("a_total: order must be nonnegative");
    Rat r = 1;
    for (int j = 0; j < n; ++j)
        r *= Rat(factorial(3 * j + 1)) / Rat(factorial(n + j));
    return require_integer(r, "a_total");
}

Int a_refined(int n, int k) {
    if (n <= 0 || k < 1 || k > n) return 0;
    Rat r = Rat(binomial(n + k - 2, k - 1)) * Rat(factorial(2 * n - k - 1)) /
            Rat(factorial(n - k));
    for (int j = 0; j <= n - 2; ++j)
        r *= Rat(factorial(3 * j + 1)) / Rat(factorial(n + j));
    return require_integer(r, "a_refined");
}

RefinedVector refined_vector(int n) {
    if (n < 1) throw RangeError("refined_vector: order must be positive");
    RefinedVector v;
    v.n = n;
    v.counts.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) v.counts.push_back(a_refined(n, k));
    return v;
}

Rat d_coef(int n, int s, int t) {
    if (n < 2) throw RangeError("d_coef: requires n >= 2");
    const Rat ds = Rat(a_refined(n, s + 1)) - Rat(a_refined(n, s));
    const Rat dt = Rat(a_refined(n, t + 1)) - Rat(a_refined(n, t));
    return (Rat(a_refined(n - 1, t)) * ds + Rat(a_refined(n - 1, s)) * dt) /
           Rat(a_total(n - 1));
}

Rat e_coef(int n, int s, int t) {
    if (n < 2) throw RangeError("e_coef: requires n >= 2");
    const Rat ds = Rat(a_refined(n, s + 1)) - Rat(a_refined(n, s));
    const Rat dt = Rat(a_refined(n, t + 1)) - Rat(a_refined(n, t));
    return (Rat(a_refined(n - 1, t)) * ds - Rat(a_refined(n - 1, s)) * dt) /
           Rat(a_total(n - 1));
}

Int a_tb(int n, int i, int j) {
    if (n < 1 || i < 1 || i > n || j < 1 || j > n)
        throw RangeError("a_tb: index out of range");
    if (n == 1) return 1;  // the single 1x1 matrix
    if (i > j) return a_tb(n, j, i);
    // Boundary value A^TB(1, 1+m) = A_{n-1,m}: with the top-row 1 in column 1,
    // deleting the first row and column leaves an order-(n-1) ASM whose
    // bottom-row 1 sits at column m.  Summing the recurrence
    // A^TB(i+1,j+1) - A^TB(i,j) = D_n(i,j) from there gives the closed form.
    Rat r = a_refined(n - 1, j - i);
    for (int k = 1; k <= i - 1; ++k) r += d_coef(n, k, j - i + k);
    return require_integer(r, "a_tb");
}

Int a_tl(int n, int i, int j) {
    if (n < 1 || i < 1 || i > n || j < 1 || j > n)
        throw RangeError("a_tl: index out of range");
    if (i == 1 && j == 1) return a_total(n - 1);
    if (i == 1 || j == 1) return 0;
    Rat r = Rat(binomial(i + j - 4, i - 2)) * Rat(a_total(n - 1));
    for (int p = 1; p <= i - 1; ++p)
        for (int q = 1; q <= j - 1; ++q)
            r -= Rat(binomial(i + j - 2 - p - q, i - 1 - p)) * Rat(a_tb(n, p, q));
    return require_integer(r, "a_tl");
}

Int a_tt_kr(int n, int i, int j) {
    if (n < 2) throw RangeError("a_tt_kr: requires n >= 2");
    if (i < 1 || j <= i || j > n) throw RangeError("a_tt_kr: requires 1 <= i < j <= n");
    Rat r = 0;
    for (int p = 0; p <= n - j; ++p)
        for (int q = 0; q <= p; ++q) {
            const Rat term = Rat(binomial(p, q)) * e_coef(n, i + q, j + p);
            r += (q % 2 == 0) ? term : -term;
        }
    return require_integer(r, "a_tt_kr");
}

Int a_tt_f(int n, int i, int j) {
    if (n < 2) throw RangeError("a_tt_f: requires n >= 2");
    if (i < 1 || j <= i || j > n) throw RangeError("a_tt_f: requires 1 <= i < j <= n");
    Int r = 0;
    for (int k = j; k <= n; ++k) {
        const Int term = binomial(2 * n - 2 - j, k - j) * a_tb(n, i, k);
        r += ((n + k) % 2 == 0) ? term : -term;
    }
    return r;
}

PairTable tb_table(int n) {
    if (n < 1) throw RangeError("tb_table: order must be positive");
    PairTable t{n, PairKind::TB, std::vector<Int>(static_cast<std::size_t>(n) * n)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) t.at(i, j) = a_tb(n, i, j);
    return t;
}

PairTable tl_table(int n) {
    if (n < 1) throw RangeError("tl_table: order must be positive");
    PairTable t{n, PairKind::TL, std::vector<Int>(static_cast<std::size_t>(n) * n)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) t.at(i, j) = a_tl(n, i, j);
    return t;
}

PairTable tt_table(int n) {
    if (n < 2) throw RangeError("tt_table: requires n >= 2");
    PairTable t{n, PairKind::TT, std::vector<Int>(static_cast<std::size_t>(n) * n)};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) t.at(i, j) = a_tt_kr(n, i, j);
    return t;
}

CheckResult stroganov_relation_check(int n) {
    if (n < 2) throw RangeError("stroganov_relation_check: requires n >= 2");
    for (int i = 2; i <= n - 1; ++i) {
        for (int j = 2; j <= n - 1; ++j) {
            const Int lhs = a_tb(n, i, j);
            const Int rhs = a_tl(n, i, j + 1) + a_tl(n, i + 1, j) - a_tl(n, i + 1, j + 1);
            if (lhs != rhs) {
                std::ostringstream msg;
                msg << "top-bottom/top-left relation fails at n=" << n << " i=" << i
                    << " j=" << j << ": " << to_string(lhs) << " vs " << to_string(rhs);
                return CheckResult{false, msg.str()};
            }
        }
    }
    return CheckResult{true, ""};
}

}  // namespace asmice
