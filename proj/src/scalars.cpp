#include "asmice/scalars.hpp"

#include "asmice/errors.hpp"

namespace asmice {

Int factorial(long n) {
    if (n < 0) throw RangeError("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Rat gbinomial(const Rat& r, long m) {
    if (m < 0) return 0;
    Rat num = 1;
    for (long t = 0; t < m; ++t) num *= r - t;
    return num / Rat(factorial(m));
}

Int hyperfactorial(long n) {
    if (n < 0) throw RangeError("hyperfactorial: negative argument");
    Int r = 1;
    for (long k = 2; k <= n; ++k)
        r *= pow_int(k, static_cast<unsigned long>(k));
    return r;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return 1;
    if (base == 0 && e < 0) throw RangeError("pow_rat: zero base, negative exponent");
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r(pow_int(Int(base.get_num()), a), pow_int(Int(base.get_den()), a));
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

bool is_integer(const Rat& q) {
    // Guard against uncanonicalized two-argument constructions like
    // Rat(6, 3): reduce a copy before inspecting the denominator.
    if (q.get_den() == 1) return true;
    Rat c = q;
    c.canonicalize();
    return c.get_den() == 1;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
    if (is_integer(v)) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace asmice
