// Exact arbitrary-precision scalars and the integer/rational combinatorial
// helpers used throughout: factorials, binomials (integer and generalized),
// the hyperfactorial, and integer powers.

#ifndef ASMICE_SCALARS_HPP
#define ASMICE_SCALARS_HPP

#include <gmpxx.h>

#include <string>

namespace asmice {

using Int = mpz_class;   // arbitrary-precision signed integer
using Rat = mpq_class;   // always canonical: reduced, positive denominator

// n! for n >= 0.
Int factorial(long n);

// Binomial coefficient with the convention C(n,k) = 0 for k < 0, k > n or
// n < 0.  All integer-argument binomials in the enumeration formulas follow
// this convention.
Int binomial(long n, long k);

// Generalized binomial C(r, m) = r(r-1)...(r-m+1)/m! for rational r and
// integer m >= 0 (m < 0 gives 0), evaluated exactly.
Rat gbinomial(const Rat& r, long m);

// Hyperfactorial H(n) = prod_{k=1}^{n} k^k.
Int hyperfactorial(long n);

// base^e for integer e; e < 0 requires a nonzero base.
Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

// True iff q is an integer (denominator 1).
bool is_integer(const Rat& q);

// Decimal rendering: Int as plain digits, Rat as "p/q" ("p" when q = 1).
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace asmice

#endif  // ASMICE_SCALARS_HPP
