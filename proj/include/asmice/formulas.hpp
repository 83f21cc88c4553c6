// Closed-form singly and doubly refined ASM enumeration formulas:
// the product formula for A_n, the refined counts A_{n,k}, Stroganov's
// top-bottom formula and top-left inversion, and the two independent
// top-two formulas (Karklinsky-Romik and Fischer).

#ifndef ASMICE_FORMULAS_HPP
#define ASMICE_FORMULAS_HPP

#include "asmice/scalars.hpp"
#include "asmice/tables.hpp"

namespace asmice {

// A_n = prod_{j=0}^{n-1} (3j+1)!/(n+j)!, with A_0 = 1 by convention; n >= 0.
Int a_total(int n);

// A_{n,k}; out-of-range k (or n <= 0) returns 0, the convention used by every
// downstream sum.
Int a_refined(int n, int k);

RefinedVector refined_vector(int n);

// D_n(s,t) and E_n(s,t): the bilinear expressions in A_{n-1,.} and A_{n,.}
// entering the top-bottom and top-top formulas (n >= 2; out-of-range refined
// coefficients are 0).  D is symmetric; E(s,t) = D(s,n-t).
Rat d_coef(int n, int s, int t);
Rat e_coef(int n, int s, int t);

// Top-bottom counts: Stroganov's formula for i <= j, flip symmetry for i > j.
Int a_tb(int n, int i, int j);

// Top-left counts via the three-case inversion formula.
Int a_tl(int n, int i, int j);

// Top-two counts by the Karklinsky-Romik double sum (throws
// IntegralityViolation if the rational sum is not an integer) and by
// Fischer's alternating sum; 1 <= i < j <= n, n >= 2.
Int a_tt_kr(int n, int i, int j);
Int a_tt_f(int n, int i, int j);

PairTable tb_table(int n);
PairTable tl_table(int n);
PairTable tt_table(int n);  // Karklinsky-Romik; n >= 2

// Verifies A^TB(i,j) = A^TL(i,j+1) + A^TL(i+1,j) - A^TL(i+1,j+1) for all
// i,j >= 2 (vacuous for n = 2); n >= 2.
CheckResult stroganov_relation_check(int n);

}  // namespace asmice

#endif  // ASMICE_FORMULAS_HPP
