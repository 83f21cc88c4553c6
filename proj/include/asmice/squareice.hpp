// The square-ice layer at the combinatorial point eta = 2*pi/3: vertex
// weights, f_n and its derivatives in the Fourier and a/b-monomial
// representations, the c_{n,m,k} recurrence, kappa_n and zeta_{n,k}, the
// exact summation identity, numerical evaluation of the partition function
// by three independent routes, and the span-membership check suggested by
// the Colomo-Pronko formula.

#ifndef ASMICE_SQUAREICE_HPP
#define ASMICE_SQUAREICE_HPP

#include <cstdint>
#include <vector>

#include "asmice/real.hpp"
#include "asmice/scalars.hpp"
#include "asmice/tables.hpp"
#include "asmice/trigpoly.hpp"

namespace asmice {

// f_n^{(m)} in the a/b-monomial form
//   f_n^{(m)}(u) = sin^{2n-1-m}(u) * sum_{k=1}^{n+m} c_k a(u)^{k-1} b(u)^{n-k+m}.
struct ABPoly {
    int n = 0;
    int m = 0;
    std::vector<Rat> c;  // c[k-1] = c_{n,m,k}, length n+m

    const Rat& at(int k) const { return c.at(static_cast<std::size_t>(k) - 1); }
};

// c_{n,m,k} via the half-integer recurrence from the base c_{n,0,k} = A_{n,k};
// 0 <= m <= 2n-1.
ABPoly c_table(int n, int m);

// kappa_n = (-3/4)^{n-1} A_{n-1} / C(2n-2, n-1); n >= 1.
Rat kappa(int n);

// zeta_{n,k} = 1 / (A_n^{k-1} prod_{j=1}^{k-1} (2n-j)^{k-j}); 1 <= k <= 2n.
Rat zeta(int n, int k);

// f_n(u) = kappa_n sum_{m=0}^{n-1} C(n-4/3,m) C(n-2/3,n-m-1) sin((4-3n+6m)u),
// and its exact m-th derivative; n >= 1.
TrigPoly fn_trig(int n);
TrigPoly fn_deriv_trig(int n, int m);

// Exact rational check of
//   sum_{m=0}^n C(n-1/3,m) C(n+1/3,n-m) (1-3n+6m)^{2n+1} = (4/3)^n (3n+1)!/n!.
CheckResult summation_identity_check(int n);

// Vertex weights a(u) = (2/sqrt(3)) sin(pi/3 + u), b(u) = a(-u) at the
// working precision.
Real weight_a(const Real& u);
Real weight_b(const Real& u);

// Partition function via the Izergin-Korepin determinant at eta = 2*pi/3.
// xs, ys are the n row / n column parameters.  Parameters that are exactly
// zero may repeat: they are handled by the exact confluent limit (derivative
// rows/columns).  Any other coincidence of parameters drives a denominator
// under the precision-scaled threshold and throws SingularPoint.
Real z_ik(int n, const std::vector<Real>& xs, const std::vector<Real>& ys,
          unsigned precision = kDefaultPrecisionDigits);

// Partition function summed directly over all configurations (weighted
// oracle enumeration); n <= 5.
Real z_direct(int n, const std::vector<Real>& xs, const std::vector<Real>& ys,
              unsigned precision = kDefaultPrecisionDigits);

// Partition function via the k x k Wronskian-style determinant of f_n
// derivatives: Z_n(u_1..u_k, 0^{2n-k}); u_i pairwise distinct, nonzero.
Real z_wronskian(int n, int k, const std::vector<Real>& us,
                 unsigned precision = kDefaultPrecisionDigits);

// Seeded spectral points: exact rationals in (1/10, 1) with pairwise distance
// >= 1/20, generated reproducibly from raw mt19937_64 output.
std::vector<Rat> seeded_points(int count, std::uint64_t seed);

// Compares the a/b-monomial form of f_n^{(m)} (via c_table and the weight
// functions) with the exact TrigPoly derivative at seeded random points;
// 0 <= m <= 3.
CheckResult ab_vs_trig_consistency(int n, int m,
                                   std::uint64_t seed = 1,
                                   int points = 10,
                                   unsigned precision = kDefaultPrecisionDigits);

// Exact membership of sum_k c_{n,m,k} t^{k-1} in
// span_Q{ t^j (t-1)^{m-j} alpha_{n-j}(t) : j = 0..m }; 1 <= m <= 3,
// n >= m+1.  A negative answer is a reported finding, not an error.
struct SpanCheck {
    bool member = false;
    std::vector<Rat> coefficients;  // lambda_j for j = 0..m when member
    std::string detail;
};
SpanCheck colomo_span_check(int n, int m);

}  // namespace asmice

#endif  // ASMICE_SQUAREICE_HPP
