// The boundary engines: triply- and quadruply-refined enumeration tables
// extracted from the determinantal generating-function identities, including
// the explicit boundary-case families from the weight analysis.

#ifndef ASMICE_BOUNDARY_HPP
#define ASMICE_BOUNDARY_HPP

#include "asmice/mpoly.hpp"
#include "asmice/tables.hpp"

namespace asmice {

// Which functions occupy the lower determinant rows: the original gamma/delta
// or the simplified tilde replacements (mu_n t^2 alpha_{n-2} etc.).  The two
// variants must produce identical results.
enum class Variant { original, simplified };

// Full right-hand side of the triply-refined identity as a 3-variable
// polynomial in (x, y, z):
//   rho_n * det( (x-1)^2 alpha_n | (x-1) beta_n | gamma_n ) / Delta(x,y,z)
//   - (1-y+xy) z^{n-1} alpha_{n-1}(x) - (1-z+yz) y^{n-2} alpha_{n-1}(z).
// n >= 3.  Throws NonzeroRemainder if the Vandermonde division fails.
MPoly tlb_rhs(int n, Variant variant = Variant::original);

// Triply-refined table.  Core entries are the coefficients of
// tlb_rhs / ((1-y+xy)(1-z+yz)) under (i,j,k) <-> x^{i-2} y^{n-j-1} z^{n-k};
// the boundary families A(1,1,k) = A_{n-1,k-1} and A(i,n,1) = A_{n-1,i-1}
// are attached explicitly.  n in {1,2} is answered from the oracle.
// Throws NonzeroRemainder / NegativeCoefficient on identity failure, and
// RangeError if the quotient carries exponents outside the core box.
BoundaryTable3 tlb_table(int n, Variant variant = Variant::original);

// Full right-hand side of the quadruply-refined identity in (x1,x2,x3,x4):
//   sigma_n * det4 / Delta(x1..x4)
//   - sum_{t=1}^4 prod_{k=0}^2 (1 - x_{t+k} + x_{t+k-1} x_{t+k})
//       * x_{t-1}^{n-2} * [ x_{t+1}^{n-3} A^TL_{n-1}(x_t, 1/x_{t+1}) ]
//   - A_{n-2} (1-x3+x2x3)(1-x1+x4x1) x2^{n-2} x4^{n-2}
//   - A_{n-2} (1-x2+x1x2)(1-x4+x3x4) x1^{n-2} x3^{n-2},
// indices cyclic mod 4.  The bracketed term is expanded as
// sum_{i,j} A^TL_{n-1}(i,j) x_t^{i-2} x_{t+1}^{n-1-j} (exponent reversal, so
// no negative exponents ever arise).  n >= 4.
MPoly tlbr_rhs(int n, Variant variant = Variant::original);

// Quadruply-refined table.  Core entries are the coefficients of
// tlbr_rhs / prod_{t=1}^4 (1 - x_{t+1} + x_t x_{t+1}) under
// (i,j,k,l) <-> x1^{i-2} x2^{n-1-j} x3^{n-1-k} x4^{l-2}; the six boundary
// families (two A_{n-2} corner configurations and four one-sided families
// expressed through A^TL_{n-1}) are attached explicitly.  n <= 3 is answered
// from the oracle.
BoundaryTable4 tlbr_table(int n, Variant variant = Variant::original);

// Marginal reductions used by the verification suites.
PairTable tlb_sum_over_k(const BoundaryTable3& t);  // -> top-left table
PairTable tlb_sum_over_j(const BoundaryTable3& t);  // -> top-bottom table
BoundaryTable3 tlbr_sum_over_l(const BoundaryTable4& t);

}  // namespace asmice

#endif  // ASMICE_BOUNDARY_HPP
