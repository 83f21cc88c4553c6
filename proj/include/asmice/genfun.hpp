// Generating functions and constants feeding the determinantal identities:
// alpha, beta, gamma, delta, their simplified tilde variants, the scalars
// rho, sigma, mu, nu, and the bivariate top-left generating function.

#ifndef ASMICE_GENFUN_HPP
#define ASMICE_GENFUN_HPP

#include "asmice/mpoly.hpp"
#include "asmice/scalars.hpp"
#include "asmice/upoly.hpp"

namespace asmice {

// alpha_n(t) = sum_{k=1}^n A_{n,k} t^{k-1}; n >= 1.
UPoly alpha(int n);

// beta_n(t) = t * alpha_{n-1}(t); n >= 2.
UPoly beta(int n);

// gamma_n(t) = sum_{k=1}^{n+2} ( -2(n-k+3) A_{n-1,k-3} + (5n-4k+6) A_{n-1,k-2}
//   + (n+4k-6) A_{n-1,k-1} - 2k A_{n-1,k} ) t^{k-1}; n >= 2.
UPoly gamma(int n);

// delta_n(t) = sum_{k=1}^{n+3} ( 4(n+4-k)(n+5-k) A_{n-1,k-5}
//   - 4(n+4-k)(5n+11-4k) A_{n-1,k-4}
//   + (240-172k+32k^2+120n-52kn+21n^2) A_{n-1,k-3}
//   - 2(80-80k+20k^2+42n-20kn-5n^2) A_{n-1,k-2}
//   + (64-84k+32k^2-4n-12kn+n^2) A_{n-1,k-1}
//   - 4k(n-5+4k) A_{n-1,k} + 4k(k+1) A_{n-1,k+1} ) t^{k-1}; n >= 2.
UPoly delta(int n);

// Simplified replacements (valid inside the determinants only):
// gamma_tilde_n = mu_n t^2 alpha_{n-2} (n >= 3),
// delta_tilde_n = nu_n t^3 alpha_{n-3} (n >= 4).
UPoly gamma_tilde(int n);
UPoly delta_tilde(int n);

// mu_n: determined exactly as the constant ratio of the two Vandermonde
// quotients of the 3x3 determinant with row 3 = gamma_n versus row 3 =
// t^2 alpha_{n-2}; a single-coefficient ratio is taken first and the full
// polynomial proportionality is then re-verified.  Throws NonconstantRatio
// if the quotients are not exact constant multiples.  n >= 3.
Rat mu(int n);

// nu_n: same procedure on the 4x4 determinant (rows 3 and 4 replaced by
// their tilde forms), whose quotient ratio is mu_n * nu_n.  n >= 4.
Rat nu(int n);

// rho_n = 1/(8 A_n^2 (2n-2)) * ((n-2)!(3n-2)!/((2n-3)!(2n-1)!))^2; n >= 2.
Rat rho(int n);

// sigma_n = 1/(64 A_n^3 (2n-2)^2 (2n-3)) * ((n-2)!(3n-2)!/((2n-3)!(2n-1)!))^3;
// n >= 2.
Rat sigma(int n);

// A^TL_n(x,y) = sum_{i,j=2}^n A^TL_n(i,j) x^{i-2} y^{j-2} as a 2-variable
// polynomial; n >= 2.
MPoly tl_genfun(int n);

// det[ rows[a](x_b) ] / prod_{a<b} (x_a - x_b) for k = rows.size() row
// functions (k in 2..4), an exact polynomial because the determinant is an
// alternant.  This is the shared core of the triply/quadruply refined
// identities and of the mu/nu determination.
MPoly alternant_quotient(const std::vector<UPoly>& rows);

}  // namespace asmice

#endif  // ASMICE_GENFUN_HPP
