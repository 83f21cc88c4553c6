// Extended-precision floating point on MPFR, with a configurable number of
// significant decimal digits (>= 30; default 60 throughout the numeric
// batteries).  Arithmetic is correctly rounded at the working precision.

#ifndef ASMICE_REAL_HPP
#define ASMICE_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>

#include "asmice/scalars.hpp"

namespace asmice {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionDigits = 60;
inline constexpr unsigned kMinPrecisionDigits = 30;

// Scoped working precision: newly constructed Real values in this thread use
// `digits` significant decimal digits until the guard is destroyed.  Throws
// RangeError below the 30-digit floor.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

Real to_real(const Int& v);
Real to_real(const Rat& v);
Real pi();
Real sqrt3();

// |a - b| <= tol * max(|a|, |b|); for a = b = 0 the comparison is true.
bool rel_close(const Real& a, const Real& b, const Real& tol);

// Relative difference |a - b| / max(|a|, |b|) (zero when both vanish).
Real rel_diff(const Real& a, const Real& b);

// 10^(-(digits - margin)): the underflow threshold used by SingularPoint
// checks, scaled to the working precision.
Real singular_threshold(unsigned digits, unsigned margin = 10);

// Determinant of a dense Real matrix by Gaussian elimination with partial
// pivoting (adequate here: the Wronskian and confluent IK matrices are tiny).
Real real_det(std::vector<std::vector<Real>> m);

}  // namespace asmice

#endif  // ASMICE_REAL_HPP
