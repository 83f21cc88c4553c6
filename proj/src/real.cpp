#include "asmice/real.hpp"

#include <cstddef>

#include "asmice/errors.hpp"

namespace asmice {

PrecisionGuard::PrecisionGuard(unsigned digits) {
    if (digits < kMinPrecisionDigits)
        throw RangeError("precision below the 30-digit floor");
    saved_ = Real::default_precision();
    Real::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

Real to_real(const Int& v) {
    Real r = 0;
    mpfr_set_z(r.backend().data(), v.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real to_real(const Rat& v) {
    Real r = 0;
    mpfr_set_q(r.backend().data(), v.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real pi() {
    Real r = 0;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real sqrt3() { return sqrt(Real(3)); }

bool rel_close(const Real& a, const Real& b, const Real& tol) {
    if (a == 0 && b == 0) return true;
    const Real aa = abs(a);
    const Real ab = abs(b);
    const Real scale = aa > ab ? aa : ab;
    return abs(a - b) <= tol * scale;
}

Real rel_diff(const Real& a, const Real& b) {
    if (a == 0 && b == 0) return Real(0);
    const Real aa = abs(a);
    const Real ab = abs(b);
    return abs(a - b) / (aa > ab ? aa : ab);
}

Real singular_threshold(unsigned digits, unsigned margin) {
    if (margin >= digits) throw RangeError("singular_threshold: margin >= digits");
    return pow(Real(10), -static_cast<int>(digits - margin));
}

Real real_det(std::vector<std::vector<Real>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw RangeError("real_det: matrix not square");
    Real det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(m[r][c]) > abs(m[pivot][c])) pivot = r;
        if (m[pivot][c] == 0) return Real(0);
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Real f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

}  // namespace asmice
