// Exact trigonometric polynomials: finite sums
//     sum_nu ( s_nu * sin(nu*u) + c_nu * cos(nu*u) )
// with integer frequencies nu >= 0 and rational coefficients.  Negative
// frequencies are normalized on insertion (sin is odd, cos is even), and the
// nu = 0 sine slot is identically dropped, so the representation is canonical.

#ifndef ASMICE_TRIGPOLY_HPP
#define ASMICE_TRIGPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "asmice/real.hpp"
#include "asmice/scalars.hpp"

namespace asmice {

class TrigPoly {
public:
    struct Coef {
        Rat sin;  // coefficient of sin(nu*u)
        Rat cos;  // coefficient of cos(nu*u)
        bool operator==(const Coef& o) const {
            return sin == o.sin && cos == o.cos;
        }
    };

    TrigPoly() = default;

    void add_sin(long freq, const Rat& c);
    void add_cos(long freq, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Coef>& terms() const { return terms_; }
    long max_frequency() const;  // 0 for the zero polynomial

    TrigPoly operator+(const TrigPoly& o) const;
    TrigPoly operator-(const TrigPoly& o) const;
    TrigPoly scaled(const Rat& c) const;
    bool operator==(const TrigPoly& o) const { return terms_ == o.terms_; }

    // d/du, exact: sin(nu*u) -> nu*cos(nu*u), cos(nu*u) -> -nu*sin(nu*u).
    TrigPoly derivative() const;
    TrigPoly derivative(int order) const;

    // Exact value at u = 0 (the sum of the cosine coefficients).
    Rat eval_at_zero() const;
    // Numeric value at the working precision.
    Real eval(const Real& u) const;

    // True iff some stored frequency is divisible by 3.  For f and all its
    // derivatives this must be false; it is the exact form of the cube-root
    // cancellation f(u) + f(u + 2*pi/3) + f(u + 4*pi/3) = 0.
    bool has_frequency_multiple_of_3() const;

    // True iff shifting u by pi multiplies the polynomial by (-1)^n, i.e.
    // every stored frequency has the parity of n.
    bool has_parity(long n) const;

    std::string to_string() const;

private:
    std::map<long, Coef> terms_;  // key: frequency >= 0
    void prune(long freq);
};

}  // namespace asmice

#endif  // ASMICE_TRIGPOLY_HPP
