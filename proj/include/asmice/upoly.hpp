// Dense univariate polynomials over the rationals.
//
// Coefficients are stored by exponent with no trailing zeros, so the
// representation is canonical.  The zero polynomial has an empty coefficient
// vector and its degree is the disengaged optional rather than a numeric
// sentinel.

#ifndef ASMICE_UPOLY_HPP
#define ASMICE_UPOLY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "asmice/scalars.hpp"

namespace asmice {

class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const Rat& constant);
    // Coefficients indexed by exponent; trailing zeros are trimmed.
    explicit UPoly(std::vector<Rat> coefficients);

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly(Rat(1)); }
    // The monomial c * t^k.
    static UPoly monomial(const Rat& c, std::size_t k);

    bool is_zero() const { return coef_.empty(); }
    // Degree of the zero polynomial is std::nullopt.
    std::optional<std::size_t> degree() const;
    // Coefficient of t^k (zero beyond the degree).
    const Rat& coef(std::size_t k) const;
    const std::vector<Rat>& coefficients() const { return coef_; }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator-() const;
    UPoly scaled(const Rat& c) const;
    // Multiplication by t^k.
    UPoly shifted(std::size_t k) const;

    bool operator==(const UPoly& o) const { return coef_ == o.coef_; }

    // Exact Horner evaluation.
    Rat eval(const Rat& x) const;

    // Canonical rendering, highest power first, e.g. "2*t^2 + 3*t + 2".
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rat> coef_;
};

}  // namespace asmice

#endif  // ASMICE_UPOLY_HPP
