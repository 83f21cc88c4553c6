// Sparse multivariate polynomials over the rationals, arity <= 4.
//
// Terms are kept in a map ordered by graded lexicographic order with the
// variables in declared order (x1 before x2 before x3 before x4), which fixes
// a canonical form, a well-defined leading term for exact division, and a
// deterministic rendering.  Exponents are nonnegative; zero coefficients are
// never stored.

#ifndef ASMICE_MPOLY_HPP
#define ASMICE_MPOLY_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "asmice/scalars.hpp"
#include "asmice/upoly.hpp"

namespace asmice {

// Exponent vector; entries at positions >= arity stay zero.
using ExpVec = std::array<int, 4>;

// Graded lexicographic: higher total degree wins, ties broken by the first
// variable with a differing exponent (earlier variables are more significant).
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = a[0] + a[1] + a[2] + a[3];
        int db = b[0] + b[1] + b[2] + b[3];
        if (da != db) return da < db;
        for (int i = 0; i < 4; ++i) {
            if (a[i] != b[i]) return a[i] < b[i];  // larger early exponent = larger monomial
        }
        return false;
    }
};

class MPoly {
public:
    using TermMap = std::map<ExpVec, Rat, GrlexLess>;

    // Zero polynomial of the given arity (1..4).
    explicit MPoly(int arity);

    static MPoly constant(int arity, const Rat& c);
    // The variable x_{index} (0-based index < arity).
    static MPoly var(int arity, int index);
    static MPoly monomial(int arity, const ExpVec& e, const Rat& c);
    // Embed a univariate polynomial as a polynomial in variable `index`.
    static MPoly from_upoly(const UPoly& p, int arity, int index);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    // Coefficient of the monomial with exponent vector e (zero if absent).
    const Rat& coef(const ExpVec& e) const;
    int total_degree() const;  // 0 for the zero polynomial

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    MPoly scaled(const Rat& c) const;

    bool operator==(const MPoly& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }

    // Exact evaluation; point.size() must equal arity .
    Rat eval(const std::vector<Rat>& point) const;

    // Canonical rendering sorted by descending monomial order, e.g.
    // "x^2*y - z + 1" with variables named x, y, z, w.
    std::string to_string() const;

private:
    friend MPoly mpoly_exact_div(const MPoly& num, const MPoly& den);
    friend MPoly divide_linear_difference(const MPoly& p, int i, int j);

    void insert_term(const ExpVec& e, const Rat& c);  // adds, dropping zeros

    int arity_;
    TermMap terms_;
};

// Exact determinant by cofactor expansion; the input must be a square
// matrix of polynomials of equal arity.
MPoly mpoly_det(const std::vector<std::vector<MPoly>>& matrix);

// Exact single-divisor division: returns q with q*den == num, or throws
// NonzeroRemainder.  Greedy leading-term division under the graded-lex order
// is exact for a single divisor: while the running numerator is a multiple of
// den its leading term is divisible by LT(den), so the first failure proves
// non-divisibility.
MPoly mpoly_exact_div(const MPoly& num, const MPoly& den);

// Exact division by the linear difference (x_i - x_j), i != j, via synthetic
// division in x_i (substituting x_i -> x_j); throws NonzeroRemainder when the
// factor does not divide p.
MPoly divide_linear_difference(const MPoly& p, int i, int j);

// The Vandermonde product prod_{i<j} (x_i - x_j) on the first k variables.
MPoly vandermonde_product(int arity, int k);

// Divide p by the Vandermonde product factor by factor (linear-time per
// factor; no Groebner machinery needed since the quotient is polynomial).
MPoly vandermonde_quotient(const MPoly& p, int k);

}  // namespace asmice

#endif  // ASMICE_MPOLY_HPP
