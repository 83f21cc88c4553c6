// Error taxonomy shared by all modules.
//
// The *Violation / *Remainder / *Ratio errors signal that an identity the
// implementation relies on failed to hold as transcribed; verification suites
// must treat them as hard failures rather than findings.

#ifndef ASMICE_ERRORS_HPP
#define ASMICE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asmice {

// Precondition violations: bad order, index out of range, arity mismatch,
// non-square determinant input, order above an enumeration cap.
class RangeError : public std::invalid_argument {
public:
    explicit RangeError(const std::string& what) : std::invalid_argument(what) {}
};

// Exact polynomial division left a nonzero remainder.  For the Vandermonde
// and boundary-prefactor divisions this falsifies the identity being used.
class NonzeroRemainder : public std::runtime_error {
public:
    explicit NonzeroRemainder(const std::string& what) : std::runtime_error(what) {}
};

// The two Vandermonde quotients compared when determining mu_n / nu_n are not
// exact constant multiples of each other.
class NonconstantRatio : public std::runtime_error {
public:
    explicit NonconstantRatio(const std::string& what) : std::runtime_error(what) {}
};

// A formula that must produce an integer produced a non-integer rational.
class IntegralityViolation : public std::runtime_error {
public:
    explicit IntegralityViolation(const std::string& what) : std::runtime_error(what) {}
};

// A coefficient that counts matrices came out negative.
class NegativeCoefficient : public std::runtime_error {
public:
    explicit NegativeCoefficient(const std::string& what) : std::runtime_error(what) {}
};

// A numeric denominator underflowed the precision-scaled threshold.
class SingularPoint : public std::runtime_error {
public:
    explicit SingularPoint(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace asmice

#endif  // ASMICE_ERRORS_HPP
