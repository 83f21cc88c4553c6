// Named verification suites used by the command-line `verify` subcommand.
// Each suite runs a battery of cross-checks and returns one NamedCheck per
// invariant, in a fixed order, so output is reproducible.

#ifndef ASMICE_VERIFY_HPP
#define ASMICE_VERIFY_HPP

#include <cstdint>
#include <vector>

#include "asmice/serialize.hpp"

namespace asmice {

// Closed-form counts against each other (palindromes, recurrences,
// pairwise identities, Stroganov's relation).  Purely exact arithmetic.
std::vector<NamedCheck> verify_formulas(int nmax);

// Triple and quadruple tables: generating-function extraction vs direct
// boundary enumeration, marginal sums, and variant equality.
std::vector<NamedCheck> verify_boundary(int nmax);

// Trigonometric identities and the three partition-function evaluators.
std::vector<NamedCheck> verify_squareice(int nmax, std::uint64_t seed,
                                         unsigned precision);

// Everything with a brute-force counterpart against the enumerator.
std::vector<NamedCheck> verify_oracle_xcheck(int nmax);

}  // namespace asmice

#endif  // ASMICE_VERIFY_HPP
