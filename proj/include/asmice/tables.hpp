// Shared table types for refined enumeration counts, plus the check-report
// record returned by verification operations.  Indices are 1-based
// throughout, matching the conventions of the formulas.

#ifndef ASMICE_TABLES_HPP
#define ASMICE_TABLES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "asmice/scalars.hpp"

namespace asmice {

struct CheckResult {
    bool pass = true;
    std::string detail;  // first counterexample / context on failure
};

// Singly-refined counts A_{n,1..n}.
struct RefinedVector {
    int n = 0;
    std::vector<Int> counts;  // counts[k-1] = A_{n,k}

    const Int& at(int k) const { return counts.at(static_cast<std::size_t>(k) - 1); }
    Int total() const;
    bool operator==(const RefinedVector&) const = default;
};

enum class PairKind { TB, TL, TT };

// Doubly-refined table; square n x n, with only i < j populated for TT.
struct PairTable {
    int n = 0;
    PairKind kind = PairKind::TB;
    std::vector<Int> values;  // row-major, (i,j) at (i-1)*n + (j-1)

    const Int& at(int i, int j) const;
    Int& at(int i, int j);
    Int total() const;  // plain sum for TB/TL; weighted by (j-i+1) for TT
    bool operator==(const PairTable&) const = default;
};

// Full triply-refined table A^TLB(i,j,k), i,j,k in [1,n].  Core entries
// (i in [2,n], j in [2,n-1], k in [2,n]) come from the generating function;
// the (1,1,k) and (i,n,1) boundary families are attached explicitly; all
// remaining index combinations are zero.
struct BoundaryTable3 {
    int n = 0;
    std::vector<Int> values;  // (i,j,k) at ((i-1)*n + (j-1))*n + (k-1)

    const Int& at(int i, int j, int k) const;
    Int& at(int i, int j, int k);
    Int total() const;
    bool operator==(const BoundaryTable3&) const = default;
};

// Full quadruply-refined table A^TLBR(i,j,k,l), all indices in [1,n].
struct BoundaryTable4 {
    int n = 0;
    std::vector<Int> values;  // (i,j,k,l) at (((i-1)*n + (j-1))*n + (k-1))*n + (l-1)

    const Int& at(int i, int j, int k, int l) const;
    Int& at(int i, int j, int k, int l);
    Int total() const;
    bool operator==(const BoundaryTable4&) const = default;
};

BoundaryTable3 make_table3(int n);
BoundaryTable4 make_table4(int n);

}  // namespace asmice

#endif  // ASMICE_TABLES_HPP
