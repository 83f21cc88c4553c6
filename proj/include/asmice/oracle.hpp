// Ground truth by brute force: depth-first enumeration of all alternating
// sign matrices of a given order with boundary classification.  Every
// closed-form and generating-function result is checked against these tables.

#ifndef ASMICE_ORACLE_HPP
#define ASMICE_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "asmice/scalars.hpp"
#include "asmice/tables.hpp"

namespace asmice {

// A validated order-n alternating sign matrix.
struct AsmMatrix {
    int n = 0;
    std::vector<std::int8_t> entries;  // row-major, values in {-1, 0, +1}

    int at(int i, int j) const {  // 1-based
        return entries[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    }
    // One matrix per line, row-major, entries rendered as {-,0,+}.
    std::string to_line() const;
};
AsmMatrix asm_from_line(int n, const std::string& line);

// Full validation: entries in {-1,0,1}, all partial row/column sums in {0,1},
// every complete row/column sum equal to 1 (this forces the alternation).
bool asm_valid(const AsmMatrix& m);

// Positions of the unique 1 in the four boundary lines.
struct BoundaryData {
    int i = 0;  // top row:     column of the 1 in row 1
    int j = 0;  // left column: row of the 1 in column 1
    int k = 0;  // bottom row:  column of the 1 in row n
    int l = 0;  // right column: row of the 1 in column n
};

BoundaryData classify(const AsmMatrix& m);

// The unique pair i < j with m_{1,i}+m_{2,i} = m_{1,j}+m_{2,j} = 1 (n >= 2).
std::pair<int, int> tt_pair(const AsmMatrix& m);

inline constexpr int kOracleDefaultCap = 7;
inline constexpr int kOracleHardCap = 8;

// Emits each order-n ASM exactly once, in a deterministic lexicographic order
// (rows top to bottom, entries tried in increasing value).  Orders above 7
// require allow_large (n = 8 visits 10.8M matrices); above 8 are rejected.
void enumerate_asms(int n, const std::function<void(const AsmMatrix&)>& visit,
                    bool allow_large = false);

// Everything accumulated in a single enumeration pass.
struct OracleTables {
    int n = 0;
    Int total;
    RefinedVector refined;
    PairTable tb;
    PairTable tl;
    PairTable tt;  // already divided by (j-i+1); integrality asserted
    BoundaryTable3 tlb;
    BoundaryTable4 tlbr;
};

OracleTables oracle_tables(int n, bool allow_large = false);

// Map an ASM to its six-vertex configuration (types 1..6 per cell) and back;
// round-tripping is a property test of the bijection.  Type assignment:
// -1 -> 5, +1 -> 6, and a 0 cell is type 1/2 (a-weight) when the partial row
// sum to its left equals the partial column sum above it, else type 3/4
// (b-weight); the 1/2 and 3/4 split records the side of the nearest nonzero.
std::vector<std::int8_t> vertex_types(const AsmMatrix& m);
AsmMatrix asm_from_vertex_types(int n, const std::vector<std::int8_t>& types);

}  // namespace asmice

#endif  // ASMICE_ORACLE_HPP
