// Brute-force enumerator: totals, validity, boundary classification, the
// one-pass accumulated tables, and the six-vertex bijection.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "asmice/errors.hpp"
#include "asmice/oracle.hpp"

using namespace asmice;

namespace {

AsmMatrix order6_example() {
    // Order-6 matrix with a -1 in three different rows; boundary ones at
    // top column 3, left row 3, bottom column 5, right row 4.
    return asm_from_line(6,
                         "00+000"
                         "0+-0+0"
                         "+-0+00"
                         "0+00-+"
                         "00+000"
                         "0000+0");
}

}  // namespace

TEST_CASE("enumeration totals match the famous sequence") {
    const Int expected[] = {1, 1, 2, 7, 42, 429, 7436};
    for (int n = 1; n <= 6; ++n) {
        Int count = 0;
        enumerate_asms(n, [&](const AsmMatrix&) { ++count; });
        CHECK(count == expected[n]);
    }
}

TEST_CASE("every enumerated matrix is valid and distinct") {
    std::set<std::string> seen;
    enumerate_asms(4, [&](const AsmMatrix& m) {
        CHECK(asm_valid(m));
        CHECK(seen.insert(m.to_line()).second);
    });
    CHECK(seen.size() == 42);
}

TEST_CASE("line round-trip") {
    const AsmMatrix m = order6_example();
    CHECK(asm_valid(m));
    CHECK(asm_from_line(6, m.to_line()).entries == m.entries);
    CHECK(m.at(2, 3) == -1);
    CHECK(m.at(3, 1) == 1);
}

TEST_CASE("validity rejects broken matrices") {
    AsmMatrix bad = asm_from_line(3, "0+0+00+0+");
    CHECK(!asm_valid(bad));  // column 1 sums to 2, column 3 alternates wrong
    AsmMatrix neg = order6_example();
    neg.entries[0] = -1;  // partial row sum drops below 0
    CHECK(!asm_valid(neg));
}

TEST_CASE("boundary classification") {
    const BoundaryData b = classify(order6_example());
    CHECK(b.i == 3);
    CHECK(b.j == 3);
    CHECK(b.k == 5);
    CHECK(b.l == 4);

    // The identity permutation pins all four boundary ones to the corners.
    const AsmMatrix id = asm_from_line(3, "+000+000+");
    const BoundaryData bi = classify(id);
    CHECK(bi.i == 1);
    CHECK(bi.j == 1);
    CHECK(bi.k == 3);
    CHECK(bi.l == 3);
}

TEST_CASE("top-two pair") {
    const auto [p, q] = tt_pair(order6_example());
    CHECK(p == 2);
    CHECK(q == 5);
    const auto [a, b] = tt_pair(asm_from_line(2, "+00+"));
    CHECK(a == 1);
    CHECK(b == 2);
}

TEST_CASE("accumulated tables at order 3") {
    const OracleTables t = oracle_tables(3);
    CHECK(t.total == 7);
    CHECK(t.refined.at(1) == 2);
    CHECK(t.refined.at(2) == 3);
    CHECK(t.refined.at(3) == 2);

    const Int tb[3][3] = {{0, 1, 1}, {1, 1, 1}, {1, 1, 0}};
    const Int tl[3][3] = {{2, 0, 0}, {0, 2, 1}, {0, 1, 1}};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            CHECK(t.tb.at(i, j) == tb[i - 1][j - 1]);
            CHECK(t.tl.at(i, j) == tl[i - 1][j - 1]);
        }
    CHECK(t.tt.at(1, 2) == 1);
    CHECK(t.tt.at(1, 3) == 1);
    CHECK(t.tt.at(2, 3) == 1);
    CHECK(t.tt.total() == 7);  // weights 2, 3, 2

    CHECK(t.tlb.at(1, 1, 2) == 1);
    CHECK(t.tlb.at(1, 1, 3) == 1);
    CHECK(t.tlb.total() == 7);
    CHECK(t.tlbr.total() == 7);
    CHECK(t.tlbr.at(1, 1, 3, 3) == 1);
}

TEST_CASE("order 1 and 2 conventions") {
    const OracleTables t1 = oracle_tables(1);
    CHECK(t1.total == 1);
    CHECK(t1.tt.at(1, 1) == 1);
    CHECK(t1.tlb.at(1, 1, 1) == 1);
    CHECK(t1.tlbr.at(1, 1, 1, 1) == 1);

    const OracleTables t2 = oracle_tables(2);
    CHECK(t2.tlb.at(1, 1, 2) == 1);
    CHECK(t2.tlb.at(2, 2, 1) == 1);
    CHECK(t2.tt.at(1, 2) == 1);
}

TEST_CASE("enumeration caps") {
    CHECK_THROWS_AS(enumerate_asms(8, [](const AsmMatrix&) {}), RangeError);
    CHECK_THROWS_AS(
        enumerate_asms(9, [](const AsmMatrix&) {}, /*allow_large=*/true),
        RangeError);
}

TEST_CASE("six-vertex bijection round-trips") {
    for (int n = 1; n <= 4; ++n) {
        enumerate_asms(n, [&](const AsmMatrix& m) {
            const auto types = vertex_types(m);
            const AsmMatrix back = asm_from_vertex_types(n, types);
            CHECK(back.entries == m.entries);
        });
    }
}

TEST_CASE("six-vertex types of the identity matrix") {
    // Identity order 2: the ones are type 6; zeros right of the diagonal
    // have row sum 1 above/left mismatch pattern giving b-weight types.
    const auto types = vertex_types(asm_from_line(2, "+00+"));
    CHECK(types[0] == 6);
    CHECK(types[3] == 6);
    // Off-diagonal zeros: (1,2) has L=1 (nonzero to the left), T=0 -> type 4
    // convention side; (2,1) has L=0, T=1 -> type 3.
    CHECK((types[1] == 3 || types[1] == 4));
    CHECK((types[2] == 3 || types[2] == 4));
    CHECK(types[1] != types[2]);
}
