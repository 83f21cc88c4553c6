// Boundary engines: the triply and quadruply refined tables extracted from
// the determinantal identities, their boundary families, marginals, and
// agreement with the brute-force oracle.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "asmice/boundary.hpp"
#include "asmice/errors.hpp"
#include "asmice/formulas.hpp"
#include "asmice/oracle.hpp"

using namespace asmice;

TEST_CASE("triply refined table matches the oracle") {
    for (int n = 3; n <= 6; ++n) {
        const OracleTables o = oracle_tables(n);
        CHECK(tlb_table(n, Variant::original) == o.tlb);
    }
}

TEST_CASE("quadruply refined table matches the oracle") {
    for (int n = 4; n <= 6; ++n) {
        const OracleTables o = oracle_tables(n);
        CHECK(tlbr_table(n, Variant::original) == o.tlbr);
    }
}

TEST_CASE("simplified determinant rows give identical tables") {
    for (int n = 3; n <= 7; ++n)
        CHECK(tlb_table(n, Variant::simplified) ==
              tlb_table(n, Variant::original));
    for (int n = 4; n <= 7; ++n)
        CHECK(tlbr_table(n, Variant::simplified) ==
              tlbr_table(n, Variant::original));
}

TEST_CASE("small orders come from the oracle directly") {
    const BoundaryTable3 t1 = tlb_table(1);
    CHECK(t1.at(1, 1, 1) == 1);
    CHECK(t1.total() == 1);
    const BoundaryTable3 t2 = tlb_table(2);
    CHECK(t2.at(1, 1, 2) == 1);
    CHECK(t2.at(2, 2, 1) == 1);
    const BoundaryTable4 q3 = tlbr_table(3);
    CHECK(q3.total() == 7);
    CHECK(q3.at(1, 1, 3, 3) == 1);
}

TEST_CASE("boundary families are attached correctly") {
    const BoundaryTable3 t = tlb_table(4);
    for (int k = 2; k <= 4; ++k) CHECK(t.at(1, 1, k) == a_refined(3, k - 1));
    for (int i = 2; i <= 4; ++i) CHECK(t.at(i, 4, 1) == a_refined(3, i - 1));
    CHECK(t.at(2, 2, 3) == 3);  // an interior core entry

    const BoundaryTable4 q = tlbr_table(5);
    CHECK(q.at(1, 1, 5, 5) == a_total(3));
    CHECK(q.at(5, 5, 1, 1) == a_total(3));
    for (int k = 2; k <= 4; ++k)
        for (int l = 2; l <= 4; ++l)
            CHECK(q.at(1, 1, k, l) == a_tl(4, 6 - k, 6 - l));
    for (int i = 2; i <= 4; ++i)
        for (int j = 2; j <= 4; ++j)
            CHECK(q.at(i, j, 5, 5) == a_tl(4, i, j));
    CHECK(q.at(2, 2, 4, 4) == 7);
}

TEST_CASE("impossible boundary combinations are zero") {
    const BoundaryTable3 t = tlb_table(4);
    // i = 1 forces j = 1, and k = 1 forces j = n.
    CHECK(t.at(1, 2, 3) == 0);
    CHECK(t.at(2, 1, 3) == 0);
    CHECK(t.at(2, 2, 1) == 0);
    CHECK(t.at(1, 1, 1) == 0);
    CHECK(t.at(2, 4, 2) == 0);

    const BoundaryTable4 q = tlbr_table(4);
    CHECK(q.at(1, 2, 2, 2) == 0);
    CHECK(q.at(2, 2, 2, 1) == 0);  // l = 1 forces i = n
    CHECK(q.at(1, 1, 2, 1) == 0);
    CHECK(q.at(4, 4, 4, 4) == 0);  // k = n forces l = n, but i = n needs l = 1
}

TEST_CASE("marginals reproduce the lower-order refinements") {
    for (int n = 2; n <= 7; ++n) {
        const BoundaryTable3 t = tlb_table(n);
        CHECK(tlb_sum_over_k(t) == tl_table(n));
        CHECK(tlb_sum_over_j(t) == tb_table(n));
        CHECK(t.total() == a_total(n));
    }
    for (int n = 2; n <= 6; ++n) {
        const BoundaryTable4 q = tlbr_table(n);
        CHECK(tlbr_sum_over_l(q) == tlb_table(n));
        CHECK(q.total() == a_total(n));
    }
}

TEST_CASE("identity right-hand sides are divisible by the prefactors") {
    // The full extraction throws NonzeroRemainder if divisibility ever
    // fails; building the tables is itself the divisibility assertion.
    for (int n = 3; n <= 8; ++n) CHECK_NOTHROW(tlb_table(n));
    for (int n = 4; n <= 7; ++n) CHECK_NOTHROW(tlbr_table(n));
}

TEST_CASE("order preconditions") {
    CHECK_THROWS_AS(tlb_rhs(2), RangeError);
    CHECK_THROWS_AS(tlbr_rhs(3), RangeError);
    CHECK_THROWS_AS(tlb_table(0), RangeError);
}
