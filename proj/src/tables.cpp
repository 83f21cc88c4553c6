#include "asmice/tables.hpp"

#include "asmice/errors.hpp"

namespace asmice {

namespace {

std::size_t pair_index(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw RangeError("pair table index out of range");
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(j - 1);
}

std::size_t triple_index(int n, int i, int j, int k) {
    if (i < 1 || i > n || j < 1 || j > n || k < 1 || k > n)
        throw RangeError("triple table index out of range");
    const std::size_t un = static_cast<std::size_t>(n);
    return (static_cast<std::size_t>(i - 1) * un + static_cast<std::size_t>(j - 1)) * un +
           static_cast<std::size_t>(k - 1);
}

std::size_t quad_index(int n, int i, int j, int k, int l) {
    if (i < 1 || i > n || j < 1 || j > n || k < 1 || k > n || l < 1 || l > n)
        throw RangeError("quadruple table index out of range");
    const std::size_t un = static_cast<std::size_t>(n);
    return ((static_cast<std::size_t>(i - 1) * un + static_cast<std::size_t>(j - 1)) * un +
            static_cast<std::size_t>(k - 1)) *
               un +
           static_cast<std::size_t>(l - 1);
}

}  // namespace

Int RefinedVector::total() const {
    Int t = 0;
    for (const Int& c : counts) t += c;
    return t;
}

const Int& PairTable::at(int i, int j) const { return values[pair_index(n, i, j)]; }
Int& PairTable::at(int i, int j) { return values[pair_index(n, i, j)]; }

Int PairTable::total() const {
    Int t = 0;
    if (kind == PairKind::TT) {
        // Undo the per-pair division so the weighted sum recovers the raw
        // two-row configuration count, which equals the number of ASMs.
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) t += at(i, j) * Int(j - i + 1);
        if (n == 1) t += at(1, 1);
        return t;
    }
    for (const Int& v : values) t += v;
    return t;
}

const Int& BoundaryTable3::at(int i, int j, int k) const {
    return values[triple_index(n, i, j, k)];
}
Int& BoundaryTable3::at(int i, int j, int k) {
    return values[triple_index(n, i, j, k)];
}

Int BoundaryTable3::total() const {
    Int t = 0;
    for (const Int& v : values) t += v;
    return t;
}

const Int& BoundaryTable4::at(int i, int j, int k, int l) const {
    return values[quad_index(n, i, j, k, l)];
}
Int& BoundaryTable4::at(int i, int j, int k, int l) {
    return values[quad_index(n, i, j, k, l)];
}

Int BoundaryTable4::total() const {
    Int t = 0;
    for (const Int& v : values) t += v;
    return t;
}

BoundaryTable3 make_table3(int n) {
    if (n < 1) throw RangeError("make_table3: order must be positive");
    BoundaryTable3 t;
    t.n = n;
    const std::size_t un = static_cast<std::size_t>(n);
    t.values.assign(un * un * un, Int(0));
    return t;
}

BoundaryTable4 make_table4(int n) {
    if (n < 1) throw RangeError("make_table4: order must be positive");
    BoundaryTable4 t;
    t.n = n;
    const std::size_t un = static_cast<std::size_t>(n);
    t.values.assign(un * un * un * un, Int(0));
    return t;
}

}  // namespace asmice
