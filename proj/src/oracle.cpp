#include "asmice/oracle.hpp"

#include "asmice/errors.hpp"

namespace asmice {

std::string AsmMatrix::to_line() const {
    std::string s;
    s.reserve(entries.size());
    for (std::int8_t v : entries) s.push_back(v < 0 ? '-' : (v > 0 ? '+' : '0'));
    return s;
}

AsmMatrix asm_from_line(int n, const std::string& line) {
    if (n < 1) throw RangeError("asm_from_line: order must be positive");
    if (line.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw RangeError("asm_from_line: line length is not n*n");
    AsmMatrix m;
    m.n = n;
    m.entries.reserve(line.size());
    for (char c : line) {
        switch (c) {
            case '-': m.entries.push_back(-1); break;
            case '0': m.entries.push_back(0); break;
            case '+': m.entries.push_back(1); break;
            default: throw RangeError("asm_from_line: entries must be one of {-,0,+}");
        }
    }
    return m;
}

bool asm_valid(const AsmMatrix& m) {
    const int n = m.n;
    if (n < 1) return false;
    if (m.entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        return false;
    for (std::int8_t v : m.entries)
        if (v < -1 || v > 1) return false;
    for (int i = 1; i <= n; ++i) {
        int sum = 0;
        for (int j = 1; j <= n; ++j) {
            sum += m.at(i, j);
            if (sum < 0 || sum > 1) return false;
        }
        if (sum != 1) return false;
    }
    for (int j = 1; j <= n; ++j) {
        int sum = 0;
        for (int i = 1; i <= n; ++i) {
            sum += m.at(i, j);
            if (sum < 0 || sum > 1) return false;
        }
        if (sum != 1) return false;
    }
    return true;
}

BoundaryData classify(const AsmMatrix& m) {
    const int n = m.n;
    BoundaryData b;
    for (int j = 1; j <= n; ++j)
        if (m.at(1, j) == 1) b.i = j;
    for (int i = 1; i <= n; ++i)
        if (m.at(i, 1) == 1) b.j = i;
    for (int j = 1; j <= n; ++j)
        if (m.at(n, j) == 1) b.k = j;
    for (int i = 1; i <= n; ++i)
        if (m.at(i, n) == 1) b.l = i;
    if (b.i == 0 || b.j == 0 || b.k == 0 || b.l == 0)
        throw RangeError("classify: boundary line without a 1 (not an ASM)");
    return b;
}

std::pair<int, int> tt_pair(const AsmMatrix& m) {
    if (m.n < 2) throw RangeError("tt_pair: requires order >= 2");
    int first = 0, second = 0;
    for (int col = 1; col <= m.n; ++col) {
        if (m.at(1, col) + m.at(2, col) == 1) {
            if (first == 0)
                first = col;
            else if (second == 0)
                second = col;
            else
                throw RangeError("tt_pair: more than two columns sum to 1");
        }
    }
    if (second == 0) throw RangeError("tt_pair: fewer than two columns sum to 1");
    return {first, second};
}

void enumerate_asms(int n, const std::function<void(const AsmMatrix&)>& visit,
                    bool allow_large) {
    if (n < 1) throw RangeError("enumerate_asms: order must be positive");
    const int cap = allow_large ? kOracleHardCap : kOracleDefaultCap;
    if (n > cap)
        throw RangeError("enumerate_asms: order " + std::to_string(n) +
                         " exceeds the enumeration cap of " + std::to_string(cap));

    AsmMatrix m;
    m.n = n;
    m.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::vector<int> colsum(static_cast<std::size_t>(n), 0);

    // Cell-by-cell depth-first search.  Prefix sums of every row and column
    // must stay in {0,1}; a row must close at 1, and a column must reach 1 by
    // the last row.  Values are tried in increasing order, which makes the
    // emission order lexicographic in the row-major entry sequence.
    std::function<void(int, int, int)> place = [&](int i, int j, int rowsum) {
        if (j == n) {
            if (rowsum != 1) return;
            if (i + 1 == n) {
                visit(m);
            } else {
                place(i + 1, 0, 0);
            }
            return;
        }
        const std::size_t idx =
            static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(j);
        const int remaining_rows = n - i;  // rows left including this one
        for (int v = -1; v <= 1; ++v) {
            const int rs = rowsum + v;
            if (rs < 0 || rs > 1) continue;
            const int cs = colsum[static_cast<std::size_t>(j)] + v;
            if (cs < 0 || cs > 1) continue;
            // A column still at 0 must be able to reach 1 in time.
            if (cs == 0 && remaining_rows == 1) continue;
            m.entries[idx] = static_cast<std::int8_t>(v);
            colsum[static_cast<std::size_t>(j)] = cs;
            place(i, j + 1, rs);
            colsum[static_cast<std::size_t>(j)] = cs - v;
        }
        m.entries[idx] = 0;
    };
    place(0, 0, 0);
}

OracleTables oracle_tables(int n, bool allow_large) {
    OracleTables t;
    t.n = n;
    t.total = 0;
    t.refined.n = n;
    t.refined.counts.assign(static_cast<std::size_t>(n), Int(0));
    t.tb = PairTable{n, PairKind::TB,
                     std::vector<Int>(static_cast<std::size_t>(n) * n, Int(0))};
    t.tl = PairTable{n, PairKind::TL,
                     std::vector<Int>(static_cast<std::size_t>(n) * n, Int(0))};
    t.tt = PairTable{n, PairKind::TT,
                     std::vector<Int>(static_cast<std::size_t>(n) * n, Int(0))};
    t.tlb = make_table3(n);
    t.tlbr = make_table4(n);

    enumerate_asms(
        n,
        [&](const AsmMatrix& m) {
            const BoundaryData b = classify(m);
            t.total += 1;
            t.refined.counts[static_cast<std::size_t>(b.i - 1)] += 1;
            t.tb.at(b.i, b.k) += 1;
            t.tl.at(b.i, b.j) += 1;
            if (n >= 2) {
                const auto [p, q] = tt_pair(m);
                t.tt.at(p, q) += 1;
            }
            t.tlb.at(b.i, b.j, b.k) += 1;
            t.tlbr.at(b.i, b.j, b.k, b.l) += 1;
        },
        allow_large);

    if (n == 1) t.tt.at(1, 1) = 1;  // the single matrix, by convention

    // Each two-row prefix with 1s in columns i < j arises from (j - i + 1)
    // distinct (top, second-row) configurations, so the raw pair counts are
    // exact multiples.
    if (n >= 2) {
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                Int& v = t.tt.at(i, j);
                const Int d = j - i + 1;
                if (v % d != 0)
                    throw IntegralityViolation(
                        "two-row count not divisible by its multiplicity");
                v /= d;
            }
        }
    }
    return t;
}

std::vector<std::int8_t> vertex_types(const AsmMatrix& m) {
    const int n = m.n;
    std::vector<std::int8_t> types(static_cast<std::size_t>(n) *
                                   static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int rowsum = 0;  // partial row sum strictly left of the current cell
        for (int j = 1; j <= n; ++j) {
            int colsum = 0;  // partial column sum strictly above
            for (int r = 1; r < i; ++r) colsum += m.at(r, j);
            const int v = m.at(i, j);
            std::int8_t type;
            if (v == -1) {
                type = 5;
            } else if (v == 1) {
                type = 6;
            } else if (rowsum == colsum) {
                type = rowsum == 0 ? 1 : 2;
            } else {
                type = rowsum == 0 ? 3 : 4;
            }
            types[static_cast<std::size_t>(i - 1) * n + (j - 1)] = type;
            rowsum += v;
        }
    }
    return types;
}

AsmMatrix asm_from_vertex_types(int n, const std::vector<std::int8_t>& types) {
    if (n < 1) throw RangeError("asm_from_vertex_types: order must be positive");
    if (types.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw RangeError("asm_from_vertex_types: wrong size");
    AsmMatrix m;
    m.n = n;
    m.entries.resize(types.size());
    for (std::size_t idx = 0; idx < types.size(); ++idx) {
        const std::int8_t t = types[idx];
        if (t < 1 || t > 6) throw RangeError("asm_from_vertex_types: type out of range");
        m.entries[idx] = t == 5 ? -1 : (t == 6 ? 1 : 0);
    }
    if (!asm_valid(m))
        throw RangeError("asm_from_vertex_types: types do not describe an ASM");
    return m;
}

}  // namespace asmice
