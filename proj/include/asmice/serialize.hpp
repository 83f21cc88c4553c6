// Rendering of tables and verification reports as text, CSV, or JSON.
//
// JSON documents follow one fixed schema:
//   {"n": int, "kind": string, "index_names": [...],
//    "entries": [{"index": [...], "value": decimal-string}]}
// Values are decimal strings because the counts outgrow 64-bit integers
// almost immediately; indices are 1-based.  Identical inputs produce
// byte-identical output.

#ifndef ASMICE_SERIALIZE_HPP
#define ASMICE_SERIALIZE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "asmice/tables.hpp"

namespace asmice {

enum class Format { text, csv, json };

// Accepts "text", "csv", "json"; throws RangeError otherwise.
Format parse_format(const std::string& name);

// A table flattened to labeled index tuples.  Index items are integers for
// ordinary tables; the constants table also uses name strings.
struct TableDoc {
    int n = 0;
    std::string kind;
    std::vector<std::string> index_names;
    struct Entry {
        std::vector<std::variant<long, std::string>> index;
        std::string value;
    };
    std::vector<Entry> entries;
};

std::string render(const TableDoc& doc, Format format);

TableDoc doc_total(int n, const Int& value);
TableDoc doc_refined(const RefinedVector& v);
TableDoc doc_pair(const PairTable& t);
TableDoc doc_table3(const BoundaryTable3& t);
TableDoc doc_table4(const BoundaryTable4& t);

// One verification check with a stable name.
struct NamedCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct VerifyDoc {
    std::string suite;
    int nmax = 0;
    std::uint64_t seed = 0;
    unsigned precision = 0;
    std::vector<NamedCheck> checks;
};

std::string render(const VerifyDoc& doc, Format format);

// Numeric three-way partition function comparison.
struct PartitionDoc {
    int n = 0;
    int k = 0;
    int points = 0;
    std::uint64_t seed = 0;
    unsigned precision = 0;
    std::string tolerance;
    bool direct_available = false;  // z_direct only runs for n <= 5
    struct Row {
        int point = 0;                 // 1-based sample index
        std::vector<std::string> us;   // spectral parameters
        std::string z_wronskian;
        std::string z_ik;
        std::string z_direct;          // empty unless direct_available
        std::string rel_diff_wronskian_ik;
        std::string rel_diff_wronskian_direct;  // empty unless available
    };
    std::vector<Row> rows;
    bool all_within_tolerance = false;
};

std::string render(const PartitionDoc& doc, Format format);

}  // namespace asmice

#endif  // ASMICE_SERIALIZE_HPP
