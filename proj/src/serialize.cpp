// Rendering of tables, verification reports, and partition-function
// comparisons as text, CSV, or JSON.  All three formats iterate documents in
// their stored order, so identical inputs render byte-identically.

#include "asmice/serialize.hpp"

#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "asmice/errors.hpp"

namespace asmice {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string index_item_str(const std::variant<long, std::string>& item) {
    if (std::holds_alternative<long>(item))
        return std::to_string(std::get<long>(item));
    return std::get<std::string>(item);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw RangeError("unknown format '" + name + "' (expected text, csv, json)");
}

std::string render(const TableDoc& doc, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::text: {
            out << doc.kind << " n=" << doc.n << "\n";
            for (const auto& name : doc.index_names) out << name << " ";
            out << "value\n";
            for (const auto& e : doc.entries) {
                for (const auto& item : e.index)
                    out << index_item_str(item) << " ";
                out << e.value << "\n";
            }
            return out.str();
        }
        case Format::csv: {
            for (const auto& name : doc.index_names) out << name << ",";
            out << "value\n";
            for (const auto& e : doc.entries) {
                for (const auto& item : e.index)
                    out << csv_escape(index_item_str(item)) << ",";
                out << csv_escape(e.value) << "\n";
            }
            return out.str();
        }
        case Format::json: {
            ordered_json j;
            j["n"] = doc.n;
            j["kind"] = doc.kind;
            j["index_names"] = doc.index_names;
            j["entries"] = ordered_json::array();
            for (const auto& e : doc.entries) {
                ordered_json je;
                je["index"] = ordered_json::array();
                for (const auto& item : e.index) {
                    if (std::holds_alternative<long>(item))
                        je["index"].push_back(std::get<long>(item));
                    else
                        je["index"].push_back(std::get<std::string>(item));
                }
                je["value"] = e.value;
                j["entries"].push_back(je);
            }
            return j.dump(2) + "\n";
        }
    }
    throw RangeError("render: bad format");
}

TableDoc doc_total(int n, const Int& value) {
    TableDoc doc;
    doc.n = n;
    doc.kind = "total";
    doc.index_names = {"n"};
    doc.entries.push_back({{static_cast<long>(n)}, to_string(value)});
    return doc;
}

TableDoc doc_refined(const RefinedVector& v) {
    TableDoc doc;
    doc.n = v.n;
    doc.kind = "refined";
    doc.index_names = {"k"};
    for (int k = 1; k <= v.n; ++k)
        doc.entries.push_back({{static_cast<long>(k)}, to_string(v.at(k))});
    return doc;
}

TableDoc doc_pair(const PairTable& t) {
    TableDoc doc;
    doc.n = t.n;
    switch (t.kind) {
        case PairKind::TB: doc.kind = "tb"; break;
        case PairKind::TL: doc.kind = "tl"; break;
        case PairKind::TT: doc.kind = "tt"; break;
    }
    doc.index_names = {"i", "j"};
    for (int i = 1; i <= t.n; ++i)
        for (int j = 1; j <= t.n; ++j) {
            if (t.kind == PairKind::TT && i >= j && t.n > 1) continue;
            doc.entries.push_back(
                {{static_cast<long>(i), static_cast<long>(j)},
                 to_string(t.at(i, j))});
        }
    return doc;
}

TableDoc doc_table3(const BoundaryTable3& t) {
    TableDoc doc;
    doc.n = t.n;
    doc.kind = "tlb";
    doc.index_names = {"i", "j", "k"};
    for (int i = 1; i <= t.n; ++i)
        for (int j = 1; j <= t.n; ++j)
            for (int k = 1; k <= t.n; ++k) {
                const Int& v = t.at(i, j, k);
                if (v == 0) continue;  // zero pattern is forced; keep sparse
                doc.entries.push_back({{static_cast<long>(i),
                                        static_cast<long>(j),
                                        static_cast<long>(k)},
                                       to_string(v)});
            }
    return doc;
}

TableDoc doc_table4(const BoundaryTable4& t) {
    TableDoc doc;
    doc.n = t.n;
    doc.kind = "tlbr";
    doc.index_names = {"i", "j", "k", "l"};
    for (int i = 1; i <= t.n; ++i)
        for (int j = 1; j <= t.n; ++j)
            for (int k = 1; k <= t.n; ++k)
                for (int l = 1; l <= t.n; ++l) {
                    const Int& v = t.at(i, j, k, l);
                    if (v == 0) continue;
                    doc.entries.push_back({{static_cast<long>(i),
                                            static_cast<long>(j),
                                            static_cast<long>(k),
                                            static_cast<long>(l)},
                                           to_string(v)});
                }
    return doc;
}

std::string render(const VerifyDoc& doc, Format format) {
    std::size_t passed = 0;
    for (const auto& c : doc.checks)
        if (c.pass) ++passed;
    const bool all_pass = passed == doc.checks.size();

    std::ostringstream out;
    switch (format) {
        case Format::text: {
            out << "verify suite=" << doc.suite << " nmax=" << doc.nmax
                << " seed=" << doc.seed << " precision=" << doc.precision
                << "\n";
            for (const auto& c : doc.checks) {
                out << (c.pass ? "PASS " : "FAIL ") << c.name;
                if (!c.detail.empty()) out << ": " << c.detail;
                out << "\n";
            }
            out << "result: " << (all_pass ? "PASS" : "FAIL") << " (" << passed
                << "/" << doc.checks.size() << " checks)\n";
            return out.str();
        }
        case Format::csv: {
            out << "suite,nmax,seed,precision,name,pass,detail\n";
            for (const auto& c : doc.checks) {
                out << csv_escape(doc.suite) << "," << doc.nmax << ","
                    << doc.seed << "," << doc.precision << ","
                    << csv_escape(c.name) << "," << bool_str(c.pass) << ","
                    << csv_escape(c.detail) << "\n";
            }
            return out.str();
        }
        case Format::json: {
            ordered_json j;
            j["suite"] = doc.suite;
            j["nmax"] = doc.nmax;
            j["seed"] = doc.seed;
            j["precision"] = doc.precision;
            j["checks"] = ordered_json::array();
            for (const auto& c : doc.checks) {
                ordered_json jc;
                jc["name"] = c.name;
                jc["pass"] = c.pass;
                jc["detail"] = c.detail;
                j["checks"].push_back(jc);
            }
            j["all_pass"] = all_pass;
            return j.dump(2) + "\n";
        }
    }
    throw RangeError("render: bad format");
}

std::string render(const PartitionDoc& doc, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::text: {
            out << "partition n=" << doc.n << " k=" << doc.k
                << " points=" << doc.points << " seed=" << doc.seed
                << " precision=" << doc.precision
                << " tolerance=" << doc.tolerance << "\n";
            for (const auto& r : doc.rows) {
                out << "point " << r.point << " u=(";
                for (std::size_t a = 0; a < r.us.size(); ++a) {
                    if (a) out << ", ";
                    out << r.us[a];
                }
                out << ")\n";
                out << "  z_wronskian = " << r.z_wronskian << "\n";
                out << "  z_ik        = " << r.z_ik << "\n";
                if (doc.direct_available)
                    out << "  z_direct    = " << r.z_direct << "\n";
                out << "  rel_diff(wronskian, ik)     = "
                    << r.rel_diff_wronskian_ik << "\n";
                if (doc.direct_available)
                    out << "  rel_diff(wronskian, direct) = "
                        << r.rel_diff_wronskian_direct << "\n";
            }
            out << "result: all within tolerance: "
                << (doc.all_within_tolerance ? "yes" : "no") << "\n";
            return out.str();
        }
        case Format::csv: {
            out << "point,us,z_wronskian,z_ik,z_direct,"
                   "rel_diff_wronskian_ik,rel_diff_wronskian_direct\n";
            for (const auto& r : doc.rows) {
                std::string us;
                for (std::size_t a = 0; a < r.us.size(); ++a) {
                    if (a) us += ";";
                    us += r.us[a];
                }
                out << r.point << "," << csv_escape(us) << ","
                    << csv_escape(r.z_wronskian) << "," << csv_escape(r.z_ik)
                    << "," << csv_escape(r.z_direct) << ","
                    << csv_escape(r.rel_diff_wronskian_ik) << ","
                    << csv_escape(r.rel_diff_wronskian_direct) << "\n";
            }
            return out.str();
        }
        case Format::json: {
            ordered_json j;
            j["n"] = doc.n;
            j["k"] = doc.k;
            j["points"] = doc.points;
            j["seed"] = doc.seed;
            j["precision"] = doc.precision;
            j["tolerance"] = doc.tolerance;
            j["direct_available"] = doc.direct_available;
            j["rows"] = ordered_json::array();
            for (const auto& r : doc.rows) {
                ordered_json jr;
                jr["point"] = r.point;
                jr["us"] = r.us;
                jr["z_wronskian"] = r.z_wronskian;
                jr["z_ik"] = r.z_ik;
                jr["z_direct"] = r.z_direct;
                jr["rel_diff_wronskian_ik"] = r.rel_diff_wronskian_ik;
                jr["rel_diff_wronskian_direct"] = r.rel_diff_wronskian_direct;
                j["rows"].push_back(jr);
            }
            j["all_within_tolerance"] = doc.all_within_tolerance;
            return j.dump(2) + "\n";
        }
    }
    throw RangeError("render: bad format");
}

}  // namespace asmice
