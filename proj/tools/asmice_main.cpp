// Command-line front end: refined enumeration tables, determinantal-identity
// verification suites, and the three-way partition-function comparison.
//
// Exit codes: 0 success, 1 first failing check (named on stderr), 2 usage.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "asmice/boundary.hpp"
#include "asmice/errors.hpp"
#include "asmice/formulas.hpp"
#include "asmice/genfun.hpp"
#include "asmice/oracle.hpp"
#include "asmice/real.hpp"
#include "asmice/serialize.hpp"
#include "asmice/squareice.hpp"
#include "asmice/verify.hpp"

namespace {

using namespace asmice;

Variant parse_variant(const std::string& name) {
    return name == "simplified" ? Variant::simplified : Variant::original;
}

std::string real_str(const Real& v, unsigned digits) {
    return v.str(static_cast<std::streamsize>(digits));
}

std::string diff_str(const Real& v) {
    return v.str(3, std::ios_base::scientific);
}

// rho, sigma, kappa, zeta, mu, nu for n up to nmax, one row per defined
// (constant, n[, k]) combination; k = 0 marks the constants without a k.
TableDoc constants_doc(int nmax) {
    TableDoc doc;
    doc.n = nmax;
    doc.kind = "constants";
    doc.index_names = {"constant", "n", "k"};
    auto row = [&doc](const std::string& name, int n, int k, const Rat& v) {
        doc.entries.push_back(
            {{name, static_cast<long>(n), static_cast<long>(k)}, to_string(v)});
    };
    for (int n = 2; n <= nmax; ++n) row("rho", n, 0, rho(n));
    for (int n = 2; n <= nmax; ++n) row("sigma", n, 0, sigma(n));
    for (int n = 1; n <= nmax; ++n) row("kappa", n, 0, kappa(n));
    for (int n = 1; n <= nmax; ++n)
        for (int k = 1; k <= 2 * n; ++k) row("zeta", n, k, zeta(n, k));
    for (int n = 3; n <= nmax; ++n) row("mu", n, 0, mu(n));
    for (int n = 4; n <= nmax; ++n) row("nu", n, 0, nu(n));
    return doc;
}

int emit_verify(const std::string& suite, int nmax, std::uint64_t seed,
                unsigned precision, Format format) {
    VerifyDoc doc;
    doc.suite = suite;
    doc.nmax = nmax;
    doc.seed = seed;
    doc.precision = precision;
    auto append = [&doc](const std::string& prefix,
                         const std::vector<NamedCheck>& checks) {
        for (const NamedCheck& c : checks) {
            NamedCheck named = c;
            if (!prefix.empty()) named.name = prefix + "/" + c.name;
            doc.checks.push_back(named);
        }
    };
    const bool all = suite == "all";
    if (suite == "formulas" || all)
        append(all ? "formulas" : "", verify_formulas(nmax));
    if (suite == "boundary" || all)
        append(all ? "boundary" : "", verify_boundary(nmax));
    if (suite == "squareice" || all)
        append(all ? "squareice" : "", verify_squareice(nmax, seed, precision));
    if (suite == "oracle-xcheck" || all)
        append(all ? "oracle-xcheck" : "", verify_oracle_xcheck(nmax));

    std::cout << render(doc, format);
    for (const NamedCheck& c : doc.checks) {
        if (!c.pass) {
            std::cerr << "first failing check: " << c.name
                      << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            return 1;
        }
    }
    return 0;
}

int emit_partition(int n, int k, int points, std::uint64_t seed,
                   unsigned precision, Format format) {
    PartitionDoc doc;
    doc.n = n;
    doc.k = k;
    doc.points = points;
    doc.seed = seed;
    doc.precision = precision;
    doc.tolerance = "1e-" + std::to_string(precision - 20);
    doc.direct_available = n <= 5;
    const PrecisionGuard guard(precision);
    const Real tol = singular_threshold(precision, 20);
    bool all_ok = true;

    for (int p = 1; p <= points; ++p) {
        const std::vector<Rat> pts =
            seeded_points(k, seed + static_cast<std::uint64_t>(p));
        PartitionDoc::Row row;
        row.point = p;
        std::vector<Real> us;
        for (const Rat& r : pts) {
            row.us.push_back(to_string(r));
            us.push_back(to_real(r));
        }
        // The 2n spectral parameters are symmetric at the combinatorial
        // point; fill the row slots first, then the column slots.
        std::vector<Real> xs(static_cast<std::size_t>(n), Real(0));
        std::vector<Real> ys(static_cast<std::size_t>(n), Real(0));
        for (int a = 0; a < k; ++a) {
            if (a < n)
                xs[static_cast<std::size_t>(a)] = us[static_cast<std::size_t>(a)];
            else
                ys[static_cast<std::size_t>(a - n)] = us[static_cast<std::size_t>(a)];
        }
        const Real zw = z_wronskian(n, k, us, precision);
        const Real zi = z_ik(n, xs, ys, precision);
        row.z_wronskian = real_str(zw, precision);
        row.z_ik = real_str(zi, precision);
        const Real d_wi = rel_diff(zw, zi);
        row.rel_diff_wronskian_ik = diff_str(d_wi);
        if (!(d_wi <= tol)) all_ok = false;
        if (doc.direct_available) {
            const Real zd = z_direct(n, xs, ys, precision);
            row.z_direct = real_str(zd, precision);
            const Real d_wd = rel_diff(zw, zd);
            row.rel_diff_wronskian_direct = diff_str(d_wd);
            if (!(d_wd <= tol)) all_ok = false;
        }
        doc.rows.push_back(row);
    }
    doc.all_within_tolerance = all_ok;
    std::cout << render(doc, format);
    if (!all_ok) {
        std::cerr << "first failing check: partition evaluations disagree "
                     "beyond tolerance "
                  << doc.tolerance << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact refined enumeration of alternating sign matrices and "
        "square-ice partition functions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    app.add_option("--format", format_name, "output format: text, csv, json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    int n = 1;
    auto* cmd_total = app.add_subcommand("total", "total count A_n");
    cmd_total->add_option("n", n, "matrix order")->required()->check(CLI::Range(0, 400));
    auto* cmd_refined = app.add_subcommand("refined", "singly refined counts A_{n,k}");
    cmd_refined->add_option("n", n, "matrix order")->required()->check(CLI::Range(1, 400));
    auto* cmd_tb = app.add_subcommand("tb", "top-bottom doubly refined table");
    cmd_tb->add_option("n", n, "matrix order")->required()->check(CLI::Range(1, 200));
    auto* cmd_tl = app.add_subcommand("tl", "top-left doubly refined table");
    cmd_tl->add_option("n", n, "matrix order")->required()->check(CLI::Range(1, 200));
    auto* cmd_tt = app.add_subcommand("tt", "top-two doubly refined table");
    cmd_tt->add_option("n", n, "matrix order")->required()->check(CLI::Range(2, 200));

    std::string variant_name = "original";
    std::string source_name = "engine";
    auto* cmd_tlb = app.add_subcommand("tlb", "triply refined table");
    cmd_tlb->add_option("n", n, "matrix order")->required()->check(CLI::Range(1, 16));
    auto* cmd_tlbr = app.add_subcommand("tlbr", "quadruply refined table");
    cmd_tlbr->add_option("n", n, "matrix order")->required()->check(CLI::Range(1, 10));
    for (CLI::App* cmd : {cmd_tlb, cmd_tlbr}) {
        cmd->add_option("--variant", variant_name,
                        "determinant rows: original or simplified")
            ->check(CLI::IsMember({"original", "simplified"}))
            ->capture_default_str();
        cmd->add_option("--source", source_name,
                        "engine (generating function) or oracle (brute force)")
            ->check(CLI::IsMember({"engine", "oracle"}))
            ->capture_default_str();
    }

    int nmax = 6;
    auto* cmd_constants =
        app.add_subcommand("constants", "rho, sigma, kappa, zeta, mu, nu");
    cmd_constants->add_option("--nmax", nmax, "largest order")
        ->check(CLI::Range(1, 30))
        ->capture_default_str();

    std::string suite = "all";
    std::uint64_t seed = 1;
    unsigned precision = kDefaultPrecisionDigits;
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify
        ->add_option("--suite", suite,
                     "formulas, boundary, squareice, oracle-xcheck, or all")
        ->check(CLI::IsMember(
            {"formulas", "boundary", "squareice", "oracle-xcheck", "all"}))
        ->capture_default_str();
    cmd_verify->add_option("--nmax", nmax, "largest order")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
    cmd_verify->add_option("--seed", seed, "seed for sampled spectral points")
        ->capture_default_str();
    cmd_verify->add_option("--precision", precision, "working decimal digits")
        ->check(CLI::Range(30u, 1000u))
        ->capture_default_str();

    int part_n = 3, part_k = 2, points = 10;
    auto* cmd_partition = app.add_subcommand(
        "partition", "compare the three partition-function evaluations");
    cmd_partition->add_option("--n", part_n, "matrix order")
        ->required()
        ->check(CLI::Range(1, 10));
    cmd_partition
        ->add_option("--k", part_k, "number of nonzero spectral parameters")
        ->required()
        ->check(CLI::Range(1, 20));
    cmd_partition->add_option("--points", points, "sample points")
        ->check(CLI::Range(1, 100))
        ->capture_default_str();
    cmd_partition->add_option("--seed", seed, "seed for sampled spectral points")
        ->capture_default_str();
    cmd_partition->add_option("--precision", precision, "working decimal digits")
        ->check(CLI::Range(30u, 1000u))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const Format format = parse_format(format_name);
        if (cmd_total->parsed()) {
            std::cout << render(doc_total(n, a_total(n)), format);
        } else if (cmd_refined->parsed()) {
            std::cout << render(doc_refined(refined_vector(n)), format);
        } else if (cmd_tb->parsed()) {
            std::cout << render(doc_pair(tb_table(n)), format);
        } else if (cmd_tl->parsed()) {
            std::cout << render(doc_pair(tl_table(n)), format);
        } else if (cmd_tt->parsed()) {
            std::cout << render(doc_pair(tt_table(n)), format);
        } else if (cmd_tlb->parsed()) {
            if (source_name == "oracle" && n > kOracleHardCap) {
                std::cerr << "tlb: the oracle only enumerates orders up to "
                          << kOracleHardCap << "\n";
                return 2;
            }
            const BoundaryTable3 t =
                source_name == "oracle"
                    ? oracle_tables(n, n > kOracleDefaultCap).tlb
                    : tlb_table(n, parse_variant(variant_name));
            std::cout << render(doc_table3(t), format);
        } else if (cmd_tlbr->parsed()) {
            if (source_name == "oracle" && n > kOracleHardCap) {
                std::cerr << "tlbr: the oracle only enumerates orders up to "
                          << kOracleHardCap << "\n";
                return 2;
            }
            const BoundaryTable4 t =
                source_name == "oracle"
                    ? oracle_tables(n, n > kOracleDefaultCap).tlbr
                    : tlbr_table(n, parse_variant(variant_name));
            std::cout << render(doc_table4(t), format);
        } else if (cmd_constants->parsed()) {
            std::cout << render(constants_doc(nmax), format);
        } else if (cmd_verify->parsed()) {
            return emit_verify(suite, nmax, seed, precision, format);
        } else if (cmd_partition->parsed()) {
            if (part_k > 2 * part_n) {
                std::cerr << "partition: --k must be at most 2n\n";
                return 2;
            }
            if (part_k > 16) {
                std::cerr << "partition: at most 16 parameters fit the "
                             "minimum spacing\n";
                return 2;
            }
            return emit_partition(part_n, part_k, points, seed, precision,
                                  format);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
