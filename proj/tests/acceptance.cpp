// Acceptance gate: runs every primary criterion at its stated range and
// tolerance, printing exactly one PASS/FAIL line per criterion.  Exits
// nonzero when any criterion fails.

#include <chrono>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "asmice/boundary.hpp"
#include "asmice/errors.hpp"
#include "asmice/formulas.hpp"
#include "asmice/genfun.hpp"
#include "asmice/oracle.hpp"
#include "asmice/real.hpp"
#include "asmice/squareice.hpp"

using namespace asmice;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool pass,
            const std::string& detail = std::string()) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion-" << idx << ": "
              << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

template <typename Body>
void criterion(int idx, const std::string& what, Body body) {
    try {
        std::string detail;
        const bool pass = body(detail);
        report(idx, what, pass, detail);
    } catch (const std::exception& e) {
        report(idx, what, false, e.what());
    }
}

double seconds(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

}  // namespace

int main() {
    // The oracle pass is shared by criteria 1-5; its cost is billed to
    // criterion 1, whose wall-clock bound covers the enumeration.
    std::vector<OracleTables> ot(8);

    criterion(1, "product formula matches brute force for n=1..7 in <30s",
              [&](std::string& detail) {
                  const auto start = std::chrono::steady_clock::now();
                  for (int n = 1; n <= 7; ++n)
                      ot[static_cast<std::size_t>(n)] = oracle_tables(n);
                  bool pass = true;
                  for (int n = 1; n <= 7; ++n)
                      if (ot[static_cast<std::size_t>(n)].total != a_total(n))
                          pass = false;
                  const double t = seconds(start);
                  detail = fmt_seconds(t);
                  return pass && t < 30.0;
              });

    criterion(2, "refined counts match oracle (n<=7) and satisfy symmetries (n<=30)",
              [&](std::string&) {
                  for (int n = 1; n <= 7; ++n)
                      if (ot[static_cast<std::size_t>(n)].refined !=
                          refined_vector(n))
                          return false;
                  for (int n = 1; n <= 30; ++n) {
                      if (a_refined(n, 1) != a_total(n - 1)) return false;
                      for (int k = 1; k <= n; ++k)
                          if (a_refined(n, k) != a_refined(n, n + 1 - k))
                              return false;
                  }
                  return true;
              });

    criterion(3, "doubly refined tables match oracle (n<=6), top-two formulas agree (n<=7), Stroganov relation (n<=6)",
              [&](std::string&) {
                  for (int n = 2; n <= 6; ++n) {
                      const auto& o = ot[static_cast<std::size_t>(n)];
                      if (tb_table(n) != o.tb) return false;
                      if (tl_table(n) != o.tl) return false;
                      if (tt_table(n) != o.tt) return false;
                  }
                  for (int n = 2; n <= 7; ++n)
                      for (int i = 1; i <= n; ++i)
                          for (int j = i + 1; j <= n; ++j)
                              if (a_tt_kr(n, i, j) != a_tt_f(n, i, j))
                                  return false;
                  for (int n = 2; n <= 6; ++n)
                      if (!stroganov_relation_check(n).pass) return false;
                  return true;
              });

    criterion(4, "triply refined identity extracts exactly and matches oracle (n=3..6) with consistent marginals (n<=8)",
              [&](std::string&) {
                  for (int n = 3; n <= 6; ++n)
                      if (tlb_table(n) != ot[static_cast<std::size_t>(n)].tlb)
                          return false;
                  for (int n = 3; n <= 8; ++n) {
                      const BoundaryTable3 t = tlb_table(n);
                      if (tlb_sum_over_k(t) != tl_table(n)) return false;
                      if (tlb_sum_over_j(t) != tb_table(n)) return false;
                      if (t.total() != a_total(n)) return false;
                  }
                  return true;
              });

    criterion(5, "quadruply refined identity matches oracle (n=4..6) and sums to A_n (n<=8)",
              [&](std::string& detail) {
                  const auto start = std::chrono::steady_clock::now();
                  for (int n = 4; n <= 6; ++n)
                      if (tlbr_table(n) != ot[static_cast<std::size_t>(n)].tlbr)
                          return false;
                  for (int n = 4; n <= 8; ++n) {
                      const BoundaryTable4 t = tlbr_table(n);
                      if (t.total() != a_total(n)) return false;
                      if (tlbr_sum_over_l(t) != tlb_table(n)) return false;
                  }
                  detail = fmt_seconds(seconds(start));
                  return true;
              });

    criterion(6, "simplified determinant rows reproduce the tables bit for bit; mu and nu stay exact rationals (n<=8)",
              [&](std::string&) {
                  for (int n = 3; n <= 6; ++n)
                      if (tlb_table(n, Variant::simplified) !=
                          tlb_table(n, Variant::original))
                          return false;
                  for (int n = 4; n <= 6; ++n)
                      if (tlbr_table(n, Variant::simplified) !=
                          tlbr_table(n, Variant::original))
                          return false;
                  for (int n = 3; n <= 8; ++n) mu(n);  // NonconstantRatio -> FAIL
                  for (int n = 4; n <= 8; ++n) nu(n);
                  return true;
              });

    criterion(7, "f_n matches its closed value at pi/3 to 1e-40 and its derivative facts exactly (n<=8)",
              [&](std::string&) {
                  const PrecisionGuard guard(60);
                  const Real tol = singular_threshold(60, 20);
                  for (int n = 1; n <= 8; ++n) {
                      const Real lhs = fn_trig(n).eval(pi() / 3);
                      const Real rhs = (Real(2) / sqrt3()) *
                                       pow(Real(3) / 4, n) *
                                       to_real(a_total(n - 1));
                      if (!rel_close(lhs, rhs, tol)) return false;
                      for (int m = 0; m <= 2 * n - 2; ++m)
                          if (fn_deriv_trig(n, m).eval_at_zero() != 0)
                              return false;
                      if (fn_deriv_trig(n, 2 * n - 1).eval_at_zero() !=
                          Rat(factorial(2 * n - 1) * a_total(n)))
                          return false;
                  }
                  return true;
              });

    criterion(8, "summation identity holds exactly for n=1..20",
              [&](std::string&) {
                  for (int n = 1; n <= 20; ++n)
                      if (!summation_identity_check(n).pass) return false;
                  return true;
              });

    criterion(9, "three partition-function routes agree to 1e-40 at 10 seeded points per (n,k), n=2..5, k=1..4, in <60s",
              [&](std::string& detail) {
                  const auto start = std::chrono::steady_clock::now();
                  const PrecisionGuard guard(60);
                  const Real tol = singular_threshold(60, 20);
                  for (int n = 2; n <= 5; ++n)
                      for (int k = 1; k <= 4; ++k)
                          for (int p = 1; p <= 10; ++p) {
                              const std::uint64_t seed = static_cast<std::uint64_t>(
                                  1000 * n + 100 * k + p);
                              const std::vector<Rat> pts = seeded_points(k, seed);
                              std::vector<Real> us;
                              for (const Rat& r : pts) us.push_back(to_real(r));
                              std::vector<Real> xs(static_cast<std::size_t>(n), Real(0));
                              std::vector<Real> ys(static_cast<std::size_t>(n), Real(0));
                              for (int a = 0; a < k; ++a) {
                                  if (a < n)
                                      xs[static_cast<std::size_t>(a)] = us[static_cast<std::size_t>(a)];
                                  else
                                      ys[static_cast<std::size_t>(a - n)] = us[static_cast<std::size_t>(a)];
                              }
                              const Real zw = z_wronskian(n, k, us);
                              const Real zi = z_ik(n, xs, ys);
                              if (!rel_close(zw, zi, tol)) return false;
                              if (n <= 3) {
                                  const Real zd = z_direct(n, xs, ys);
                                  if (!rel_close(zw, zd, tol)) return false;
                              }
                          }
                  const double t = seconds(start);
                  detail = fmt_seconds(t);
                  return t < 60.0;
              });

    criterion(10, "c-recurrence collapses onto beta (n<=15), gamma, delta (n<=10); a/b-monomial form matches the trig form (n<=5, m<=3)",
              [&](std::string&) {
                  for (int n = 2; n <= 15; ++n) {
                      const ABPoly c = c_table(n, 1);
                      const Rat k1 = Rat(factorial(n - 2) * factorial(3 * n - 2)) /
                                     (Rat(2) * Rat(factorial(2 * n - 3) *
                                                   factorial(2 * n - 2)));
                      for (int k = 1; k <= n + 1; ++k)
                          if (c.at(k) !=
                              k1 * beta(n).coef(static_cast<std::size_t>(k) - 1))
                              return false;
                  }
                  for (int n = 2; n <= 10; ++n) {
                      const ABPoly c2 = c_table(n, 2);
                      const ABPoly c3 = c_table(n, 3);
                      const Rat base = Rat(factorial(n - 2) * factorial(3 * n - 2)) /
                                       Rat(factorial(2 * n - 3) *
                                           factorial(2 * n - 2));
                      for (int k = 1; k <= n + 2; ++k)
                          if (c2.at(k) != base / 4 *
                                              gamma(n).coef(
                                                  static_cast<std::size_t>(k) - 1))
                              return false;
                      for (int k = 1; k <= n + 3; ++k)
                          if (c3.at(k) != base / 8 *
                                              delta(n).coef(
                                                  static_cast<std::size_t>(k) - 1))
                              return false;
                  }
                  for (int n = 3; n <= 5; ++n)
                      for (int m = 0; m <= 3; ++m)
                          if (!ab_vs_trig_consistency(n, m, 1, 10, 60).pass)
                              return false;
                  return true;
              });

    criterion(11, "first-derivative span membership holds (m=1, n<=6); higher derivatives reported as findings",
              [&](std::string& detail) {
                  bool pass = true;
                  std::ostringstream findings;
                  for (int n = 2; n <= 6; ++n)
                      if (!colomo_span_check(n, 1).member) pass = false;
                  for (int m = 2; m <= 3; ++m) {
                      bool all = true;
                      for (int n = m + 1; n <= 6; ++n)
                          if (!colomo_span_check(n, m).member) all = false;
                      if (findings.tellp() > 0) findings << "; ";
                      findings << "m=" << m << ": "
                               << (all ? "member for all tested n"
                                       : "not always in span");
                  }
                  detail = findings.str();
                  return pass;
              });

    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL")
              << " (" << (11 - failures) << "/11 criteria)" << std::endl;
    return failures == 0 ? 0 : 1;
}
