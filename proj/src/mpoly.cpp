#include "asmice/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "asmice/errors.hpp"

namespace asmice {

namespace {

const Rat kZero = 0;
constexpr const char* kVarNames[4] = {"x", "y", "z", "w"};

void check_arity(int arity) {
    if (arity < 1 || arity > 4) throw RangeError("MPoly: arity must be 1..4");
}

}  // namespace

MPoly::MPoly(int arity) : arity_(arity) { check_arity(arity); }

MPoly MPoly::constant(int arity, const Rat& c) {
    MPoly p(arity);
    p.insert_term({0, 0, 0, 0}, c);
    return p;
}

MPoly MPoly::var(int arity, int index) {
    check_arity(arity);
    if (index < 0 || index >= arity) throw RangeError("MPoly::var: index out of range");
    ExpVec e = {0, 0, 0, 0};
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(arity, e, 1);
}

MPoly MPoly::monomial(int arity, const ExpVec& e, const Rat& c) {
    MPoly p(arity);
    for (int i = 0; i < 4; ++i) {
        if (e[static_cast<std::size_t>(i)] < 0)
            throw RangeError("MPoly::monomial: negative exponent");
        if (i >= arity && e[static_cast<std::size_t>(i)] != 0)
            throw RangeError("MPoly::monomial: exponent beyond arity");
    }
    p.insert_term(e, c);
    return p;
}

MPoly MPoly::from_upoly(const UPoly& p, int arity, int index) {
    check_arity(arity);
    if (index < 0 || index >= arity)
        throw RangeError("MPoly::from_upoly: index out of range");
    MPoly r(arity);
    const auto& cs = p.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k] == 0) continue;
        ExpVec e = {0, 0, 0, 0};
        e[static_cast<std::size_t>(index)] = static_cast<int>(k);
        r.insert_term(e, cs[k]);
    }
    return r;
}

const Rat& MPoly::coef(const ExpVec& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return kZero;
    return it->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return 0;
    const ExpVec& e = terms_.rbegin()->first;
    return e[0] + e[1] + e[2] + e[3];
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (arity_ != o.arity_) throw RangeError("MPoly: arity mismatch");
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    if (arity_ != o.arity_) throw RangeError("MPoly: arity mismatch");
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (arity_ != o.arity_) throw RangeError("MPoly: arity mismatch");
    MPoly r(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e = {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::operator-() const { return scaled(Rat(-1)); }

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r(arity_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw RangeError("MPoly::eval: point size must equal arity");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < arity_; ++i)
            term *= pow_rat(point[static_cast<std::size_t>(i)],
                            e[static_cast<std::size_t>(i)]);
        total += term;
    }
    return total;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const ExpVec& e = it->first;
        Rat a = it->second;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            a = abs(a);
        }
        const bool is_const = (e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0);
        const bool unit = (a == 1 && !is_const);
        if (!unit) out << asmice::to_string(a);
        bool wrote_var = false;
        for (int i = 0; i < arity_; ++i) {
            const int d = e[static_cast<std::size_t>(i)];
            if (d == 0) continue;
            if (!unit || wrote_var) out << "*";
            out << kVarNames[i];
            if (d > 1) out << "^" << d;
            wrote_var = true;
        }
    }
    return out.str();
}

void MPoly::insert_term(const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly mpoly_det(const std::vector<std::vector<MPoly>>& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) throw RangeError("mpoly_det: empty matrix");
    for (const auto& row : matrix)
        if (row.size() != n) throw RangeError("mpoly_det: matrix not square");
    const int arity = matrix[0][0].arity();
    for (const auto& row : matrix)
        for (const auto& entry : row)
            if (entry.arity() != arity) throw RangeError("mpoly_det: mixed arities");

    // Cofactor expansion along the first remaining row; fine for n <= 4.
    std::function<MPoly(const std::vector<std::size_t>&, std::size_t)> minor_det =
        [&](const std::vector<std::size_t>& cols, std::size_t row) -> MPoly {
        if (cols.size() == 1) return matrix[row][cols[0]];
        MPoly acc(arity);
        for (std::size_t t = 0; t < cols.size(); ++t) {
            if (matrix[row][cols[t]].is_zero()) continue;
            std::vector<std::size_t> rest;
            rest.reserve(cols.size() - 1);
            for (std::size_t u = 0; u < cols.size(); ++u)
                if (u != t) rest.push_back(cols[u]);
            MPoly sub = matrix[row][cols[t]] * minor_det(rest, row + 1);
            acc = (t % 2 == 0) ? acc + sub : acc - sub;
        }
        return acc;
    };
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return minor_det(all, 0);
}

MPoly mpoly_exact_div(const MPoly& num, const MPoly& den) {
    if (num.arity() != den.arity()) throw RangeError("mpoly_exact_div: arity mismatch");
    if (den.is_zero()) throw RangeError("mpoly_exact_div: division by zero");
    MPoly q(num.arity());
    MPoly rem = num;
    const auto& dlt = *den.terms().rbegin();  // leading term of the divisor
    while (!rem.is_zero()) {
        const auto& rlt = *rem.terms_.rbegin();
        ExpVec e;
        for (int i = 0; i < 4; ++i) {
            e[static_cast<std::size_t>(i)] = rlt.first[static_cast<std::size_t>(i)] -
                                             dlt.first[static_cast<std::size_t>(i)];
            if (e[static_cast<std::size_t>(i)] < 0)
                throw NonzeroRemainder("exact division failed: leading term " +
                                       MPoly::monomial(num.arity(), rlt.first, rlt.second).to_string() +
                                       " not divisible by divisor leading term");
        }
        MPoly t = MPoly::monomial(num.arity(), e, rlt.second / dlt.second);
        q = q + t;
        rem = rem - t * den;
    }
    return q;
}

MPoly divide_linear_difference(const MPoly& p, int i, int j) {
    if (i == j) throw RangeError("divide_linear_difference: identical variables");
    if (i < 0 || j < 0 || i >= p.arity() || j >= p.arity())
        throw RangeError("divide_linear_difference: variable index out of range");
    if (p.is_zero()) return p;

    // Split p into coefficients of powers of x_i (with the x_i exponent
    // cleared), then apply synthetic division by (x_i - x_j): substituting
    // x_i -> x_j must annihilate the remainder.
    int dmax = 0;
    for (const auto& [e, c] : p.terms())
        dmax = std::max(dmax, e[static_cast<std::size_t>(i)]);
    std::vector<MPoly> bucket(static_cast<std::size_t>(dmax) + 1, MPoly(p.arity()));
    for (const auto& [e, c] : p.terms()) {
        ExpVec stripped = e;
        const int d = stripped[static_cast<std::size_t>(i)];
        stripped[static_cast<std::size_t>(i)] = 0;
        bucket[static_cast<std::size_t>(d)].insert_term(stripped, c);
    }
    if (dmax == 0)
        throw NonzeroRemainder("linear-difference division failed: no occurrence of dividend variable");

    const MPoly xj = MPoly::var(p.arity(), j);
    MPoly result(p.arity());
    MPoly carry = bucket[static_cast<std::size_t>(dmax)];
    for (int d = dmax - 1; d >= 0; --d) {
        // carry is the quotient coefficient of x_i^d.
        for (const auto& [e, c] : carry.terms()) {
            ExpVec lifted = e;
            lifted[static_cast<std::size_t>(i)] += d;
            result.insert_term(lifted, c);
        }
        carry = bucket[static_cast<std::size_t>(d)] + carry * xj;
    }
    if (!carry.is_zero())
        throw NonzeroRemainder("linear-difference division failed: nonzero remainder " +
                               carry.to_string());
    return result;
}

MPoly vandermonde_product(int arity, int k) {
    check_arity(arity);
    if (k < 1 || k > arity) throw RangeError("vandermonde_product: k out of range");
    MPoly r = MPoly::constant(arity, 1);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            r = r * (MPoly::var(arity, a) - MPoly::var(arity, b));
    return r;
}

MPoly vandermonde_quotient(const MPoly& p, int k) {
    if (k < 1 || k > p.arity()) throw RangeError("vandermonde_quotient: k out of range");
    MPoly r = p;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) r = divide_linear_difference(r, a, b);
    return r;
}

}  // namespace asmice
