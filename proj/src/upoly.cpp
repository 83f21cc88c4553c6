#include "asmice/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace asmice {

namespace {
const Rat kZero = 0;
}  // namespace

UPoly::UPoly(const Rat& constant) {
    if (constant != 0) coef_.push_back(constant);
}

UPoly::UPoly(std::vector<Rat> coefficients) : coef_(std::move(coefficients)) {
    trim();
}

UPoly UPoly::monomial(const Rat& c, std::size_t k) {
    if (c == 0) return UPoly();
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return UPoly(std::move(v));
}

std::optional<std::size_t> UPoly::degree() const {
    if (coef_.empty()) return std::nullopt;
    return coef_.size() - 1;
}

const Rat& UPoly::coef(std::size_t k) const {
    if (k >= coef_.size()) return kZero;
    return coef_[k];
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rat> v(std::max(coef_.size(), o.coef_.size()), Rat(0));
    for (std::size_t i = 0; i < coef_.size(); ++i) v[i] = coef_[i];
    for (std::size_t i = 0; i < o.coef_.size(); ++i) v[i] += o.coef_[i];
    return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rat> v(coef_.size() + o.coef_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coef_.size(); ++j)
            v[i + j] += coef_[i] * o.coef_[j];
    }
    return UPoly(std::move(v));
}

UPoly UPoly::operator-() const { return scaled(Rat(-1)); }

UPoly UPoly::scaled(const Rat& c) const {
    if (c == 0) return UPoly();
    std::vector<Rat> v = coef_;
    for (Rat& x : v) x *= c;
    return UPoly(std::move(v));
}

UPoly UPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rat> v(coef_.size() + k, Rat(0));
    std::copy(coef_.begin(), coef_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return UPoly(std::move(v));
}

Rat UPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) r = r * x + *it;
    return r;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = coef_.size(); d-- > 0;) {
        const Rat& c = coef_[d];
        if (c == 0) continue;
        Rat a = c;
        if (first) {
            if (c < 0) {
                out << "-";
                a = -c;
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
            a = abs(c);
        }
        const bool unit = (a == 1 && d > 0);
        if (!unit) out << asmice::to_string(a);
        if (d > 0) {
            if (!unit) out << "*";
            out << var;
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

void UPoly::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

}  // namespace asmice
